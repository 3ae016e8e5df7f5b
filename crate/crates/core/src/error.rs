use thiserror::Error;

use crate::roots::CartanType;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank {rank} is not valid for type {cartan:?}")]
    InvalidRank { cartan: CartanType, rank: usize },
    #[error("direct sum of an empty list of root systems")]
    EmptyDirectSum,
    #[error("root {0} does not belong to this root system")]
    UnknownRoot(usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("map is not involutive: {0}")]
    NotInvolutive(String),
    #[error("map is not an isometry: {0}")]
    NotIsometry(String),
    #[error("map does not permute the roots: {0}")]
    DoesNotPermuteRoots(String),
    #[error("root {0} is outside Q \\ Q̄")]
    NotInDomain(String),
    #[error("invalid Lie algebra data: {0}")]
    InvalidAlgebra(String),
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown fixture '{0}'")]
    UnknownFixture(String),
    #[error("internal cross-check failed: {0}")]
    InternalInconsistency(String),
}

impl Error {
    /// True for the errors that mean a σ failed validation.
    pub fn is_invalid_involution(&self) -> bool {
        matches!(
            self,
            Error::InvalidMap(_) | Error::NotInvolutive(_) | Error::NotIsometry(_) | Error::DoesNotPermuteRoots(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

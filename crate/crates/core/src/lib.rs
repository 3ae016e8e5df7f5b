pub mod admissible;
pub mod chains;
pub mod enumerate;
pub mod error;
pub mod extension;
pub mod fixtures;
pub mod graded;
pub mod instance;
pub mod involution;
pub mod lie;
pub mod linalg;
pub mod parabolic;
pub mod report;
pub mod roots;
pub mod rootset;

pub use error::{Error, Result};
pub use roots::{CartanType, RootId, RootSystem};
pub use rootset::RootSet;

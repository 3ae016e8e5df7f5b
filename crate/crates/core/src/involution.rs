//! Involutive isometries σ of the root space that permute the roots.
//!
//! σ is given either as a signed permutation of the ambient orthonormal basis
//! or as an arbitrary rational matrix. It is validated on the span of the
//! simple roots, in this order: the description is total, σ² = 1, σ preserves
//! the inner product, σ maps roots to roots.

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{rat, Rational};
use crate::roots::{RootId, RootSystem};
use crate::rootset::RootSet;

/// `e_from ↦ sign · e_to`, with basis vectors named by
/// `[component, 1-based index]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedEntry {
    pub from: [usize; 2],
    pub to: [usize; 2],
    pub sign: i32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    images: Vec<RootId>,
    matrix: Vec<Vec<Rational>>,
}

fn global_index(rs: &RootSystem, at: [usize; 2]) -> Result<usize> {
    let [c, i] = at;
    let f = rs
        .factors()
        .get(c)
        .ok_or_else(|| Error::IndexOutOfRange(format!("component {c} (system has {})", rs.factors().len())))?;
    if i == 0 || i > f.dim {
        return Err(Error::IndexOutOfRange(format!("basis vector e{i} of component {c} (dimension {})", f.dim)));
    }
    Ok(f.offset + i - 1)
}

fn apply(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum())
        .collect()
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn to_integers(v: &[Rational]) -> Option<Vec<i32>> {
    v.iter().map(|x| if x.is_integer() { x.to_integer().to_i32() } else { None }).collect()
}

impl Involution {
    pub fn from_signed_permutation(rs: &RootSystem, entries: &[SignedEntry]) -> Result<Involution> {
        let d = rs.ambient_dim();
        let mut target: Vec<Option<(usize, i32)>> = vec![None; d];
        for e in entries {
            let from = global_index(rs, e.from)?;
            let to = global_index(rs, e.to)?;
            if e.sign != 1 && e.sign != -1 {
                return Err(Error::InvalidMap(format!("sign {} is not ±1", e.sign)));
            }
            if target[from].is_some() {
                return Err(Error::InvalidMap(format!(
                    "basis vector e{} of component {} is assigned twice",
                    e.from[1], e.from[0]
                )));
            }
            target[from] = Some((to, e.sign));
        }
        let mut matrix = vec![vec![Rational::zero(); d]; d];
        for (from, t) in target.iter().enumerate() {
            let Some((to, sign)) = *t else {
                return Err(Error::InvalidMap(format!("no image for ambient basis vector {}", from + 1)));
            };
            matrix[to][from] = rat(sign as i64);
        }
        Self::from_matrix(rs, matrix)
    }

    /// `matrix[i][j]` is the `i`-th coordinate of the image of `e_j`, in the
    /// concatenated ambient space of all components.
    pub fn from_matrix(rs: &RootSystem, matrix: Vec<Vec<Rational>>) -> Result<Involution> {
        let d = rs.ambient_dim();
        if matrix.len() != d || matrix.iter().any(|r| r.len() != d) {
            return Err(Error::InvalidMap(format!("matrix must be {d}×{d}")));
        }
        // Doubled coordinates throughout; σ is linear so this changes nothing.
        let coords = |id: RootId| -> Vec<Rational> { rs.global_coords(id).iter().map(|&x| rat(x as i64)).collect() };
        let simple: Vec<Vec<Rational>> = rs.simple_roots().iter().map(|&s| coords(s)).collect();
        let images: Vec<Vec<Rational>> = simple.iter().map(|s| apply(&matrix, s)).collect();
        for (k, (s, im)) in simple.iter().zip(&images).enumerate() {
            if &apply(&matrix, im) != s {
                return Err(Error::NotInvolutive(format!("σ² moves simple root #{}", k + 1)));
            }
        }
        for i in 0..simple.len() {
            for j in i..simple.len() {
                if dot(&images[i], &images[j]) != dot(&simple[i], &simple[j]) {
                    return Err(Error::NotIsometry(format!(
                        "inner product of simple roots #{} and #{} changes",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let mut root_images = Vec::with_capacity(rs.len());
        for id in rs.ids() {
            let img = to_integers(&apply(&matrix, &coords(id))).and_then(|v| rs.lookup_global(&v));
            match img {
                Some(t) => root_images.push(t),
                None => return Err(Error::DoesNotPermuteRoots(format!("image of {} is not a root", rs.display(id)))),
            }
        }
        Ok(Involution { images: root_images, matrix })
    }

    pub fn identity(rs: &RootSystem) -> Involution {
        let d = rs.ambient_dim();
        let matrix = (0..d).map(|i| (0..d).map(|j| rat((i == j) as i64)).collect()).collect();
        Involution { images: rs.ids().collect(), matrix }
    }

    pub fn negation(rs: &RootSystem) -> Involution {
        let d = rs.ambient_dim();
        let matrix = (0..d).map(|i| (0..d).map(|j| rat(-((i == j) as i64))).collect()).collect();
        Involution { images: rs.ids().map(|r| rs.neg(r)).collect(), matrix }
    }

    pub fn apply(&self, id: RootId) -> RootId {
        self.images[id.index()]
    }

    /// σ(β), checked against the system.
    pub fn conjugate(&self, rs: &RootSystem, id: RootId) -> Result<RootId> {
        rs.check(id)?;
        Ok(self.apply(id))
    }

    /// θ = −σ, the involution whose fixed roots are the compact ones.
    pub fn theta(&self, rs: &RootSystem, id: RootId) -> RootId {
        rs.neg(self.apply(id))
    }

    pub fn image(&self, set: &RootSet) -> RootSet {
        RootSet::from_ids(set.universe(), set.iter().map(|r| self.apply(r)))
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    /// Roots with σβ = −β.
    pub fn r_bullet(&self, rs: &RootSystem) -> RootSet {
        RootSet::from_predicate(rs.len(), |b| self.apply(b) == rs.neg(b))
    }

    pub fn root_action(&self) -> &[RootId] {
        &self.images
    }
}

/// All signed-permutation involutions of the ambient basis that preserve the
/// roots, up to their action on roots. Deterministic order.
pub fn enumerate_signed_involutions(rs: &RootSystem) -> Vec<Involution> {
    let d = rs.ambient_dim();
    let mut out: Vec<Involution> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut target: Vec<Option<(usize, i32)>> = vec![None; d];

    fn rec(
        i: usize,
        target: &mut Vec<Option<(usize, i32)>>,
        rs: &RootSystem,
        out: &mut Vec<Involution>,
        seen: &mut std::collections::HashSet<Vec<RootId>>,
    ) {
        let d = target.len();
        if i == d {
            let mut matrix = vec![vec![Rational::zero(); d]; d];
            for (from, t) in target.iter().enumerate() {
                let (to, s) = t.expect("complete assignment");
                matrix[to][from] = rat(s as i64);
            }
            if let Ok(inv) = Involution::from_matrix(rs, matrix) {
                if seen.insert(inv.images.clone()) {
                    out.push(inv);
                }
            }
            return;
        }
        if target[i].is_some() {
            return rec(i + 1, target, rs, out, seen);
        }
        for j in i..d {
            if target[j].is_some() {
                continue;
            }
            for s in [1, -1] {
                target[i] = Some((j, s));
                target[j] = Some((i, s));
                rec(i + 1, target, rs, out, seen);
                target[j] = None;
                target[i] = None;
            }
        }
    }

    rec(0, &mut target, rs, &mut out, &mut seen);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::CartanType;

    fn e(c: usize, from: usize, to: usize, sign: i32) -> SignedEntry {
        SignedEntry { from: [c, from], to: [c, to], sign }
    }

    #[test]
    fn g2_swap() {
        let g2 = RootSystem::build(CartanType::G, 2).unwrap();
        let s = Involution::from_signed_permutation(&g2, &[e(0, 1, 3, 1), e(0, 2, 2, 1), e(0, 3, 1, 1)]).unwrap();
        for r in g2.ids() {
            assert_eq!(s.apply(s.apply(r)), r);
        }
    }

    #[test]
    fn validation_order() {
        let b3 = RootSystem::build(CartanType::B, 3).unwrap();
        let missing = Involution::from_signed_permutation(&b3, &[e(0, 1, 1, 1), e(0, 2, 2, 1)]);
        assert!(matches!(missing, Err(Error::InvalidMap(_))));
        let cyc = Involution::from_signed_permutation(&b3, &[e(0, 1, 2, 1), e(0, 2, 3, 1), e(0, 3, 1, 1)]);
        assert!(matches!(cyc, Err(Error::NotInvolutive(_))));
        // Not a bijection: collapses e1 and e2.
        let a2 = RootSystem::build(CartanType::A, 2).unwrap();
        let collapse = Involution::from_signed_permutation(&a2, &[e(0, 1, 2, 1), e(0, 2, 2, 1), e(0, 3, 3, 1)]);
        assert!(matches!(collapse, Err(Error::NotInvolutive(_))));
        let oob = Involution::from_signed_permutation(&b3, &[e(0, 1, 4, 1)]);
        assert!(matches!(oob, Err(Error::IndexOutOfRange(_))));

        // [[1,1,0],[0,-1,0],[0,0,1]] squares to 1 but is not orthogonal.
        let mut shear = Involution::identity(&b3).matrix().to_vec();
        shear[0][1] = rat(1);
        shear[1][1] = rat(-1);
        assert!(matches!(Involution::from_matrix(&b3, shear), Err(Error::NotIsometry(_))));

        // A rational reflection that misses the roots.
        let c2 = RootSystem::build(CartanType::C, 2).unwrap();
        let q = |n: i64| Rational::new(n.into(), 5.into());
        let refl = vec![vec![q(3), q(4)], vec![q(4), q(-3)]];
        assert!(matches!(Involution::from_matrix(&c2, refl), Err(Error::DoesNotPermuteRoots(_))));
    }

    #[test]
    fn r_bullet_of_negation_is_everything() {
        let a2 = RootSystem::build(CartanType::A, 2).unwrap();
        assert_eq!(Involution::negation(&a2).r_bullet(&a2).len(), 6);
        assert!(Involution::identity(&a2).r_bullet(&a2).is_empty());
    }

    #[test]
    fn enumeration_counts() {
        // A1: ±1 on the root line.
        let a1 = RootSystem::build(CartanType::A, 1).unwrap();
        assert_eq!(enumerate_signed_involutions(&a1).len(), 2);
        // B2: involutions in the hyperoctahedral group of order 8.
        let b2 = RootSystem::build(CartanType::B, 2).unwrap();
        assert_eq!(enumerate_signed_involutions(&b2).len(), 6);
        // A2: ±(involutions of S3).
        let a2 = RootSystem::build(CartanType::A, 2).unwrap();
        assert_eq!(enumerate_signed_involutions(&a2).len(), 8);
    }
}

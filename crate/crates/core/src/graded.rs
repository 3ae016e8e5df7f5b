//! Classical Lie algebras realized as matrices, with a Chevalley-type basis
//! aligned to the roots of a [`RootSystem`]. Used to rerun every root-level
//! chain computation on actual subspaces.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::ExactLieAlgebra;
use crate::linalg::{rat, Coordinates, Rational, Subspace};
use crate::parabolic::ParabolicCRAlgebra;
use crate::roots::{CartanType, RootId, RootSystem};
use crate::rootset::RootSet;

type Matrix = Vec<Rational>;

fn matmul(a: &Matrix, b: &Matrix, n: usize) -> Matrix {
    let mut out = vec![Rational::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let x = &a[i * n + k];
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                let y = &b[k * n + j];
                if !y.is_zero() {
                    out[i * n + j] += x * y;
                }
            }
        }
    }
    out
}

fn commutator(a: &Matrix, b: &Matrix, n: usize) -> Matrix {
    let ab = matmul(a, b, n);
    let ba = matmul(b, a, n);
    ab.into_iter().zip(ba).map(|(x, y)| x - y).collect()
}

fn transpose(a: &Matrix, n: usize) -> Matrix {
    (0..n * n).map(|k| a[(k % n) * n + k / n].clone()).collect()
}

fn elementary(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = vec![Rational::zero(); n * n];
    m[i * n + j] = Rational::one();
    m
}

/// A classical algebra with basis `h_1..h_r` followed by one root vector per root.
/// `e_k ↦ sign·e_target` as `(target, sign)` per `k`.
type SignedMap = Vec<(usize, i64)>;

#[derive(Clone, Debug)]
pub struct RootGraded {
    algebra: ExactLieAlgebra,
    rank: usize,
    root_basis: Vec<usize>,
}

impl RootGraded {
    /// Matrix realization of a simple system of type A, B, C or D:
    /// `sl(n+1)`, or the algebra preserving an antidiagonal bilinear form.
    pub fn classical(rs: &RootSystem) -> Result<Self> {
        let [f] = rs.factors() else {
            return Err(Error::InvalidAlgebra("matrix realization needs a simple system".into()));
        };
        let r = f.rank;
        // Matrix size, weight of each standard basis vector (doubled, in the
        // root system's coordinates) and the form as a signed permutation.
        let (n, weights, form): (usize, Vec<Vec<i32>>, Option<SignedMap>) = match f.cartan {
            CartanType::A => {
                let w = (0..=r).map(|i| unit_doubled(r + 1, i, 1)).collect();
                (r + 1, w, None)
            }
            CartanType::B | CartanType::C | CartanType::D => {
                let odd = f.cartan == CartanType::B;
                let n = 2 * r + odd as usize;
                let w = (0..n)
                    .map(|k| {
                        if k < r {
                            unit_doubled(r, k, 1)
                        } else if odd && k == r {
                            vec![0; r]
                        } else {
                            unit_doubled(r, n - 1 - k, -1)
                        }
                    })
                    .collect();
                let skew = f.cartan == CartanType::C;
                let form = (0..n).map(|k| (n - 1 - k, if skew && k >= r { -1 } else { 1 })).collect();
                (n, w, Some(form))
            }
            other => {
                return Err(Error::InvalidAlgebra(format!("no matrix realization for type {other}")));
            }
        };
        let project = |a: &Matrix| -> Matrix {
            match &form {
                None => a.clone(),
                Some(j) => {
                    let jm = signed_perm_matrix(j, n);
                    let jt = transpose(&jm, n);
                    let conj = matmul(&matmul(&jt, &transpose(a, n), n), &jm, n);
                    a.iter().zip(conj).map(|(x, y)| x - y).collect()
                }
            }
        };
        let mut basis: Vec<Matrix> = Vec::new();
        let mut labels = Vec::new();
        for i in 0..r {
            let m = match f.cartan {
                CartanType::A => {
                    let mut m = elementary(n, i, i);
                    m[(i + 1) * n + i + 1] = -Rational::one();
                    m
                }
                _ => project(&elementary(n, i, i)),
            };
            basis.push(m);
            labels.push(format!("h{}", i + 1));
        }
        let mut root_basis = Vec::with_capacity(rs.len());
        for id in rs.ids() {
            let target = rs.root(id).euclid.doubled().to_vec();
            let m = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| i != j && diff(&weights[i], &weights[j]) == target)
                .map(|(i, j)| project(&elementary(n, i, j)))
                .find(|m| m.iter().any(|x| !x.is_zero()))
                .ok_or_else(|| Error::InvalidAlgebra(format!("no root vector for {}", rs.display(id))))?;
            root_basis.push(basis.len());
            basis.push(m);
            labels.push(rs.display(id));
        }
        let coords =
            Coordinates::new(&basis).ok_or_else(|| Error::InvalidAlgebra("matrix basis is dependent".into()))?;
        let dim = basis.len();
        let mut brackets = Vec::new();
        for a in 0..dim {
            for b in (a + 1)..dim {
                let c = commutator(&basis[a], &basis[b], n);
                let v = coords.solve(&c).ok_or_else(|| Error::InvalidAlgebra("matrix span is not closed".into()))?;
                brackets.push((a, b, v));
            }
        }
        let algebra = ExactLieAlgebra::new(labels, brackets, Subspace::zero(dim), Subspace::zero(dim))?;
        Ok(RootGraded { algebra, rank: r, root_basis })
    }

    pub fn algebra(&self) -> &ExactLieAlgebra {
        &self.algebra
    }

    pub fn root_vector_index(&self, id: RootId) -> usize {
        self.root_basis[id.index()]
    }

    /// `h ⊕ Σ_{β∈S} g_β`.
    pub fn subspace_for(&self, roots: &RootSet) -> Subspace {
        let dim = self.algebra.dim();
        Subspace::coordinate(dim, (0..self.rank).chain(roots.iter().map(|b| self.root_basis[b.index()])))
    }

    /// The same algebra with `q = h ⊕ g_Q` and `q̄ = h ⊕ g_{σ(Q)}`.
    pub fn for_instance(&self, p: &ParabolicCRAlgebra) -> Result<ExactLieAlgebra> {
        self.algebra.with_subspaces(self.subspace_for(p.q()), self.subspace_for(p.qbar()))
    }
}

fn unit_doubled(len: usize, i: usize, sign: i32) -> Vec<i32> {
    let mut v = vec![0; len];
    v[i] = 2 * sign;
    v
}

fn diff(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn signed_perm_matrix(map: &[(usize, i64)], n: usize) -> Matrix {
    let mut m = vec![Rational::zero(); n * n];
    for (k, &(t, s)) in map.iter().enumerate() {
        m[k * n + t] = rat(s);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_and_jacobi() {
        for (t, r, dim) in [
            (CartanType::A, 1, 3),
            (CartanType::A, 3, 15),
            (CartanType::B, 2, 10),
            (CartanType::C, 3, 21),
            (CartanType::D, 4, 28),
        ] {
            let rs = RootSystem::build(t, r).unwrap();
            let g = RootGraded::classical(&rs).unwrap();
            assert_eq!(g.algebra().dim(), dim, "{t}{r}");
            if dim <= 21 {
                g.algebra().check_jacobi().unwrap();
            }
        }
    }

    #[test]
    fn grading_matches_roots() {
        let rs = RootSystem::build(CartanType::B, 3).unwrap();
        let g = RootGraded::classical(&rs).unwrap();
        let alg = g.algebra();
        for a in rs.ids() {
            for b in rs.ids() {
                let v = alg.basis_bracket(g.root_vector_index(a), g.root_vector_index(b));
                match rs.sum(a, b) {
                    Some(s) => {
                        let k = g.root_vector_index(s);
                        assert!(!v[k].is_zero());
                        assert!(v.iter().enumerate().all(|(i, x)| i == k || x.is_zero()));
                    }
                    None if b == rs.neg(a) => {
                        assert!(v[..3].iter().any(|x| !x.is_zero()));
                    }
                    None => assert!(v.iter().all(Zero::is_zero)),
                }
            }
        }
    }

    #[test]
    fn exceptional_types_are_rejected() {
        let g2 = RootSystem::build(CartanType::G, 2).unwrap();
        assert!(RootGraded::classical(&g2).is_err());
    }
}

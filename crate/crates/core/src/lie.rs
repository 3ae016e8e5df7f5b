//! Finite-dimensional Lie algebras over ℚ given by structure constants, with
//! two designated subspaces `q` and `q̄`, and the Levi and contact chains
//! computed directly on subspaces.

use num_traits::Zero;

use crate::chains::{run_chain, ChainReport, Order};
use crate::error::{Error, Result};
use crate::linalg::{combine, is_zero, kernel_of_columns, unit_vec, zero_vec, Rational, Subspace};

type Sparse = Vec<(usize, Rational)>;

#[derive(Clone, Debug)]
pub struct ExactLieAlgebra {
    labels: Vec<String>,
    /// `table[i * dim + j]` = `[x_i, x_j]`, sparse.
    table: Vec<Sparse>,
    q: Subspace,
    qbar: Subspace,
}

impl ExactLieAlgebra {
    /// `brackets` lists `([x_i, x_j], i, j)` for `i < j`; the rest follows from
    /// antisymmetry. Entries with `i ≥ j` are rejected.
    pub fn new(
        labels: Vec<String>,
        brackets: Vec<(usize, usize, Vec<Rational>)>,
        q: Subspace,
        qbar: Subspace,
    ) -> Result<Self> {
        let dim = labels.len();
        let mut table = vec![Sparse::new(); dim * dim];
        for (i, j, v) in brackets {
            if i >= j || j >= dim || v.len() != dim {
                return Err(Error::InvalidAlgebra(format!("bad bracket entry ({i}, {j})")));
            }
            let sparse: Sparse =
                v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect();
            table[j * dim + i] = sparse.iter().map(|(k, c)| (*k, -c.clone())).collect();
            table[i * dim + j] = sparse;
        }
        if q.ambient() != dim || qbar.ambient() != dim {
            return Err(Error::InvalidAlgebra("subspace dimension mismatch".into()));
        }
        let alg = ExactLieAlgebra { labels, table, q, qbar };
        for (name, s) in [("q", &alg.q), ("q̄", &alg.qbar)] {
            if !alg.is_subalgebra(s) {
                return Err(Error::InvalidAlgebra(format!("{name} is not closed under the bracket")));
            }
        }
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn q(&self) -> &Subspace {
        &self.q
    }

    pub fn qbar(&self) -> &Subspace {
        &self.qbar
    }

    pub fn with_subspaces(&self, q: Subspace, qbar: Subspace) -> Result<Self> {
        ExactLieAlgebra::new(self.labels.clone(), self.upper_brackets(), q, qbar)
    }

    fn upper_brackets(&self) -> Vec<(usize, usize, Vec<Rational>)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let mut v = zero_vec(n);
                for (k, c) in &self.table[i * n + j] {
                    v[*k] = c.clone();
                }
                out.push((i, j, v));
            }
        }
        out
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        let n = self.dim();
        let mut v = zero_vec(n);
        for (k, c) in &self.table[i * n + j] {
            v[*k] = c.clone();
        }
        v
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = zero_vec(n);
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in &self.table[i * n + j] {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// Jacobi identity on all basis triples.
    pub fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                let ij = self.basis_bracket(i, j);
                for k in (j + 1)..n {
                    let jk = self.basis_bracket(j, k);
                    let ki = self.basis_bracket(k, i);
                    let mut sum = self.bracket(&ij, &unit_vec(n, k));
                    let t2 = self.bracket(&jk, &unit_vec(n, i));
                    let t3 = self.bracket(&ki, &unit_vec(n, j));
                    for (s, (a, b)) in sum.iter_mut().zip(t2.iter().zip(&t3)) {
                        *s += a + b;
                    }
                    if !is_zero(&sum) {
                        return Err(Error::InvalidAlgebra(format!(
                            "Jacobi fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let b = s.basis();
        b.iter().enumerate().all(|(i, x)| b[i + 1..].iter().all(|y| s.contains(&self.bracket(x, y))))
    }

    /// Subalgebra generated by a subspace.
    pub fn generated(&self, s: &Subspace) -> Subspace {
        let mut cur = s.clone();
        loop {
            let b = cur.basis().to_vec();
            let mut extra = Vec::new();
            for (i, x) in b.iter().enumerate() {
                for y in &b[i + 1..] {
                    let z = self.bracket(x, y);
                    if !cur.contains(&z) {
                        extra.push(z);
                    }
                }
            }
            if extra.is_empty() {
                return cur;
            }
            cur = Subspace::span(self.dim(), cur.basis().iter().cloned().chain(extra));
        }
    }

    /// `{Z ∈ s | [Z, y] ∈ target for every y in `probes`}`.
    fn stabilizer(&self, s: &Subspace, probes: &[Vec<Rational>], target: &Subspace) -> Subspace {
        let n = self.dim();
        let zs = s.basis();
        if zs.is_empty() {
            return s.clone();
        }
        // One column per basis vector of `s`: its stacked residues modulo `target`.
        let columns: Vec<Vec<Rational>> =
            zs.iter().map(|z| probes.iter().flat_map(|y| target.reduce(&self.bracket(z, y))).collect()).collect();
        let len = probes.len() * n;
        let kernel = kernel_of_columns(&columns, len);
        Subspace::span(n, kernel.iter().map(|c| combine(c, zs, n)))
    }

    pub fn q_cap_qbar(&self) -> Subspace {
        self.q.intersection(&self.qbar)
    }

    /// `(dim q − dim q∩q̄, dim g − dim(q+q̄))`.
    pub fn cr_dim_codim(&self) -> (usize, usize) {
        (self.q.dim() - self.q_cap_qbar().dim(), self.dim() - self.q.sum(&self.qbar).dim())
    }

    pub fn fundamental(&self) -> bool {
        self.generated(&self.q.sum(&self.qbar)).dim() == self.dim()
    }
}

/// `q⁰ = q`, `qᵖ = {Z ∈ qᵖ⁻¹ | [Z, q̄] ⊆ qᵖ⁻¹ + q̄}`, order read against `q∩q̄`.
pub fn generic_levi_chain(alg: &ExactLieAlgebra) -> ChainReport<Subspace> {
    let target = alg.q_cap_qbar();
    let probes = alg.qbar().basis().to_vec();
    run_chain(alg.q().clone(), |prev| alg.stabilizer(prev, &probes, &prev.sum(alg.qbar())), |t| *t == target)
}

/// `H⁰ = q + q̄`, `Hᵖ = {Z ∈ Hᵖ⁻¹ | [Z, H⁰] ⊆ Hᵖ⁻¹}`. Terms are reported as
/// `q∩q̄ + Hᵖ`; the order is the first index where that equals `q∩q̄`.
pub fn generic_contact_chain(alg: &ExactLieAlgebra) -> ChainReport<Subspace> {
    let base = alg.q_cap_qbar();
    let top = alg.q().sum(alg.qbar());
    let probes = top.basis().to_vec();
    let raw = run_chain(top, |prev| alg.stabilizer(prev, &probes, prev), |_| false);
    let chain: Vec<Subspace> = raw.chain.iter().map(|t| base.sum(t)).collect();
    let order = chain.iter().position(|t| *t == base).map_or(Order::Infinite, |p| Order::Finite(p as u32));
    ChainReport { limit: chain[raw.stabilized_at].clone(), stabilized_at: raw.stabilized_at, order, chain }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    /// sl₂ with basis H, E, F.
    fn sl2(q: &[usize], qbar: &[usize]) -> Result<ExactLieAlgebra> {
        let v = |h: i64, e: i64, f: i64| vec![rat(h), rat(e), rat(f)];
        ExactLieAlgebra::new(
            vec!["H".into(), "E".into(), "F".into()],
            vec![(0, 1, v(0, 2, 0)), (0, 2, v(0, 0, -2)), (1, 2, v(1, 0, 0))],
            Subspace::coordinate(3, q.iter().copied()),
            Subspace::coordinate(3, qbar.iter().copied()),
        )
    }

    #[test]
    fn sl2_basics() {
        // q + q̄ = g: the chains never move.
        let a = sl2(&[0, 2], &[0, 1]).unwrap();
        a.check_jacobi().unwrap();
        assert_eq!(a.bracket(&unit_vec(3, 1), &unit_vec(3, 2)), unit_vec(3, 0));
        assert_eq!(a.cr_dim_codim(), (1, 0));
        assert!(a.fundamental());
        assert_eq!(generic_levi_chain(&a).order, Order::Infinite);
        assert_eq!(generic_contact_chain(&a).order, Order::Infinite);
    }

    #[test]
    fn equal_subspaces_give_order_zero() {
        let a = sl2(&[0, 2], &[0, 2]).unwrap();
        assert_eq!(generic_levi_chain(&a).order, Order::Finite(0));
        assert_eq!(generic_contact_chain(&a).order, Order::Finite(0));
        assert!(!a.fundamental());
    }

    #[test]
    fn rejects_non_subalgebra() {
        assert!(matches!(sl2(&[1, 2], &[0]), Err(Error::InvalidAlgebra(_))));
    }
}

//! Semidirect sums `sl₂ ⋉ V_k` of sl₂ with its irreducible (k+1)-dimensional
//! module, with `q′ = span(H, F) ⊕ V⁻` and `q̄′ = span(H, E) ⊕ V⁺`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::chains::Order;
use crate::error::{Error, Result};
use crate::lie::{generic_contact_chain, generic_levi_chain, ExactLieAlgebra};
use crate::linalg::{rat, zero_vec, Rational, Subspace};

/// Normalization of the weight vectors `v_0..v_k` (weight of `v_h` is `k−2h`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionConvention {
    /// `F·v_h = v_{h+1}`, `E·v_h = h(k−h+1) v_{h−1}`.
    Lowering,
    /// `E·v_h = v_{h−1}`, `F·v_h = (h+1)(k−h) v_{h+1}`.
    Raising,
}

#[derive(Clone, Debug)]
pub struct Sl2Module {
    k: usize,
    convention: ActionConvention,
}

impl Sl2Module {
    pub fn new(k: usize, convention: ActionConvention) -> Self {
        Sl2Module { k, convention }
    }

    pub fn dim(&self) -> usize {
        self.k + 1
    }

    pub fn weight(&self, h: usize) -> i64 {
        self.k as i64 - 2 * h as i64
    }

    /// `E·v_h = c·v_{h−1}`; returns `c` (zero for `h = 0`).
    pub fn e_coeff(&self, h: usize) -> i64 {
        let (h, k) = (h as i64, self.k as i64);
        match (h, self.convention) {
            (0, _) => 0,
            (_, ActionConvention::Lowering) => h * (k - h + 1),
            (_, ActionConvention::Raising) => 1,
        }
    }

    /// `F·v_h = c·v_{h+1}`; returns `c` (zero for `h = k`).
    pub fn f_coeff(&self, h: usize) -> i64 {
        let (hi, k) = (h as i64, self.k as i64);
        match self.convention {
            _ if h == self.k => 0,
            ActionConvention::Lowering => 1,
            ActionConvention::Raising => (hi + 1) * (k - hi),
        }
    }

    /// `[E,F]·v_h = H·v_h` for every `h`.
    pub fn check_axioms(&self) -> bool {
        (0..=self.k).all(|h| {
            let ef = if h < self.k { self.f_coeff(h) * self.e_coeff(h + 1) } else { 0 };
            let fe = if h > 0 { self.e_coeff(h) * self.f_coeff(h - 1) } else { 0 };
            ef - fe == self.weight(h)
        })
    }
}

/// Basis order: `H, E, F, v_0, …, v_k`.
#[derive(Clone, Debug)]
pub struct LeeExtension {
    module: Sl2Module,
    algebra: ExactLieAlgebra,
}

const H: usize = 0;
const E: usize = 1;
const F: usize = 2;

pub fn build_lee_extension(k: usize) -> Result<LeeExtension> {
    build_lee_extension_with(k, ActionConvention::Lowering)
}

pub fn build_lee_extension_with(k: usize, convention: ActionConvention) -> Result<LeeExtension> {
    let module = Sl2Module::new(k, convention);
    if !module.check_axioms() {
        return Err(Error::InvalidAlgebra(format!("module axioms fail for k = {k}")));
    }
    let dim = 3 + module.dim();
    let v = |h: usize| 3 + h;
    let single = |idx: usize, c: i64| {
        let mut out = zero_vec(dim);
        out[idx] = rat(c);
        out
    };
    let mut brackets = vec![(H, E, single(E, 2)), (H, F, single(F, -2)), (E, F, single(H, 1))];
    for h in 0..=k {
        brackets.push((H, v(h), single(v(h), module.weight(h))));
        brackets.push((E, v(h), if h > 0 { single(v(h - 1), module.e_coeff(h)) } else { zero_vec(dim) }));
        brackets.push((F, v(h), if h < k { single(v(h + 1), module.f_coeff(h)) } else { zero_vec(dim) }));
    }
    let labels = ["H", "E", "F"].iter().map(|s| s.to_string()).chain((0..=k).map(|h| format!("v{h}"))).collect();
    let q = Subspace::coordinate(dim, [H, F].into_iter().chain((0..=k).filter(|&h| module.weight(h) < 0).map(v)));
    let qbar = Subspace::coordinate(dim, [H, E].into_iter().chain((0..=k).filter(|&h| module.weight(h) > 0).map(v)));
    let algebra = ExactLieAlgebra::new(labels, brackets, q, qbar)?;
    Ok(LeeExtension { module, algebra })
}

impl LeeExtension {
    pub fn k(&self) -> usize {
        self.module.k
    }

    pub fn module(&self) -> &Sl2Module {
        &self.module
    }

    pub fn algebra(&self) -> &ExactLieAlgebra {
        &self.algebra
    }

    /// Index of `v_h` in the basis.
    pub fn v(&self, h: usize) -> usize {
        3 + h
    }

    /// Whether `k = 2q` with `q ≥ 1`, where the CR dimension is `q+1` and the codimension 1.
    pub fn in_hypothesis(&self) -> bool {
        self.module.k >= 2 && self.module.k.is_multiple_of(2)
    }

    /// `Eᵖ·v_k` for `p = k/2`; nonzero and of weight zero when `k` is even.
    pub fn escape_vector(&self) -> Vec<Rational> {
        let alg = &self.algebra;
        let mut x = zero_vec(alg.dim());
        x[self.v(self.module.k)] = rat(1);
        let mut e = zero_vec(alg.dim());
        e[E] = rat(1);
        for _ in 0..self.module.k / 2 {
            x = alg.bracket(&e, &x);
        }
        x
    }
}

/// `(dim q′ − dim q′∩q̄′, dim − dim(q′+q̄′))`, plus whether `k` is inside the
/// even-`k` hypothesis.
pub fn extension_cr_dim_codim(ext: &LeeExtension) -> ((usize, usize), bool) {
    (ext.algebra.cr_dim_codim(), ext.in_hypothesis())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeeReport {
    pub k: usize,
    pub dim: usize,
    pub in_hypothesis: bool,
    pub cr_dim: usize,
    pub cr_codim: usize,
    pub fundamental: bool,
    pub levi_order: Order,
    pub contact_order: Order,
    /// `dim qᵖ` along the Levi chain.
    pub levi_chain_dims: Vec<usize>,
    pub contact_chain_dims: Vec<usize>,
    pub cross_checks: std::collections::BTreeMap<String, bool>,
}

impl LeeReport {
    pub fn failed_checks(&self) -> Vec<&str> {
        self.cross_checks.iter().filter(|(_, &ok)| !ok).map(|(k, _)| k.as_str()).collect()
    }
}

pub fn lee_report(k: usize) -> Result<LeeReport> {
    let ext = build_lee_extension(k)?;
    let alg = ext.algebra();
    let levi = generic_levi_chain(alg);
    let contact = generic_contact_chain(alg);
    let ((cr_dim, cr_codim), in_hypothesis) = extension_cr_dim_codim(&ext);

    let mut checks = std::collections::BTreeMap::new();
    let alt = build_lee_extension_with(k, ActionConvention::Raising)?;
    let alt_levi = generic_levi_chain(alt.algebra());
    let alt_contact = generic_contact_chain(alt.algebra());
    checks.insert("conventions_agree".to_string(), alt_levi.order == levi.order && alt_contact.order == contact.order);
    checks.insert("module_axioms".to_string(), ext.module().check_axioms());
    checks.insert("q_cap_qbar_is_cartan".to_string(), alg.q_cap_qbar() == Subspace::coordinate(alg.dim(), [H]));
    if k <= 12 {
        checks.insert("jacobi".to_string(), alg.check_jacobi().is_ok());
    }
    if in_hypothesis {
        let x = ext.escape_vector();
        let zero_weight = ext.v(k / 2);
        checks.insert(
            "escape_reaches_zero_weight".to_string(),
            !x[zero_weight].is_zero() && x.iter().enumerate().all(|(i, c)| i == zero_weight || c.is_zero()),
        );
        // One V-dimension lost per step until span(H); the first step also loses F.
        let dims: Vec<usize> = levi.chain.iter().map(Subspace::dim).collect();
        let steps = k / 2;
        checks.insert(
            "levi_chain_drops_one_per_step".to_string(),
            dims.len() > steps && (0..steps).all(|p| dims[p] == dims[p + 1] + 1 + (p == 0) as usize),
        );
    }

    Ok(LeeReport {
        k,
        dim: alg.dim(),
        in_hypothesis,
        cr_dim,
        cr_codim,
        fundamental: alg.fundamental(),
        levi_order: levi.order,
        contact_order: contact.order,
        levi_chain_dims: levi.chain.iter().map(Subspace::dim).collect(),
        contact_chain_dims: contact.chain.iter().map(Subspace::dim).collect(),
        cross_checks: checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn module_axioms_both_conventions() {
        for k in 0..10 {
            assert!(Sl2Module::new(k, ActionConvention::Lowering).check_axioms());
            assert!(Sl2Module::new(k, ActionConvention::Raising).check_axioms());
        }
    }

    #[test]
    fn small_cases() {
        let e2 = build_lee_extension(2).unwrap();
        assert_eq!(e2.algebra().dim(), 6);
        assert_eq!(e2.algebra().q(), &Subspace::coordinate(6, [H, F, 5]));
        let e4 = build_lee_extension(4).unwrap();
        assert_eq!(e4.algebra().q(), &Subspace::coordinate(8, [H, F, 6, 7]));
        let e0 = build_lee_extension(0).unwrap();
        assert_eq!(e0.algebra().q(), &Subspace::coordinate(4, [H, F]));
        // v₀ has weight zero and lies in neither q′ nor q̄′.
        assert_eq!(extension_cr_dim_codim(&e0), ((1, 1), false));
        assert_eq!(extension_cr_dim_codim(&e2), ((2, 1), true));
        assert_eq!(extension_cr_dim_codim(&build_lee_extension(6).unwrap()), ((4, 1), true));
        assert!(!extension_cr_dim_codim(&build_lee_extension(3).unwrap()).1);
    }

    #[test]
    fn orders_for_small_q() {
        for q in 1..=3u32 {
            let r = lee_report(2 * q as usize).unwrap();
            assert_eq!(r.levi_order, Order::Finite(q), "k = {}", 2 * q);
            assert_eq!(r.contact_order, Order::Finite(q), "k = {}", 2 * q);
            assert!(r.fundamental);
            assert!(r.failed_checks().is_empty(), "{:?}", r.failed_checks());
        }
    }
}

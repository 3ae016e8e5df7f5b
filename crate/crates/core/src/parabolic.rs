//! Parabolic CR algebras at root level: a root system, a set Φ of crossed
//! simple roots and a conjugation σ, with the partitions of R they induce.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::involution::Involution;
use crate::roots::{RootId, RootSystem};
use crate::rootset::RootSet;

/// `ξ_Φ(β) = Σ_{α∈Φ} k_{β,α}`.
pub fn xi_with(rs: &RootSystem, phi: &[RootId], beta: RootId) -> i32 {
    let r = rs.root(beta);
    let f = &rs.factors()[r.component];
    phi.iter()
        .filter_map(|&a| {
            let pos = rs.simple_roots().iter().position(|&s| s == a)?;
            (pos >= f.first_simple && pos < f.first_simple + f.rank).then(|| r.simple_coeffs[pos - f.first_simple])
        })
        .sum()
}

/// `Q_Φ = {β | ξ_Φ(β) ≤ 0}`.
pub fn parabolic_set(rs: &RootSystem, phi: &[RootId]) -> RootSet {
    RootSet::from_predicate(rs.len(), |b| xi_with(rs, phi, b) <= 0)
}

/// Whether `(S+S) ∩ R ⊆ S` for a root set `S`.
pub fn is_closed(rs: &RootSystem, s: &RootSet) -> bool {
    s.iter().all(|a| s.iter().all(|b| rs.sum(a, b).is_none_or(|c| s.contains(c))))
}

#[derive(Clone, Debug)]
pub struct ParabolicCRAlgebra {
    rs: Arc<RootSystem>,
    phi: Vec<RootId>,
    sigma: Involution,
    xi: Vec<i32>,
    q: RootSet,
    qr: RootSet,
    qn: RootSet,
    qc: RootSet,
    qbar: RootSet,
    qbar_n: RootSet,
    qbar_c: RootSet,
    r_bullet: RootSet,
}

impl ParabolicCRAlgebra {
    /// `phi` must consist of simple roots; duplicates are ignored.
    pub fn build(rs: Arc<RootSystem>, phi: &[RootId], sigma: Involution) -> Result<Self> {
        let mut phi: Vec<RootId> = phi.to_vec();
        for &a in &phi {
            rs.check(a)?;
            if !rs.simple_roots().contains(&a) {
                return Err(Error::IndexOutOfRange(format!("{} is not a simple root", rs.display(a))));
            }
        }
        phi.sort_by_key(|a| rs.simple_roots().iter().position(|s| s == a));
        phi.dedup();
        if sigma.root_action().len() != rs.len() {
            return Err(Error::InvalidMap("σ belongs to a different root system".into()));
        }
        let n = rs.len();
        let xi: Vec<i32> = rs.ids().map(|b| xi_with(&rs, &phi, b)).collect();
        let q = RootSet::from_predicate(n, |b| xi[b.index()] <= 0);
        let qr = RootSet::from_predicate(n, |b| xi[b.index()] == 0);
        let qn = RootSet::from_predicate(n, |b| xi[b.index()] < 0);
        let qc = RootSet::from_predicate(n, |b| xi[b.index()] > 0);
        let qbar = sigma.image(&q);
        let qbar_n = sigma.image(&qn);
        let qbar_c = sigma.image(&qc);
        let r_bullet = sigma.r_bullet(&rs);
        Ok(ParabolicCRAlgebra { rs, phi, sigma, xi, q, qr, qn, qc, qbar, qbar_n, qbar_c, r_bullet })
    }

    /// Crossed simple roots given per component as 1-based Bourbaki indices.
    pub fn crossed(rs: &RootSystem, per_component: &[Vec<usize>]) -> Result<Vec<RootId>> {
        if per_component.len() > rs.factors().len() {
            return Err(Error::IndexOutOfRange(format!(
                "crossed list has {} components, system has {}",
                per_component.len(),
                rs.factors().len()
            )));
        }
        let mut out = Vec::new();
        for (c, idx) in per_component.iter().enumerate() {
            for &i in idx {
                out.push(rs.simple_root(c, i)?);
            }
        }
        Ok(out)
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rs_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn phi(&self) -> &[RootId] {
        &self.phi
    }

    pub fn sigma(&self) -> &Involution {
        &self.sigma
    }

    pub fn xi(&self, beta: RootId) -> i32 {
        self.xi[beta.index()]
    }

    pub fn bar(&self, beta: RootId) -> RootId {
        self.sigma.apply(beta)
    }

    pub fn q(&self) -> &RootSet {
        &self.q
    }

    pub fn qr(&self) -> &RootSet {
        &self.qr
    }

    pub fn qn(&self) -> &RootSet {
        &self.qn
    }

    pub fn qc(&self) -> &RootSet {
        &self.qc
    }

    pub fn qbar(&self) -> &RootSet {
        &self.qbar
    }

    pub fn qbar_n(&self) -> &RootSet {
        &self.qbar_n
    }

    /// `R ∖ Q̄`, which is also `σ(Q^c)`.
    pub fn qbar_c(&self) -> &RootSet {
        &self.qbar_c
    }

    pub fn r_bullet(&self) -> &RootSet {
        &self.r_bullet
    }

    pub fn q_cap_qbar(&self) -> RootSet {
        self.q.intersection(&self.qbar)
    }

    pub fn q_minus_qbar(&self) -> RootSet {
        self.q.difference(&self.qbar)
    }

    pub fn q_cup_qbar(&self) -> RootSet {
        self.q.union(&self.qbar)
    }

    /// `Q^c ∩ Q̄^c`, the roots outside `Q ∪ Q̄`.
    pub fn qc_cap_qbar_c(&self) -> RootSet {
        self.qc.intersection(&self.qbar_c)
    }

    /// `(CR-dimension, CR-codimension)`; the Cartan part cancels in both.
    pub fn cr_dim_codim(&self) -> (usize, usize) {
        (self.q_minus_qbar().len(), self.qc_cap_qbar_c().len())
    }

    /// `Q = Q̄`, in which case every order is 0.
    pub fn is_totally_real(&self) -> bool {
        self.q == self.qbar
    }

    /// The three equivalent descriptions of minimal type:
    /// `Q^c∩Q̄^n ⊆ R_•`, `ξ(σβ) ≥ 0` on `Q^c∖R_•`, and `ξ(σβ) = 0` on `(Q^c∩Q̄)∖R_•`.
    pub fn minimal_type_criteria(&self) -> [bool; 3] {
        let main = self.qc.intersection(&self.qbar_n).is_subset(&self.r_bullet);
        let a = self.qc.difference(&self.r_bullet).iter().all(|b| self.xi(self.bar(b)) >= 0);
        let b = self.qc.intersection(&self.qbar).difference(&self.r_bullet).iter().all(|b| self.xi(self.bar(b)) == 0);
        [main, a, b]
    }

    pub fn minimal_type(&self) -> Result<bool> {
        let [main, a, b] = self.minimal_type_criteria();
        if main != a || main != b {
            return Err(Error::InternalInconsistency(format!("minimal-type criteria disagree: {main}/{a}/{b}")));
        }
        Ok(main)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involution::SignedEntry;
    use crate::roots::CartanType;

    fn sp(rs: &RootSystem, map: &[(usize, usize, i32)]) -> Involution {
        let entries: Vec<SignedEntry> =
            map.iter().map(|&(f, t, s)| SignedEntry { from: [0, f], to: [0, t], sign: s }).collect();
        Involution::from_signed_permutation(rs, &entries).unwrap()
    }

    fn pcr(t: CartanType, n: usize, crossed: &[usize], map: &[(usize, usize, i32)]) -> ParabolicCRAlgebra {
        let rs = Arc::new(RootSystem::build(t, n).unwrap());
        let phi = ParabolicCRAlgebra::crossed(&rs, &[crossed.to_vec()]).unwrap();
        let sigma = sp(&rs, map);
        ParabolicCRAlgebra::build(rs, &phi, sigma).unwrap()
    }

    fn root(p: &ParabolicCRAlgebra, c: &[i32]) -> RootId {
        p.rs().root_from_coords(0, c).unwrap()
    }

    const FELS: [(usize, usize, i32); 3] = [(1, 3, 1), (2, 2, -1), (3, 1, 1)];

    #[test]
    fn xi_values() {
        let p = pcr(CartanType::B, 3, &[2], &FELS);
        assert_eq!(p.xi(root(&p, &[1, 0, 0])), 1);
        assert_eq!(p.xi(root(&p, &[0, 1, 0])), 1);
        assert_eq!(p.xi(root(&p, &[0, 0, 1])), 0);
        let p = pcr(CartanType::B, 3, &[1, 3], &[(1, 2, 1), (2, 1, 1), (3, 3, -1)]);
        assert_eq!(p.xi(root(&p, &[1, 0, 0])), 2);
        assert_eq!(p.xi(root(&p, &[0, 1, 0])), 1);
        assert_eq!(p.xi(root(&p, &[0, 0, 1])), 1);
    }

    #[test]
    fn fels_outside_set() {
        let p = pcr(CartanType::B, 3, &[2], &FELS);
        let outside = p.qc_cap_qbar_c();
        assert_eq!(outside.iter().collect::<Vec<_>>(), vec![root(&p, &[1, 0, 1])]);
    }

    #[test]
    fn d4_outside_set() {
        let p = pcr(CartanType::D, 4, &[2], &[(1, 4, 1), (2, 2, -1), (3, 3, -1), (4, 1, 1)]);
        assert_eq!(p.qc_cap_qbar_c().iter().collect::<Vec<_>>(), vec![root(&p, &[1, 0, 0, 1])]);
    }

    #[test]
    fn empty_phi() {
        let p = pcr(CartanType::B, 3, &[], &FELS);
        assert_eq!(p.q().len(), 18);
        assert!(p.qc().is_empty());
        assert_eq!(p.cr_dim_codim(), (0, 0));
    }

    #[test]
    fn su13_counts() {
        let p = pcr(CartanType::A, 3, &[2], &[(1, 4, -1), (2, 2, -1), (3, 3, -1), (4, 1, -1)]);
        assert_eq!(p.cr_dim_codim(), (3, 1));
    }

    #[test]
    fn minimal_type_examples() {
        let p = pcr(CartanType::B, 3, &[1, 3], &[(1, 2, 1), (2, 1, 1), (3, 3, -1)]);
        assert!(p.minimal_type().unwrap());
        let fels = pcr(CartanType::B, 3, &[2], &FELS);
        assert!(!fels.minimal_type().unwrap());
        let rs = Arc::new(RootSystem::build(CartanType::B, 3).unwrap());
        let phi = ParabolicCRAlgebra::crossed(&rs, &[vec![2]]).unwrap();
        let neg = Involution::negation(&rs);
        assert!(ParabolicCRAlgebra::build(rs, &phi, neg).unwrap().minimal_type().unwrap());
    }

    #[test]
    fn r_bullet_b3() {
        let p = pcr(CartanType::B, 3, &[1, 3], &[(1, 2, 1), (2, 1, 1), (3, 3, -1)]);
        let want = RootSet::from_ids(18, [[0, 0, 1], [0, 0, -1], [1, -1, 0], [-1, 1, 0]].iter().map(|c| root(&p, c)));
        assert_eq!(p.r_bullet(), &want);
    }

    #[test]
    fn partitions_are_parabolic() {
        let p = pcr(CartanType::B, 3, &[2], &FELS);
        assert!(is_closed(p.rs(), p.q()));
        assert!(is_closed(p.rs(), p.qbar()));
        assert_eq!(p.qr().union(p.qn()).union(p.qc()).len(), 18);
        assert!(p.qr().is_disjoint(p.qn()) && p.qn().is_disjoint(p.qc()));
    }
}

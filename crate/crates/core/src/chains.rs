//! Descending Levi and contact chains at root level, and the invariants read
//! off from them.
//!
//! Every subalgebra here is `h ⊕ Σ g_β` for a root set, except the terms of the
//! ideal chain behind the contact order, whose Cartan part shrinks and is kept
//! as an exact subspace of the root span.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{nullspace, rat, Rational, Subspace};
use crate::parabolic::{is_closed, xi_with, ParabolicCRAlgebra};
use crate::roots::{RootId, RootSystem};
use crate::rootset::RootSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(q) => Some(q),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(q) => write!(f, "{q}"),
            Order::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Order::Finite(q) => s.serialize_u32(*q),
            Order::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for Order {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u32),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(q) => Ok(Order::Finite(q)),
            Raw::S(s) if s == "infinite" => Ok(Order::Infinite),
            Raw::S(s) => Err(serde::de::Error::custom(format!("bad order '{s}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport<S> {
    /// Terms up to and including the first repeated one.
    pub chain: Vec<S>,
    pub order: Order,
    /// Index of the first term equal to its successor.
    pub stabilized_at: usize,
    pub limit: S,
}

/// Runs `step` from `start` until a term repeats; the order is the first index
/// whose term satisfies `reached`.
pub(crate) fn run_chain<S: Clone + PartialEq>(
    start: S,
    mut step: impl FnMut(&S) -> S,
    reached: impl Fn(&S) -> bool,
) -> ChainReport<S> {
    let mut chain = vec![start];
    loop {
        let next = step(chain.last().expect("nonempty"));
        if &next == chain.last().expect("nonempty") {
            break;
        }
        chain.push(next);
    }
    let stabilized_at = chain.len() - 1;
    let order = chain.iter().position(&reached).map_or(Order::Infinite, |p| Order::Finite(p as u32));
    let limit = chain[stabilized_at].clone();
    ChainReport { chain, order, stabilized_at, limit }
}

/// `Q⁰ = Q`, `Qᵖ = {α ∈ Qᵖ⁻¹ | α+δ ∈ Qᵖ⁻¹ ∪ Q̄ whenever δ ∈ Q̄ and α+δ ∈ R}`.
pub fn levi_chain(p: &ParabolicCRAlgebra) -> ChainReport<RootSet> {
    let rs = p.rs();
    let target = p.q_cap_qbar();
    let qbar = p.qbar();
    run_chain(
        p.q().clone(),
        |prev| {
            let allowed = prev.union(qbar);
            RootSet::from_predicate(rs.len(), |a| {
                prev.contains(a) && qbar.iter().all(|d| rs.sum(a, d).is_none_or(|s| allowed.contains(s)))
            })
        },
        |t| *t == target,
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerRootOrder {
    pub beta: RootId,
    pub order: Order,
    /// `(α₁,…,α_q)` with `α_i ∈ Q̄`, every proper partial sum `β+α₁+…+α_i` in
    /// `Q∖Q̄` and the full sum outside `Q ∪ Q̄`.
    pub witness: Option<Vec<RootId>>,
}

/// Breadth-first search for the shortest escape of `β ∈ Q∖Q̄` from `Q ∪ Q̄`
/// by successive additions of roots of `Q̄`. Among shortest witnesses the
/// lexicographically smallest (by root index) is returned.
pub fn per_root_levi_order(p: &ParabolicCRAlgebra, beta: RootId) -> Result<PerRootOrder> {
    let rs = p.rs();
    rs.check(beta)?;
    let domain = p.q_minus_qbar();
    if !domain.contains(beta) {
        return Err(Error::NotInDomain(rs.display(beta)));
    }
    let inside = p.q_cup_qbar();
    let qbar: Vec<RootId> = p.qbar().iter().collect();
    let mut parent: HashMap<RootId, (RootId, RootId)> = HashMap::new();
    let mut seen = RootSet::empty(rs.len());
    seen.insert(beta);
    let mut frontier = VecDeque::from([beta]);
    let path = |parent: &HashMap<RootId, (RootId, RootId)>, mut g: RootId, last: RootId| {
        let mut seq = vec![last];
        while let Some(&(prev, d)) = parent.get(&g) {
            seq.push(d);
            g = prev;
        }
        seq.reverse();
        seq
    };
    while let Some(g) = frontier.pop_front() {
        for &d in &qbar {
            let Some(s) = rs.sum(g, d) else { continue };
            if !inside.contains(s) {
                let witness = path(&parent, g, d);
                return Ok(PerRootOrder { beta, order: Order::Finite(witness.len() as u32), witness: Some(witness) });
            }
            if domain.contains(s) && seen.insert(s) {
                parent.insert(s, (g, d));
                frontier.push_back(s);
            }
        }
    }
    Ok(PerRootOrder { beta, order: Order::Infinite, witness: None })
}

/// Checks a witness against the structure every minimal sequence must have:
/// each `α_i ∈ Q̄∖Q`, proper partial sums in `Q∖Q̄`, final sum outside
/// `Q ∪ Q̄`, and no `α_i + α_j` a root.
pub fn witness_is_minimal_shape(p: &ParabolicCRAlgebra, beta: RootId, witness: &[RootId]) -> bool {
    let rs = p.rs();
    let qbar_minus_q = p.qbar().difference(p.q());
    let domain = p.q_minus_qbar();
    let inside = p.q_cup_qbar();
    if witness.is_empty() || !witness.iter().all(|&a| qbar_minus_q.contains(a)) {
        return false;
    }
    for (i, &a) in witness.iter().enumerate() {
        for &b in &witness[i + 1..] {
            if rs.sum(a, b).is_some() {
                return false;
            }
        }
    }
    let mut g = beta;
    for (i, &a) in witness.iter().enumerate() {
        let Some(s) = rs.sum(g, a) else { return false };
        let last = i + 1 == witness.len();
        if last && inside.contains(s) || !last && !domain.contains(s) {
            return false;
        }
        g = s;
    }
    true
}

/// For every `β ∈ Q∩Q̄^c` some `α ∈ Q̄∩Q^c` has `β+α ∈ R∖Q̄`.
pub fn weakly_nondegenerate_criterion(p: &ParabolicCRAlgebra) -> bool {
    let rs = p.rs();
    let partners = p.qbar().intersection(p.qc());
    p.q_minus_qbar().iter().all(|b| partners.iter().any(|a| rs.sum(b, a).is_some_and(|s| p.qbar_c().contains(s))))
}

/// Additive closure of a root set inside `R`.
pub fn additive_closure(rs: &RootSystem, start: &RootSet) -> RootSet {
    let mut closed = start.clone();
    let mut queue: Vec<RootId> = closed.iter().collect();
    while let Some(a) = queue.pop() {
        let members: Vec<RootId> = closed.iter().collect();
        for b in members {
            if let Some(s) = rs.sum(a, b) {
                if closed.insert(s) {
                    queue.push(s);
                }
            }
        }
    }
    closed
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FundamentalReport {
    pub by_closure: bool,
    pub by_crossed_roots: bool,
}

/// `Q∪Q̄` generates `R` under addition.
pub fn fundamental_by_closure(p: &ParabolicCRAlgebra) -> bool {
    additive_closure(p.rs(), &p.q_cup_qbar()).len() == p.rs().len()
}

fn crossed_subset(rs: &RootSystem, phi: &[RootId], action: &[RootId]) -> Vec<RootId> {
    phi.iter().copied().filter(|&a| rs.is_positive(action[a.index()])).collect()
}

/// `ξ_{Φ∘}(σα) ≤ 0` for every `α ∈ Φ∘`, with σ given as a root permutation.
fn crossed_root_test(rs: &RootSystem, phi0: &[RootId], action: &[RootId]) -> bool {
    phi0.iter().all(|&a| xi_with(rs, phi0, action[a.index()]) <= 0)
}

/// With `Φ∘ = {α ∈ Φ | σα ≻ 0}`: `Φ∘ = ∅` or `ξ_{Φ∘}(σα) ≤ 0` on `Φ∘`,
/// applied to σ itself.
pub fn crossed_root_test_literal(p: &ParabolicCRAlgebra) -> bool {
    let action = p.sigma().root_action();
    crossed_root_test(p.rs(), &crossed_subset(p.rs(), p.phi(), action), action)
}

/// The crossed-root test for `Φ∘`, run on every conjugate `wσw⁻¹` with `w` in
/// the Weyl group of the simple roots outside `Φ∘`; true if any passes. Such
/// `w` preserve `Q_{Φ∘}`, and a passing conjugate puts every `±α ∈ B` in
/// `Q ∪ Q̄`, so each pass is a proof of fundamentality.
pub fn fundamental_by_crossed_roots(p: &ParabolicCRAlgebra) -> bool {
    let rs = p.rs();
    let sigma = p.sigma().root_action();
    let phi0 = crossed_subset(rs, p.phi(), sigma);
    if phi0.is_empty() {
        return true;
    }
    let gens: Vec<Vec<RootId>> =
        rs.simple_roots().iter().filter(|s| !phi0.contains(s)).map(|&s| rs.reflection(s)).collect();
    let identity: Vec<RootId> = rs.ids().collect();
    let mut seen = std::collections::HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(w) = queue.pop_front() {
        let mut w_inv = w.clone();
        for (i, &t) in w.iter().enumerate() {
            w_inv[t.index()] = RootId::new(i);
        }
        let conj: Vec<RootId> = rs.ids().map(|b| w[sigma[w_inv[b.index()].index()].index()]).collect();
        if crossed_root_test(rs, &phi0, &conj) {
            return true;
        }
        for g in &gens {
            let next: Vec<RootId> = w.iter().map(|&t| g[t.index()]).collect();
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    false
}

pub fn fundamental(p: &ParabolicCRAlgebra) -> Result<bool> {
    let a = fundamental_by_closure(p);
    let b = fundamental_by_crossed_roots(p);
    if a != b {
        return Err(Error::InternalInconsistency(format!(
            "fundamentality: closure says {a}, crossed-root criterion says {b}"
        )));
    }
    Ok(a)
}

/// Limit of the Levi chain.
pub fn q_infinity(p: &ParabolicCRAlgebra) -> RootSet {
    levi_chain(p).limit
}

/// `Q ∪ σ(Q^(∞))` is additively closed.
pub fn q_infinity_sum_is_closed(p: &ParabolicCRAlgebra) -> bool {
    let f = p.q().union(&p.sigma().image(&q_infinity(p)));
    is_closed(p.rs(), &f)
}

/// One term of the ideal chain `a^(p)` inside `q + q̄`: its roots and its
/// Cartan part, the latter as a subspace of the root span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealTerm {
    pub roots: RootSet,
    pub cartan: Subspace,
}

fn coords(rs: &RootSystem, a: RootId) -> Vec<Rational> {
    rs.global_coords(a).iter().map(|&x| rat(x as i64)).collect()
}

/// `a⁰ = q + q̄`, `aᵖ = {X ∈ aᵖ⁻¹ | [X, q+q̄] ⊆ aᵖ⁻¹}`. The bracket of root
/// vectors for `α` and `−α` is the coroot of `α`, identified with `α`
/// itself; `h` acts on `g_δ` through `δ`, so a Cartan element survives only if
/// it is orthogonal to every root of `q+q̄` already dropped.
pub fn ideal_chain(p: &ParabolicCRAlgebra) -> Vec<IdealTerm> {
    let rs = p.rs();
    let dim = rs.ambient_dim();
    let h0 = Subspace::span(dim, rs.simple_roots().iter().map(|&s| coords(rs, s)));
    let top = p.q_cup_qbar();
    let mut chain = vec![IdealTerm { roots: top.clone(), cartan: h0.clone() }];
    loop {
        let prev = chain.last().expect("nonempty");
        let roots = RootSet::from_predicate(rs.len(), |a| {
            prev.roots.contains(a)
                && top.iter().all(|d| rs.sum(a, d).is_none_or(|s| prev.roots.contains(s)))
                && (!top.contains(rs.neg(a)) || prev.cartan.contains(&coords(rs, a)))
        });
        let dropped: Vec<Vec<Rational>> = top.difference(&prev.roots).iter().map(|d| coords(rs, d)).collect();
        let cartan = if dropped.is_empty() {
            prev.cartan.clone()
        } else {
            let perp = Subspace::span(dim, nullspace(dropped, dim));
            prev.cartan.intersection(&perp)
        };
        let next = IdealTerm { roots, cartan };
        if &next == prev {
            break;
        }
        chain.push(next);
    }
    chain
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactChains {
    /// `q^[p] = (q∩q̄) + a^(p)`, root parts only.
    pub bracket: ChainReport<RootSet>,
    /// `q^{p}`, root parts only.
    pub brace: ChainReport<RootSet>,
}

/// The two contact chains. The `[·]` chain is built from the ideal chain;
/// the `{·}` chain runs its own recursion
/// `Q^{0} = Q`, `Q^{p} = {α ∈ Q^{p−1} | ∀δ ∈ Q∪Q̄, α+δ ∈ R ⇒ α+δ ∈ Q^{p−1} ∪ Q̄}`
/// and is compared with `Q∩Q̄` through its part outside `Q̄`.
pub fn contact_chains(p: &ParabolicCRAlgebra) -> Result<ContactChains> {
    let rs = p.rs();
    let base = p.q_cap_qbar();
    let ideal = ideal_chain(p);
    let terms: Vec<RootSet> = ideal.iter().map(|t| base.union(&t.roots)).collect();
    let stabilized_at = terms.len() - 1;
    let order = terms.iter().position(|t| *t == base).map_or(Order::Infinite, |q| Order::Finite(q as u32));
    let bracket = ChainReport { limit: terms[stabilized_at].clone(), chain: terms, order, stabilized_at };

    let top = p.q_cup_qbar();
    let qbar = p.qbar();
    let brace = run_chain(
        p.q().clone(),
        |prev| {
            let allowed = prev.union(qbar);
            RootSet::from_predicate(rs.len(), |a| {
                prev.contains(a) && top.iter().all(|d| rs.sum(a, d).is_none_or(|s| allowed.contains(s)))
            })
        },
        |t| t.is_subset(qbar),
    );
    let brace = ChainReport {
        chain: brace.chain.iter().map(|t| base.union(t)).collect(),
        limit: base.union(&brace.limit),
        ..brace
    };
    if bracket.order != brace.order {
        return Err(Error::InternalInconsistency(format!(
            "contact chains disagree: [·] order {}, {{·}} order {}",
            bracket.order, brace.order
        )));
    }
    Ok(ContactChains { bracket, brace })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::involution::{Involution, SignedEntry};
    use crate::roots::CartanType;

    fn pcr(t: CartanType, n: usize, crossed: &[usize], map: &[(usize, usize, i32)]) -> ParabolicCRAlgebra {
        let rs = Arc::new(RootSystem::build(t, n).unwrap());
        let phi = ParabolicCRAlgebra::crossed(&rs, &[crossed.to_vec()]).unwrap();
        let entries: Vec<SignedEntry> =
            map.iter().map(|&(f, t, s)| SignedEntry { from: [0, f], to: [0, t], sign: s }).collect();
        let sigma = Involution::from_signed_permutation(&rs, &entries).unwrap();
        ParabolicCRAlgebra::build(rs, &phi, sigma).unwrap()
    }

    fn root(p: &ParabolicCRAlgebra, c: &[i32]) -> RootId {
        p.rs().root_from_coords(0, c).unwrap()
    }

    const FELS: [(usize, usize, i32); 3] = [(1, 3, 1), (2, 2, -1), (3, 1, 1)];
    const SU13: [(usize, usize, i32); 4] = [(1, 4, -1), (2, 2, -1), (3, 3, -1), (4, 1, -1)];

    fn sl_flags(n: usize) -> ParabolicCRAlgebra {
        let mut map = vec![(1, n + 1, -1), (n + 1, 1, -1)];
        map.extend((2..=n).map(|i| (i, i, -1)));
        let crossed: Vec<usize> = (2..n).collect();
        pcr(CartanType::A, n, &crossed, &map)
    }

    #[test]
    fn fels_levi_order() {
        let p = pcr(CartanType::B, 3, &[2], &FELS);
        assert_eq!(levi_chain(&p).order, Order::Finite(3));
        let w = per_root_levi_order(&p, root(&p, &[-1, -1, 0])).unwrap();
        assert_eq!(w.order, Order::Finite(3));
        let seq = w.witness.unwrap();
        let mut g = root(&p, &[-1, -1, 0]);
        for a in &seq {
            g = p.rs().sum(g, *a).unwrap();
        }
        assert_eq!(g, root(&p, &[1, 0, 1]));
        assert!(weakly_nondegenerate_criterion(&p));
        assert!(fundamental(&p).unwrap());
    }

    #[test]
    fn su13() {
        let p = pcr(CartanType::A, 3, &[2], &SU13);
        assert_eq!(levi_chain(&p).order, Order::Finite(2));
        let w = per_root_levi_order(&p, root(&p, &[1, -1, 0, 0])).unwrap();
        assert_eq!(w.order, Order::Finite(1));
        assert_eq!(w.witness.unwrap(), vec![root(&p, &[0, 1, 0, -1])]);
        assert!(fundamental_by_crossed_roots(&p));
        assert!(fundamental(&p).unwrap());
    }

    #[test]
    fn totally_real_is_order_zero() {
        let p = pcr(CartanType::B, 3, &[2], &[(1, 1, 1), (2, 2, 1), (3, 3, 1)]);
        assert_eq!(levi_chain(&p).order, Order::Finite(0));
        assert_eq!(contact_chains(&p).unwrap().bracket.order, Order::Finite(0));
    }

    #[test]
    fn empty_phi() {
        let p = pcr(CartanType::B, 3, &[], &FELS);
        assert_eq!(levi_chain(&p).order, Order::Finite(0));
        assert!(weakly_nondegenerate_criterion(&p));
        assert!(fundamental(&p).unwrap());
        assert_eq!(contact_chains(&p).unwrap().bracket.order, Order::Finite(0));
    }

    #[test]
    fn sl_flags_family() {
        for n in 3..=7 {
            let p = sl_flags(n);
            let contact = contact_chains(&p).unwrap();
            let levi = levi_chain(&p);
            assert_eq!(levi.order.is_finite(), n <= 4, "n = {n}");
            if n <= 4 {
                // Levi order 2 pins the contact order to 2.
                assert_eq!(levi.order, Order::Finite(2));
                assert_eq!(contact.bracket.order, Order::Finite(2));
            }
            assert_eq!(weakly_nondegenerate_criterion(&p), n <= 4);
            if n >= 5 {
                assert!(q_infinity(&p).len() > p.q_cap_qbar().len());
                let trapped =
                    p.q_minus_qbar().iter().find(|&b| per_root_levi_order(&p, b).unwrap().order == Order::Infinite);
                assert!(trapped.is_some());
            } else {
                assert_eq!(q_infinity(&p), p.q_cap_qbar());
            }
            assert!(q_infinity_sum_is_closed(&p));
        }
    }

    #[test]
    fn per_root_rejects_outside_domain() {
        let p = pcr(CartanType::B, 3, &[2], &FELS);
        let b = p.q_cap_qbar().iter().next().unwrap();
        assert!(matches!(per_root_levi_order(&p, b), Err(Error::NotInDomain(_))));
    }

    #[test]
    fn order_json() {
        assert_eq!(serde_json::to_string(&Order::Finite(3)).unwrap(), "3");
        assert_eq!(serde_json::to_string(&Order::Infinite).unwrap(), "\"infinite\"");
        let back: Order = serde_json::from_str("\"infinite\"").unwrap();
        assert_eq!(back, Order::Infinite);
    }
}

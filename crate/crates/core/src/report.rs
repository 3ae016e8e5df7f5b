//! Full analysis of one parabolic CR algebra, with every equivalent route
//! recorded as a named cross-check.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::chains::{
    contact_chains, fundamental_by_closure, fundamental_by_crossed_roots, levi_chain, per_root_levi_order,
    q_infinity_sum_is_closed, weakly_nondegenerate_criterion, witness_is_minimal_shape, Order,
};
use crate::error::{Error, Result};
use crate::parabolic::{is_closed, ParabolicCRAlgebra};
use crate::roots::{RootLabel, RootSystem};
use crate::rootset::RootSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerRootEntry {
    pub root: RootLabel,
    pub display: String,
    pub xi: i32,
    pub order: Order,
    pub witness: Option<Vec<RootLabel>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub cr_dim: usize,
    pub cr_codim: usize,
    pub fundamental: bool,
    pub weakly_nondegenerate: bool,
    pub levi_order: Order,
    pub contact_order: Order,
    pub minimal_type: bool,
    pub levi_chain: Vec<Vec<RootLabel>>,
    pub contact_chain: Vec<Vec<RootLabel>>,
    pub per_root: Vec<PerRootEntry>,
    pub cross_checks: BTreeMap<String, bool>,
}

impl AnalysisReport {
    pub fn failed_checks(&self) -> Vec<&str> {
        self.cross_checks.iter().filter(|(_, &ok)| !ok).map(|(k, _)| k.as_str()).collect()
    }
}

fn labels(rs: &RootSystem, set: &RootSet) -> Vec<RootLabel> {
    set.iter().map(|r| rs.label(r)).collect()
}

/// Runs every computation and records every cross-check, without failing.
pub fn analyze_unchecked(p: &ParabolicCRAlgebra) -> AnalysisReport {
    let rs = p.rs();
    let mut checks = BTreeMap::new();
    let mut check = |name: &str, ok: bool| {
        checks.insert(name.to_string(), ok);
    };

    let (cr_dim, cr_codim) = p.cr_dim_codim();
    let levi = levi_chain(p);
    let base = p.q_cap_qbar();

    let per_root: Vec<_> = p.q_minus_qbar().iter().map(|b| per_root_levi_order(p, b).expect("β is in Q∖Q̄")).collect();

    // Chain terms against the breadth-first orders.
    let last = levi.chain.len() - 1;
    let chain_matches = (0..=last + 1).all(|k| {
        let want = base.union(&RootSet::from_ids(
            rs.len(),
            per_root.iter().filter(|r| r.order > Order::Finite(k as u32)).map(|r| r.beta),
        ));
        levi.chain[k.min(last)] == want
    });
    let order_from_roots = if p.is_totally_real() {
        Order::Finite(0)
    } else {
        per_root.iter().map(|r| r.order).max().unwrap_or(Order::Finite(0))
    };
    check("levi_chain_matches_per_root_orders", chain_matches && order_from_roots == levi.order);
    check(
        "witnesses_have_minimal_shape",
        per_root.iter().all(|r| r.witness.as_ref().is_none_or(|w| witness_is_minimal_shape(p, r.beta, w))),
    );
    check(
        "per_root_order_bound",
        per_root.iter().all(|r| r.order.finite().is_none_or(|q| q as i64 <= 1 - p.xi(r.beta) as i64)),
    );
    check(
        "reductive_part_orders_one_or_infinite",
        per_root
            .iter()
            .filter(|r| p.qr().contains(r.beta))
            .all(|r| matches!(r.order, Order::Finite(1) | Order::Infinite)),
    );

    let weakly = weakly_nondegenerate_criterion(p);
    check("weak_nondegeneracy_criterion_matches_chain", weakly == levi.order.is_finite());

    let f_closure = fundamental_by_closure(p);
    let f_crossed = fundamental_by_crossed_roots(p);
    check("fundamental_criteria_agree", f_closure == f_crossed);

    let [mt, mt_a, mt_b] = p.minimal_type_criteria();
    check("minimal_type_criteria_agree", mt == mt_a && mt == mt_b);

    let contact = contact_chains(p);
    check("contact_chains_agree", contact.is_ok());
    let (contact_order, contact_terms) = match &contact {
        Ok(c) => (c.bracket.order, c.bracket.chain.clone()),
        Err(_) => {
            // Still report the [·] chain; the flag above records the disagreement.
            let raw = crate::chains::ideal_chain(p);
            let terms: Vec<RootSet> = raw.iter().map(|t| base.union(&t.roots)).collect();
            let order = terms.iter().position(|t| *t == base).map_or(Order::Infinite, |q| Order::Finite(q as u32));
            (order, terms)
        }
    };
    check(
        "contact_order_compatible_with_levi_order",
        match levi.order {
            Order::Finite(0) => contact_order == Order::Finite(0),
            Order::Finite(1) => contact_order == Order::Finite(1),
            Order::Finite(q) => contact_order.finite().is_some_and(|c| (2..=q).contains(&c)),
            Order::Infinite => true,
        },
    );

    check(
        "fundamental_and_nondegenerate_order_at_most_three",
        !(f_closure && weakly) || levi.order <= Order::Finite(3),
    );
    check("minimal_type_order_at_most_two", !mt || levi.order <= Order::Finite(2) || levi.order == Order::Infinite);
    check("q_infinity_sum_closed", q_infinity_sum_is_closed(p));
    check("levi_chain_terms_closed", levi.chain.iter().all(|t| is_closed(rs, t)));
    check("levi_chain_terms_contain_q_cap_qbar", levi.chain.iter().all(|t| base.is_subset(t)));
    check("parabolic_sets_closed", is_closed(rs, p.q()) && is_closed(rs, p.qbar()));

    AnalysisReport {
        cr_dim,
        cr_codim,
        fundamental: f_closure,
        weakly_nondegenerate: weakly,
        levi_order: levi.order,
        contact_order,
        minimal_type: mt,
        levi_chain: levi.chain.iter().map(|t| labels(rs, t)).collect(),
        contact_chain: contact_terms.iter().map(|t| labels(rs, t)).collect(),
        per_root: per_root
            .iter()
            .map(|r| PerRootEntry {
                root: rs.label(r.beta),
                display: rs.display(r.beta),
                xi: p.xi(r.beta),
                order: r.order,
                witness: r.witness.as_ref().map(|w| w.iter().map(|&a| rs.label(a)).collect()),
            })
            .collect(),
        cross_checks: checks,
    }
}

/// As [`analyze_unchecked`], but any failed cross-check is an error.
pub fn analyze(p: &ParabolicCRAlgebra) -> Result<AnalysisReport> {
    let report = analyze_unchecked(p);
    let failed = report.failed_checks();
    if failed.is_empty() {
        Ok(report)
    } else {
        Err(Error::InternalInconsistency(failed.join(", ")))
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_text(p: &ParabolicCRAlgebra, r: &AnalysisReport) -> String {
    let rs = p.rs();
    let mut s = String::new();
    let types: Vec<String> = rs.factors().iter().map(|f| format!("{}{}", f.cartan, f.rank)).collect();
    let phi: Vec<String> = p.phi().iter().map(|&a| rs.display(a)).collect();
    let _ = writeln!(s, "system          {}", types.join(" + "));
    let _ = writeln!(s, "crossed         {{{}}}", phi.join(", "));
    let _ = writeln!(s, "CR dim/codim    {} / {}", r.cr_dim, r.cr_codim);
    let _ = writeln!(s, "fundamental     {}", yes_no(r.fundamental));
    let _ = writeln!(s, "weakly nondeg.  {}", yes_no(r.weakly_nondegenerate));
    let _ = writeln!(s, "Levi order      {}", r.levi_order);
    let _ = writeln!(s, "contact order   {}", r.contact_order);
    let _ = writeln!(s, "minimal type    {}", yes_no(r.minimal_type));
    let sizes: Vec<String> = r.levi_chain.iter().map(|t| t.len().to_string()).collect();
    let _ = writeln!(s, "Levi chain      |Q^p| = {}", sizes.join(" > "));
    if !r.per_root.is_empty() {
        let _ = writeln!(s, "per-root orders");
        for e in &r.per_root {
            let w = match &e.witness {
                Some(w) => w
                    .iter()
                    .map(|l| rs.from_label(l).map_or_else(|| "?".into(), |id| rs.display(id)))
                    .collect::<Vec<_>>()
                    .join(", "),
                None => "-".into(),
            };
            let _ = writeln!(s, "  {:<22} xi={:<3} order={:<9} via ({w})", e.display, e.xi, e.order.to_string());
        }
    }
    let failed = r.failed_checks();
    let _ = writeln!(
        s,
        "cross-checks    {}",
        if failed.is_empty() {
            format!("{} passed", r.cross_checks.len())
        } else {
            format!("FAILED: {}", failed.join(", "))
        }
    );
    s
}

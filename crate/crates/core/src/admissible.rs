//! The invariant q(β): the longest multiset (α₁,…,α_q) of roots, no two of
//! which add to a root or to zero, such that β plus any sub-multiset sum (with
//! distinct indices) is again a root.

use serde::{Deserialize, Serialize};

use crate::enumerate::{map_ordered, Execution};
use crate::error::Result;
use crate::roots::{CartanType, HalfVec, RootId, RootLabel, RootSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleWitness {
    pub beta: RootId,
    pub q: usize,
    /// Nondecreasing by root index.
    pub sequence: Vec<RootId>,
}

struct Search<'a> {
    rs: &'a RootSystem,
    best: Vec<RootId>,
}

impl Search<'_> {
    /// `sums` holds β plus every sub-multiset sum of `seq`.
    fn dfs(&mut self, seq: &mut Vec<RootId>, sums: &[RootId]) {
        if seq.len() > self.best.len() {
            self.best = seq.clone();
        }
        let rs = self.rs;
        let start = seq.last().map_or(0, |a| a.index());
        for a in rs.ids().skip(start) {
            if seq.iter().any(|&b| b == rs.neg(a) || rs.sum(a, b).is_some()) {
                continue;
            }
            let Some(extra) = sums.iter().map(|&s| rs.sum(s, a)).collect::<Option<Vec<_>>>() else {
                continue;
            };
            let mut next = sums.to_vec();
            next.extend(extra);
            seq.push(a);
            self.dfs(seq, &next);
            seq.pop();
        }
    }
}

/// Exhaustive search; among longest sequences the lexicographically smallest
/// by root index is returned.
pub fn q_beta(rs: &RootSystem, beta: RootId) -> Result<AdmissibleWitness> {
    rs.check(beta)?;
    let mut s = Search { rs, best: Vec::new() };
    s.dfs(&mut Vec::new(), &[beta]);
    Ok(AdmissibleWitness { beta, q: s.best.len(), sequence: s.best })
}

/// Re-checks a witness with coordinate arithmetic, independently of the sum table.
pub fn check_witness(rs: &RootSystem, beta: RootId, seq: &[RootId]) -> bool {
    let comp = rs.root(beta).component;
    let vec = |id: RootId| rs.root(id).euclid.clone();
    let is_root = |v: &HalfVec| !v.is_zero() && rs.lookup(comp, v).is_some();
    if seq.iter().any(|&a| rs.root(a).component != comp) {
        return false;
    }
    for (i, &a) in seq.iter().enumerate() {
        for &b in &seq[i..] {
            let s = vec(a).add(&vec(b));
            if s.is_zero() || is_root(&s) {
                return false;
            }
        }
    }
    (1u32..1 << seq.len()).all(|mask| {
        let mut v = vec(beta);
        for (i, &a) in seq.iter().enumerate() {
            if mask >> i & 1 == 1 {
                v = v.add(&vec(a));
            }
        }
        is_root(&v)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootLength {
    /// Simply laced: one length only.
    Single,
    Long,
    Short,
}

/// The classification table for a simple system and a root length.
pub fn expected_q(cartan: CartanType, rank: usize, length: RootLength) -> Option<usize> {
    use CartanType::*;
    use RootLength::*;
    Some(match (cartan, rank, length) {
        (A, 1, _) => return None,
        (A, 2, _) => 1,
        (A, _, _) => 2,
        (B, 2, Long) => 1,
        (B, 2, Short) | (C, _, _) => 2,
        (B, _, Short) | (F, _, Short) => 3,
        (G, _, Short) => 2,
        (D | E, _, _) | (B | F | G, _, Long) => 4,
        _ => return None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub cartan: CartanType,
    pub rank: usize,
    pub length: RootLength,
    pub beta: RootLabel,
    pub display: String,
    pub expected: Option<usize>,
    pub got: usize,
    pub witness: Vec<String>,
    pub witness_valid: bool,
    /// For `q = 4`: whether `β + Σα_i = −β`.
    pub sums_to_negative: Option<bool>,
}

impl TableEntry {
    pub fn ok(&self) -> bool {
        self.expected == Some(self.got) && self.witness_valid && self.sums_to_negative != Some(false)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub entries: Vec<TableEntry>,
}

impl TableReport {
    pub fn mismatches(&self) -> Vec<&TableEntry> {
        self.entries.iter().filter(|e| !e.ok()).collect()
    }
}

/// One representative root per length class (the first in root order).
pub fn representatives(rs: &RootSystem) -> Vec<(RootLength, RootId)> {
    let long = rs.ids().find(|&a| rs.is_long(a));
    let short = rs.ids().find(|&a| !rs.is_long(a));
    match (long, short) {
        (Some(l), None) => vec![(RootLength::Single, l)],
        (Some(l), Some(s)) => vec![(RootLength::Long, l), (RootLength::Short, s)],
        _ => Vec::new(),
    }
}

pub fn table_entry(rs: &RootSystem, length: RootLength, beta: RootId) -> TableEntry {
    let f = &rs.factors()[rs.root(beta).component];
    let w = q_beta(rs, beta).expect("representative is a root");
    let sums_to_negative = (w.q == 4).then(|| {
        let total = w.sequence.iter().fold(rs.root(beta).euclid.clone(), |v, &a| v.add(&rs.root(a).euclid));
        total == rs.root(beta).euclid.neg()
    });
    TableEntry {
        cartan: f.cartan,
        rank: f.rank,
        length,
        beta: rs.label(beta),
        display: rs.display(beta),
        expected: expected_q(f.cartan, f.rank, length),
        got: w.q,
        witness: w.sequence.iter().map(|&a| rs.display(a)).collect(),
        witness_valid: check_witness(rs, beta, &w.sequence),
        sums_to_negative,
    }
}

pub fn verify_table(types: &[(CartanType, usize)], exec: Execution) -> Result<TableReport> {
    let systems = types.iter().map(|&(t, r)| RootSystem::build(t, r)).collect::<Result<Vec<_>>>()?;
    let jobs: Vec<(usize, RootLength, RootId)> = systems
        .iter()
        .enumerate()
        .flat_map(|(i, rs)| representatives(rs).into_iter().map(move |(l, b)| (i, l, b)))
        .collect();
    let entries = map_ordered(exec, &jobs, |&(i, l, b)| table_entry(&systems[i], l, b));
    Ok(TableReport { entries })
}

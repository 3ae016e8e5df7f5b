//! Reduced root systems of every simple type and their finite direct sums.
//!
//! Coordinates follow the usual Euclidean realizations with Bourbaki's
//! numbering of simple roots. The one exception is G₂, whose long simple root
//! is taken as `−e₁+2e₂−e₃` so that cross-marks match the worked G₂ example
//! this crate ships as a fixture. Coordinates live in ½ℤ and are stored doubled,
//! so every comparison is exact integer arithmetic.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{rat, Coordinates, Rational};
use crate::rootset::RootSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub const ALL: [CartanType; 7] =
        [CartanType::A, CartanType::B, CartanType::C, CartanType::D, CartanType::E, CartanType::F, CartanType::G];

    /// C₂ is accepted with the same realization as Cₙ; it is isomorphic to B₂
    /// with the root lengths exchanged.
    pub fn valid_rank(self, rank: usize) -> bool {
        match self {
            CartanType::A => rank >= 1,
            CartanType::B | CartanType::C => rank >= 2,
            CartanType::D => rank >= 4,
            CartanType::E => (6..=8).contains(&rank),
            CartanType::F => rank == 4,
            CartanType::G => rank == 2,
        }
    }

    pub fn root_count(self, rank: usize) -> usize {
        match self {
            CartanType::A => rank * (rank + 1),
            CartanType::B | CartanType::C => 2 * rank * rank,
            CartanType::D => 2 * rank * (rank - 1),
            CartanType::E => match rank {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            CartanType::F => 48,
            CartanType::G => 12,
        }
    }

    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(CartanType::A),
            "B" | "b" => Ok(CartanType::B),
            "C" | "c" => Ok(CartanType::C),
            "D" | "d" => Ok(CartanType::D),
            "E" | "e" => Ok(CartanType::E),
            "F" | "f" => Ok(CartanType::F),
            "G" | "g" => Ok(CartanType::G),
            other => Err(Error::Syntax(format!("unknown Cartan type '{other}'"))),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Index of a root inside its [`RootSystem`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootId(u32);

impl RootId {
    pub fn new(index: usize) -> Self {
        RootId(index as u32)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A vector with coordinates in ½ℤ, stored as twice its value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfVec(Vec<i32>);

impl HalfVec {
    pub fn from_doubled(v: Vec<i32>) -> Self {
        HalfVec(v)
    }

    pub fn from_integers(v: &[i32]) -> Self {
        HalfVec(v.iter().map(|x| 2 * x).collect())
    }

    pub fn doubled(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &HalfVec) -> HalfVec {
        HalfVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> HalfVec {
        HalfVec(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i32) -> HalfVec {
        HalfVec(self.0.iter().map(|a| k * a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Four times the Euclidean inner product.
    pub fn dot4(&self, other: &HalfVec) -> i64 {
        self.0.iter().zip(&other.0).map(|(&a, &b)| a as i64 * b as i64).sum()
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().map(|&x| rat(x as i64)).collect()
    }
}

impl fmt::Display for HalfVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let half = self.0.iter().any(|x| x % 2 != 0);
        let mut terms = String::new();
        for (i, &x) in self.0.iter().enumerate() {
            let c = if half { x } else { x / 2 };
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if terms.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            let coeff = if mag == 1 { String::new() } else { mag.to_string() };
            terms.push_str(&format!("{sign}{coeff}e{}", i + 1));
        }
        if terms.is_empty() {
            terms.push('0');
        }
        if half {
            write!(f, "1/2({terms})")
        } else {
            write!(f, "{terms}")
        }
    }
}

/// One root: its simple factor, its expansion over that factor's simple basis
/// and its coordinates in the factor's realization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub component: usize,
    pub simple_coeffs: Vec<i32>,
    pub euclid: HalfVec,
}

impl Root {
    pub fn is_positive(&self) -> bool {
        self.simple_coeffs.iter().all(|&k| k >= 0)
    }
}

/// Serializable reference to a root: factor index plus simple coefficients.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RootLabel {
    pub component: usize,
    pub coeffs: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub cartan: CartanType,
    pub rank: usize,
    /// Dimension of the Euclidean space of this factor's realization.
    pub dim: usize,
    /// Offset of this factor's coordinates in the concatenated ambient space.
    pub offset: usize,
    /// Position of this factor's first simple root in [`RootSystem::simple_roots`].
    pub first_simple: usize,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    factors: Vec<Factor>,
    roots: Vec<Root>,
    index: HashMap<(usize, HalfVec), RootId>,
    simple: Vec<RootId>,
    negation: Vec<RootId>,
    sums: Vec<Option<RootId>>,
}

struct FactorData {
    cartan: CartanType,
    rank: usize,
    dim: usize,
    roots: Vec<(HalfVec, Vec<i32>)>,
    simple: Vec<HalfVec>,
}

fn unit(dim: usize, i: usize, k: i32) -> Vec<i32> {
    let mut v = vec![0; dim];
    v[i] = 2 * k;
    v
}

fn plus(mut a: Vec<i32>, b: &[i32]) -> Vec<i32> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn signed_pairs(dim: usize, out: &mut Vec<Vec<i32>>) {
    for i in 0..dim {
        for j in (i + 1)..dim {
            for si in [1, -1] {
                for sj in [1, -1] {
                    out.push(plus(unit(dim, i, si), &unit(dim, j, sj)));
                }
            }
        }
    }
}

fn half_sign_vectors(dim: usize, parity: Option<u32>) -> Vec<Vec<i32>> {
    (0u32..(1 << dim))
        .filter(|m| parity.is_none_or(|p| m.count_ones() % 2 == p))
        .map(|m| (0..dim).map(|i| if m >> i & 1 == 1 { -1 } else { 1 }).collect())
        .collect()
}

fn e8_simple() -> Vec<Vec<i32>> {
    let mut simple = vec![vec![1, -1, -1, -1, -1, -1, -1, 1], plus(unit(8, 0, 1), &unit(8, 1, 1))];
    for i in 0..6 {
        simple.push(plus(unit(8, i + 1, 1), &unit(8, i, -1)));
    }
    simple
}

/// Coordinates and simple roots of a simple factor, before coefficients are solved.
fn realization(cartan: CartanType, rank: usize) -> (usize, Vec<Vec<i32>>, Vec<Vec<i32>>) {
    let n = rank;
    let mut roots = Vec::new();
    let mut simple = Vec::new();
    match cartan {
        CartanType::A => {
            let dim = n + 1;
            for i in 0..dim {
                for j in 0..dim {
                    if i != j {
                        roots.push(plus(unit(dim, i, 1), &unit(dim, j, -1)));
                    }
                }
            }
            for i in 0..n {
                simple.push(plus(unit(dim, i, 1), &unit(dim, i + 1, -1)));
            }
            (dim, roots, simple)
        }
        CartanType::B | CartanType::C | CartanType::D => {
            signed_pairs(n, &mut roots);
            let k = match cartan {
                CartanType::B => 1,
                CartanType::C => 2,
                _ => 0,
            };
            if k > 0 {
                for i in 0..n {
                    roots.push(unit(n, i, k));
                    roots.push(unit(n, i, -k));
                }
            }
            for i in 0..n - 1 {
                simple.push(plus(unit(n, i, 1), &unit(n, i + 1, -1)));
            }
            simple.push(match cartan {
                CartanType::D => plus(unit(n, n - 2, 1), &unit(n, n - 1, 1)),
                _ => unit(n, n - 1, k),
            });
            (n, roots, simple)
        }
        CartanType::E => {
            signed_pairs(8, &mut roots);
            roots.extend(half_sign_vectors(8, Some(0)));
            (8, roots, e8_simple())
        }
        CartanType::F => {
            signed_pairs(4, &mut roots);
            for i in 0..4 {
                roots.push(unit(4, i, 1));
                roots.push(unit(4, i, -1));
            }
            roots.extend(half_sign_vectors(4, None));
            simple = vec![
                plus(unit(4, 1, 1), &unit(4, 2, -1)),
                plus(unit(4, 2, 1), &unit(4, 3, -1)),
                unit(4, 3, 1),
                vec![1, -1, -1, -1],
            ];
            (4, roots, simple)
        }
        CartanType::G => {
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        roots.push(plus(unit(3, i, 1), &unit(3, j, -1)));
                    }
                }
                let mut long = vec![-2; 3];
                long[i] = 4;
                roots.push(long.clone());
                roots.push(long.iter().map(|x| -x).collect());
            }
            simple = vec![vec![2, -2, 0], vec![-2, 4, -2]];
            (3, roots, simple)
        }
    }
}

fn simple_coefficients(simple: &[Vec<i32>], v: &[i32]) -> Vec<i32> {
    let fam: Vec<Vec<Rational>> = simple.iter().map(|s| s.iter().map(|&x| rat(x as i64)).collect()).collect();
    let coords = Coordinates::new(&fam).expect("simple roots are independent");
    let target: Vec<Rational> = v.iter().map(|&x| rat(x as i64)).collect();
    coords
        .solve(&target)
        .expect("root lies in the span of the simple roots")
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "non-integral simple coefficient");
            i32::try_from(c.to_integer()).expect("coefficient fits in i32")
        })
        .collect()
}

fn factor_data(cartan: CartanType, rank: usize) -> FactorData {
    let (dim, coords, simple) = realization(cartan, rank);
    let fam: Vec<Vec<Rational>> = simple.iter().map(|s| s.iter().map(|&x| rat(x as i64)).collect()).collect();
    let solver = Coordinates::new(&fam).expect("simple roots are independent");
    let mut roots: Vec<(HalfVec, Vec<i32>)> = coords
        .into_iter()
        .map(|c| {
            let target: Vec<Rational> = c.iter().map(|&x| rat(x as i64)).collect();
            let k: Vec<i32> = solver
                .solve(&target)
                .expect("root lies in the span of the simple roots")
                .into_iter()
                .map(|q| {
                    assert!(q.is_integer(), "non-integral simple coefficient");
                    i32::try_from(q.to_integer()).expect("coefficient fits in i32")
                })
                .collect();
            (HalfVec(c), k)
        })
        .collect();
    let mut simple = simple;
    if cartan == CartanType::E && rank < 8 {
        roots.retain(|(_, k)| k[rank..].iter().all(|&x| x == 0));
        for (_, k) in roots.iter_mut() {
            k.truncate(rank);
        }
        simple.truncate(rank);
    }
    // Positive roots first, by height, then negatives in matching order.
    roots.sort_by(|(va, ka), (vb, kb)| {
        let pa = ka.iter().all(|&x| x >= 0);
        let pb = kb.iter().all(|&x| x >= 0);
        let ha: i32 = ka.iter().map(|x| x.abs()).sum();
        let hb: i32 = kb.iter().map(|x| x.abs()).sum();
        pb.cmp(&pa).then(ha.cmp(&hb)).then(kb.cmp(ka)).then(va.cmp(vb))
    });
    FactorData { cartan, rank, dim, roots, simple: simple.into_iter().map(HalfVec).collect() }
}

impl RootSystem {
    /// The root system of a simple Lie algebra of the given type and rank.
    pub fn build(cartan: CartanType, rank: usize) -> Result<RootSystem> {
        if !cartan.valid_rank(rank) {
            return Err(Error::InvalidRank { cartan, rank });
        }
        Ok(Self::assemble(vec![factor_data(cartan, rank)]))
    }

    /// Orthogonal direct sum. Components are renumbered in list order.
    pub fn direct_sum(systems: &[RootSystem]) -> Result<RootSystem> {
        if systems.is_empty() {
            return Err(Error::EmptyDirectSum);
        }
        let mut data = Vec::new();
        for rs in systems {
            for (c, f) in rs.factors.iter().enumerate() {
                let roots = rs
                    .roots
                    .iter()
                    .filter(|r| r.component == c)
                    .map(|r| (r.euclid.clone(), r.simple_coeffs.clone()))
                    .collect();
                let simple = rs.simple[f.first_simple..f.first_simple + f.rank]
                    .iter()
                    .map(|&s| rs.roots[s.index()].euclid.clone())
                    .collect();
                data.push(FactorData { cartan: f.cartan, rank: f.rank, dim: f.dim, roots, simple });
            }
        }
        Ok(Self::assemble(data))
    }

    fn assemble(data: Vec<FactorData>) -> RootSystem {
        let mut factors = Vec::new();
        let mut roots = Vec::new();
        let mut index = HashMap::new();
        let mut simple = Vec::new();
        let mut offset = 0;
        for (component, fd) in data.into_iter().enumerate() {
            factors.push(Factor { cartan: fd.cartan, rank: fd.rank, dim: fd.dim, offset, first_simple: simple.len() });
            offset += fd.dim;
            let base = roots.len();
            for (i, (euclid, k)) in fd.roots.into_iter().enumerate() {
                index.insert((component, euclid.clone()), RootId::new(base + i));
                roots.push(Root { component, simple_coeffs: k, euclid });
            }
            for s in &fd.simple {
                simple.push(index[&(component, s.clone())]);
            }
        }
        let n = roots.len();
        let negation = roots.iter().map(|r| index[&(r.component, r.euclid.neg())]).collect();
        let mut sums = vec![None; n * n];
        for (a, ra) in roots.iter().enumerate() {
            for (b, rb) in roots.iter().enumerate() {
                if ra.component == rb.component {
                    sums[a * n + b] = index.get(&(ra.component, ra.euclid.add(&rb.euclid))).copied();
                }
            }
        }
        RootSystem { factors, roots, index, simple, negation, sums }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.factors.iter().map(|f| f.dim).sum()
    }

    pub fn ids(&self) -> impl Iterator<Item = RootId> + Clone {
        (0..self.roots.len()).map(RootId::new)
    }

    pub fn all(&self) -> RootSet {
        RootSet::full(self.len())
    }

    pub fn root(&self, id: RootId) -> &Root {
        &self.roots[id.index()]
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn check(&self, id: RootId) -> Result<()> {
        if id.index() < self.roots.len() {
            Ok(())
        } else {
            Err(Error::UnknownRoot(id.index()))
        }
    }

    /// Simple roots in factor order, each factor in Bourbaki order.
    pub fn simple_roots(&self) -> &[RootId] {
        &self.simple
    }

    /// The `index`-th (1-based) simple root of factor `component`.
    pub fn simple_root(&self, component: usize, index: usize) -> Result<RootId> {
        let f = self.factors.get(component).ok_or_else(|| {
            Error::IndexOutOfRange(format!("component {component} (system has {})", self.factors.len()))
        })?;
        if index == 0 || index > f.rank {
            return Err(Error::IndexOutOfRange(format!(
                "simple root α{index} of component {component} ({}{})",
                f.cartan, f.rank
            )));
        }
        Ok(self.simple[f.first_simple + index - 1])
    }

    pub fn lookup(&self, component: usize, euclid: &HalfVec) -> Option<RootId> {
        self.index.get(&(component, euclid.clone())).copied()
    }

    /// Root with the given coordinates in the concatenated ambient space.
    pub fn lookup_global(&self, coords: &[i32]) -> Option<RootId> {
        let mut found = None;
        for (c, f) in self.factors.iter().enumerate() {
            let block = &coords[f.offset..f.offset + f.dim];
            if block.iter().any(|&x| x != 0) {
                if found.is_some() {
                    return None;
                }
                found = Some((c, HalfVec(block.to_vec())));
            }
        }
        found.and_then(|(c, v)| self.lookup(c, &v))
    }

    pub fn global_coords(&self, id: RootId) -> Vec<i32> {
        let r = self.root(id);
        let f = &self.factors[r.component];
        let mut out = vec![0; self.ambient_dim()];
        out[f.offset..f.offset + f.dim].copy_from_slice(r.euclid.doubled());
        out
    }

    pub fn neg(&self, id: RootId) -> RootId {
        self.negation[id.index()]
    }

    /// `a + b` if it is a root; `None` otherwise, including when the sum is zero.
    pub fn sum(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.sums[a.index() * self.roots.len() + b.index()]
    }

    pub fn add_roots(&self, a: RootId, b: RootId) -> Result<Option<RootId>> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sum(a, b))
    }

    pub fn is_positive(&self, id: RootId) -> bool {
        self.root(id).is_positive()
    }

    /// Simple roots with a nonzero coefficient in the expansion of `id`.
    pub fn support(&self, id: RootId) -> Result<Vec<RootId>> {
        self.check(id)?;
        let r = self.root(id);
        let f = &self.factors[r.component];
        Ok(r.simple_coeffs
            .iter()
            .enumerate()
            .filter(|(_, &k)| k != 0)
            .map(|(i, _)| self.simple[f.first_simple + i])
            .collect())
    }

    /// `{α ∈ R | β + α ∈ R}`.
    pub fn additive_neighbors(&self, id: RootId) -> Result<RootSet> {
        self.check(id)?;
        Ok(RootSet::from_predicate(self.len(), |a| self.sum(id, a).is_some()))
    }

    /// Four times the inner product of two roots (zero across factors).
    pub fn dot4(&self, a: RootId, b: RootId) -> i64 {
        let (ra, rb) = (self.root(a), self.root(b));
        if ra.component != rb.component {
            return 0;
        }
        ra.euclid.dot4(&rb.euclid)
    }

    /// The reflection `s_γ` as a permutation of root ids.
    pub fn reflection(&self, gamma: RootId) -> Vec<RootId> {
        let g = self.root(gamma);
        let gg = g.euclid.dot4(&g.euclid);
        self.ids()
            .map(|b| {
                let r = self.root(b);
                if r.component != g.component {
                    return b;
                }
                let n = (2 * r.euclid.dot4(&g.euclid) / gg) as i32;
                self.lookup(r.component, &r.euclid.add(&g.euclid.scale(-n))).expect("reflections permute roots")
            })
            .collect()
    }

    /// Whether `id` is a long root of its factor. Simply laced factors have only long roots.
    pub fn is_long(&self, id: RootId) -> bool {
        let c = self.root(id).component;
        let max = self.roots.iter().filter(|r| r.component == c).map(|r| r.euclid.dot4(&r.euclid)).max().unwrap_or(0);
        self.root(id).euclid.dot4(&self.root(id).euclid) == max
    }

    pub fn label(&self, id: RootId) -> RootLabel {
        let r = self.root(id);
        RootLabel { component: r.component, coeffs: r.simple_coeffs.clone() }
    }

    pub fn from_label(&self, label: &RootLabel) -> Option<RootId> {
        self.ids().find(|&id| {
            let r = self.root(id);
            r.component == label.component && r.simple_coeffs == label.coeffs
        })
    }

    /// Human-readable form, primed once per extra factor (`e1-e2`, `e1'-e2'`).
    pub fn display(&self, id: RootId) -> String {
        let r = self.root(id);
        let base = r.euclid.to_string();
        if self.factors.len() == 1 {
            base
        } else {
            let primes = "'".repeat(r.component);
            let mut out = String::new();
            let mut chars = base.chars().peekable();
            while let Some(c) = chars.next() {
                out.push(c);
                if c.is_ascii_digit() && !chars.peek().is_some_and(|d| d.is_ascii_digit()) {
                    // Only subscripts of basis vectors get primes.
                    if out.trim_end_matches(|ch: char| ch.is_ascii_digit()).ends_with('e') {
                        out.push_str(&primes);
                    }
                }
            }
            out
        }
    }

    /// Root given by integer coordinates in the realization of `component`.
    pub fn root_from_coords(&self, component: usize, coords: &[i32]) -> Option<RootId> {
        self.lookup(component, &HalfVec::from_integers(coords))
    }

    pub fn simple_coefficients_of(&self, component: usize, doubled: &[i32]) -> Vec<i32> {
        let f = &self.factors[component];
        let simple: Vec<Vec<i32>> = self.simple[f.first_simple..f.first_simple + f.rank]
            .iter()
            .map(|&s| self.root(s).euclid.doubled().to_vec())
            .collect();
        simple_coefficients(&simple, doubled)
    }
}

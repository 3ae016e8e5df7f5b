use std::fmt;

use fixedbitset::FixedBitSet;

use crate::roots::RootId;

/// A subset of the roots of one [`RootSystem`](crate::roots::RootSystem),
/// stored as a bitset over root indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RootSet {
    bits: FixedBitSet,
}

impl RootSet {
    pub fn empty(universe: usize) -> Self {
        RootSet { bits: FixedBitSet::with_capacity(universe) }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        RootSet { bits }
    }

    pub fn from_ids<I: IntoIterator<Item = RootId>>(universe: usize, ids: I) -> Self {
        let mut s = Self::empty(universe);
        for id in ids {
            s.insert(id);
        }
        s
    }

    pub fn from_predicate(universe: usize, mut pred: impl FnMut(RootId) -> bool) -> Self {
        Self::from_ids(universe, (0..universe).map(RootId::new).filter(|&r| pred(r)))
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, id: RootId) -> bool {
        self.bits.contains(id.index())
    }

    pub fn insert(&mut self, id: RootId) -> bool {
        !self.bits.put(id.index())
    }

    pub fn remove(&mut self, id: RootId) {
        self.bits.set(id.index(), false);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = RootId> + '_ {
        self.bits.ones().map(RootId::new)
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        RootSet { bits }
    }

    pub fn intersection(&self, other: &RootSet) -> RootSet {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        RootSet { bits }
    }

    pub fn difference(&self, other: &RootSet) -> RootSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        RootSet { bits }
    }

    pub fn complement(&self) -> RootSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        RootSet { bits }
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &RootSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|r| r.index())).finish()
    }
}

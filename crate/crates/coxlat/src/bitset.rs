//! Dense bit-sets over root indices and generator indices.

use std::fmt;

/// Subset of the generators `S`, stored as a mask (rank is at most 32 here,
/// far beyond anything the finite classification accepts in practice).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GenSet(pub u32);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 32);
        if n == 32 {
            GenSet(u32::MAX)
        } else {
            GenSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(s: usize) -> Self {
        GenSet(1 << s)
    }

    pub fn contains(self, s: usize) -> bool {
        self.0 >> s & 1 == 1
    }

    pub fn insert(&mut self, s: usize) {
        self.0 |= 1 << s;
    }

    pub fn remove(&mut self, s: usize) {
        self.0 &= !(1 << s);
    }

    pub fn with(self, s: usize) -> Self {
        GenSet(self.0 | 1 << s)
    }

    pub fn without(self, s: usize) -> Self {
        GenSet(self.0 & !(1 << s))
    }

    pub fn union(self, other: GenSet) -> Self {
        GenSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GenSet) -> Self {
        GenSet(self.0 & other.0)
    }

    pub fn difference(self, other: GenSet) -> Self {
        GenSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let s = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(s)
            }
        })
    }

    /// All `2^n` subsets of `{0, .., n-1}` in increasing mask order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = GenSet> {
        debug_assert!(n < 32);
        (0..1u32 << n).map(GenSet)
    }
}

/// Subset of root indices `0..universe`, a fixed-width dense bit-set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet {
    words: Vec<u64>,
    universe: usize,
}

impl RootSet {
    pub fn empty(universe: usize) -> Self {
        RootSet { words: vec![0; universe.div_ceil(64)], universe }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for i in 0..universe {
            set.insert(i);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.universe);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.universe);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.universe);
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &RootSet) -> RootSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &RootSet) -> RootSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn symmetric_difference(&self, other: &RootSet) -> RootSet {
        self.zip_with(other, |a, b| a ^ b)
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&i| self.contains(i))
    }

    fn zip_with(&self, other: &RootSet, f: impl Fn(u64, u64) -> u64) -> RootSet {
        debug_assert_eq!(self.universe, other.universe);
        RootSet {
            words: self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect(),
            universe: self.universe,
        }
    }
}

impl fmt::Debug for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for RootSetBuilder {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        RootSetBuilder(iter.into_iter().collect())
    }
}

/// Collects indices before the universe size is known.
pub struct RootSetBuilder(Vec<usize>);

impl RootSetBuilder {
    pub fn build(self, universe: usize) -> RootSet {
        let mut set = RootSet::empty(universe);
        for i in self.0 {
            set.insert(i);
        }
        set
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genset_basics() {
        let mut g = GenSet::EMPTY;
        g.insert(0);
        g.insert(2);
        assert!(g.contains(0) && !g.contains(1) && g.contains(2));
        assert_eq!(g.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(g.len(), 2);
        assert!(g.is_subset(GenSet::full(3)));
        assert!(!GenSet::full(3).is_subset(g));
        assert_eq!(GenSet::all_subsets(3).count(), 8);
    }

    #[test]
    fn rootset_ops() {
        let mut a = RootSet::empty(130);
        let mut b = RootSet::empty(130);
        a.insert(0);
        a.insert(64);
        a.insert(129);
        b.insert(64);
        b.insert(100);
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), vec![64]);
        assert_eq!(a.union(&b).len(), 4);
        assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), vec![0, 129]);
        assert_eq!(a.symmetric_difference(&b).len(), 3);
        assert!(!a.is_subset(&b));
        assert!(a.intersection(&b).is_subset(&b));
    }
}

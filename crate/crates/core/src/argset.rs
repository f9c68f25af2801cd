//! Fixed-width sets of argument indices.

use std::cmp::Ordering;
use std::fmt;

use smallvec::{smallvec, SmallVec};

const WORD: usize = 64;

/// A subset of a framework's universe, stored as a bit vector with one bit
/// per argument index.
///
/// Universes of up to 64 arguments fit in a single inline word; larger ones
/// spill to the heap. Every set carries the size of the universe it lives in,
/// and only bits below that size are ever set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArgSet {
    len: usize,
    words: SmallVec<[u64; 1]>,
}

fn word_count(len: usize) -> usize {
    len.div_ceil(WORD).max(1)
}

impl ArgSet {
    /// The empty subset of a universe with `len` arguments.
    pub fn empty(len: usize) -> Self {
        ArgSet {
            len,
            words: smallvec![0; word_count(len)],
        }
    }

    /// The whole universe.
    pub fn full(len: usize) -> Self {
        let mut set = Self::empty(len);
        for (i, w) in set.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let remaining = len.saturating_sub(lo);
            *w = if remaining >= WORD {
                u64::MAX
            } else {
                (1u64 << remaining) - 1
            };
        }
        set
    }

    pub fn singleton(len: usize, index: usize) -> Self {
        let mut set = Self::empty(len);
        set.insert(index);
        set
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut set = Self::empty(len);
        for i in indices {
            set.insert(i);
        }
        set
    }

    /// Builds a set from the low `len` bits of `bits`.
    ///
    /// # Panics
    ///
    /// Panics if `len > 64` or if a bit at or above `len` is set.
    pub fn from_bits(len: usize, bits: u64) -> Self {
        assert!(len <= WORD, "from_bits needs a universe of at most 64");
        assert!(
            len == WORD || bits >> len == 0,
            "bit pattern {bits:#b} exceeds universe of {len}"
        );
        ArgSet {
            len,
            words: smallvec![bits],
        }
    }

    /// The single-word bit pattern, if the universe fits in one word.
    pub fn bits(&self) -> Option<u64> {
        (self.len <= WORD).then(|| self.words[0])
    }

    /// Size of the universe this set lives in.
    pub fn universe_len(&self) -> usize {
        self.len
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.len && self.words[index / WORD] >> (index % WORD) & 1 == 1
    }

    /// # Panics
    ///
    /// Panics if `index` is outside the universe.
    pub fn insert(&mut self, index: usize) {
        assert!(
            index < self.len,
            "index {index} outside universe of {}",
            self.len
        );
        self.words[index / WORD] |= 1 << (index % WORD);
    }

    pub fn remove(&mut self, index: usize) {
        if index < self.len {
            self.words[index / WORD] &= !(1 << (index % WORD));
        }
    }

    pub fn with(&self, index: usize) -> Self {
        let mut set = self.clone();
        set.insert(index);
        set
    }

    fn check_same_universe(&self, other: &Self) {
        debug_assert_eq!(self.len, other.len, "sets from different universes");
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        self.check_same_universe(other);
        ArgSet {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    /// Complement relative to the universe.
    pub fn complement(&self) -> Self {
        Self::full(self.len).difference(self)
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_same_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_same_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_same_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_superset(&self, other: &Self) -> bool {
        other.is_subset(self)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.check_same_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .any(|(&a, &b)| a & b != 0)
    }

    /// Relativised inclusion: `self ∩ domain ⊆ other ∩ domain`.
    pub fn is_subset_within(&self, other: &Self, domain: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .zip(&domain.words)
            .all(|((&a, &b), &d)| a & d & !b == 0)
    }

    /// Relativised equality: agreement on every member of `domain`.
    pub fn eq_within(&self, other: &Self, domain: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .zip(&domain.words)
            .all(|((&a, &b), &d)| (a ^ b) & d == 0)
    }

    /// Member indices in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word_index: 0,
            current: self.words[0],
        }
    }

    /// Concatenates two sets over the same universe into one set over a
    /// universe twice the size (`self` in the low half).
    pub fn concat(&self, high: &Self) -> Self {
        self.check_same_universe(high);
        let n = self.len;
        let mut out = Self::empty(2 * n);
        for i in self.iter() {
            out.insert(i);
        }
        for i in high.iter() {
            out.insert(n + i);
        }
        out
    }
}

impl PartialOrd for ArgSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ascending bit-pattern order: sets compare as the unsigned integers whose
/// bit `i` is membership of argument `i`.
impl Ord for ArgSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl fmt::Debug for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word_index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_index * WORD + bit);
            }
            self.word_index += 1;
            self.current = *self.words.get(self.word_index)?;
        }
    }
}

impl<'a> IntoIterator for &'a ArgSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// All subsets of `domain`, in ascending bit-pattern order.
///
/// # Panics
///
/// Panics if `domain` has more than 63 members.
pub fn subsets_of(domain: &ArgSet) -> impl Iterator<Item = ArgSet> + '_ {
    let members: Vec<usize> = domain.iter().collect();
    assert!(
        members.len() < 64,
        "cannot enumerate subsets of {} arguments",
        members.len()
    );
    let len = domain.universe_len();
    (0..1u64 << members.len()).map(move |code| {
        let mut set = ArgSet::empty(len);
        let mut rest = code;
        while rest != 0 {
            let k = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            set.insert(members[k]);
        }
        set
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_empty() {
        assert!(ArgSet::empty(0).is_empty());
        assert!(ArgSet::full(0).is_empty());
        assert_eq!(ArgSet::full(3).bits(), Some(0b111));
        assert_eq!(ArgSet::full(64).bits(), Some(u64::MAX));
        assert_eq!(ArgSet::full(130).count(), 130);
        assert_eq!(ArgSet::full(130).complement(), ArgSet::empty(130));
    }

    #[test]
    fn multi_word_membership() {
        let set = ArgSet::from_indices(100, [0, 63, 64, 99]);
        assert_eq!(set.iter().collect::<Vec<_>>(), vec![0, 63, 64, 99]);
        assert!(set.contains(64));
        assert!(!set.contains(65));
        assert!(!set.contains(1000));
        assert_eq!(set.bits(), None);
    }

    #[test]
    #[should_panic]
    fn insert_outside_universe_panics() {
        ArgSet::empty(3).insert(3);
    }

    #[test]
    fn ordering_is_numeric() {
        let a = ArgSet::from_bits(3, 0b001);
        let b = ArgSet::from_bits(3, 0b010);
        let c = ArgSet::from_bits(3, 0b011);
        assert!(a < b && b < c);
        let lo = ArgSet::from_indices(70, [63]);
        let hi = ArgSet::from_indices(70, [64]);
        assert!(lo < hi);
    }

    #[test]
    fn relativised_comparisons() {
        let d = ArgSet::from_bits(4, 0b0011);
        let a = ArgSet::from_bits(4, 0b0101);
        let b = ArgSet::from_bits(4, 0b1001);
        assert!(a.eq_within(&b, &d));
        assert!(a.is_subset_within(&b, &d));
        assert!(!a.is_subset(&b));
    }

    #[test]
    fn subsets_enumeration_order() {
        let d = ArgSet::from_bits(4, 0b1010);
        let subs: Vec<_> = subsets_of(&d).map(|s| s.bits().unwrap()).collect();
        assert_eq!(subs, vec![0b0000, 0b0010, 0b1000, 0b1010]);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_u64(n in 0usize..=64, a: u64, b: u64) {
            let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            let (a, b) = (a & mask, b & mask);
            let sa = ArgSet::from_bits(n, a);
            let sb = ArgSet::from_bits(n, b);
            prop_assert_eq!(sa.union(&sb).bits(), Some(a | b));
            prop_assert_eq!(sa.intersection(&sb).bits(), Some(a & b));
            prop_assert_eq!(sa.difference(&sb).bits(), Some(a & !b));
            prop_assert_eq!(sa.complement().bits(), Some(!a & mask));
            prop_assert_eq!(sa.is_subset(&sb), a & !b == 0);
            prop_assert_eq!(sa.cmp(&sb), a.cmp(&b));
            prop_assert_eq!(sa.count(), a.count_ones() as usize);
        }

        #[test]
        fn iter_roundtrips(indices in proptest::collection::btree_set(0usize..200, 0..30)) {
            let set = ArgSet::from_indices(200, indices.iter().copied());
            let back: Vec<usize> = set.iter().collect();
            prop_assert_eq!(back, indices.into_iter().collect::<Vec<_>>());
        }
    }
}

//! Dynamic-width bitsets over vertex indices.
//!
//! A [`Subset`] stores its members as packed 64-bit words with trailing zero
//! words trimmed, so equality and hashing do not depend on how large the
//! ambient universe is. Sets on at most 64 vertices live inline in a single
//! word; larger sets spill to the heap.

use std::cmp::Ordering;
use std::fmt;

use smallvec::{smallvec, SmallVec};

const BITS: usize = 64;

/// A finite set of vertex indices.
///
/// The ordering is lexicographic on the ascending member sequences, so
/// `{0,1} < {0,2} < {1}` and the empty set is the smallest element.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Subset {
    words: SmallVec<[u64; 1]>,
}

/// A face of a simplicial complex is just a vertex subset.
pub type Face = Subset;

impl Subset {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a set from the low 64 indices encoded in `word`.
    pub fn from_word(word: u64) -> Self {
        let mut s = Self {
            words: smallvec![word],
        };
        s.trim();
        s
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words: SmallVec<[u64; 1]> = smallvec![u64::MAX; n / BITS];
        if !n.is_multiple_of(BITS) {
            words.push((1u64 << (n % BITS)) - 1);
        }
        let mut s = Self { words };
        s.trim();
        s
    }

    pub fn singleton(i: usize) -> Self {
        let mut s = Self::new();
        s.insert(i);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut s = Self::new();
        for i in indices {
            s.insert(i);
        }
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    #[inline]
    fn word(&self, w: usize) -> u64 {
        self.words.get(w).copied().unwrap_or(0)
    }

    /// The set as a single machine word, if every member is below 64.
    #[inline]
    pub fn as_word(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        (self.word(i / BITS) >> (i % BITS)) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        let w = i / BITS;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1u64 << (i % BITS);
    }

    pub fn remove(&mut self, i: usize) {
        let w = i / BITS;
        if w < self.words.len() {
            self.words[w] &= !(1u64 << (i % BITS));
            self.trim();
        }
    }

    /// Copy of `self` with `i` removed.
    pub fn without(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.remove(i);
        s
    }

    /// Copy of `self` with `i` added.
    pub fn with(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.insert(i);
        s
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Simplicial dimension `|F| - 1`; the empty face has dimension -1.
    #[inline]
    pub fn dim(&self) -> isize {
        self.len() as isize - 1
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.len() <= other.words.len()
            && self
                .words
                .iter()
                .zip(other.words.iter())
                .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        let len = self.words.len().max(other.words.len());
        let words = (0..len).map(|w| self.word(w) | other.word(w)).collect();
        Self { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = Self {
            words: self
                .words
                .iter()
                .zip(other.words.iter())
                .map(|(a, b)| a & b)
                .collect(),
        };
        s.trim();
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = Self {
            words: self
                .words
                .iter()
                .enumerate()
                .map(|(w, a)| a & !other.word(w))
                .collect(),
        };
        s.trim();
        s
    }

    /// Complement inside `{0, ..., n-1}`.
    pub fn complement(&self, n: usize) -> Self {
        Subset::full(n).difference(self)
    }

    pub fn iter(&self) -> Members<'_> {
        Members {
            words: &self.words,
            w: 0,
            current: self.word(0),
        }
    }

    pub fn min_index(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn max_index(&self) -> Option<usize> {
        let w = self.words.len().checked_sub(1)?;
        Some(w * BITS + (BITS - 1 - self.words[w].leading_zeros() as usize))
    }

    /// Number of members strictly below `i`.
    pub fn rank_of(&self, i: usize) -> usize {
        let w = i / BITS;
        let below: usize = self
            .words
            .iter()
            .take(w)
            .map(|x| x.count_ones() as usize)
            .sum();
        let mask = (1u64 << (i % BITS)) - 1;
        below + (self.word(w) & mask).count_ones() as usize
    }

    /// True when some member is strictly greater than `i`.
    fn has_member_above(&self, i: usize) -> bool {
        let w = i / BITS;
        let bit = i % BITS;
        let high = if bit == BITS - 1 {
            0
        } else {
            self.word(w) >> (bit + 1)
        };
        high != 0 || self.words.iter().skip(w + 1).any(|&x| x != 0)
    }

    /// All `k`-element subsets, in lexicographic order.
    pub fn subsets_of_size(&self, k: usize) -> impl Iterator<Item = Subset> + '_ {
        use itertools::Itertools;
        let members: Vec<usize> = self.iter().collect();
        members
            .into_iter()
            .combinations(k)
            .map(Subset::from_indices)
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.words.len().max(other.words.len());
        for w in 0..len {
            let (a, b) = (self.word(w), other.word(w));
            let diff = a ^ b;
            if diff == 0 {
                continue;
            }
            // First element where the sorted sequences diverge.
            let d = w * BITS + diff.trailing_zeros() as usize;
            return if self.contains(d) {
                if other.has_member_above(d) {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            } else if self.has_member_above(d) {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
        Ordering::Equal
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Subset::from_indices(iter)
    }
}

/// Ascending iterator over the members of a [`Subset`].
pub struct Members<'a> {
    words: &'a [u64],
    w: usize,
    current: u64,
}

impl Iterator for Members<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.w * BITS + bit);
            }
            self.w += 1;
            if self.w >= self.words.len() {
                return None;
            }
            self.current = self.words[self.w];
        }
    }
}

/// Sort by (cardinality, lexicographic) — the canonical report order.
pub fn sort_by_size(sets: &mut [Subset]) {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
}

/// Inclusion-minimal members of `sets`, deduplicated and sorted lexicographically.
pub fn minimal_sets(mut sets: Vec<Subset>) -> Vec<Subset> {
    sort_by_size(&mut sets);
    sets.dedup();
    let mut kept: Vec<Subset> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Inclusion-maximal members of `sets`, deduplicated and sorted lexicographically.
pub fn maximal_sets(mut sets: Vec<Subset>) -> Vec<Subset> {
    sort_by_size(&mut sets);
    sets.dedup();
    let mut kept: Vec<Subset> = Vec::with_capacity(sets.len());
    for s in sets.into_iter().rev() {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// True when no member of `sets` contains another (duplicates count as containment).
pub fn is_antichain(sets: &[Subset]) -> bool {
    sets.iter().enumerate().all(|(i, a)| {
        sets.iter()
            .enumerate()
            .all(|(j, b)| i == j || !a.is_subset(b))
    })
}

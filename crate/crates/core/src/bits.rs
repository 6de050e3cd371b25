//! Word-packed vertex sets.

use std::fmt;

pub(crate) const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

#[inline]
pub(crate) fn test(set: &[u64], v: usize) -> bool {
    set[v / WORD] >> (v % WORD) & 1 == 1
}

#[inline]
pub(crate) fn set(set: &mut [u64], v: usize) {
    set[v / WORD] |= 1 << (v % WORD);
}

#[inline]
pub(crate) fn clear(set: &mut [u64], v: usize) {
    set[v / WORD] &= !(1 << (v % WORD));
}

#[inline]
pub(crate) fn count(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn is_empty(set: &[u64]) -> bool {
    set.iter().all(|&w| w == 0)
}

#[inline]
pub(crate) fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

pub(crate) fn iter(set: &[u64]) -> Ones<'_> {
    Ones {
        words: set,
        index: 0,
        current: set.first().copied().unwrap_or(0),
    }
}

/// Ascending iterator over the set bits of a word slice.
pub(crate) struct Ones<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

/// A set of vertex ids, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub(crate) fn from_words(words: Vec<u64>) -> Self {
        VertexSet { words }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.words.len() * WORD && test(&self.words, v)
    }

    pub fn len(&self) -> usize {
        count(&self.words)
    }

    pub fn is_empty(&self) -> bool {
        is_empty(&self.words)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        iter(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

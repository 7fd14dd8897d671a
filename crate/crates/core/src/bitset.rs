//! Fixed-width vertex sets.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

/// A set of vertices drawn from `0..capacity`, stored as a packed bit vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    words: Vec<u64>,
    capacity: usize,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet { words: vec![0; words_for(capacity)], capacity }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = Self::new(capacity);
        for v in 0..capacity {
            s.insert(v);
        }
        s
    }

    pub(crate) fn from_words(words: &[u64], capacity: usize) -> Self {
        VertexSet { words: words.to_vec(), capacity }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && (self.words[v / WORD] >> (v % WORD)) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.capacity, "vertex {v} out of range for set of capacity {}", self.capacity);
        let before = self.contains(v);
        self.words[v / WORD] |= 1 << (v % WORD);
        !before
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        let before = self.contains(v);
        if before {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
        before
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(other) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(other) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &[u64]) {
        for (a, b) in self.words.iter_mut().zip(other) {
            *a &= !b;
        }
    }

    /// Size of `self ∩ other` without materialising it.
    pub fn intersection_len(&self, other: &[u64]) -> usize {
        self.words.iter().zip(other).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn is_subset_of(&self, other: &[u64]) -> bool {
        self.words.iter().zip(other).all(|(a, b)| a & !b == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter::new(&self.words)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

/// Ascending iterator over the set bits of a word slice.
pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> Iter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        Iter { words, index: 0, current: words.first().copied().unwrap_or(0) }
    }
}

impl Iterator for Iter<'_> {
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_iterate_across_words() {
        let mut s = VertexSet::new(130);
        for v in [0, 63, 64, 129] {
            assert!(s.insert(v));
        }
        assert!(!s.insert(64));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(s.len(), 4);
        assert!(s.remove(63));
        assert!(!s.contains(63));
        assert_eq!(s.first(), Some(0));
    }

    #[test]
    fn set_algebra() {
        let mut a = VertexSet::new(10);
        a.extend([1, 2, 3]);
        let mut b = VertexSet::new(10);
        b.extend([2, 3, 4]);
        assert_eq!(a.intersection_len(b.words()), 2);
        let mut c = a.clone();
        c.difference_with(b.words());
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![1]);
        assert!(c.is_subset_of(a.words()));
        a.union_with(b.words());
        assert_eq!(a.len(), 4);
        assert!(VertexSet::new(5).is_empty());
        assert_eq!(VertexSet::full(5).len(), 5);
    }
}

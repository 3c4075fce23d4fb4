//! Fixed-capacity vertex sets backed by a dense bitset.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::GraphError;

const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A set of vertices of a graph on `owner_n` vertices.
///
/// Members are always `< owner_n`. Iteration yields members in increasing
/// order. Sets compare lexicographically by their sorted membership, so
/// `{0, 5} < {1, 2}` and `{0} < {0, 1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    owner_n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    /// The empty set for a graph on `owner_n` vertices.
    pub fn empty(owner_n: usize) -> Self {
        VertexSet {
            owner_n,
            words: vec![0; words_for(owner_n)],
        }
    }

    /// The set `{0, .., owner_n - 1}`.
    pub fn full(owner_n: usize) -> Self {
        let mut s = Self::empty(owner_n);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    /// Builds a set from vertex indices, rejecting any index `>= owner_n`.
    /// Repeated indices are collapsed.
    pub fn from_vertices<I>(owner_n: usize, vertices: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::empty(owner_n);
        for v in vertices {
            if v >= owner_n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: owner_n });
            }
            s.insert(v);
        }
        Ok(s)
    }

    fn trim(&mut self) {
        let rem = self.owner_n % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn owner_n(&self) -> usize {
        self.owner_n
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.owner_n && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Inserts `v`. Panics if `v >= owner_n`.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(
            v < self.owner_n,
            "vertex {v} out of range for set over {} vertices",
            self.owner_n
        );
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.owner_n {
            return false;
        }
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        was
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// True when every vertex of the owner graph is a member.
    pub fn is_full(&self) -> bool {
        self.len() == self.owner_n
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn check_owner(&self, other: &VertexSet) {
        assert_eq!(
            self.owner_n, other.owner_n,
            "vertex sets belong to graphs of different order"
        );
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_owner(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_owner(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.check_owner(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !*b;
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> VertexSet {
        let mut s = self.clone();
        for w in s.words.iter_mut() {
            *w = !*w;
        }
        s.trim();
        s
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.check_owner(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_owner(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Size of the intersection without allocating.
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.check_owner(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Smallest member strictly greater than `v`.
    pub fn next_after(&self, v: usize) -> Option<usize> {
        let start = v + 1;
        if start >= self.owner_n {
            return None;
        }
        let mut wi = start / WORD_BITS;
        let mut word = self.words[wi] & (u64::MAX << (start % WORD_BITS));
        loop {
            if word != 0 {
                return Some(wi * WORD_BITS + word.trailing_zeros() as usize);
            }
            wi += 1;
            if wi >= self.words.len() {
                return None;
            }
            word = self.words[wi];
        }
    }

    /// True if some member is strictly greater than `v`.
    pub fn has_member_above(&self, v: usize) -> bool {
        self.next_after(v).is_some()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter()).then(self.owner_n.cmp(&other.owner_n))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

//! Bit-packed vertex sets.
//!
//! Vertices carry 1-based labels `1..=MAX_VERTICES`; label `v` lives in bit `v - 1`.
//! Everything in this crate is small enough (exhaustive enumeration is the whole
//! point), so a single `u128` word covers every universe we can afford to touch.

use std::cmp::Ordering;
use std::fmt;

/// Largest vertex label a [`VertexSet`] can hold.
pub const MAX_VERTICES: usize = 128;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    /// The interval `{lo, lo+1, ..., hi}`; empty when `hi < lo`.
    pub fn range(lo: usize, hi: usize) -> Self {
        if hi < lo {
            return Self::EMPTY;
        }
        debug_assert!(lo >= 1 && hi <= MAX_VERTICES);
        let len = hi - lo + 1;
        let mask = if len == 128 {
            u128::MAX
        } else {
            (1u128 << len) - 1
        };
        VertexSet(mask << (lo - 1))
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        Self::range(1, n)
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1u128 << (v - 1))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        *self = *self | Self::singleton(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << (v - 1));
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Smallest vertex label, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Largest vertex label, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 128 - self.0.leading_zeros() as usize)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

/// Lexicographic order on the sorted vertex lists (so `{1,2} < {1,3} < {2}`).
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
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

/// Comma-separated labels, the same spelling the exchange format uses.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

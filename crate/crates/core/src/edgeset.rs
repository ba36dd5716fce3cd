//! Fixed-index edge bitsets.
//!
//! Every [`Graph`](crate::Graph) orders its edges lexicographically by
//! endpoints, and an [`EdgeSet`] refers to edges by that index. Set algebra is
//! plain bit arithmetic, so the brute-force searches stay cheap.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Not, Sub};

/// A set of edge indices of some parent graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EdgeSet(u128);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub const fn from_bits(bits: u128) -> Self {
        EdgeSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    /// The set `{0, .., m-1}`.
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= 128);
        if m == 128 {
            EdgeSet(u128::MAX)
        } else {
            EdgeSet((1u128 << m) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        EdgeSet(1u128 << i)
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < 128 && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: EdgeSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> EdgeSetIter {
        EdgeSetIter(self.0)
    }

    /// The canonical order used for every tie-break in the crate.
    ///
    /// Membership vectors are compared in edge-index order and, at the first
    /// index where they differ, the set containing that edge is the smaller
    /// one. A depth-first search that tries "take edge i" before "skip edge i"
    /// visits its leaves in exactly this order.
    pub fn canonical_cmp(self, other: EdgeSet) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff.trailing_zeros();
        if self.0 >> low & 1 == 1 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = EdgeSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

pub struct EdgeSetIter(u128);

impl Iterator for EdgeSetIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for EdgeSetIter {}

impl IntoIterator for EdgeSet {
    type Item = usize;
    type IntoIter = EdgeSetIter;

    fn into_iter(self) -> EdgeSetIter {
        self.iter()
    }
}

impl BitOr for EdgeSet {
    type Output = EdgeSet;
    fn bitor(self, rhs: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for EdgeSet {
    fn bitor_assign(&mut self, rhs: EdgeSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for EdgeSet {
    type Output = EdgeSet;
    fn bitand(self, rhs: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for EdgeSet {
    fn bitand_assign(&mut self, rhs: EdgeSet) {
        self.0 &= rhs.0;
    }
}

impl BitXor for EdgeSet {
    type Output = EdgeSet;
    fn bitxor(self, rhs: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 ^ rhs.0)
    }
}

impl Sub for EdgeSet {
    type Output = EdgeSet;
    fn sub(self, rhs: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & !rhs.0)
    }
}

impl Not for EdgeSet {
    type Output = EdgeSet;
    fn not(self) -> EdgeSet {
        EdgeSet(!self.0)
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

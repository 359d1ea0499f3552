//! Single-word bitsets over a universe of at most 64 elements.
//!
//! Every subset handled by the crate (group subsets, vertex sets, neighborhoods)
//! is an [`ElementSet`]. The universe size is carried by the owning group or
//! relation, not by the set itself, so set algebra stays a handful of word ops.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest universe an [`ElementSet`] can describe.
pub const MAX_UNIVERSE: usize = 64;

/// A subset of `0..n` for some `n <= 64`, stored as a bitmask.
///
/// The total order is by cardinality first, then lexicographic on the sorted
/// element list, so `{0,3} < {1,2}` and every set of size 1 sorts before every
/// set of size 2.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn singleton(x: usize) -> Self {
        ElementSet(1u64 << x)
    }

    /// The whole universe `0..n`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    /// Builds a set from indices, rejecting any index `>= universe`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, items: I) -> Result<Self> {
        let mut bits = 0u64;
        for x in items {
            if x >= universe || x >= MAX_UNIVERSE {
                return Err(Error::OutOfRange {
                    element: x,
                    universe,
                });
            }
            bits |= 1u64 << x;
        }
        Ok(ElementSet(bits))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, x: usize) -> bool {
        x < 64 && self.0 >> x & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1u64 << x);
    }

    #[inline]
    pub const fn with(self, x: usize) -> Self {
        ElementSet(self.0 | 1u64 << x)
    }

    #[inline]
    pub const fn without(self, x: usize) -> Self {
        ElementSet(self.0 & !(1u64 << x))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    /// `0..n` minus `self`.
    #[inline]
    pub const fn complement(self, n: usize) -> Self {
        ElementSet(!self.0 & ElementSet::full(n).0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// True if every member is below `n`.
    #[inline]
    pub const fn fits(self, n: usize) -> bool {
        self.is_subset(ElementSet::full(n))
    }
}

/// Iterator over the members of an [`ElementSet`] in ascending order.
#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                // the smallest element where the two differ belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitOrAssign for ElementSet {
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl BitAndAssign for ElementSet {
    fn bitand_assign(&mut self, rhs: Self) {
        self.0 &= rhs.0;
    }
}

impl BitXor for ElementSet {
    type Output = ElementSet;
    fn bitxor(self, rhs: Self) -> Self {
        ElementSet(self.0 ^ rhs.0)
    }
}

impl Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for x in iter {
            assert!(x < MAX_UNIVERSE, "element {x} exceeds the 64-element universe");
            s.insert(x);
        }
        s
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(deserializer)?;
        ElementSet::from_indices(MAX_UNIVERSE, items).map_err(serde::de::Error::custom)
    }
}

/// Parses the comma-separated index notation used on the command line, e.g. `0,1,3`.
pub fn parse_indices(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() || text == "{}" {
        return Ok(Vec::new());
    }
    let text = text.trim_start_matches('{').trim_end_matches('}');
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::Invalid(format!("`{}` is not an element index", tok.trim())))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_cardinality_then_lexicographic() {
        let a: ElementSet = [0, 3].into_iter().collect();
        let b: ElementSet = [1, 2].into_iter().collect();
        let c: ElementSet = [5].into_iter().collect();
        assert!(a < b);
        assert!(c < a);
        let mut v = vec![b, a, c];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
    }

    #[test]
    fn complement_and_full() {
        let s: ElementSet = [1, 3].into_iter().collect();
        assert_eq!(s.complement(5).to_vec(), vec![0, 2, 4]);
        assert_eq!(ElementSet::full(64).len(), 64);
        assert_eq!(ElementSet::full(0), ElementSet::EMPTY);
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(
            ElementSet::from_indices(5, [0, 5]),
            Err(Error::OutOfRange {
                element: 5,
                universe: 5
            })
        );
    }

    #[test]
    fn parses_cli_notation() {
        assert_eq!(parse_indices("0,1, 3").unwrap(), vec![0, 1, 3]);
        assert_eq!(parse_indices("{2,5}").unwrap(), vec![2, 5]);
        assert!(parse_indices("").unwrap().is_empty());
        assert!(parse_indices("0,x").is_err());
    }

    #[test]
    fn json_is_sorted_array() {
        let s: ElementSet = [4, 0, 2].into_iter().collect();
        assert_eq!(serde_json::to_string(&s).unwrap(), "[0,2,4]");
        let back: ElementSet = serde_json::from_str("[4,2,0]").unwrap();
        assert_eq!(back, s);
    }
}

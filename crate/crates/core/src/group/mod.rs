//! Finite groups given by explicit multiplication tables, and the subset algebra
//! (Minkowski products, inverses, translates) everything else is built from.
//!
//! Elements are dense indices `0..n` with the identity at index 0. The named
//! families in [`families`] fix a canonical numbering; explicit tables must
//! already put the identity first.

mod descriptor;
pub mod families;
mod progression;
mod subgroups;

pub use descriptor::{FamilyDescriptor, GroupDescriptor};
pub use progression::Progression;
pub use subgroups::{Stabilizer, Subgroup, DEFAULT_SUBGROUP_BUDGET};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_UNIVERSE};

/// Which side a translation or progression acts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A validated finite group of order at most 64.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mul: Vec<u8>,
    inv: Vec<u8>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}

impl FiniteGroup {
    /// Validates an `n x n` Cayley table: Latin square, identity at index 0,
    /// associativity. Inverses are read off the table.
    pub fn from_table(name: impl Into<String>, table: &[Vec<usize>]) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if n > MAX_UNIVERSE {
            return Err(Error::BudgetExceeded {
                what: "group order",
                limit: MAX_UNIVERSE,
                actual: n,
            });
        }
        let mut mul = Vec::with_capacity(n * n);
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!(
                    "row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (b, &c) in row.iter().enumerate() {
                if c >= n {
                    return Err(Error::NotAGroup(format!("entry ({a},{b}) = {c} is out of range")));
                }
                mul.push(c as u8);
            }
        }
        Self::from_raw(name.into(), n, mul)
    }

    pub(crate) fn from_raw(name: String, n: usize, mul: Vec<u8>) -> Result<Self> {
        debug_assert_eq!(mul.len(), n * n);
        let full = ElementSet::full(n);
        for a in 0..n {
            let row: ElementSet = (0..n).map(|b| mul[a * n + b] as usize).collect();
            if row != full {
                return Err(Error::NotAGroup(format!("row {a} is not a permutation")));
            }
            let col: ElementSet = (0..n).map(|b| mul[b * n + a] as usize).collect();
            if col != full {
                return Err(Error::NotAGroup(format!("column {a} is not a permutation")));
            }
        }
        for a in 0..n {
            if mul[a] as usize != a || mul[a * n] as usize != a {
                return Err(Error::NotAGroup(format!(
                    "element 0 is not a two-sided identity (fails at {a})"
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = mul[a * n + b] as usize;
                for c in 0..n {
                    let bc = mul[b * n + c] as usize;
                    if mul[ab * n + c] != mul[a * n + bc] {
                        return Err(Error::NotAGroup(format!(
                            "not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let mut inv = vec![0u8; n];
        for a in 0..n {
            // Latin rows guarantee exactly one solution of a*x = e
            let x = (0..n).find(|&x| mul[a * n + x] == 0).expect("latin row");
            if mul[x * n + a] != 0 {
                return Err(Error::NotAGroup(format!("element {a} has no two-sided inverse")));
            }
            inv[a] = x as u8;
        }
        Ok(FiniteGroup {
            name,
            order: n,
            mul,
            inv,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub const fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// The whole group as a set.
    #[inline]
    pub fn elements(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A non-commuting pair, if any.
    pub fn non_commuting_pair(&self) -> Option<(usize, usize)> {
        (0..self.order)
            .flat_map(|a| (0..a).map(move |b| (a, b)))
            .find(|&(a, b)| self.mul(a, b) != self.mul(b, a))
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Checks that every member of `set` is an element of this group.
    pub fn check(&self, set: ElementSet) -> Result<ElementSet> {
        if set.fits(self.order) {
            Ok(set)
        } else {
            let bad = set.difference(self.elements()).first().unwrap();
            Err(Error::OutOfRange {
                element: bad,
                universe: self.order,
            })
        }
    }

    /// Builds a subset from indices, validated against the group order.
    pub fn set<I: IntoIterator<Item = usize>>(&self, items: I) -> Result<ElementSet> {
        ElementSet::from_indices(self.order, items)
    }

    /// Minkowski product `AB = {xy : x in A, y in B}`.
    pub fn set_product(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        let mut out = 0u64;
        for x in a {
            let row = &self.mul[x * self.order..(x + 1) * self.order];
            for y in b {
                out |= 1u64 << row[y];
            }
        }
        ElementSet::from_bits(out)
    }

    /// `A1 A2 ... Ak` evaluated left to right.
    pub fn product_of(&self, factors: &[ElementSet]) -> ElementSet {
        match factors.split_first() {
            None => ElementSet::singleton(0),
            Some((first, rest)) => rest.iter().fold(*first, |acc, &f| self.set_product(acc, f)),
        }
    }

    /// `A^{-1} = {x^{-1} : x in A}`.
    pub fn set_inverse(&self, a: ElementSet) -> ElementSet {
        a.iter().map(|x| self.inv(x)).collect()
    }

    /// `gA` (left) or `Ag` (right).
    pub fn translate(&self, a: ElementSet, g: usize, side: Side) -> ElementSet {
        let mut out = 0u64;
        match side {
            Side::Left => {
                for x in a {
                    out |= 1u64 << self.mul(g, x);
                }
            }
            Side::Right => {
                for x in a {
                    out |= 1u64 << self.mul(x, g);
                }
            }
        }
        ElementSet::from_bits(out)
    }

    /// `gAg^{-1}`.
    pub fn conjugate(&self, a: ElementSet, g: usize) -> ElementSet {
        self.translate(self.translate(a, g, Side::Left), self.inv(g), Side::Right)
    }

    /// Least set (cardinality, then lexicographic) among the left translates `gA`.
    pub fn left_orbit_canonical(&self, a: ElementSet) -> ElementSet {
        (0..self.order)
            .map(|g| self.translate(a, g, Side::Left))
            .min()
            .unwrap_or(a)
    }

    /// True if `a` is the representative returned by [`Self::left_orbit_canonical`].
    pub fn is_left_orbit_canonical(&self, a: ElementSet) -> bool {
        (1..self.order).all(|g| self.translate(a, g, Side::Left) >= a)
    }

    /// Number of distinct left translates of `a`.
    pub fn left_orbit_size(&self, a: ElementSet) -> usize {
        let mut seen: Vec<ElementSet> = (0..self.order)
            .map(|g| self.translate(a, g, Side::Left))
            .collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Smallest order of a nontrivial subgroup, i.e. the least prime divisor of
    /// the group order. `None` for the trivial group.
    pub fn smallest_nontrivial_subgroup_order(&self) -> Option<usize> {
        (1..self.order).map(|a| self.element_order(a)).min().map(|m| {
            // an element of order m has a power of prime order dividing m
            (2..=m).find(|p| m % p == 0).unwrap()
        })
    }
}

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::ElementSet;

use super::{FiniteGroup, Side};

/// Default cap on the group order for [`FiniteGroup::all_subgroups`].
pub const DEFAULT_SUBGROUP_BUDGET: usize = 64;

/// A subset verified to contain the identity and be closed under product and inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subgroup(ElementSet);

impl Subgroup {
    pub fn new(group: &FiniteGroup, elements: ElementSet) -> Result<Self> {
        group.check(elements)?;
        if !elements.contains(0) {
            return Err(Error::NotASubgroup(format!("{elements} misses the identity")));
        }
        if group.set_product(elements, elements) != elements {
            return Err(Error::NotASubgroup(format!("{elements} is not closed under products")));
        }
        if group.set_inverse(elements) != elements {
            return Err(Error::NotASubgroup(format!("{elements} is not closed under inverses")));
        }
        Ok(Subgroup(elements))
    }

    pub fn trivial() -> Self {
        Subgroup(ElementSet::singleton(0))
    }

    #[inline]
    pub fn elements(self) -> ElementSet {
        self.0
    }

    #[inline]
    pub fn order(self) -> usize {
        self.0.len()
    }

    pub fn is_trivial(self) -> bool {
        self.0.len() == 1
    }
}

/// Result of [`FiniteGroup::stabilizer_and_cosets`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stabilizer {
    /// `Q = {x : xA = A}`.
    pub subgroup: Subgroup,
    /// Number of distinct sets `a^{-1}A` with `a` in `A`.
    pub coset_count: usize,
    /// The right cosets `Qa` making up `A`, in set order.
    pub cosets: Vec<ElementSet>,
}

impl FiniteGroup {
    /// The subgroup generated by `s`; `{e}` for the empty set.
    pub fn generated_subgroup(&self, s: ElementSet) -> Subgroup {
        let mut current = s.with(0);
        loop {
            let next = self.set_product(current, current);
            if next == current {
                // finite: closure under products already gives inverses
                return Subgroup(current);
            }
            current = next;
        }
    }

    pub fn generates(&self, s: ElementSet) -> bool {
        self.generated_subgroup(s).elements() == self.elements()
    }

    /// Every subgroup, sorted by (order, element list), starting with `{e}` and ending with G.
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        self.all_subgroups_within(DEFAULT_SUBGROUP_BUDGET)
            .expect("group orders never exceed the default subgroup budget")
    }

    /// Like [`Self::all_subgroups`] but refuses groups larger than `budget`.
    ///
    /// Every subgroup is a join of cyclic subgroups, so starting from `{e}` and
    /// repeatedly joining with each cyclic subgroup reaches all of them.
    pub fn all_subgroups_within(&self, budget: usize) -> Result<Vec<Subgroup>> {
        if self.order() > budget {
            return Err(Error::BudgetExceeded {
                what: "subgroup enumeration group order",
                limit: budget,
                actual: self.order(),
            });
        }
        let mut cyclic: Vec<ElementSet> = (0..self.order())
            .map(|g| self.generated_subgroup(ElementSet::singleton(g)).elements())
            .collect();
        cyclic.sort_unstable();
        cyclic.dedup();

        let mut seen: HashSet<ElementSet> = HashSet::new();
        let mut stack = vec![ElementSet::singleton(0)];
        seen.insert(ElementSet::singleton(0));
        while let Some(h) = stack.pop() {
            for &c in &cyclic {
                if c.is_subset(h) {
                    continue;
                }
                let join = self.generated_subgroup(h | c).elements();
                if seen.insert(join) {
                    stack.push(join);
                }
            }
        }
        let mut out: Vec<Subgroup> = seen.into_iter().map(Subgroup).collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Left stabilizer `Q = {x : xA = A}` and the right `Q`-cosets composing `A`.
    pub fn stabilizer_and_cosets(&self, a: ElementSet) -> Result<Stabilizer> {
        let anchor = a.first().ok_or(Error::EmptySet)?;
        self.check(a)?;
        // xA = A forces x * anchor in A
        let candidates = self.translate(a, self.inv(anchor), Side::Right);
        let q: ElementSet = candidates
            .iter()
            .filter(|&x| self.translate(a, x, Side::Left) == a)
            .collect();
        let mut shifted: Vec<ElementSet> = a
            .iter()
            .map(|x| self.translate(a, self.inv(x), Side::Left))
            .collect();
        shifted.sort_unstable();
        shifted.dedup();

        let mut cosets: Vec<ElementSet> = a.iter().map(|x| self.translate(q, x, Side::Right)).collect();
        cosets.sort_unstable();
        cosets.dedup();
        debug_assert_eq!(cosets.len(), shifted.len());
        debug_assert_eq!(cosets.iter().fold(ElementSet::EMPTY, |acc, &c| acc | c), a);
        Ok(Stabilizer {
            subgroup: Subgroup(q),
            coset_count: shifted.len(),
            cosets,
        })
    }

    /// True if `b` is a right coset `Hb` of some subgroup `H`.
    pub fn is_right_coset(&self, b: ElementSet) -> bool {
        match self.stabilizer_and_cosets(b) {
            Ok(st) => st.coset_count == 1,
            Err(_) => false,
        }
    }
}

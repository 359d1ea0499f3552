//! Cayley graphs `Cay(G, S)`: vertex set `G`, arcs `(x, y)` with `x⁻¹y ∈ S`.
//!
//! `Γ(F) = FS` for every `F`, and left translations are automorphisms, so
//! fragments and atoms come in translation orbits.

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Side};
use crate::relation::Relation;
use crate::set::ElementSet;

#[derive(Clone, Debug)]
pub struct CayleyGraph {
    group: FiniteGroup,
    connection: ElementSet,
    relation: Relation,
}

impl CayleyGraph {
    /// Requires `e ∈ S`; use [`normalize_connection_set`] first otherwise.
    pub fn new(group: &FiniteGroup, connection: ElementSet) -> Result<Self> {
        group.check(connection)?;
        if !connection.contains(group.identity()) {
            return Err(Error::NotReflexive(group.identity()));
        }
        let rows = (0..group.order())
            .map(|x| group.translate(connection, x, Side::Left))
            .collect();
        Ok(CayleyGraph {
            group: group.clone(),
            connection,
            relation: Relation::new(rows)?,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn connection_set(&self) -> ElementSet {
        self.connection
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    pub fn into_relation(self) -> Relation {
        self.relation
    }

    /// `Cay(G, S⁻¹)`, which is the reverse relation.
    pub fn reverse(&self) -> CayleyGraph {
        let inv = self.group.set_inverse(self.connection);
        CayleyGraph::new(&self.group, inv).expect("S⁻¹ contains e whenever S does")
    }

    /// True iff every left translate `gB` equals `B` or misses it.
    pub fn is_block_under_translations(&self, b: ElementSet) -> bool {
        (0..self.group.order()).all(|g| {
            let t = self.group.translate(b, g, Side::Left);
            t == b || t.is_disjoint(b)
        })
    }

    /// Least left translate of `X`.
    pub fn orbit_canonical(&self, x: ElementSet) -> ElementSet {
        self.group.left_orbit_canonical(x)
    }
}

/// Shifts `S` by its smallest element: returns `(Sa⁻¹, a)`, which contains `e`
/// and has the same fragments as `S`.
pub fn normalize_connection_set(group: &FiniteGroup, s: ElementSet) -> Result<(ElementSet, usize)> {
    group.check(s)?;
    let a = s.first().ok_or(Error::EmptySet)?;
    Ok((group.translate(s, group.inv(a), Side::Right), a))
}

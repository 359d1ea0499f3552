//! Finite reflexive relations `Γ = (V, E)` with image, board, exterior and reverse.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{ElementSet, MAX_UNIVERSE};

/// A reflexive directed graph on `0..n`, one out-neighborhood bitset per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RelationJson", into = "RelationJson")]
pub struct Relation {
    n: usize,
    rows: Vec<ElementSet>,
}

/// Wire form: `{"n": 5, "rows": [[0,1],[1,2],...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelationJson {
    pub n: usize,
    pub rows: Vec<Vec<usize>>,
}

impl TryFrom<RelationJson> for Relation {
    type Error = Error;

    fn try_from(raw: RelationJson) -> Result<Self> {
        if raw.rows.len() != raw.n {
            return Err(Error::Invalid(format!(
                "relation declares n = {} but has {} rows",
                raw.n,
                raw.rows.len()
            )));
        }
        let rows = raw
            .rows
            .into_iter()
            .map(|r| ElementSet::from_indices(raw.n, r))
            .collect::<Result<Vec<_>>>()?;
        Relation::new(rows)
    }
}

impl From<Relation> for RelationJson {
    fn from(r: Relation) -> Self {
        RelationJson {
            n: r.n,
            rows: r.rows.iter().map(|s| s.to_vec()).collect(),
        }
    }
}

/// Minimum degrees and regularity flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DegreeProfile {
    /// Minimum out-degree `δ`.
    pub delta: usize,
    /// Minimum in-degree `δ₋`.
    pub delta_minus: usize,
    pub regular: bool,
    pub reverse_regular: bool,
}

impl Relation {
    /// Builds a relation from out-neighborhoods. Non-reflexive input is an error.
    pub fn new(rows: Vec<ElementSet>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_UNIVERSE {
            return Err(Error::BudgetExceeded {
                what: "relation vertex count",
                limit: MAX_UNIVERSE,
                actual: n,
            });
        }
        for (v, row) in rows.iter().enumerate() {
            if !row.fits(n) {
                return Err(Error::OutOfRange {
                    element: row.difference(ElementSet::full(n)).first().unwrap(),
                    universe: n,
                });
            }
            if !row.contains(v) {
                return Err(Error::NotReflexive(v));
            }
        }
        Ok(Relation { n, rows })
    }

    /// Everything related to everything.
    pub fn complete(n: usize) -> Result<Self> {
        Self::new(vec![ElementSet::full(n); n])
    }

    /// Only the loops.
    pub fn identity(n: usize) -> Result<Self> {
        Self::new((0..n).map(ElementSet::singleton).collect())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    /// `Γ(v)`.
    #[inline]
    pub fn neighborhood(&self, v: usize) -> ElementSet {
        self.rows[v]
    }

    pub fn rows(&self) -> &[ElementSet] {
        &self.rows
    }

    /// `Γ⁻(v)`, the in-neighborhood.
    pub fn in_neighborhood(&self, v: usize) -> ElementSet {
        (0..self.n).filter(|&u| self.rows[u].contains(v)).collect()
    }

    /// `Γ(X)`, the union of the out-neighborhoods of `X`.
    #[inline]
    pub fn image(&self, x: ElementSet) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for v in x {
            out |= self.rows[v];
        }
        out
    }

    /// `∂(X) = Γ(X) \ X`.
    #[inline]
    pub fn board(&self, x: ElementSet) -> ElementSet {
        self.image(x).difference(x)
    }

    /// `∇(X) = V \ Γ(X)`.
    #[inline]
    pub fn exterior(&self, x: ElementSet) -> ElementSet {
        self.image(x).complement(self.n)
    }

    /// The reverse relation: `(x, y)` is an arc iff `(y, x)` is.
    pub fn reverse(&self) -> Relation {
        let mut rows = vec![ElementSet::EMPTY; self.n];
        for (u, row) in self.rows.iter().enumerate() {
            for v in *row {
                rows[v].insert(u);
            }
        }
        Relation { n: self.n, rows }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.reverse()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let out: Vec<usize> = self.rows.iter().map(|r| r.len()).collect();
        let rev = self.reverse();
        let inn: Vec<usize> = rev.rows.iter().map(|r| r.len()).collect();
        let delta = out.iter().copied().min().unwrap_or(0);
        let delta_minus = inn.iter().copied().min().unwrap_or(0);
        DegreeProfile {
            delta,
            delta_minus,
            regular: out.iter().all(|&d| d == delta),
            reverse_regular: inn.iter().all(|&d| d == delta_minus),
        }
    }
}

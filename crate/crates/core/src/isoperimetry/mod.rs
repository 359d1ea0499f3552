//! k-th connectivities, fragments, atoms and super-fragments of finite reflexive
//! relations, plus the Cauchy / degenerate / Vosper classification.
//!
//! For a relation `Γ` on `V` and `k ≥ 1`, `F_k` is the family of `X ⊆ V` with
//! `|X| ≥ k` and `|∇(X)| ≥ k`. The relation is `k`-separable when `F_k` is
//! nonempty, and then `κ_k` is the least board size `|∂(X)|` over `F_k`.
//! Members achieving it are `k`-fragments; the smallest are `k`-atoms and the
//! largest `k`-super-fragments.
//!
//! All values are computed exactly by the branch-and-bound in `search`.

pub mod laws;
mod search;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relation::Relation;
use crate::set::ElementSet;

/// Schema version stamped on every JSON report the crate emits.
pub const SCHEMA_VERSION: u32 = 1;

/// Size limits for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchBudget {
    /// Largest vertex count for which all fragments are enumerated.
    pub max_fragment_vertices: usize,
    /// Largest vertex count for which `κ_k` alone is computed.
    pub max_kappa_vertices: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_fragment_vertices: 24,
            max_kappa_vertices: 32,
        }
    }
}

impl SearchBudget {
    fn check_fragments(&self, n: usize) -> Result<()> {
        if n > self.max_fragment_vertices {
            return Err(Error::BudgetExceeded {
                what: "fragment enumeration vertex count",
                limit: self.max_fragment_vertices,
                actual: n,
            });
        }
        Ok(())
    }

    fn check_kappa(&self, n: usize) -> Result<()> {
        if n > self.max_kappa_vertices {
            return Err(Error::BudgetExceeded {
                what: "connectivity search vertex count",
                limit: self.max_kappa_vertices,
                actual: n,
            });
        }
        Ok(())
    }
}

/// Everything known about the `k`-fragments of one relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FragmentReport {
    pub k: usize,
    pub kappa: usize,
    /// All `k`-fragments in ascending set order.
    pub fragments: Vec<ElementSet>,
    pub atoms: Vec<ElementSet>,
    pub super_fragments: Vec<ElementSet>,
    /// `|A| ≤ |∇(A)|` for the `k`-atoms `A`.
    pub faithful: bool,
}

impl FragmentReport {
    pub fn atom_size(&self) -> usize {
        self.atoms[0].len()
    }

    pub fn super_fragment_size(&self) -> usize {
        self.super_fragments[0].len()
    }

    /// Binary search in the sorted fragment list.
    pub fn contains(&self, x: ElementSet) -> bool {
        self.fragments.binary_search(&x).is_ok()
    }

    pub fn is_atom(&self, x: ElementSet) -> bool {
        self.atoms.binary_search(&x).is_ok()
    }

    pub fn is_super_fragment(&self, x: ElementSet) -> bool {
        self.super_fragments.binary_search(&x).is_ok()
    }

    pub fn summary(&self) -> FragmentSummary {
        FragmentSummary {
            schema_version: SCHEMA_VERSION,
            k: self.k,
            kappa: self.kappa,
            atoms: self.atoms.clone(),
            super_fragments: self.super_fragments.clone(),
            fragment_count: self.fragments.len(),
            faithful: self.faithful,
        }
    }
}

/// JSON form of a [`FragmentReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FragmentSummary {
    pub schema_version: u32,
    pub k: usize,
    pub kappa: usize,
    pub atoms: Vec<ElementSet>,
    pub super_fragments: Vec<ElementSet>,
    pub fragment_count: usize,
    pub faithful: bool,
}

/// True iff some `X` has `|X| ≥ k` and `|∇(X)| ≥ k`.
///
/// Since `∇` shrinks as `X` grows, it suffices to look at sets of size exactly `k`.
pub fn is_k_separable(relation: &Relation, k: usize) -> bool {
    search::separating_witness(relation, k).is_some()
}

/// A `k`-set with exterior of size at least `k`, if any.
pub fn separating_witness(relation: &Relation, k: usize) -> Option<ElementSet> {
    search::separating_witness(relation, k)
}

/// `κ_k(Γ)`.
pub fn kappa(relation: &Relation, k: usize, budget: &SearchBudget) -> Result<usize> {
    check_level(k)?;
    budget.check_kappa(relation.vertex_count())?;
    if !is_k_separable(relation, k) {
        return Err(Error::NotSeparable(k));
    }
    Ok(search::min_board(relation, k).expect("separable relations have a finite connectivity"))
}

/// `κ_{-k}(Γ) = κ_k(Γ⁻)`.
pub fn reverse_kappa(relation: &Relation, k: usize, budget: &SearchBudget) -> Result<usize> {
    kappa(&relation.reverse(), k, budget)
}

/// Enumerates every `k`-fragment and derives atoms, super-fragments and faithfulness.
pub fn fragment_report(relation: &Relation, k: usize, budget: &SearchBudget) -> Result<FragmentReport> {
    check_level(k)?;
    budget.check_fragments(relation.vertex_count())?;
    let kappa = kappa(relation, k, budget)?;
    let fragments = search::sets_with_board_at_most(relation, k, kappa);
    debug_assert!(fragments.iter().all(|&x| relation.board(x).len() == kappa));
    let min = fragments.first().expect("a separable relation has a fragment").len();
    let max = fragments.iter().map(|x| x.len()).max().unwrap();
    let atoms: Vec<ElementSet> = fragments.iter().copied().filter(|x| x.len() == min).collect();
    let super_fragments: Vec<ElementSet> =
        fragments.iter().copied().filter(|x| x.len() == max).collect();
    let faithful = min <= relation.exterior(atoms[0]).len();
    Ok(FragmentReport {
        k,
        kappa,
        fragments,
        atoms,
        super_fragments,
        faithful,
    })
}

/// `X` is a `k`-fragment given the already known `κ_k`.
#[inline]
pub fn is_fragment_with(relation: &Relation, x: ElementSet, k: usize, kappa: usize) -> bool {
    let image = relation.image(x);
    let exterior = relation.vertex_count() - image.len();
    x.len() >= k && exterior >= k && image.len() - x.len() == kappa
}

/// `X` is a `k`-fragment, or `∇(X)` is a reverse `k`-fragment.
pub fn is_semi_fragment(relation: &Relation, x: ElementSet, k: usize, budget: &SearchBudget) -> Result<bool> {
    check_level(k)?;
    if !is_k_separable(relation, k) {
        return Ok(false);
    }
    let forward = kappa(relation, k, budget)?;
    if is_fragment_with(relation, x, k, forward) {
        return Ok(true);
    }
    let reverse = relation.reverse();
    let backward = kappa(&reverse, k, budget)?;
    Ok(is_fragment_with(&reverse, relation.exterior(x), k, backward))
}

fn check_level(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::Invalid("k must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// The classification tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassTag {
    NotSeparable,
    NonCauchy,
    Degenerate,
    Vosper,
}

/// Outcome of [`classify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Classification {
    pub schema_version: u32,
    pub tag: ClassTag,
    pub kappa1: Option<usize>,
    pub kappa2: Option<usize>,
    /// A 1-atom for `NonCauchy`, a 2-atom for `Degenerate` and `Vosper`.
    pub witness: Option<ElementSet>,
    /// Minimum out-degree.
    pub delta: usize,
    /// Cauchy by the atom definition.
    pub cauchy: bool,
    /// `|Γ(X)| ≥ min(|V|, |X| + δ - 1)` for every nonempty `X`, from a separate full scan.
    pub cauchy_degree_bound: bool,
    /// 1-separable and Cauchy but not 2-separable: neither degenerate nor Vosper
    /// in the strict sense, reported under the `Vosper` tag with this flag set.
    pub vosper_vacuous: bool,
}

/// Cauchy by definition: not 1-separable, or a 1-atom `A` has `|A| = 1` or `|∇(A)| = 1`.
pub fn is_cauchy(relation: &Relation, budget: &SearchBudget) -> Result<bool> {
    if !is_k_separable(relation, 1) {
        return Ok(true);
    }
    let report = fragment_report(relation, 1, budget)?;
    Ok(cauchy_from_atoms(relation, &report))
}

fn cauchy_from_atoms(relation: &Relation, report: &FragmentReport) -> bool {
    report
        .atoms
        .iter()
        .any(|&a| a.len() == 1 || relation.exterior(a).len() == 1)
}

/// Full scan of `|Γ(X)| ≥ min(|V|, |X| + δ - 1)` over nonempty `X`.
pub fn satisfies_degree_bound(relation: &Relation) -> bool {
    let n = relation.vertex_count();
    let delta = relation.degree_profile().delta;
    search::for_each_nonempty_subset(relation, |x, image| {
        image.len() >= n.min(x.len() + delta - 1)
    })
}

/// Degenerate: 2-separable and `κ_2 = κ_1`.
pub fn is_degenerate(relation: &Relation, budget: &SearchBudget) -> Result<bool> {
    if !is_k_separable(relation, 2) {
        return Ok(false);
    }
    Ok(kappa(relation, 2, budget)? == kappa(relation, 1, budget)?)
}

/// Classifies a relation as `NotSeparable`, `NonCauchy`, `Degenerate` or `Vosper`.
pub fn classify(relation: &Relation, budget: &SearchBudget) -> Result<Classification> {
    budget.check_fragments(relation.vertex_count())?;
    let delta = relation.degree_profile().delta;
    let cauchy_degree_bound = satisfies_degree_bound(relation);
    let mut out = Classification {
        schema_version: SCHEMA_VERSION,
        tag: ClassTag::NotSeparable,
        kappa1: None,
        kappa2: None,
        witness: None,
        delta,
        cauchy: true,
        cauchy_degree_bound,
        vosper_vacuous: false,
    };
    if !is_k_separable(relation, 1) {
        return Ok(out);
    }
    let one = fragment_report(relation, 1, budget)?;
    out.kappa1 = Some(one.kappa);
    out.cauchy = cauchy_from_atoms(relation, &one);
    let two = if is_k_separable(relation, 2) {
        Some(fragment_report(relation, 2, budget)?)
    } else {
        None
    };
    out.kappa2 = two.as_ref().map(|r| r.kappa);
    if !out.cauchy {
        out.tag = ClassTag::NonCauchy;
        out.witness = Some(one.atoms[0]);
        return Ok(out);
    }
    match two {
        Some(two) => {
            out.tag = if two.kappa == one.kappa {
                ClassTag::Degenerate
            } else {
                ClassTag::Vosper
            };
            out.witness = Some(two.atoms[0]);
        }
        None => {
            out.tag = ClassTag::Vosper;
            out.vosper_vacuous = true;
        }
    }
    Ok(out)
}

/// Which of `Γ`, `Γ⁻` a query refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Reverse,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Forward => Direction::Reverse,
            Direction::Reverse => Direction::Forward,
        }
    }

    fn slot(self) -> usize {
        match self {
            Direction::Forward => 0,
            Direction::Reverse => 1,
        }
    }
}

/// Number of levels `k` whose reports an [`Analysis`] memoizes.
const CACHED_LEVELS: usize = 3;

/// A relation and its reverse with memoized fragment reports for small `k`.
///
/// Reports are computed on first use; the cache is write-once per slot.
pub struct Analysis {
    relations: [Relation; 2],
    budget: SearchBudget,
    reports: [[OnceLock<Option<FragmentReport>>; CACHED_LEVELS]; 2],
}

impl Analysis {
    pub fn new(relation: Relation, budget: SearchBudget) -> Result<Self> {
        budget.check_fragments(relation.vertex_count())?;
        let reverse = relation.reverse();
        Ok(Analysis {
            relations: [relation, reverse],
            budget,
            reports: Default::default(),
        })
    }

    pub fn relation(&self, dir: Direction) -> &Relation {
        &self.relations[dir.slot()]
    }

    pub fn budget(&self) -> &SearchBudget {
        &self.budget
    }

    pub fn vertex_count(&self) -> usize {
        self.relations[0].vertex_count()
    }

    /// The `k`-fragment report of `Γ` or `Γ⁻`; `None` when not `k`-separable.
    pub fn report(&self, dir: Direction, k: usize) -> Option<&FragmentReport> {
        assert!(
            (1..=CACHED_LEVELS).contains(&k),
            "Analysis caches k in 1..={CACHED_LEVELS}"
        );
        self.reports[dir.slot()][k - 1]
            .get_or_init(|| {
                let rel = self.relation(dir);
                if is_k_separable(rel, k) {
                    // budget was checked at construction
                    Some(fragment_report(rel, k, &self.budget).expect("within budget"))
                } else {
                    None
                }
            })
            .as_ref()
    }

    pub fn kappa(&self, dir: Direction, k: usize) -> Option<usize> {
        self.report(dir, k).map(|r| r.kappa)
    }

    pub fn is_fragment(&self, dir: Direction, x: ElementSet, k: usize) -> bool {
        self.report(dir, k)
            .is_some_and(|r| is_fragment_with(self.relation(dir), x, k, r.kappa))
    }

    pub fn is_semi_fragment(&self, dir: Direction, x: ElementSet, k: usize) -> bool {
        self.is_fragment(dir, x, k)
            || self.is_fragment(dir.flip(), self.relation(dir).exterior(x), k)
    }

    /// `k`-faithful; `None` when not `k`-separable.
    pub fn faithful(&self, dir: Direction, k: usize) -> Option<bool> {
        self.report(dir, k).map(|r| r.faithful)
    }

    pub fn is_cauchy(&self, dir: Direction) -> bool {
        match self.report(dir, 1) {
            None => true,
            Some(r) => cauchy_from_atoms(self.relation(dir), r),
        }
    }

    pub fn is_degenerate(&self, dir: Direction) -> bool {
        match (self.report(dir, 1), self.report(dir, 2)) {
            (Some(one), Some(two)) => one.kappa == two.kappa,
            _ => false,
        }
    }
}

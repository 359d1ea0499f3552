//! Exhaustive verifiers for the structure theorems on Cayley graphs and
//! small-doubling sets.
//!
//! Every verifier evaluates its hypothesis from scratch, then every clause of
//! the conclusion, and returns a [`VerdictRecord`]. A record passes when some
//! clause holds; `HypothesisNotMet` is a separate outcome and never counts as
//! a pass. [`scan`] runs one verifier over every instance of a group roster.

mod kneser;
mod structure;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupDescriptor, Progression, Subgroup};
use crate::isoperimetry::{SearchBudget, SCHEMA_VERSION};
use crate::set::ElementSet;

pub use kneser::{check_vosper_subset, verify_main_theorem, vosper_counterexample};
pub use structure::{
    verify_2atom_structure, verify_astercay, verify_cauchy_cayley, verify_dl, verify_groupfrag,
    verify_vtvosper,
};

/// The results a scan can target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Kneser,
    CauchyCayley,
    TwoAtomCay,
    Dl,
    AsterCay,
    GroupFrag,
    VtVosper,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::Kneser,
        TheoremId::CauchyCayley,
        TheoremId::TwoAtomCay,
        TheoremId::Dl,
        TheoremId::AsterCay,
        TheoremId::GroupFrag,
        TheoremId::VtVosper,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Kneser => "kneser",
            TheoremId::CauchyCayley => "cauchycayley",
            TheoremId::TwoAtomCay => "2atomcay",
            TheoremId::Dl => "dl",
            TheoremId::AsterCay => "astercay",
            TheoremId::GroupFrag => "groupfrag",
            TheoremId::VtVosper => "vtvosper",
        }
    }

    /// Instances are arbitrary sets `A` rather than connection sets `S ∋ e`.
    pub fn takes_arbitrary_sets(self) -> bool {
        self == TheoremId::Kneser
    }

    /// Runs the verifier on one instance.
    pub fn verify(self, ctx: &GroupContext, set: ElementSet, budget: &SearchBudget) -> Result<VerdictRecord> {
        match self {
            TheoremId::Kneser => verify_main_theorem(ctx, set),
            TheoremId::CauchyCayley => verify_cauchy_cayley(ctx, set, budget),
            TheoremId::TwoAtomCay => verify_2atom_structure(ctx, set, budget),
            TheoremId::Dl => verify_dl(ctx, set, budget),
            TheoremId::AsterCay => verify_astercay(ctx, set, budget),
            TheoremId::GroupFrag => verify_groupfrag(ctx, set, budget),
            TheoremId::VtVosper => verify_vtvosper(ctx, set, budget),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == key)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// A group with its label and subgroup list, shared by every instance of a scan.
#[derive(Clone, Debug)]
pub struct GroupContext {
    label: String,
    group: FiniteGroup,
    subgroups: Vec<Subgroup>,
}

impl GroupContext {
    pub fn new(descriptor: &GroupDescriptor) -> Result<Self> {
        Self::from_group(descriptor.build()?, descriptor.to_string())
    }

    pub fn from_group(group: FiniteGroup, label: impl Into<String>) -> Result<Self> {
        let subgroups = group.all_subgroups_within(crate::group::DEFAULT_SUBGROUP_BUDGET)?;
        Ok(GroupContext {
            label: label.into(),
            group,
            subgroups,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// All subgroups in ascending (order, element list) order.
    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Verdict {
    Pass,
    HypothesisNotMet,
    Fail,
}

/// Which of `Γ`, `Γ⁻` a witness lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Forward,
    Reverse,
}

/// A subgroup together with an element, as produced by the coset identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupElement {
    pub subgroup: ElementSet,
    pub element: usize,
}

/// Data certifying the first clause that held.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Witness {
    pub clause: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<ElementSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<ElementSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub progression: Option<Progression>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Orientation>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pairs: Vec<SubgroupElement>,
    /// The subgroup in the witness is the whole ambient group `G`.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub whole_group: bool,
}

impl Witness {
    pub fn new(clause: impl Into<String>) -> Self {
        Witness {
            clause: clause.into(),
            ..Default::default()
        }
    }
}

/// Outcome of one verifier on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerdictRecord {
    pub schema_version: u32,
    pub theorem_id: TheoremId,
    pub group: String,
    pub set: ElementSet,
    /// Number of subsets represented by this instance when the scan was orbit-reduced.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit_size: Option<usize>,
    pub hypothesis_met: bool,
    /// Asserted clauses; empty when the hypothesis fails.
    pub clauses: BTreeMap<String, bool>,
    /// Reported facts that are not asserted.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub observations: BTreeMap<String, bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub verdict: Verdict,
}

impl VerdictRecord {
    fn start(theorem: TheoremId, ctx: &GroupContext, set: ElementSet) -> Self {
        VerdictRecord {
            schema_version: SCHEMA_VERSION,
            theorem_id: theorem,
            group: ctx.label.clone(),
            set,
            orbit_size: None,
            hypothesis_met: false,
            clauses: BTreeMap::new(),
            observations: BTreeMap::new(),
            witness: None,
            verdict: Verdict::HypothesisNotMet,
        }
    }

    fn not_met(mut self) -> Self {
        self.hypothesis_met = false;
        self.clauses.clear();
        self.witness = None;
        self.verdict = Verdict::HypothesisNotMet;
        self
    }

    fn clause(&mut self, name: &str, holds: bool) {
        self.clauses.insert(name.to_string(), holds);
    }

    fn observe(&mut self, name: &str, holds: bool) {
        self.observations.insert(name.to_string(), holds);
    }

    /// Pass iff some clause holds.
    fn decide(mut self, witness: Option<Witness>) -> Self {
        self.hypothesis_met = true;
        let pass = self.clauses.values().any(|&b| b);
        self.verdict = if pass { Verdict::Pass } else { Verdict::Fail };
        self.witness = if pass { witness } else { None };
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// What a scan iterates over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanConfig {
    pub groups: Vec<GroupDescriptor>,
    pub max_order: usize,
    /// Connection sets must generate `G` (ignored for arbitrary-set theorems).
    pub generating_only: bool,
    /// Visit one representative per orbit: left translates for arbitrary sets,
    /// conjugates `gSg⁻¹` for connection sets.
    pub orbit_reduced: bool,
    pub budget: SearchBudget,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            groups: default_roster(),
            max_order: 12,
            generating_only: true,
            orbit_reduced: true,
            budget: SearchBudget::default(),
        }
    }
}

impl ScanConfig {
    pub fn with_max_order(mut self, max_order: usize) -> Self {
        self.max_order = max_order;
        self
    }

    /// Keeps only groups of one family (`cyclic`, `dihedral`, `quaternion`,
    /// `symmetric`, `product`).
    pub fn with_family(mut self, family: &str) -> Result<Self> {
        let known = ["cyclic", "dihedral", "quaternion", "symmetric", "product"];
        let family = family.trim().to_ascii_lowercase();
        if !known.contains(&family.as_str()) {
            return Err(Error::Invalid(format!(
                "unknown family `{family}`; expected one of {}",
                known.join(", ")
            )));
        }
        self.groups.retain(|g| family_name(g) == family);
        Ok(self)
    }

    /// The roster entries within `max_order`, in roster order.
    pub fn selected_groups(&self) -> Vec<&GroupDescriptor> {
        self.groups.iter().filter(|g| g.order() <= self.max_order).collect()
    }
}

fn family_name(g: &GroupDescriptor) -> &'static str {
    use crate::group::FamilyDescriptor as F;
    match g {
        GroupDescriptor::Table { .. } => "table",
        GroupDescriptor::Family(f) => match f {
            F::Cyclic { .. } => "cyclic",
            F::Dihedral { .. } => "dihedral",
            F::Quaternion => "quaternion",
            F::Symmetric { .. } => "symmetric",
            F::Product { .. } => "product",
        },
    }
}

/// Cyclic groups of order 1 to 16, dihedral groups of order 6 to 16, `Q8`,
/// `Z2xZ2`, `Z2xZ4`, `Z2xZ2xZ2`, `Z3xZ3`, `S3` and `S4`.
pub fn default_roster() -> Vec<GroupDescriptor> {
    let z = GroupDescriptor::cyclic;
    let mut out: Vec<GroupDescriptor> = (1..=16).map(z).collect();
    out.extend((6..=16).step_by(2).map(GroupDescriptor::dihedral));
    out.push(GroupDescriptor::quaternion());
    out.push(GroupDescriptor::product(vec![z(2), z(2)]));
    out.push(GroupDescriptor::product(vec![z(2), z(4)]));
    out.push(GroupDescriptor::product(vec![z(2), z(2), z(2)]));
    out.push(GroupDescriptor::product(vec![z(3), z(3)]));
    out.push(GroupDescriptor::symmetric(3));
    out.push(GroupDescriptor::symmetric(4));
    out
}

/// Aggregate of a scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ScanSummary {
    pub schema_version: u32,
    pub theorem_id: TheoremId,
    pub groups: Vec<String>,
    pub instances: u64,
    /// Instances weighted by orbit size: the number of subsets covered.
    pub subsets_covered: u64,
    pub pass: u64,
    pub hypothesis_not_met: u64,
    pub fail: u64,
    /// How often each clause held among instances meeting the hypothesis.
    pub clause_frequencies: BTreeMap<String, u64>,
    pub observation_frequencies: BTreeMap<String, u64>,
    /// The failing records, each replayable from its group label and set.
    pub witnesses: Vec<VerdictRecord>,
}

impl ScanSummary {
    pub fn from_records(theorem: TheoremId, groups: Vec<String>, records: &[VerdictRecord]) -> Self {
        let mut out = ScanSummary {
            schema_version: SCHEMA_VERSION,
            theorem_id: theorem,
            groups,
            instances: records.len() as u64,
            subsets_covered: 0,
            pass: 0,
            hypothesis_not_met: 0,
            fail: 0,
            clause_frequencies: BTreeMap::new(),
            observation_frequencies: BTreeMap::new(),
            witnesses: Vec::new(),
        };
        for r in records {
            out.subsets_covered += r.orbit_size.unwrap_or(1) as u64;
            match r.verdict {
                Verdict::Pass => out.pass += 1,
                Verdict::HypothesisNotMet => out.hypothesis_not_met += 1,
                Verdict::Fail => {
                    out.fail += 1;
                    out.witnesses.push(r.clone());
                }
            }
            for (name, &holds) in &r.clauses {
                *out.clause_frequencies.entry(name.clone()).or_default() += holds as u64;
            }
            for (name, &holds) in &r.observations {
                *out.observation_frequencies.entry(name.clone()).or_default() += holds as u64;
            }
        }
        out
    }

    /// One header line and one data line.
    pub fn to_csv(&self) -> String {
        let mut head = vec![
            "theoremId".to_string(),
            "instances".into(),
            "subsetsCovered".into(),
            "pass".into(),
            "hypothesisNotMet".into(),
            "fail".into(),
        ];
        let mut row = vec![
            self.theorem_id.to_string(),
            self.instances.to_string(),
            self.subsets_covered.to_string(),
            self.pass.to_string(),
            self.hypothesis_not_met.to_string(),
            self.fail.to_string(),
        ];
        for (name, n) in &self.clause_frequencies {
            head.push(format!("clause:{name}"));
            row.push(n.to_string());
        }
        format!("{}\n{}\n", head.join(","), row.join(","))
    }
}

/// Records of a scan plus their summary.
#[derive(Clone, Debug)]
pub struct ScanOutput {
    pub records: Vec<VerdictRecord>,
    pub summary: ScanSummary,
}

impl ScanOutput {
    /// One JSON object per line, in canonical instance order.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out
    }
}

/// Instances of `theorem` for one group, sorted, with orbit sizes when reduced.
pub fn instances(ctx: &GroupContext, theorem: TheoremId, config: &ScanConfig) -> Vec<(ElementSet, Option<usize>)> {
    let g = ctx.group();
    let n = g.order();
    let mut out = Vec::new();
    if theorem.takes_arbitrary_sets() {
        for bits in 1u64..1 << n {
            let a = ElementSet::from_bits(bits);
            if !config.orbit_reduced {
                out.push((a, None));
            } else if g.is_left_orbit_canonical(a) {
                out.push((a, Some(g.left_orbit_size(a))));
            }
        }
    } else {
        for bits in 0u64..1 << (n - 1) {
            let s = ElementSet::from_bits(bits << 1 | 1);
            if config.generating_only && !g.generates(s) {
                continue;
            }
            if !config.orbit_reduced {
                out.push((s, None));
                continue;
            }
            let mut conjugates: Vec<ElementSet> = (0..n).map(|x| g.conjugate(s, x)).collect();
            if conjugates.iter().any(|&c| c < s) {
                continue;
            }
            conjugates.sort_unstable();
            conjugates.dedup();
            out.push((s, Some(conjugates.len())));
        }
    }
    out.sort_unstable();
    out
}

/// Runs `theorem` over every instance selected by `config`.
///
/// Instances run in parallel on the current rayon pool; records come back in
/// roster order, then set order, independent of the thread count.
pub fn scan(config: &ScanConfig, theorem: TheoremId) -> Result<ScanOutput> {
    let mut records = Vec::new();
    let mut labels = Vec::new();
    for descriptor in config.selected_groups() {
        let n = descriptor.order();
        if n > config.budget.max_fragment_vertices {
            return Err(Error::BudgetExceeded {
                what: "scan group order",
                limit: config.budget.max_fragment_vertices,
                actual: n,
            });
        }
        let ctx = GroupContext::new(descriptor)?;
        labels.push(ctx.label().to_string());
        let batch: Vec<VerdictRecord> = instances(&ctx, theorem, config)
            .into_par_iter()
            .map(|(set, orbit)| {
                theorem.verify(&ctx, set, &config.budget).map(|mut r| {
                    r.orbit_size = orbit;
                    r
                })
            })
            .collect::<Result<_>>()?;
        records.extend(batch);
    }
    let summary = ScanSummary::from_records(theorem, labels, &records);
    Ok(ScanOutput { records, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
            let json = serde_json::to_string(&t).unwrap();
            assert_eq!(serde_json::from_str::<TheoremId>(&json).unwrap(), t);
        }
        assert_eq!(
            "nope".parse::<TheoremId>().unwrap_err(),
            Error::UnknownTheorem("nope".into())
        );
    }

    #[test]
    fn roster_contents() {
        let roster = default_roster();
        let names: Vec<String> = roster.iter().map(|g| g.to_string()).collect();
        for want in ["Z1", "Z16", "D6", "D16", "Q8", "Z2xZ2", "Z2xZ4", "Z2xZ2xZ2", "Z3xZ3", "S3", "S4"] {
            assert!(names.iter().any(|n| n == want), "{want}");
        }
        let cfg = ScanConfig::default().with_family("dihedral").unwrap();
        assert!(cfg.groups.iter().all(|g| g.to_string().starts_with('D')));
        assert!(ScanConfig::default().with_family("klein").is_err());
    }

    #[test]
    fn empty_family_gives_empty_summary() {
        let cfg = ScanConfig::default().with_max_order(0);
        let out = scan(&cfg, TheoremId::Kneser).unwrap();
        assert!(out.records.is_empty());
        assert_eq!(out.summary.instances, 0);
        assert_eq!((out.summary.pass, out.summary.fail), (0, 0));
    }

    #[test]
    fn orbit_reduction_covers_every_subset() {
        let ctx = GroupContext::new(&GroupDescriptor::dihedral(8)).unwrap();
        let cfg = ScanConfig::default();
        let covered: usize = instances(&ctx, TheoremId::Kneser, &cfg)
            .iter()
            .map(|(_, o)| o.unwrap())
            .sum();
        assert_eq!(covered, 255);
        let full = ScanConfig {
            generating_only: false,
            ..ScanConfig::default()
        };
        let covered: usize = instances(&ctx, TheoremId::Dl, &full).iter().map(|(_, o)| o.unwrap()).sum();
        assert_eq!(covered, 128);
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = ScanConfig {
            groups: vec![GroupDescriptor::symmetric(4)],
            max_order: 24,
            budget: SearchBudget {
                max_fragment_vertices: 12,
                max_kappa_vertices: 32,
            },
            ..ScanConfig::default()
        };
        assert!(matches!(scan(&cfg, TheoremId::Dl), Err(Error::BudgetExceeded { .. })));
    }
}

//! Which connection sets of `Z/p` satisfy `|A ∪ AS| ≥ min(p - 1, |A| + |S|)`
//! for every `A` with `|A| ≥ 2`, next to the graph classification.
//!
//! Usage: `cargo run --release --example vosper_subsets [p]`

use vosper::group::families::cyclic;
use vosper::isoperimetry::{classify, ClassTag};
use vosper::theorems::vosper_counterexample;
use vosper::{CayleyGraph, ElementSet, SearchBudget};

fn main() -> vosper::Result<()> {
    let p: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    let g = cyclic(p)?;
    let budget = SearchBudget::default();
    for bits in 0u64..1 << (p - 1) {
        let s = ElementSet::from_bits(bits << 1 | 1);
        if s.len() < 2 || s.len() > p.saturating_sub(2) {
            continue;
        }
        let c = classify(&CayleyGraph::new(&g, s)?.into_relation(), &budget)?;
        let witness = vosper_counterexample(&g, s, 64)?;
        let note = match (c.tag, witness) {
            (ClassTag::Vosper, None) => "vosper graph, subset property holds".to_string(),
            (tag, Some(a)) => format!("{tag:?}, fails at A = {a}"),
            (tag, None) => format!("{tag:?}, subset property holds"),
        };
        println!("S = {s:<14} {note}");
    }
    Ok(())
}

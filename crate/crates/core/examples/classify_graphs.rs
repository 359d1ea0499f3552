//! Classifies every Cayley graph `Cay(Z/n, S)` with `0 ∈ S` for one `n` and
//! tallies the classes.
//!
//! Usage: `cargo run --release --example classify_graphs [n]`

use std::collections::BTreeMap;

use vosper::group::families::cyclic;
use vosper::isoperimetry::classify;
use vosper::{CayleyGraph, ElementSet, SearchBudget};

fn main() -> vosper::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    let g = cyclic(n)?;
    let budget = SearchBudget::default();
    let mut tally: BTreeMap<String, usize> = BTreeMap::new();
    let mut mismatch = 0;
    for bits in 0u64..1 << (n - 1) {
        let s = ElementSet::from_bits(bits << 1 | 1);
        let c = classify(&CayleyGraph::new(&g, s)?.into_relation(), &budget)?;
        mismatch += usize::from(c.cauchy != c.cauchy_degree_bound);
        let key = if c.vosper_vacuous {
            "Vosper (vacuous)".to_string()
        } else {
            format!("{:?}", c.tag)
        };
        let first = !tally.contains_key(&key);
        *tally.entry(key.clone()).or_default() += 1;
        if first {
            println!("first {key}: S = {s}, κ₁ = {:?}, κ₂ = {:?}", c.kappa1, c.kappa2);
        }
    }
    println!("Z{n}: {tally:?}");
    println!("atom and degree-bound Cauchy tests disagree on {mismatch} graphs");
    Ok(())
}

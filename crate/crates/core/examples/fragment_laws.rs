//! Checks the duality and intersection laws for fragments on every Cayley
//! graph `Cay(G, S)` with `e ∈ S` over the roster groups of small order, and
//! prints per-law instance counts with any violations.
//!
//! Usage: `cargo run --release --example fragment_laws [max_order]`

use std::collections::BTreeMap;

use rayon::prelude::*;
use vosper::isoperimetry::laws::{check_all, LawReport};
use vosper::theorems::default_roster;
use vosper::{Analysis, CayleyGraph, ElementSet, SearchBudget};

fn main() -> vosper::Result<()> {
    let max_order: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    let mut total = LawReport::default();
    let mut graphs = 0;
    for descriptor in default_roster().into_iter().filter(|d| d.order() <= max_order) {
        let g = descriptor.build()?;
        let n = g.order();
        let reports: Vec<LawReport> = (0u64..1 << (n - 1))
            .into_par_iter()
            .map(|bits| {
                let s = ElementSet::from_bits(bits << 1 | 1);
                let graph = CayleyGraph::new(&g, s)?;
                let a = Analysis::new(graph.into_relation(), SearchBudget::default())?;
                Ok(check_all(&a))
            })
            .collect::<vosper::Result<_>>()?;
        graphs += reports.len();
        for r in reports {
            total.merge(r);
        }
    }
    let mut bad: BTreeMap<&str, usize> = BTreeMap::new();
    for v in &total.violations {
        *bad.entry(v.law).or_default() += 1;
    }
    println!("{graphs} Cayley graphs");
    for (law, n) in &total.checked {
        println!("{law:<22} checked {n:>9}  violations {:>6}", bad.get(law).unwrap_or(&0));
    }
    for v in total.violations.iter().take(10) {
        println!("example violation: {} k={} reverse={} {}", v.law, v.k, v.reverse, v.detail);
    }
    Ok(())
}

//! Images, boards and exteriors of a hand-made relation, and the fragment
//! report for each `k` it separates.
//!
//! Usage: `cargo run --example relation_vocabulary`

use vosper::isoperimetry::{fragment_report, is_k_separable};
use vosper::{ElementSet, Relation, SearchBudget};

fn main() -> vosper::Result<()> {
    // a directed 6-cycle with one chord
    let rows = [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 0]];
    let mut rows: Vec<ElementSet> = rows.iter().map(|r| r.iter().copied().collect()).collect();
    rows[0].insert(3);
    let rel = Relation::new(rows)?;
    let rev = rel.reverse();
    println!("degrees {:?}", rel.degree_profile());

    for x in [[0, 1].as_slice(), &[2, 3, 4], &[0, 3]] {
        let x: ElementSet = x.iter().copied().collect();
        println!(
            "X = {x}: Γ(X) = {}  ∂X = {}  ∇X = {}  Γ⁻(X) = {}",
            rel.image(x),
            rel.board(x),
            rel.exterior(x),
            rev.image(x)
        );
    }

    let budget = SearchBudget::default();
    for k in 1..=3 {
        if !is_k_separable(&rel, k) {
            println!("k = {k}: not separable");
            continue;
        }
        let r = fragment_report(&rel, k, &budget)?;
        let show = |v: &[ElementSet]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ");
        println!("k = {k}: κ = {}, {} fragments", r.kappa, r.fragments.len());
        println!("  atoms {}", show(&r.atoms));
        println!("  super-fragments {}", show(&r.super_fragments));
        println!("  faithful {}", r.faithful);
        let rr = fragment_report(&rev, k, &budget)?;
        println!("  reverse κ = {}, reverse atoms {}", rr.kappa, show(&rr.atoms));
    }
    Ok(())
}

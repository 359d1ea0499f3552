//! Census of sets with `|A⁻¹A|, |AA⁻¹| < 2|A|` over the default roster,
//! counting which of the four structural clauses hold.
//!
//! Usage: `cargo run --release --example main_theorem_census [max_order] [--full]`
//! (`--full` disables the reduction to left-translation orbits).

use std::time::Instant;

use vosper::theorems::{scan, ScanConfig, TheoremId};

fn main() -> vosper::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let max_order = args.iter().find_map(|a| a.parse().ok()).unwrap_or(12);
    let config = ScanConfig {
        orbit_reduced: !args.iter().any(|a| a == "--full"),
        ..ScanConfig::default().with_max_order(max_order)
    };
    let start = Instant::now();
    let out = scan(&config, TheoremId::Kneser)?;
    let s = &out.summary;
    println!("groups   {}", s.groups.join(" "));
    println!(
        "sets     {} instances covering {} subsets in {:.1?}",
        s.instances,
        s.subsets_covered,
        start.elapsed()
    );
    println!("verdicts pass {}  hypothesis-not-met {}  fail {}", s.pass, s.hypothesis_not_met, s.fail);
    for (clause, n) in &s.clause_frequencies {
        println!("clause   {clause:<6} {n}");
    }
    for (name, n) in &s.observation_frequencies {
        println!("observed {name:<12} {n}");
    }
    for w in &s.witnesses {
        println!("FAIL {}", serde_json::to_string(w).unwrap());
    }
    Ok(())
}

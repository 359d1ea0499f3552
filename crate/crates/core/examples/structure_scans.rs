//! Runs every structure verifier over generating connection sets `S ∋ e` of
//! the default roster and prints one summary line per theorem.
//!
//! Usage: `cargo run --release --example structure_scans [max_order]`

use std::time::Instant;

use vosper::theorems::{scan, ScanConfig, TheoremId};

fn main() -> vosper::Result<()> {
    let max_order = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    let config = ScanConfig::default().with_max_order(max_order);
    for theorem in TheoremId::ALL.into_iter().filter(|t| !t.takes_arbitrary_sets()) {
        let start = Instant::now();
        let out = scan(&config, theorem)?;
        let s = &out.summary;
        println!(
            "{:<13} instances {:>6}  pass {:>6}  not-met {:>6}  fail {:>3}  ({:.1?})",
            theorem.as_str(),
            s.instances,
            s.pass,
            s.hypothesis_not_met,
            s.fail,
            start.elapsed()
        );
        println!("    clauses {:?}", s.clause_frequencies);
        if !s.observation_frequencies.is_empty() {
            println!("    observed {:?}", s.observation_frequencies);
        }
        for w in s.witnesses.iter().take(5) {
            println!("    FAIL {}", serde_json::to_string(w).unwrap());
        }
    }
    Ok(())
}

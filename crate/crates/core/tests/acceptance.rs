//! The nine acceptance criteria, each printed as one PASS/FAIL line.
//!
//! Lines go straight to stderr so they show up without `--nocapture`.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use common::{corpus, to_vecs, Oracle};
use vosper::group::families::cyclic;
use vosper::isoperimetry::laws::{basic_laws, duality_laws, intersection_laws, LawReport};
use vosper::isoperimetry::{classify, fragment_report, is_k_separable, kappa, ClassTag};
use vosper::theorems::{default_roster, scan, ScanConfig, TheoremId};
use vosper::{Analysis, CayleyGraph, ElementSet, Relation, SearchBudget};

const CORPUS_SIZE: usize = 200;
const CORPUS_SEED: u64 = 0x5eed;
const PRIMES: [usize; 6] = [2, 3, 5, 7, 11, 13];

struct Outcome {
    pass: bool,
    /// Set when the criterion fails because a stated law is false and the
    /// test has confirmed the counterexample; the line still reads FAIL.
    refuted: Option<String>,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        refuted: None,
        detail: detail.into(),
    }
}

#[derive(Debug, PartialEq)]
enum Status {
    Pass,
    Refuted,
    Fail,
}

fn say(line: &str) {
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "{line}");
}

fn timed(id: usize, name: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Status {
    let start = Instant::now();
    let o = f();
    let took = start.elapsed();
    let in_time = limit.is_none_or(|l| took <= l);
    let budget = limit.map_or(String::new(), |l| format!(" (budget {}s)", l.as_secs()));
    let status = match (&o.refuted, o.pass && in_time) {
        (_, true) => Status::Pass,
        (Some(_), false) if in_time => Status::Refuted,
        _ => Status::Fail,
    };
    let refuted = o.refuted.map_or(String::new(), |r| format!(" [refuted: {r}]"));
    say(&format!(
        "criterion {id} {name}: {} in {:.1}s{budget}{refuted}; {}",
        if status == Status::Pass { "PASS" } else { "FAIL" },
        took.as_secs_f64(),
        o.detail
    ));
    status
}

fn cayley(g: &vosper::FiniteGroup, s: ElementSet) -> Relation {
    CayleyGraph::new(g, s).unwrap().into_relation()
}

fn relations() -> Vec<Relation> {
    corpus(CORPUS_SIZE, CORPUS_SEED).iter().map(Oracle::to_relation).collect()
}

fn small_cayley_graphs(max_order: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for d in default_roster().into_iter().filter(|d| d.order() <= max_order) {
        let g = d.build().unwrap();
        for bits in 0u64..1 << (g.order() - 1) {
            out.push(cayley(&g, ElementSet::from_bits(bits << 1 | 1)));
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let b = SearchBudget::default();
    let mut mismatches = Vec::new();
    let mut checked = 0;
    for (i, o) in corpus(CORPUS_SIZE, CORPUS_SEED).iter().enumerate() {
        let rel = o.to_relation();
        for k in 1..=2 {
            checked += 1;
            let want = o.report(k);
            let ok = match (&want, is_k_separable(&rel, k)) {
                (None, false) => true,
                (Some(w), true) => {
                    let got = fragment_report(&rel, k, &b).unwrap();
                    kappa(&rel, k, &b).unwrap() == w.kappa
                        && got.kappa == w.kappa
                        && to_vecs(&got.fragments) == w.fragments
                        && to_vecs(&got.atoms) == w.atoms
                        && to_vecs(&got.super_fragments) == w.super_fragments
                        && got.faithful == w.faithful
                }
                _ => false,
            };
            if !ok {
                mismatches.push(format!("#{i} k={k}"));
            }
        }
    }
    outcome(
        mismatches.is_empty(),
        format!("{checked} (relation, k) pairs, mismatches {:?}", mismatches),
    )
}

fn law_summary(report: &LawReport, asserted: impl Fn(&str) -> bool) -> (bool, String) {
    let bad: Vec<_> = report.violations.iter().filter(|v| asserted(v.law)).collect();
    let laws: Vec<String> = report
        .checked
        .iter()
        .filter(|(l, _)| asserted(l))
        .map(|(l, n)| format!("{l}={n}"))
        .collect();
    let mut detail = format!("{} asserted violations; instances {}", bad.len(), laws.join(" "));
    if let Some(v) = bad.first() {
        detail.push_str(&format!("; first: {} k={} {}", v.law, v.k, v.detail));
    }
    (bad.is_empty(), detail)
}

/// Cauchy duality compares atoms against two different minimum degrees, so on
/// relations whose in- and out-degrees differ it can break.
const CAUCHY_DUALITY: &str = "finiteg.iii";

fn criterion_2() -> Outcome {
    let mut total = LawReport::default();
    let mut irregular_only = true;
    for rel in relations() {
        let p = rel.degree_profile();
        let a = Analysis::new(rel, SearchBudget::default()).unwrap();
        let r = duality_laws(&a, &[1, 2]);
        irregular_only &= r.violations.is_empty() || !(p.regular && p.reverse_regular);
        total.merge(r);
    }
    let mut on_cayley = LawReport::default();
    for rel in small_cayley_graphs(10) {
        let a = Analysis::new(rel, SearchBudget::default()).unwrap();
        on_cayley.merge(duality_laws(&a, &[1, 2]));
    }
    let (ok, detail) = law_summary(&total, |_| true);
    let (rest_ok, _) = law_summary(&total, |l| l != CAUCHY_DUALITY);
    let cauchy_bad = total.violations_of(CAUCHY_DUALITY).count();
    let mut o = outcome(
        ok,
        format!(
            "{detail}; {CAUCHY_DUALITY} violations {cauchy_bad}, all on non-regular relations {irregular_only}; \
             {} violations over {} Cayley graph checks",
            on_cayley.violations.len(),
            on_cayley.checked.get(CAUCHY_DUALITY).copied().unwrap_or(0)
        ),
    );
    if !ok && rest_ok && cauchy_bad > 0 && irregular_only && on_cayley.violations.is_empty() {
        o.refuted = Some(format!("{CAUCHY_DUALITY} is false on non-regular finite relations"));
    }
    o
}

fn criterion_3() -> Outcome {
    let mut total = LawReport::default();
    let mut graphs = relations();
    graphs.extend(small_cayley_graphs(10));
    let count = graphs.len();
    let reports: Vec<LawReport> = {
        use rayon::prelude::*;
        graphs
            .into_par_iter()
            .map(|rel| {
                let a = Analysis::new(rel, SearchBudget::default()).unwrap();
                let mut r = intersection_laws(&a, &[1, 2]);
                r.merge(basic_laws(&a, &[1, 2]));
                r
            })
            .collect()
    };
    for r in reports {
        total.merge(r);
    }
    // `.semi` ids quantify over semi-fragments that are not fragments, which the
    // finite statements do not survive; they are reported, not asserted
    let semi = total.violations.iter().filter(|v| v.law.ends_with(".semi")).count();
    let (ok, detail) = law_summary(&total, |l| !l.ends_with(".semi"));
    outcome(
        ok,
        format!("{count} graphs; {detail}; semi-fragment variants violated {semi} times (not asserted)"),
    )
}

fn criterion_4() -> Outcome {
    let b = SearchBudget::default();
    let mut graphs = 0;
    let mut bad = Vec::new();
    for p in PRIMES {
        let g = cyclic(p).unwrap();
        for bits in 0u64..1 << (p - 1) {
            let s = ElementSet::from_bits(bits << 1 | 1);
            let rel = cayley(&g, s);
            if !g.generates(s) || !is_k_separable(&rel, 1) {
                continue;
            }
            graphs += 1;
            let c = classify(&rel, &b).unwrap();
            if c.kappa1 != Some(s.len() - 1) || !c.cauchy || c.tag == ClassTag::NonCauchy {
                bad.push(format!("Z{p} {s}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{graphs} graphs, violations {bad:?}"))
}

fn fixed_points() -> Vec<String> {
    let b = SearchBudget::default();
    [(7, vec![0, 1, 3]), (7, vec![0, 1, 2]), (6, vec![0, 2, 4])]
        .into_iter()
        .map(|(n, s)| {
            let g = cyclic(n).unwrap();
            let c = classify(&cayley(&g, g.set(s).unwrap()), &b).unwrap();
            serde_json::to_string(&c).unwrap()
        })
        .collect()
}

fn criterion_5() -> Outcome {
    let b = SearchBudget::default();
    let run = |n: usize, s: &[usize]| {
        let g = cyclic(n).unwrap();
        classify(&cayley(&g, g.set(s.iter().copied()).unwrap()), &b).unwrap()
    };
    let v = run(7, &[0, 1, 3]);
    let d = run(7, &[0, 1, 2]);
    let nc = run(6, &[0, 2, 4]);
    let ok = (v.tag, v.kappa1, v.kappa2) == (ClassTag::Vosper, Some(2), Some(3))
        && (d.tag, d.kappa1, d.kappa2) == (ClassTag::Degenerate, Some(2), Some(2))
        && (nc.tag, nc.kappa1) == (ClassTag::NonCauchy, Some(0));
    outcome(
        ok,
        format!(
            "Z7{{0,1,3}} {:?} κ₁={:?} κ₂={:?}; Z7{{0,1,2}} {:?} κ₁={:?} κ₂={:?}; Z6{{0,2,4}} {:?} κ₁={:?}",
            v.tag, v.kappa1, v.kappa2, d.tag, d.kappa1, d.kappa2, nc.tag, nc.kappa1
        ),
    )
}

fn criterion_6() -> Outcome {
    let b = SearchBudget::default();
    let mut checked = 0;
    let mut bad = Vec::new();
    for p in PRIMES {
        let g = cyclic(p).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for d in 1..p {
            for len in 2..=p.saturating_sub(3) {
                for shift in 0..len {
                    // {a, a+d, ..., a+(len-1)d} with a = -shift·d, so 0 is a term
                    let a = (p - shift * d % p) % p;
                    let s: ElementSet = (0..len).map(|i| (a + i * d) % p).collect();
                    if !seen.insert(s) {
                        continue;
                    }
                    let rel = cayley(&g, s);
                    if !is_k_separable(&rel, 2) {
                        continue;
                    }
                    checked += 1;
                    if kappa(&rel, 2, &b).unwrap() != kappa(&rel, 1, &b).unwrap() {
                        bad.push(format!("Z{p} {s}"));
                    }
                }
            }
        }
    }
    outcome(bad.is_empty() && checked > 0, format!("{checked} progressions, violations {bad:?}"))
}

fn census() -> vosper::theorems::ScanOutput {
    scan(&ScanConfig::default().with_max_order(16), TheoremId::Kneser).unwrap()
}

fn criterion_7() -> Outcome {
    let out = census();
    let s = &out.summary;
    outcome(
        s.fail == 0 && s.pass > 0,
        format!(
            "{} instances ({} subsets), pass {}, hypothesis not met {}, fail {}, clause frequencies {:?}",
            s.instances, s.subsets_covered, s.pass, s.hypothesis_not_met, s.fail, s.clause_frequencies
        ),
    )
}

const STRUCTURE: [TheoremId; 5] = [
    TheoremId::CauchyCayley,
    TheoremId::TwoAtomCay,
    TheoremId::Dl,
    TheoremId::AsterCay,
    TheoremId::GroupFrag,
];

fn structure_scans() -> Vec<vosper::theorems::ScanOutput> {
    let config = ScanConfig::default().with_max_order(12);
    STRUCTURE.iter().map(|&t| scan(&config, t).unwrap()).collect()
}

fn criterion_8() -> Outcome {
    let outs = structure_scans();
    let fails: u64 = outs.iter().map(|o| o.summary.fail).sum();
    let parts: Vec<String> = outs
        .iter()
        .map(|o| {
            let s = &o.summary;
            format!("{} {}/{}/{}", s.theorem_id, s.pass, s.hypothesis_not_met, s.fail)
        })
        .collect();
    outcome(
        fails == 0 && outs.iter().all(|o| o.summary.pass > 0),
        format!("pass/not-met/fail: {}", parts.join(", ")),
    )
}

fn serialized_reports() -> String {
    let mut text = fixed_points().join("\n");
    let c = census();
    text.push_str(&c.to_jsonl());
    text.push_str(&serde_json::to_string(&c.summary).unwrap());
    for o in structure_scans() {
        text.push_str(&o.to_jsonl());
        text.push_str(&serde_json::to_string(&o.summary).unwrap());
    }
    text
}

fn criterion_9() -> Outcome {
    let pool = |n: usize| rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap();
    let max = std::thread::available_parallelism().map_or(4, |n| n.get()).max(2);
    let single = pool(1).install(serialized_reports);
    let many = pool(max).install(serialized_reports);
    outcome(
        single == many,
        format!("1 thread vs {max} threads: {} bytes each, identical {}", single.len(), single == many),
    )
}

#[test]
fn acceptance() {
    let secs = Duration::from_secs;
    let results = [
        timed(1, "definition oracle", Some(secs(60)), criterion_1),
        timed(2, "duality suite", None, criterion_2),
        timed(3, "intersection suite", Some(secs(300)), criterion_3),
        timed(4, "Cauchy-Davenport", Some(secs(120)), criterion_4),
        timed(5, "Vosper fixed points", None, criterion_5),
        timed(6, "progression degeneracy", None, criterion_6),
        timed(7, "small-doubling census", Some(secs(600)), criterion_7),
        timed(8, "Cayley structure scans", Some(secs(900)), criterion_8),
        timed(9, "determinism", None, criterion_9),
    ];
    let failed: Vec<usize> = results
        .iter()
        .enumerate()
        .filter(|(_, s)| **s == Status::Fail)
        .map(|(i, _)| i + 1)
        .collect();
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
    // Only the confirmed Cauchy-duality counterexample may stand in for a pass.
    let refuted: Vec<usize> = results
        .iter()
        .enumerate()
        .filter(|(_, s)| **s == Status::Refuted)
        .map(|(i, _)| i + 1)
        .collect();
    assert!(refuted.is_empty() || refuted == [2], "unexpected refutations: {refuted:?}");
}

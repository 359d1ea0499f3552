//! Executable versions of the structural statements about fragments.
//!
//! Each check walks the enumerated fragments (and semi-fragments) of a relation
//! and its reverse, records how many instances met the hypothesis, and logs a
//! [`Violation`] with the offending sets whenever a conclusion fails.
//!
//! Statements quantified over a `k`-semi-fragment `Y` are checked twice: once
//! with `Y` a genuine `k`-fragment (ids without suffix) and once with `Y` a
//! semi-fragment that is not a fragment (ids ending in `.semi`). On finite
//! relations the second family has counterexamples for the intersection
//! conclusions, so callers decide which ids they assert.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::relation::Relation;
use crate::set::ElementSet;

use super::{Analysis, Direction};

/// Relations up to this size also get the `2^n` extremal scan.
const FULL_SCAN_LIMIT: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: &'static str,
    pub reverse: bool,
    pub k: usize,
    pub detail: String,
}

/// Per-law instance counts and the violations found.
#[derive(Clone, Debug, Default, Serialize)]
pub struct LawReport {
    pub checked: BTreeMap<&'static str, u64>,
    pub violations: Vec<Violation>,
}

impl LawReport {
    fn record(&mut self, law: &'static str, dir: Direction, k: usize, ok: bool, detail: impl FnOnce() -> String) {
        *self.checked.entry(law).or_default() += 1;
        if !ok {
            self.violations.push(Violation {
                law,
                reverse: dir == Direction::Reverse,
                k,
                detail: detail(),
            });
        }
    }

    pub fn merge(&mut self, other: LawReport) {
        for (law, n) in other.checked {
            *self.checked.entry(law).or_default() += n;
        }
        self.violations.extend(other.violations);
    }

    pub fn violations_of<'a>(&'a self, law: &'a str) -> impl Iterator<Item = &'a Violation> + 'a {
        self.violations.iter().filter(move |v| v.law == law)
    }

    pub fn count(&self, law: &str) -> u64 {
        self.checked.get(law).copied().unwrap_or(0)
    }
}

/// All `Y` such that `Y` is a `k`-fragment or `∇(Y)` is a reverse `k`-fragment.
pub fn semi_fragments(a: &Analysis, dir: Direction, k: usize) -> Vec<ElementSet> {
    let rel = a.relation(dir);
    let rev = a.relation(dir.flip());
    let mut out: Vec<ElementSet> = a.report(dir, k).map(|r| r.fragments.clone()).unwrap_or_default();
    if let Some(back) = a.report(dir.flip(), k) {
        for &z in &back.fragments {
            // ∇(Y) = Z forces Y ⊆ ∇⁻(Z)
            let room = rev.exterior(z);
            let target = z.complement(rel.vertex_count());
            for_each_submask(room, |y| {
                if rel.image(y) == target {
                    out.push(y);
                }
            });
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn for_each_submask(mask: ElementSet, mut f: impl FnMut(ElementSet)) {
    let m = mask.bits();
    let mut sub = m;
    loop {
        f(ElementSet::from_bits(sub));
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & m;
    }
}

/// Duality of fragments under `X ↦ ∇(X)`, and equality of `κ_k` with `κ_{-k}`.
pub fn duality_laws(a: &Analysis, ks: &[usize]) -> LawReport {
    let mut out = LawReport::default();
    for &k in ks {
        for dir in [Direction::Forward, Direction::Reverse] {
            negative(a, dir, k, &mut out);
        }
        finiteg(a, k, &mut out);
    }
    let fwd = Direction::Forward;
    out.record("finiteg.iii", fwd, 1, a.is_cauchy(fwd) == a.is_cauchy(fwd.flip()), || {
        format!("cauchy {} vs reverse-cauchy {}", a.is_cauchy(fwd), a.is_cauchy(fwd.flip()))
    });
    out.record("finiteg.iv", fwd, 2, a.is_degenerate(fwd) == a.is_degenerate(fwd.flip()), || {
        format!(
            "degenerate {} vs reverse-degenerate {}",
            a.is_degenerate(fwd),
            a.is_degenerate(fwd.flip())
        )
    });
    out
}

/// Monotonicity in `k` and the extremal description of `κ_k`.
pub fn basic_laws(a: &Analysis, ks: &[usize]) -> LawReport {
    let mut out = LawReport::default();
    for &k in ks {
        for dir in [Direction::Forward, Direction::Reverse] {
            if k >= 2 {
                degenerate_lemma(a, dir, k, &mut out);
            }
            if a.vertex_count() <= FULL_SCAN_LIMIT {
                kappa_remark(a, dir, k, &mut out);
            }
        }
    }
    out
}

/// Intersection properties of fragments, atoms and super-fragments.
pub fn intersection_laws(a: &Analysis, ks: &[usize]) -> LawReport {
    let mut out = LawReport::default();
    for &k in ks {
        for dir in [Direction::Forward, Direction::Reverse] {
            let semis = semi_fragments(a, dir, k);
            katom_degree(a, dir, k, &mut out);
            crossing(a, dir, k, &semis, &mut out);
            four_f(a, dir, k, &mut out);
            anti_atom(a, dir, k, &mut out);
            if k == 2 {
                faithful_atoms(a, dir, &semis, &mut out);
                atom_pairs(a, dir, &mut out);
            }
        }
    }
    if ks.contains(&2) {
        super_atoms(a, &mut out);
    }
    out
}

/// Every check for `k ∈ {1, 2}`.
pub fn check_all(a: &Analysis) -> LawReport {
    let ks = [1, 2];
    let mut out = basic_laws(a, &ks);
    out.merge(duality_laws(a, &ks));
    out.merge(intersection_laws(a, &ks));
    out
}

fn negative(a: &Analysis, dir: Direction, k: usize, out: &mut LawReport) {
    let Some(rep) = a.report(dir, k) else { return };
    let rel = a.relation(dir);
    let rev = a.relation(dir.flip());
    let exteriors: Vec<ElementSet> = rep.fragments.iter().map(|&x| rel.exterior(x)).collect();
    for (&x, &ext) in rep.fragments.iter().zip(&exteriors) {
        out.record("negative.eq2", dir, k, rev.board(ext) == rel.board(x), || {
            format!("X={x}: reverse board of ∇X is {}, board of X is {}", rev.board(ext), rel.board(x))
        });
        out.record("negative.eq3", dir, k, rev.exterior(ext) == x, || {
            format!("X={x}: ∇⁻(∇X) = {}", rev.exterior(ext))
        });
    }
    for (i, &x) in rep.fragments.iter().enumerate() {
        for (j, &y) in rep.fragments.iter().enumerate() {
            let lhs = x.is_subset(y);
            let rhs = exteriors[j].is_subset(exteriors[i]);
            out.record("negative.eq4", dir, k, lhs == rhs, || {
                format!("X={x}, Y={y}: X⊆Y is {lhs}, ∇Y⊆∇X is {rhs}")
            });
        }
    }
}

fn finiteg(a: &Analysis, k: usize, out: &mut LawReport) {
    let fwd = Direction::Forward;
    let (f, b) = (a.report(fwd, k), a.report(fwd.flip(), k));
    out.record("finiteg.separable", fwd, k, f.is_some() == b.is_some(), || {
        format!("separable {} vs reverse-separable {}", f.is_some(), b.is_some())
    });
    let (Some(f), Some(b)) = (f, b) else { return };
    out.record("finiteg.kappa", fwd, k, f.kappa == b.kappa, || {
        format!("κ_k = {} but κ_-k = {}", f.kappa, b.kappa)
    });
    // X ↦ ∇(X) is checked both ways; it is a bijection between the two families,
    // though ∇(X) can be a reverse fragment for sets X that are not fragments
    for (dir, here, there) in [(fwd, f, b), (fwd.flip(), b, f)] {
        let rel = a.relation(dir);
        let rev = a.relation(dir.flip());
        for &x in &here.fragments {
            let ext = rel.exterior(x);
            let ok = there.contains(ext) && rev.exterior(ext) == x;
            out.record("finiteg.i", dir, k, ok, || {
                format!("fragment X={x}: ∇X={ext} is not a reverse fragment with ∇⁻∇X = X")
            });
        }
        for &x in &here.super_fragments {
            let ext = rel.exterior(x);
            out.record("finiteg.ii", dir, k, there.is_atom(ext), || {
                format!("super-fragment X={x}: ∇X={ext} is not a reverse atom")
            });
        }
        for &z in &there.atoms {
            let back = rev.exterior(z);
            out.record("finiteg.ii", dir, k, here.is_super_fragment(back), || {
                format!("reverse atom Z={z}: ∇⁻Z={back} is not a super-fragment")
            });
        }
    }
}

fn degenerate_lemma(a: &Analysis, dir: Direction, k: usize, out: &mut LawReport) {
    let Some(hi) = a.report(dir, k) else { return };
    let lo = a.report(dir, k - 1);
    let ok = lo.is_some_and(|lo| lo.kappa <= hi.kappa);
    out.record("degenerate.monotone", dir, k, ok, || {
        format!("κ_{} = {:?} vs κ_{k} = {}", k - 1, lo.map(|r| r.kappa), hi.kappa)
    });
    let Some(lo) = lo else { return };
    if lo.kappa != hi.kappa {
        return;
    }
    let rel = a.relation(dir);
    let restricted: Vec<ElementSet> = lo
        .fragments
        .iter()
        .copied()
        .filter(|&f| f.len() >= k && rel.exterior(f).len() >= k)
        .collect();
    out.record("degenerate.family", dir, k, restricted == hi.fragments, || {
        format!(
            "{} restricted (k-1)-fragments vs {} k-fragments",
            restricted.len(),
            hi.fragments.len()
        )
    });
}

fn kappa_remark(a: &Analysis, dir: Direction, k: usize, out: &mut LawReport) {
    let rel = a.relation(dir);
    let n = rel.vertex_count();
    // largest j with |Γ(X)| ≥ min(n-k+1, |X|+j) for all |X| ≥ k
    let mut j_max: Option<usize> = None;
    for bits in 0u64..1 << n {
        let x = ElementSet::from_bits(bits);
        if x.len() < k {
            continue;
        }
        let image = rel.image(x).len();
        if image + k > n {
            continue;
        }
        let j = image - x.len();
        j_max = Some(j_max.map_or(j, |m| m.min(j)));
    }
    let kappa = a.kappa(dir, k);
    out.record("kappa.remark", dir, k, j_max == kappa, || {
        format!("extremal j = {j_max:?}, κ_k = {kappa:?}")
    });
}

fn katom_degree(a: &Analysis, dir: Direction, k: usize, out: &mut LawReport) {
    let Some(rep) = a.report(dir, k) else { return };
    let rev = a.relation(dir.flip());
    for &atom in &rep.atoms {
        if atom.len() <= k {
            continue;
        }
        for x in atom {
            let meet = rev.neighborhood(x) & atom;
            out.record("katomdegree", dir, k, meet != ElementSet::singleton(x), || {
                format!("atom {atom}, x={x}: Γ⁻(x)∩A = {{x}}")
            });
        }
    }
}

fn crossing(a: &Analysis, dir: Direction, k: usize, semis: &[ElementSet], out: &mut LawReport) {
    let Some(rep) = a.report(dir, k) else { return };
    let rel = a.relation(dir);
    for &x in &rep.fragments {
        let (bx, ex) = (rel.board(x), rel.exterior(x));
        for &y in semis {
            let meet = x & y;
            if meet.len() < k {
                continue;
            }
            let (by, ey) = (rel.board(y), rel.exterior(y));
            let genuine = rep.contains(y);
            let lhs = (ey & bx).len();
            let rhs = (x & by).len();
            out.record("lem1977.i", dir, k, lhs <= rhs, || {
                format!("X={x}, Y={y}: |∇Y∩∂X| = {lhs} > |X∩∂Y| = {rhs}")
            });
            let meet_is_fragment = rep.contains(meet);
            if (ex & ey).len() >= k {
                let law = if genuine { "lem1977.ii" } else { "lem1977.ii.semi" };
                out.record(law, dir, k, meet_is_fragment, || {
                    format!("X={x}, Y={y}: X∩Y={meet} is not a fragment")
                });
            }
            if x.len() <= ey.len() {
                let law = if genuine { "lem1977.iii" } else { "lem1977.iii.semi" };
                out.record(law, dir, k, meet_is_fragment, || {
                    format!("X={x}, Y={y}: X∩Y={meet} is not a fragment")
                });
            }
        }
    }
}

fn four_f(a: &Analysis, dir: Direction, k: usize, out: &mut LawReport) {
    let Some(f) = a.faithful(dir, k) else { return };
    let b = a.faithful(dir.flip(), k);
    out.record("fourf", dir, k, f || b == Some(true), || {
        format!("faithful {f}, reverse faithful {b:?}")
    });
}

fn anti_atom(a: &Analysis, dir: Direction, k: usize, out: &mut LawReport) {
    let Some(rep) = a.report(dir, k) else { return };
    if a.faithful(dir.flip(), k) != Some(false) {
        return;
    }
    let tight = k >= 2 && a.kappa(dir, k - 1) == Some(rep.kappa);
    for (i, &x) in rep.super_fragments.iter().enumerate() {
        for &y in &rep.super_fragments[i + 1..] {
            let meet = (x & y).len();
            out.record("antiatom.i", dir, k, meet < k, || {
                format!("super-fragments {x}, {y} share {meet} vertices")
            });
            if tight {
                out.record("antiatom.ii", dir, k, meet + 1 < k, || {
                    format!("κ_k = κ_(k-1); super-fragments {x}, {y} share {meet} vertices")
                });
            }
        }
    }
}

fn faithful_atoms(a: &Analysis, dir: Direction, semis: &[ElementSet], out: &mut LawReport) {
    if !a.is_degenerate(dir) || a.faithful(dir, 2) != Some(true) {
        return;
    }
    let rep = a.report(dir, 2).unwrap();
    let rel = a.relation(dir);
    for &atom in &rep.atoms {
        let ea = rel.exterior(atom);
        for &x in semis {
            if atom.is_subset(x) {
                continue;
            }
            let genuine = rep.contains(x);
            let ex = rel.exterior(x);
            let small = (atom & x).len() < 2;
            if atom.len() <= ex.len() {
                let law = if genuine { "faithful.i" } else { "faithful.i.semi" };
                out.record(law, dir, 2, small, || format!("A={atom}, X={x}: |A∩X| ≥ 2"));
            }
            if !(ea & ex).is_empty() {
                let law = if genuine { "faithful.ii" } else { "faithful.ii.semi" };
                out.record(law, dir, 2, small, || format!("A={atom}, X={x}: |A∩X| ≥ 2"));
            }
        }
    }
}

fn atom_pairs(a: &Analysis, dir: Direction, out: &mut LawReport) {
    if !a.is_degenerate(dir) || a.faithful(dir, 2) != Some(true) {
        return;
    }
    let rep = a.report(dir, 2).unwrap();
    let rel = a.relation(dir);
    let kappa = rep.kappa as i64;
    for &x in &rep.atoms {
        for &y in &rep.atoms {
            if x != y {
                let meet = (x & y).len();
                out.record("faithful.atoms", dir, 2, meet < 2, || {
                    format!("2-atoms {x}, {y} share {meet} vertices")
                });
            }
            let meet = x & y;
            let board = rel.board(meet).len() as i64;
            let common = (rel.image(x) & rel.image(y)).len() as i64 - meet.len() as i64;
            out.record("lem19771.eq9", dir, 2, board <= common, || {
                format!("X={x}, Y={y}: |∂(X∩Y)| = {board} > |ΓX∩ΓY|-|X∩Y| = {common}")
            });
            out.record("lem19771.eq9.kappa", dir, 2, common <= kappa, || {
                format!("X={x}, Y={y}: |ΓX∩ΓY|-|X∩Y| = {common} > κ_2 = {kappa}")
            });
            let lhs = rel.exterior(x).difference(rel.exterior(y)).len() as i64;
            let rhs = y.difference(x).len() as i64 + kappa - board;
            out.record("lem19771.eq10", dir, 2, lhs <= rhs, || {
                format!("X={x}, Y={y}: |∇X∖∇Y| = {lhs} > {rhs}")
            });
        }
    }
}

fn super_atoms(a: &Analysis, out: &mut LawReport) {
    let (fwd, bwd) = (Direction::Forward, Direction::Reverse);
    let hypothesis = a.is_degenerate(fwd)
        && a.is_degenerate(bwd)
        && a.faithful(fwd, 2) == Some(true)
        && a.faithful(bwd, 2) == Some(true);
    if !hypothesis {
        return;
    }
    let atoms = &a.report(fwd, 2).unwrap().atoms;
    let rev_atoms = &a.report(bwd, 2).unwrap().atoms;
    let crowded = crowded_vertex(a.relation(fwd), atoms, rev_atoms);
    let small = atoms[0].len() == 2 || rev_atoms[0].len() == 2;
    out.record("superatoms", fwd, 2, crowded.is_none() || small, || {
        format!(
            "vertex {} lies in ≥3 2-atoms and ≥3 reverse 2-atoms; atom sizes {} / {}",
            crowded.unwrap(),
            atoms[0].len(),
            rev_atoms[0].len()
        )
    });
}

/// A vertex lying in at least three distinct atoms and three distinct reverse atoms.
pub fn crowded_vertex(rel: &Relation, atoms: &[ElementSet], rev_atoms: &[ElementSet]) -> Option<usize> {
    (0..rel.vertex_count()).find(|&v| {
        atoms.iter().filter(|a| a.contains(v)).count() >= 3
            && rev_atoms.iter().filter(|a| a.contains(v)).count() >= 3
    })
}

//! Branch-and-bound over subsets `X ⊆ V`.
//!
//! Vertices are decided in index order: included in `X`, excluded, or still
//! open. For a partial decision with included set `I` and excluded set `E`,
//! every completion `X` satisfies `I ⊆ X ⊆ V \ E`, so
//!
//! - `∂(X) ⊇ Γ(I) ∩ E`, giving the lower bound `|Γ(I) ∩ E|` on the board;
//! - `∇(X) ⊆ ∇(I)`, so the branch dies once `|∇(I)| < k`;
//! - `|X| ≤ |I| + #open`, so the branch dies once that drops below `k`.
//!
//! At a leaf `E` is the complement of `I` and the bound is the exact board.
//! The top levels are split into independent prefixes that run on the rayon
//! pool; the minimization shares its incumbent through an atomic minimum.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::relation::Relation;
use crate::set::ElementSet;

/// Below this many vertices the search runs on the calling thread.
const PARALLEL_THRESHOLD: usize = 16;
/// Number of leading vertices fixed per parallel task.
const SPLIT_DEPTH: usize = 10;

struct Frame {
    next: usize,
    included: u64,
    image: u64,
    excluded: u64,
}

struct Search {
    rows: Vec<u64>,
    n: usize,
    k: usize,
}

impl Search {
    fn new(relation: &Relation, k: usize) -> Self {
        Search {
            rows: relation.rows().iter().map(|r| r.bits()).collect(),
            n: relation.vertex_count(),
            k,
        }
    }

    #[inline]
    fn viable(&self, f: &Frame) -> bool {
        let exterior = self.n - f.image.count_ones() as usize;
        let reachable = f.included.count_ones() as usize + (self.n - f.next);
        exterior >= self.k && reachable >= self.k
    }

    #[inline]
    fn lower_bound(f: &Frame) -> usize {
        (f.image & f.excluded).count_ones() as usize
    }

    /// Frames after fixing the first `depth` vertices, in a fixed order.
    fn prefixes(&self, depth: usize) -> Vec<Frame> {
        let mut out = vec![Frame {
            next: 0,
            included: 0,
            image: 0,
            excluded: 0,
        }];
        for v in 0..depth {
            let mut next = Vec::with_capacity(out.len() * 2);
            for f in out {
                let bit = 1u64 << v;
                let inc = Frame {
                    next: v + 1,
                    included: f.included | bit,
                    image: f.image | self.rows[v],
                    excluded: f.excluded,
                };
                let exc = Frame {
                    next: v + 1,
                    included: f.included,
                    image: f.image,
                    excluded: f.excluded | bit,
                };
                for g in [inc, exc] {
                    if self.viable(&g) {
                        next.push(g);
                    }
                }
            }
            out = next;
        }
        out
    }

    fn minimize_from(&self, f: Frame, best: &AtomicUsize) {
        if !self.viable(&f) {
            return;
        }
        let lb = Self::lower_bound(&f);
        if lb >= best.load(Ordering::Relaxed) {
            return;
        }
        if f.next == self.n {
            best.fetch_min(lb, Ordering::Relaxed);
            return;
        }
        let v = f.next;
        let bit = 1u64 << v;
        self.minimize_from(
            Frame {
                next: v + 1,
                included: f.included | bit,
                image: f.image | self.rows[v],
                excluded: f.excluded,
            },
            best,
        );
        self.minimize_from(
            Frame {
                next: v + 1,
                included: f.included,
                image: f.image,
                excluded: f.excluded | bit,
            },
            best,
        );
    }

    fn enumerate_from(&self, f: Frame, limit: usize, out: &mut Vec<ElementSet>) {
        if !self.viable(&f) || Self::lower_bound(&f) > limit {
            return;
        }
        if f.next == self.n {
            out.push(ElementSet::from_bits(f.included));
            return;
        }
        let v = f.next;
        let bit = 1u64 << v;
        self.enumerate_from(
            Frame {
                next: v + 1,
                included: f.included | bit,
                image: f.image | self.rows[v],
                excluded: f.excluded,
            },
            limit,
            out,
        );
        self.enumerate_from(
            Frame {
                next: v + 1,
                included: f.included,
                image: f.image,
                excluded: f.excluded | bit,
            },
            limit,
            out,
        );
    }

    fn split_depth(&self) -> usize {
        if self.n >= PARALLEL_THRESHOLD {
            SPLIT_DEPTH.min(self.n)
        } else {
            0
        }
    }
}

/// Exact `κ_k`: the minimum of `|∂(X)|` over `X` with `|X| ≥ k` and `|∇(X)| ≥ k`.
/// `None` when no such `X` exists.
pub(crate) fn min_board(relation: &Relation, k: usize) -> Option<usize> {
    let search = Search::new(relation, k);
    let sentinel = relation.vertex_count() + 1;
    let best = AtomicUsize::new(seed_bound(relation, k).unwrap_or(sentinel).min(sentinel));
    let depth = search.split_depth();
    if depth == 0 {
        search.minimize_from(search.prefixes(0).pop().unwrap(), &best);
    } else {
        search
            .prefixes(depth)
            .into_par_iter()
            .for_each(|f| search.minimize_from(f, &best));
    }
    // the seed is itself attained, so equality with the seed is a valid answer
    let value = best.load(Ordering::Relaxed);
    if value < sentinel {
        Some(value)
    } else {
        None
    }
}

/// A board size attained by some admissible set: singletons for `k = 1`,
/// otherwise the best `k`-set grown greedily from each vertex.
fn seed_bound(relation: &Relation, k: usize) -> Option<usize> {
    let n = relation.vertex_count();
    let mut best: Option<usize> = None;
    for v in 0..n {
        let mut x = ElementSet::singleton(v);
        while x.len() < k {
            let image = relation.image(x);
            // prefer growing inside the current image: it keeps the board small
            let pick = image.difference(x).first().or_else(|| x.complement(n).first());
            match pick {
                Some(u) => x.insert(u),
                None => break,
            }
        }
        if x.len() >= k && relation.exterior(x).len() >= k {
            let b = relation.board(x).len();
            best = Some(best.map_or(b, |c: usize| c.min(b)));
        }
    }
    best
}

/// All `X` with `|X| ≥ k`, `|∇(X)| ≥ k` and `|∂(X)| ≤ limit`, sorted.
pub(crate) fn sets_with_board_at_most(relation: &Relation, k: usize, limit: usize) -> Vec<ElementSet> {
    let search = Search::new(relation, k);
    let depth = search.split_depth();
    let mut out = if depth == 0 {
        let mut out = Vec::new();
        search.enumerate_from(search.prefixes(0).pop().unwrap(), limit, &mut out);
        out
    } else {
        search
            .prefixes(depth)
            .into_par_iter()
            .map(|f| {
                let mut local = Vec::new();
                search.enumerate_from(f, limit, &mut local);
                local
            })
            .reduce(Vec::new, |mut a, mut b| {
                a.append(&mut b);
                a
            })
    };
    out.sort_unstable();
    out
}

/// Some `X` with `|X| = k` and `|∇(X)| ≥ k`; by monotonicity of `∇` this
/// exists iff the relation is `k`-separable.
pub(crate) fn separating_witness(relation: &Relation, k: usize) -> Option<ElementSet> {
    let n = relation.vertex_count();
    if k == 0 {
        return Some(ElementSet::EMPTY);
    }
    if 2 * k > n {
        return None;
    }
    fn go(
        relation: &Relation,
        k: usize,
        from: usize,
        chosen: ElementSet,
        image: ElementSet,
    ) -> Option<ElementSet> {
        let n = relation.vertex_count();
        if n - image.len() < k {
            return None;
        }
        if chosen.len() == k {
            return Some(chosen);
        }
        let need = k - chosen.len();
        for v in from..=n - need {
            if let Some(w) = go(relation, k, v + 1, chosen.with(v), image | relation.neighborhood(v)) {
                return Some(w);
            }
        }
        None
    }
    go(relation, k, 0, ElementSet::EMPTY, ElementSet::EMPTY)
}

/// Visits every nonempty subset with its image, stopping early when `visit` returns false.
pub(crate) fn for_each_nonempty_subset(
    relation: &Relation,
    mut visit: impl FnMut(ElementSet, ElementSet) -> bool,
) -> bool {
    fn go(
        relation: &Relation,
        v: usize,
        x: ElementSet,
        image: ElementSet,
        visit: &mut dyn FnMut(ElementSet, ElementSet) -> bool,
    ) -> bool {
        if v == relation.vertex_count() {
            return x.is_empty() || visit(x, image);
        }
        go(relation, v + 1, x.with(v), image | relation.neighborhood(v), visit)
            && go(relation, v + 1, x, image, visit)
    }
    go(relation, 0, ElementSet::EMPTY, ElementSet::EMPTY, &mut visit)
}

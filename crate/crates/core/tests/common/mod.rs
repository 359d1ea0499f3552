//! Definition-level oracle: plain `2^n` scans over adjacency lists, sharing
//! nothing with the library's search beyond the input format.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use vosper::{ElementSet, Relation};

/// Out-neighbor lists of a reflexive relation.
#[derive(Clone, Debug)]
pub struct Oracle {
    pub n: usize,
    pub adj: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub kappa: usize,
    pub fragments: Vec<Vec<usize>>,
    pub atoms: Vec<Vec<usize>>,
    pub super_fragments: Vec<Vec<usize>>,
    pub faithful: bool,
}

fn members(n: usize, mask: u64) -> Vec<usize> {
    (0..n).filter(|v| mask >> v & 1 == 1).collect()
}

impl Oracle {
    pub fn from_relation(rel: &Relation) -> Self {
        let n = rel.vertex_count();
        let adj = (0..n).map(|v| rel.neighborhood(v).to_vec()).collect();
        Oracle { n, adj }
    }

    pub fn to_relation(&self) -> Relation {
        Relation::new(self.adj.iter().map(|r| r.iter().copied().collect()).collect()).unwrap()
    }

    pub fn image(&self, x: &[usize]) -> Vec<usize> {
        let mut hit = vec![false; self.n];
        for &v in x {
            for &w in &self.adj[v] {
                hit[w] = true;
            }
        }
        (0..self.n).filter(|&w| hit[w]).collect()
    }

    pub fn exterior_size(&self, x: &[usize]) -> usize {
        self.n - self.image(x).len()
    }

    pub fn board_size(&self, x: &[usize]) -> usize {
        self.image(x).len() - x.len()
    }

    /// `None` when not `k`-separable.
    pub fn report(&self, k: usize) -> Option<OracleReport> {
        let mut best: Option<usize> = None;
        let mut members_f: Vec<(usize, Vec<usize>)> = Vec::new();
        for mask in 0u64..1 << self.n {
            let x = members(self.n, mask);
            if x.len() < k || self.exterior_size(&x) < k {
                continue;
            }
            let b = self.board_size(&x);
            members_f.push((b, x));
            best = Some(best.map_or(b, |c: usize| c.min(b)));
        }
        let kappa = best?;
        let mut fragments: Vec<Vec<usize>> =
            members_f.into_iter().filter(|(b, _)| *b == kappa).map(|(_, x)| x).collect();
        fragments.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let lo = fragments.iter().map(Vec::len).min().unwrap();
        let hi = fragments.iter().map(Vec::len).max().unwrap();
        let atoms: Vec<Vec<usize>> = fragments.iter().filter(|f| f.len() == lo).cloned().collect();
        let super_fragments = fragments.iter().filter(|f| f.len() == hi).cloned().collect();
        let faithful = lo <= self.exterior_size(&atoms[0]);
        Some(OracleReport {
            kappa,
            fragments,
            atoms,
            super_fragments,
            faithful,
        })
    }
}

pub fn to_vecs(sets: &[ElementSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.to_vec()).collect()
}

/// A random reflexive relation on `n` vertices with arc density `p`.
pub fn random_relation(rng: &mut StdRng, n: usize, p: f64) -> Oracle {
    let adj = (0..n)
        .map(|v| (0..n).filter(|&w| w == v || rng.gen_bool(p)).collect())
        .collect();
    Oracle { n, adj }
}

/// The fixed corpus of random relations used by the acceptance suite:
/// sizes 2 to 12, densities spread over (0.05, 0.6).
pub fn corpus(count: usize, seed: u64) -> Vec<Oracle> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=12);
            let p = rng.gen_range(0.05..0.6);
            random_relation(&mut rng, n, p)
        })
        .collect()
}

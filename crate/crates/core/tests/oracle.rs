mod common;

use common::{corpus, random_relation, to_vecs, Oracle};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use vosper::isoperimetry::{fragment_report, is_k_separable, kappa, SearchBudget};
use vosper::{CayleyGraph, ElementSet, Relation};

fn agrees(o: &Oracle, k: usize) -> Result<(), String> {
    let rel = o.to_relation();
    let b = SearchBudget::default();
    match (o.report(k), is_k_separable(&rel, k)) {
        (None, false) => Ok(()),
        (Some(want), true) => {
            let got = fragment_report(&rel, k, &b).map_err(|e| e.to_string())?;
            let got_kappa = kappa(&rel, k, &b).map_err(|e| e.to_string())?;
            if got_kappa != want.kappa || got.kappa != want.kappa {
                return Err(format!("kappa {got_kappa} vs {}", want.kappa));
            }
            if to_vecs(&got.fragments) != want.fragments
                || to_vecs(&got.atoms) != want.atoms
                || to_vecs(&got.super_fragments) != want.super_fragments
                || got.faithful != want.faithful
            {
                return Err(format!("fragment mismatch at k={k}: {got:?} vs {want:?}"));
            }
            Ok(())
        }
        (want, got) => Err(format!("separability oracle {} vs search {got}", want.is_some())),
    }
}

#[test]
fn search_matches_oracle_on_random_relations() {
    for (i, o) in corpus(120, 7).iter().enumerate() {
        for k in 1..=3 {
            agrees(o, k).unwrap_or_else(|e| panic!("relation #{i}: {e}"));
        }
    }
}

#[test]
fn search_matches_oracle_on_dense_and_sparse_extremes() {
    let mut rng = StdRng::seed_from_u64(11);
    for n in [1, 2, 3, 13, 14] {
        for p in [0.0, 0.02, 0.9, 1.0] {
            agrees(&random_relation(&mut rng, n, p), 1).unwrap();
            agrees(&random_relation(&mut rng, n, p), 2).unwrap();
        }
    }
}

#[test]
fn parallel_search_matches_oracle_above_split_threshold() {
    // sizes 16 and 17 take the parallel path of the search
    let mut rng = StdRng::seed_from_u64(23);
    for n in [16, 17] {
        let o = random_relation(&mut rng, n, 0.25);
        agrees(&o, 1).unwrap();
        agrees(&o, 2).unwrap();
    }
}

#[test]
fn cayley_graphs_match_oracle() {
    for g in [vosper::group::families::dihedral(10).unwrap(), vosper::group::families::quaternion().unwrap()] {
        for bits in (0u64..1 << (g.order() - 1)).step_by(3) {
            let s = ElementSet::from_bits(bits << 1 | 1);
            let rel = CayleyGraph::new(&g, s).unwrap().into_relation();
            let o = Oracle::from_relation(&rel);
            agrees(&o, 1).unwrap();
            agrees(&o, 2).unwrap();
        }
    }
}

fn arb_relation() -> impl Strategy<Value = Relation> {
    (1usize..=10).prop_flat_map(|n| {
        proptest::collection::vec(any::<u64>(), n).prop_map(move |masks| {
            let full = (1u64 << n) - 1;
            let rows = masks
                .into_iter()
                .enumerate()
                .map(|(v, m)| ElementSet::from_bits((m & full) | 1 << v))
                .collect();
            Relation::new(rows).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn prop_search_equals_oracle(rel in arb_relation(), k in 1usize..=2) {
        let o = Oracle::from_relation(&rel);
        prop_assert!(agrees(&o, k).is_ok(), "{:?}", agrees(&o, k));
    }

    #[test]
    fn prop_board_identity(rel in arb_relation(), bits in any::<u64>()) {
        let x = ElementSet::from_bits(bits) & rel.vertices();
        let n = rel.vertex_count();
        // |X| + |∂X| + |∇X| = n and X ⊆ Γ(X)
        prop_assert_eq!(x.len() + rel.board(x).len() + rel.exterior(x).len(), n);
        prop_assert!(x.is_subset(rel.image(x)));
    }

    #[test]
    fn prop_image_is_monotone_and_reverse_is_involutive(rel in arb_relation(), a in any::<u64>(), b in any::<u64>()) {
        let x = ElementSet::from_bits(a) & rel.vertices();
        let y = x | (ElementSet::from_bits(b) & rel.vertices());
        prop_assert!(rel.image(x).is_subset(rel.image(y)));
        prop_assert_eq!(rel.reverse().reverse(), rel.clone());
        // y ∈ Γ(x) iff x ∈ Γ⁻(y)
        let r = rel.reverse();
        for u in 0..rel.vertex_count() {
            for v in 0..rel.vertex_count() {
                prop_assert_eq!(rel.neighborhood(u).contains(v), r.neighborhood(v).contains(u));
            }
        }
    }

    #[test]
    fn prop_fragments_sorted_and_atoms_extremal(rel in arb_relation()) {
        let b = SearchBudget::default();
        for k in 1..=2 {
            if let Ok(r) = fragment_report(&rel, k, &b) {
                prop_assert!(r.fragments.windows(2).all(|w| w[0] < w[1]));
                prop_assert!(r.atoms.iter().all(|a| r.fragments.contains(a)));
                let lo = r.fragments.iter().map(|f| f.len()).min().unwrap();
                prop_assert!(r.atoms.iter().all(|a| a.len() == lo));
                // atoms share one exterior size
                let ext: Vec<usize> = r.atoms.iter().map(|&a| rel.exterior(a).len()).collect();
                prop_assert!(ext.windows(2).all(|w| w[0] == w[1]));
            }
        }
    }
}

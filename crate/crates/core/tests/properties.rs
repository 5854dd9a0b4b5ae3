use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hygirth::constructions::{fano_plane, grid_hypergraph, random_two_cover, CycleLift};
use hygirth::girth::{berge_girth, berge_girth_oracle, count_cycles, diameter, distance, validate_cycle, Girth};
use hygirth::hypercore::io::{parse_hyg, write_hyg, HygFile};
use hygirth::neg_girth::{minus_k_girth, NegGirth};
use hygirth::Hypergraph;

/// Random hypergraph with distinct non-empty edges on `n` vertices.
fn arb_hypergraph(max_n: usize, max_m: usize, max_r: usize) -> impl Strategy<Value = Hypergraph> {
    (2..=max_n).prop_flat_map(move |n| {
        let edge = proptest::collection::btree_set(0..n, 1..=max_r.min(n));
        proptest::collection::btree_set(edge, 0..=max_m).prop_map(move |edges| {
            Hypergraph::new(n, edges.into_iter().map(|e| e.into_iter().collect::<Vec<_>>())).unwrap()
        })
    })
}

fn arb_triple_system(max_n: usize, max_m: usize) -> impl Strategy<Value = Hypergraph> {
    (3..=max_n).prop_flat_map(move |n| {
        let edge = proptest::collection::btree_set(0..n, 3);
        proptest::collection::btree_set(edge, 1..=max_m).prop_map(move |edges| {
            Hypergraph::new(n, edges.into_iter().map(|e| e.into_iter().collect::<Vec<_>>())).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn girth_matches_oracle(h in arb_hypergraph(9, 9, 4)) {
        let fast = berge_girth(&h, None);
        let slow = berge_girth_oracle(&h, h.n().min(h.m()) + 1, 10_000_000).unwrap();
        prop_assert_eq!(fast.girth, slow.girth);
        if let Some(w) = &fast.witness {
            prop_assert!(validate_cycle(&h, w));
            prop_assert_eq!(Some(w.len()), fast.girth.finite());
        }
    }

    #[test]
    fn capped_girth_is_consistent(h in arb_hypergraph(9, 9, 4), cap in 2usize..7) {
        let full = berge_girth(&h, None).girth;
        let capped = berge_girth(&h, Some(cap)).girth;
        match full {
            Girth::Finite(g) if g < cap => prop_assert_eq!(capped, full),
            Girth::Infinite => prop_assert!(capped == Girth::Infinite || capped == Girth::AtLeast(cap)),
            _ => prop_assert_eq!(capped, Girth::AtLeast(cap)),
        }
    }

    #[test]
    fn girth_is_least_length_with_cycles(h in arb_hypergraph(7, 7, 3)) {
        let first = (2..=7).find(|&l| count_cycles(&h, l).unwrap() > 0);
        prop_assert_eq!(berge_girth(&h, None).girth.finite(), first);
    }

    #[test]
    fn hyg_roundtrip(h in arb_hypergraph(12, 12, 5)) {
        let text = write_hyg(&h);
        prop_assert_eq!(parse_hyg(&text).unwrap(), HygFile::Simple(h));
    }

    #[test]
    fn covers_keep_structure(seed in any::<u64>()) {
        let base = grid_hypergraph(3, 2).unwrap();
        let cover = random_two_cover(&base, &mut ChaCha8Rng::seed_from_u64(seed));
        let c = cover.cover();
        prop_assert!(c.is_linear() && c.is_uniform(3) && c.is_regular(2));
        prop_assert_eq!(c.n(), 18);
        let res = berge_girth(c, None);
        prop_assert!(res.girth.at_least(4));
        if let Some(w) = res.witness {
            prop_assert!(cover.project_witness(&w).is_closed_walk_in(&base));
        }
        let w = berge_girth(&base, None).witness.unwrap();
        match cover.lift_cycle(&w) {
            CycleLift::Split(a, b) => prop_assert!(validate_cycle(c, &a) && validate_cycle(c, &b) && a.len() == 4),
            CycleLift::Single(x) => prop_assert!(validate_cycle(c, &x) && x.len() == 8),
        }
    }

    #[test]
    fn minus_two_girth_detects_nonlinearity(h in arb_triple_system(8, 6)) {
        let res = minus_k_girth(&h, 2, 8).unwrap();
        prop_assert_eq!(res.g == NegGirth::Found(4), !h.is_linear());
    }
}

#[test]
fn distances_are_symmetric_and_bounded() {
    for h in [fano_plane(), grid_hypergraph(4, 2).unwrap(), grid_hypergraph(3, 3).unwrap()] {
        let diam = diameter(&h).unwrap();
        for u in 0..h.n() {
            assert_eq!(distance(&h, u, u), Some(0));
            for v in 0..h.n() {
                let d = distance(&h, u, v).unwrap();
                assert_eq!(Some(d), distance(&h, v, u));
                assert!(d <= diam);
            }
        }
    }
}

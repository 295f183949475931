//! The obstruction-branching enumerator against the subset oracle.

use fracbox_core::completions::{
    all_cointerval_hyperedges, brute_force_completions, enumerate_minimal_completions,
    maximal_hyperedges,
};
use fracbox_core::generate::nonisomorphic_graphs_up_to;
use fracbox_core::graph::{automorphisms, map_edge_set, EdgeSet, Graph};
use fracbox_core::interval::is_cointerval_edge_set;
use fracbox_core::Limits;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn enumerator_matches_oracle_up_to_six_vertices() {
    for g in nonisomorphic_graphs_up_to(6) {
        let fast = enumerate_minimal_completions(&g, 24).unwrap();
        let slow = brute_force_completions(&g, 20).unwrap();
        assert_eq!(fast, slow, "{g:?}");
    }
}

#[test]
fn enumerator_matches_oracle_on_random_seven_vertex_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 25 {
        let n = 7;
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.6) {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        if g.complement().edge_count() > 12 {
            continue;
        }
        assert_eq!(
            enumerate_minimal_completions(&g, 24).unwrap(),
            brute_force_completions(&g, 20).unwrap(),
            "{g:?}"
        );
        checked += 1;
    }
}

#[test]
fn hyperedges_form_a_covering_antichain_of_cointerval_sets() {
    for g in nonisomorphic_graphs_up_to(6) {
        let h = maximal_hyperedges(&g, &Limits::DEFAULT).unwrap();
        let edges = h.hyperedges();
        for &e in edges {
            assert!(is_cointerval_edge_set(h.host(), h.index(), e).unwrap());
        }
        for (i, a) in edges.iter().enumerate() {
            for b in &edges[i + 1..] {
                assert!(!a.is_subset(*b) && !b.is_subset(*a));
            }
        }
        if !h.index().is_empty() {
            assert!(h.covers_all_vertices(), "{g:?}");
        }
        assert!(edges.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn maximal_family_is_the_maximal_part_of_the_full_family() {
    for g in nonisomorphic_graphs_up_to(5) {
        let full = all_cointerval_hyperedges(&g, 10).unwrap();
        let maximal: Vec<EdgeSet> = full
            .hyperedges()
            .iter()
            .copied()
            .filter(|&e| !full.hyperedges().iter().any(|&f| f != e && e.is_subset(f)))
            .collect();
        let h = maximal_hyperedges(&g, &Limits::DEFAULT).unwrap();
        assert_eq!(h.hyperedges(), maximal.as_slice(), "{g:?}");
    }
}

#[test]
fn complement_automorphisms_permute_maximal_hyperedges() {
    for g in nonisomorphic_graphs_up_to(6) {
        let h = maximal_hyperedges(&g, &Limits::DEFAULT).unwrap();
        let aut = automorphisms(h.host(), 10).unwrap();
        for p in &aut {
            let map = p.edge_map(h.index()).unwrap();
            let mut image: Vec<EdgeSet> = h
                .hyperedges()
                .iter()
                .map(|&e| map_edge_set(&map, e))
                .collect();
            image.sort_unstable();
            assert_eq!(image, h.hyperedges(), "{g:?} under {p:?}");
        }
    }
}

#[test]
fn largest_hyperedge_matches_minimum_fill() {
    for g in nonisomorphic_graphs_up_to(6) {
        let fills = brute_force_completions(&g, 20).unwrap();
        let min_fill = fills.iter().map(|f| f.len()).min().unwrap();
        let cedges = g.complement().edge_count();
        let h = maximal_hyperedges(&g, &Limits::DEFAULT).unwrap();
        assert_eq!(h.max_size(), cedges - min_fill, "{g:?}");
    }
}

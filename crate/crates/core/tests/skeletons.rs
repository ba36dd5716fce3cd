use disjoint_matchings::budget::Budget;
use disjoint_matchings::matchings::{self, maximally_intersecting_all, DEFAULT_CAP};
use disjoint_matchings::skeleton::{
    check_skeleton, find_skeleton_decomposition, generate_k_skeleton, generate_spanner,
    skeleton_matchings, spanner_g_prime, verify_skeleton_theorems, Direction, Recognition,
    ViiiReading,
};
use disjoint_matchings::Graph;

fn small_family() -> Vec<Graph> {
    let mut out = Vec::new();
    for k in 1..=2 {
        for seed in 0..8 {
            let g = generate_k_skeleton(k, seed).unwrap().graph;
            if g.n() <= 14 && !out.contains(&g) {
                out.push(g);
            }
        }
    }
    out
}

/// The constructed triple scores as well as the best one an exhaustive
/// search finds, and covers every edge.
#[test]
fn constructed_triple_is_maximally_intersecting() {
    let family = small_family();
    assert!(family.len() >= 3);
    for g in family {
        let Recognition::Found(w) = find_skeleton_decomposition(&g, ViiiReading::PerfectMatching)
        else {
            panic!("generated skeleton not recognised");
        };
        let built = skeleton_matchings(&g, &w).unwrap().triple();
        let search = maximally_intersecting_all(&g, DEFAULT_CAP, &Budget::unlimited()).unwrap();
        let best = search.best().unwrap();
        let score = |s: &matchings::TripleStats| (s.m_meets_union, s.m_meets_h);
        assert_eq!(score(&built.stats), score(&best.stats));
        assert!(search.optima.contains(&built));
        assert_eq!(built.covered(), g.all_edges());
    }
}

#[test]
fn both_readings_accept_the_family() {
    let g = generate_spanner();
    for reading in [ViiiReading::PerfectMatching, ViiiReading::Literal] {
        assert!(check_skeleton(&g, spanner_g_prime(&g), reading)
            .unwrap()
            .passed());
    }
    for g in small_family() {
        let a = find_skeleton_decomposition(&g, ViiiReading::PerfectMatching).k();
        let b = find_skeleton_decomposition(&g, ViiiReading::Literal).k();
        assert_eq!(a, b);
    }
}

#[test]
fn theorems_on_the_family() {
    for k in 1..=3 {
        let g = generate_k_skeleton(k, 0).unwrap().graph;
        let v = verify_skeleton_theorems(&g, ViiiReading::PerfectMatching).unwrap();
        assert_eq!(v.direction_a, Direction::Pass);
        assert_eq!(v.direction_b, Direction::Pass);
        assert_eq!(v.unique_perfect, Direction::Pass);
        assert_eq!((v.k, v.nu - v.mu), (Some(k), k));
    }
}

#[test]
fn non_skeletons_are_rejected() {
    for g in [Graph::path(6), Graph::cycle(8), Graph::complete(4)] {
        assert_eq!(
            find_skeleton_decomposition(&g, ViiiReading::PerfectMatching),
            Recognition::Absent
        );
    }
}

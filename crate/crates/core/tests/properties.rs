use disjoint_matchings::alternating::{maximal_chains, swap_along};
use disjoint_matchings::budget::Budget;
use disjoint_matchings::corpus::{adjacency_key, canonical_form};
use disjoint_matchings::matchings::{
    self, lambda_mu_exhaustive, maximally_intersecting, pair_optimum,
};
use disjoint_matchings::pec::check_pec_identities;
use disjoint_matchings::{parse_edge_list, parse_graph6, to_edge_list, to_graph6, Graph};
use proptest::prelude::*;

fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            Graph::new(n, all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Largest matching by trying every edge subset.
fn brute_nu(g: &Graph) -> usize {
    (0u32..1 << g.m())
        .filter_map(|mask| {
            let mut used = vec![false; g.n()];
            for (i, &(u, v)) in g.edges().iter().enumerate() {
                if mask >> i & 1 == 1 {
                    if used[u] || used[v] {
                        return None;
                    }
                    used[u] = true;
                    used[v] = true;
                }
            }
            Some(mask.count_ones() as usize)
        })
        .max()
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn graph6_round_trip(g in graphs(12)) {
        let text = to_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn blossom_matches_brute_force(g in graphs(7)) {
        let m = matchings::max_matching(&g);
        prop_assert!(m.validate(&g).is_ok());
        prop_assert_eq!(m.len(), brute_nu(&g));
    }

    #[test]
    fn parameters_agree_with_exhaustive_pairs(g in graphs(7)) {
        let fast = pair_optimum(&g);
        let slow = lambda_mu_exhaustive(&g, &Budget::unlimited()).unwrap();
        prop_assert_eq!((fast.lambda, fast.mu), slow);
        prop_assert_eq!(fast.witness.total(), fast.lambda);
        prop_assert_eq!(fast.witness.h.len(), fast.mu);
    }

    #[test]
    fn decomposition_identities(g in graphs(7)) {
        let v = check_pec_identities(&g);
        prop_assert!(v.passed(), "{:?}", v.failures().collect::<Vec<_>>());
    }

    #[test]
    fn swapping_one_chain_keeps_the_total(g in graphs(8)) {
        let pair = pair_optimum(&g).witness;
        for chain in maximal_chains(&g, pair.h.edges(), pair.h_prime.edges()).unwrap() {
            let swapped = swap_along(&pair, &chain);
            prop_assert!(swapped.validate(&g).is_ok());
            prop_assert_eq!(swapped.total(), pair.total());
        }
    }

    #[test]
    fn optimal_triple_is_consistent(g in graphs(7)) {
        let t = maximally_intersecting(&g).unwrap();
        let p = matchings::param_report(&g);
        prop_assert!(t.stats_consistent());
        prop_assert_eq!(t.m.len(), p.nu);
        prop_assert_eq!(t.pair.total(), p.lambda);
        prop_assert_eq!(t.pair.h.len(), p.mu);
        prop_assert!(p.invariants_hold());
    }

    #[test]
    fn canonical_form_ignores_labels(g in graphs(8), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let a = adjacency_key(&canonical_form(&g));
        let b = adjacency_key(&canonical_form(&g.permuted(&perm)));
        prop_assert_eq!(a, b);
    }
}

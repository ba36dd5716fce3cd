//! The leaf conjecture for bipartite graphs with `mu < nu` fails on a
//! 12-vertex unicyclic graph. Confirmed here by enumerating every matching.

use disjoint_matchings::alternating::conjecture_scan;
use disjoint_matchings::{parse_graph6, Graph};

const COUNTEREXAMPLE: &str = "KpOK?D?@??_E";

fn matchings(g: &Graph) -> Vec<u32> {
    (0u32..1 << g.m())
        .filter(|&mask| {
            let mut used = vec![false; g.n()];
            g.edges().iter().enumerate().all(|(i, &(u, v))| {
                if mask >> i & 1 == 0 {
                    return true;
                }
                let free = !used[u] && !used[v];
                used[u] = true;
                used[v] = true;
                free
            })
        })
        .collect()
}

/// Vertices of degree 1 in the edge set `mask`.
fn ends(g: &Graph, mask: u32) -> Vec<usize> {
    let mut deg = vec![0; g.n()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if mask >> i & 1 == 1 {
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    (0..g.n()).filter(|&v| deg[v] == 1).collect()
}

#[test]
fn brute_force_counterexample() {
    let g = parse_graph6(COUNTEREXAMPLE).unwrap();
    assert!(g.is_connected() && g.is_bipartite());
    let all = matchings(&g);
    let size = |m: u32| m.count_ones() as usize;
    let nu = all.iter().map(|&m| size(m)).max().unwrap();
    let pairs: Vec<(u32, u32)> = all
        .iter()
        .flat_map(|&h| {
            all.iter()
                .filter(move |&&hp| h & hp == 0)
                .map(move |&hp| (h, hp))
        })
        .collect();
    let lambda = pairs
        .iter()
        .map(|&(h, hp)| size(h) + size(hp))
        .max()
        .unwrap();
    let mu = pairs
        .iter()
        .filter(|&&(h, hp)| size(h) + size(hp) == lambda)
        .map(|&(h, _)| size(h))
        .max()
        .unwrap();
    assert_eq!((nu, lambda, mu), (6, 10, 5));

    let best: Vec<(u32, u32)> = pairs
        .iter()
        .copied()
        .filter(|&(h, hp)| size(h) + size(hp) == lambda && size(h) == mu)
        .collect();
    let maximum: Vec<u32> = all.iter().copied().filter(|&m| size(m) == nu).collect();
    let score = |m: u32, h: u32, hp: u32| (size(m & (h | hp)), size(m & h));
    let top = maximum
        .iter()
        .flat_map(|&m| best.iter().map(move |&(h, hp)| score(m, h, hp)))
        .max()
        .unwrap();
    let mut triples = 0;
    for &m in &maximum {
        for &(h, hp) in &best {
            if score(m, h, hp) != top {
                continue;
            }
            triples += 1;
            let non_leaf = ends(&g, m ^ h).into_iter().any(|v| g.degree(v) > 1);
            assert!(
                non_leaf,
                "every optimal triple has an M-H path ending at a non-leaf"
            );
        }
    }
    assert_eq!(triples, 4);

    let record = conjecture_scan(&g).unwrap();
    assert!(record.applicable);
    assert!(!record.holds);
    let w = record.witness.unwrap();
    assert!(g.degree(w.non_leaf) > 1);
}

#[test]
fn spanner_satisfies_the_conjecture() {
    let g = disjoint_matchings::generate_spanner();
    let record = conjecture_scan(&g).unwrap();
    assert!(record.applicable && record.holds);
}

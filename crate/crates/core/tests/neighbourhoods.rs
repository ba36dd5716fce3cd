//! The two neighbourhood lemmas for optimal pairs, against a brute-force
//! oracle that shares no code with the crate's pair search or chain walker.
//!
//! Both statements fail on small graphs. These tests pin the counterexamples
//! and the weaker forms that do hold.

use disjoint_matchings::alternating::check_section6;
use disjoint_matchings::corpus::all_connected_up_to;
use disjoint_matchings::{parse_graph6, DisjointPair, EdgeSet, Graph, Matching};

/// Every pair of disjoint matchings as `(H, H')` edge-index lists.
fn all_pairs(g: &Graph) -> Vec<(Vec<usize>, Vec<usize>)> {
    fn rec(
        g: &Graph,
        i: usize,
        used: &mut [[bool; 2]],
        side: &mut Vec<u8>,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
    ) {
        if i == g.m() {
            let pick = |s| (0..g.m()).filter(|&e| side[e] == s).collect::<Vec<_>>();
            out.push((pick(1), pick(2)));
            return;
        }
        let (u, v) = g.edges()[i];
        for s in 0..3u8 {
            if s > 0 {
                let k = s as usize - 1;
                if used[u][k] || used[v][k] {
                    continue;
                }
                used[u][k] = true;
                used[v][k] = true;
            }
            side.push(s);
            rec(g, i + 1, used, side, out);
            side.pop();
            if s > 0 {
                let k = s as usize - 1;
                used[u][k] = false;
                used[v][k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(
        g,
        0,
        &mut vec![[false; 2]; g.n()],
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Pairs with the largest total and, among those, the largest `|H|`.
fn optimal_pairs(g: &Graph) -> Vec<(Vec<usize>, Vec<usize>)> {
    let pairs = all_pairs(g);
    let best = pairs
        .iter()
        .map(|(h, hp)| (h.len() + hp.len(), h.len()))
        .max()
        .unwrap();
    pairs
        .into_iter()
        .filter(|(h, hp)| (h.len() + hp.len(), h.len()) == best)
        .collect()
}

/// Components of `H ∪ H'` that are paths with at least one edge, as vertex
/// sequences.
fn paths(g: &Graph, union: &[usize]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n()];
    for &e in union {
        let (u, v) = g.edges()[e];
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] || adj[s].len() != 1 {
            continue;
        }
        let mut walk = vec![s];
        seen[s] = true;
        let mut cur = s;
        while let Some(&next) = adj[cur].iter().find(|&&w| !seen[w]) {
            seen[next] = true;
            walk.push(next);
            cur = next;
        }
        out.push(walk);
    }
    out
}

fn pair(g: &Graph, h: &[usize], hp: &[usize]) -> DisjointPair {
    let set = |es: &[usize]| {
        es.iter()
            .fold(EdgeSet::EMPTY, |s, &e| s | EdgeSet::singleton(e))
    };
    DisjointPair::new(
        Matching::new(g, set(h)).unwrap(),
        Matching::new(g, set(hp)).unwrap(),
    )
    .unwrap()
}

fn unsaturated(g: &Graph, union: &[usize], v: usize) -> bool {
    let d = union
        .iter()
        .filter(|&&e| g.edges()[e].0 == v || g.edges()[e].1 == v)
        .count();
    d < g.degree(v).min(2)
}

#[test]
fn adjacent_unsaturated_ends_of_a_lone_edge() {
    let g = parse_graph6("D@{").unwrap();
    let mut found = false;
    for (h, hp) in optimal_pairs(&g) {
        let union: Vec<usize> = h.iter().chain(&hp).copied().collect();
        for p in paths(&g, &union) {
            let (u, v) = (p[0], p[1]);
            if p.len() == 2 && unsaturated(&g, &union, u) && unsaturated(&g, &union, v) {
                found = true;
                let verdict = check_section6(&g, &pair(&g, &h, &hp)).unwrap();
                assert!(!verdict.clause("6.1").unwrap().pass);
            }
        }
    }
    assert!(
        found,
        "no optimal pair with a lone edge between unsaturated vertices"
    );
}

#[test]
fn even_end_adjacent_to_inner_vertex_of_odd_path() {
    let g = parse_graph6("F?D|o").unwrap();
    let e = |u, v| g.edge_index(u, v).unwrap();
    let h = vec![e(0, 6), e(1, 5), e(3, 4)];
    let hp = vec![e(2, 5), e(3, 6)];
    assert!(optimal_pairs(&g).iter().any(|(a, b)| {
        let mut a = a.clone();
        let mut b = b.clone();
        a.sort_unstable();
        b.sort_unstable();
        let mut h = h.clone();
        let mut hp = hp.clone();
        h.sort_unstable();
        hp.sort_unstable();
        (a, b) == (h, hp)
    }));
    let union: Vec<usize> = h.iter().chain(&hp).copied().collect();
    let mut ps = paths(&g, &union);
    ps.iter_mut().for_each(|p| {
        if p[0] > p[p.len() - 1] {
            p.reverse()
        }
    });
    ps.sort();
    assert_eq!(ps, vec![vec![0, 6, 3, 4], vec![1, 5, 2]]);
    assert!(g.has_edge(2, 6));
    let verdict = check_section6(&g, &pair(&g, &h, &hp)).unwrap();
    assert!(verdict.clause("6.1").unwrap().pass);
    assert!(!verdict.clause("6.2").unwrap().pass);
}

#[test]
fn even_end_adjacent_to_its_own_inner_vertices() {
    let g = Graph::complete(7);
    let (h, hp) = optimal_pairs(&g)
        .into_iter()
        .find(|(h, hp)| {
            let union: Vec<usize> = h.iter().chain(hp).copied().collect();
            paths(&g, &union).iter().any(|p| p.len() == 7)
        })
        .expect("a Hamiltonian path pair is optimal in K7");
    let verdict = check_section6(&g, &pair(&g, &h, &hp)).unwrap();
    assert!(!verdict.clause("6.2").unwrap().pass);
}

/// Restricted to edges outside `H ∪ H'`, the first lemma holds; restricted
/// to two distinct even paths, so does the second.
#[test]
fn weaker_forms_hold_on_small_graphs() {
    for g in all_connected_up_to(6).unwrap() {
        for (h, hp) in optimal_pairs(&g) {
            let union: Vec<usize> = h.iter().chain(&hp).copied().collect();
            let ps = paths(&g, &union);
            let owner = |v: usize| ps.iter().position(|p| p.contains(&v));
            for (i, &(u, v)) in g.edges().iter().enumerate() {
                if union.contains(&i) || !unsaturated(&g, &union, u) || !unsaturated(&g, &union, v)
                {
                    continue;
                }
                let same_even = matches!((owner(u), owner(v)), (Some(a), Some(b)) if a == b && ps[a].len() % 2 == 1);
                assert!(same_even, "{g:?}: {u} {v}");
            }
            for p in ps.iter().filter(|p| p.len() % 2 == 1) {
                for u in [p[0], p[p.len() - 1]] {
                    for q in ps
                        .iter()
                        .filter(|q| q.len() % 2 == 1 && !std::ptr::eq(*q, p))
                    {
                        for pos in (2..q.len() - 2).step_by(2) {
                            assert!(!g.has_edge(u, q[pos]), "{g:?}: {u} {}", q[pos]);
                        }
                    }
                }
            }
        }
    }
}

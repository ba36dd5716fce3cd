//! Graph corpora: every connected graph up to isomorphism for small orders,
//! and seeded random graphs.
//!
//! The canonical form is the lexicographically least adjacency string (in
//! graph6 bit order) over the vertex orders that list colour-refinement
//! classes in their invariant order. Restricting to those orders keeps the
//! form an isomorphism invariant while pruning most permutations.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest order accepted by [`all_connected`].
pub const MAX_EXHAUSTIVE_N: usize = 8;

/// Iterated degree refinement. Returns each vertex's final colour; colours
/// are ranks of isomorphism-invariant signatures.
pub fn refine_colours(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> =
                    g.neighbors(v).iter().map(|&(w, _)| colour[w]).collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> = {
            let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
            sorted.sort();
            sorted.dedup();
            sorted
                .into_iter()
                .enumerate()
                .map(|(i, s)| (s, i))
                .collect()
        };
        let next: Vec<usize> = sigs.iter().map(|s| ranks[s]).collect();
        let classes = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

/// The canonical relabelling `order`: `order[i]` is the vertex placed at
/// position `i`.
pub fn canonical_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let colour = refine_colours(g);
    let mut cell_of_pos: Vec<usize> = colour.clone();
    cell_of_pos.sort_unstable();

    struct Search<'a> {
        g: &'a Graph,
        colour: Vec<usize>,
        cell_of_pos: Vec<usize>,
        order: Vec<Vertex>,
        used: Vec<bool>,
        best: Option<(Vec<u64>, Vec<Vertex>)>,
        cols: Vec<u64>,
    }

    impl Search<'_> {
        fn column(&self, v: Vertex) -> u64 {
            self.order.iter().enumerate().fold(0u64, |acc, (i, &u)| {
                acc | (self.g.has_edge(u, v) as u64) << (63 - i)
            })
        }

        fn rec(&mut self, pos: usize) {
            let n = self.g.n();
            if pos == n {
                let better = match &self.best {
                    Some((best_cols, _)) => self.cols < *best_cols,
                    None => true,
                };
                if better {
                    self.best = Some((self.cols.clone(), self.order.clone()));
                }
                return;
            }
            let cell = self.cell_of_pos[pos];
            for v in 0..n {
                if self.used[v] || self.colour[v] != cell {
                    continue;
                }
                self.cols.push(self.column(v));
                let worse = match &self.best {
                    Some((best_cols, _)) => self.cols[..] > best_cols[..=pos],
                    None => false,
                };
                if !worse {
                    self.used[v] = true;
                    self.order.push(v);
                    self.rec(pos + 1);
                    self.order.pop();
                    self.used[v] = false;
                }
                self.cols.pop();
            }
        }
    }

    assert!(n <= 64, "canonical form supports at most 64 vertices");
    let mut s = Search {
        g,
        colour,
        cell_of_pos,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
        cols: Vec::with_capacity(n),
    };
    s.rec(0);
    s.best.map(|(_, order)| order).unwrap_or_default()
}

/// The canonical representative: `g` relabelled by [`canonical_order`].
pub fn canonical_form(g: &Graph) -> Graph {
    let order = canonical_order(g);
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.permuted(&perm)
}

/// Adjacency bits in graph6 order packed into an integer (`n <= 11`).
pub fn adjacency_key(g: &Graph) -> u64 {
    assert!(g.n() <= 11, "adjacency key holds at most 55 bits");
    let mut key = 0u64;
    for j in 1..g.n() {
        for i in 0..j {
            key = key << 1 | g.has_edge(i, j) as u64;
        }
    }
    key
}

/// Every connected graph on exactly `n` vertices, one per isomorphism
/// class, in canonical form sorted by adjacency string.
///
/// Built by adding a vertex to each connected graph on `n - 1` vertices:
/// every connected graph has a vertex whose removal leaves it connected.
pub fn all_connected(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::InvalidParameter(format!(
            "exhaustive generation is limited to n <= {MAX_EXHAUSTIVE_N}"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 1u32..1 << (size - 1) {
                let extra = (0..size - 1)
                    .filter(|&v| mask >> v & 1 == 1)
                    .map(|v| (v, size - 1));
                let h =
                    Graph::new(size, g.edges().iter().copied().chain(extra)).expect("simple graph");
                let c = canonical_form(&h);
                if seen.insert(adjacency_key(&c)) {
                    next.push(c);
                }
            }
        }
        next.sort_by_key(adjacency_key);
        level = next;
    }
    Ok(level)
}

/// Connected graphs on `1..=n` vertices, smallest order first.
pub fn all_connected_up_to(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(all_connected(k)?);
    }
    Ok(out)
}

/// `count` samples of `G(n, p)`. Deterministic for a given seed.
pub fn random_graphs(n: usize, p: f64, count: usize, seed: u64) -> Result<Vec<Graph>> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if rng.gen_bool(p) {
                        edges.push((i, j));
                    }
                }
            }
            Graph::new(n, edges)
        })
        .collect()
}

/// Random bipartite graphs with sides `0..n/2` and `n/2..n`, each cross
/// pair an edge with probability `p`.
pub fn random_bipartite(n: usize, p: f64, count: usize, seed: u64) -> Result<Vec<Graph>> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let half = n / 2;
    (0..count)
        .map(|_| {
            let mut edges = Vec::new();
            for i in 0..half {
                for j in half..n {
                    if rng.gen_bool(p) {
                        edges.push((i, j));
                    }
                }
            }
            Graph::new(n, edges)
        })
        .collect()
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Lexicographically least adjacency key over all permutations.
    fn brute_key(g: &Graph) -> u64 {
        fn rec(g: &Graph, perm: &mut Vec<usize>, used: &mut Vec<bool>, best: &mut u64) {
            if perm.len() == g.n() {
                let mut inv = vec![0; g.n()];
                for (pos, &v) in perm.iter().enumerate() {
                    inv[v] = pos;
                }
                *best = (*best).min(adjacency_key(&g.permuted(&inv)));
                return;
            }
            for v in 0..g.n() {
                if !used[v] {
                    used[v] = true;
                    perm.push(v);
                    rec(g, perm, used, best);
                    perm.pop();
                    used[v] = false;
                }
            }
        }
        let mut best = u64::MAX;
        rec(g, &mut Vec::new(), &mut vec![false; g.n()], &mut best);
        best
    }

    /// Connected graphs on `n` vertices counted through the brute-force key.
    fn brute_count(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut seen = HashSet::new();
        for mask in 0u64..1 << pairs.len() {
            let g = Graph::new(
                n,
                (0..pairs.len())
                    .filter(|&b| mask >> b & 1 == 1)
                    .map(|b| pairs[b]),
            )
            .unwrap();
            if g.is_connected() {
                seen.insert(brute_key(&g));
            }
        }
        seen.len()
    }

    #[test]
    fn counts_match_brute_force() {
        for n in 1..=5 {
            assert_eq!(all_connected(n).unwrap().len(), brute_count(n), "n = {n}");
        }
    }

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| all_connected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn canonical_form_is_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in random_graphs(8, 0.4, 40, 3).unwrap() {
            let key = adjacency_key(&canonical_form(&g));
            let mut perm: Vec<usize> = (0..8).collect();
            for i in (1..8).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            assert_eq!(adjacency_key(&canonical_form(&g.permuted(&perm))), key);
        }
    }

    #[test]
    fn random_is_seeded() {
        assert_eq!(
            random_graphs(6, 0.5, 5, 1).unwrap(),
            random_graphs(6, 0.5, 5, 1).unwrap()
        );
        assert_ne!(
            random_graphs(6, 0.5, 5, 1).unwrap(),
            random_graphs(6, 0.5, 5, 2).unwrap()
        );
        for g in random_bipartite(7, 0.5, 10, 4).unwrap() {
            assert!(g.is_bipartite());
        }
        assert!(random_graphs(4, 1.5, 1, 0).is_err());
    }
}

//! Search bipartite graphs for a maximally intersecting triple whose `M`-`H`
//! paths end somewhere other than at a leaf.
//!
//! Graphs with `mu < nu` are sparse and tree-like, and uniform random graphs
//! almost never qualify, so this samples random trees and adds a few edges
//! between the two colour classes.
//!
//! ```text
//! cargo run --release --example conjecture -- 14 2 3000 1   # n, extra edges, count, seed
//! ```

use disjoint_matchings::report::{conjecture_lines, ConjectureSummary, Options};
use disjoint_matchings::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn near_tree(n: usize, extra: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut side = vec![false; n];
    for &(u, v) in &edges {
        side[v] = !side[u];
    }
    for _ in 0..extra * 4 {
        if edges.len() == n - 1 + extra {
            break;
        }
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let e = (u.min(v), u.max(v));
        if side[u] != side[v] && !edges.contains(&e) && !edges.contains(&(e.1, e.0)) {
            edges.push(e);
        }
    }
    Graph::new(n, edges).expect("simple graph")
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: &str| args.get(i).cloned().unwrap_or_else(|| default.to_string());
    let n: usize = arg(0, "12").parse().expect("n");
    let extra: usize = arg(1, "1").parse().expect("extra edges");
    let count: usize = arg(2, "2000").parse().expect("count");
    let seed: u64 = arg(3, "1").parse().expect("seed");

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs: Vec<Graph> = (0..count).map(|_| near_tree(n, extra, &mut rng)).collect();
    let opts = Options {
        jobs: std::thread::available_parallelism().map_or(1, |p| p.get()),
        ..Options::default()
    };
    let lines = conjecture_lines(&graphs, &opts).expect("thread pool");
    let s = ConjectureSummary::of(&lines);
    println!(
        "{} graphs, {} applicable, {} hold, {} violations",
        s.graphs, s.applicable, s.holds, s.violations
    );
    for l in lines.iter().filter(|l| l.record.applicable).take(10) {
        let k = l.record.triples_examined;
        if l.record.holds {
            println!("  {} holds over all {k} optimal triples", l.graph6);
        } else {
            println!("  {} VIOLATED by optimal triple #{k}", l.graph6);
        }
        if let Some(w) = &l.record.witness {
            println!(
                "    path {:?} ends at non-leaf {}",
                w.chain.vertices, w.non_leaf
            );
        }
    }
}

//! Build a `k`-skeleton, recognise it again from the bare graph, and derive
//! the matchings that cover it.
//!
//! ```text
//! cargo run --example skeletons -- 2 5      # k = 2, seed 5
//! ```

use disjoint_matchings::matchings::param_report;
use disjoint_matchings::skeleton::{
    find_skeleton_decomposition, generate_k_skeleton, skeleton_matchings, Recognition, ViiiReading,
};
use disjoint_matchings::to_graph6;

fn main() {
    let mut args = std::env::args().skip(1);
    let k: usize = args.next().map_or(2, |s| s.parse().expect("k is a number"));
    let seed: u64 = args
        .next()
        .map_or(0, |s| s.parse().expect("seed is a number"));

    let built = generate_k_skeleton(k, seed).expect("k >= 1");
    let g = &built.graph;
    println!("{}-skeleton, seed {seed}: n = {}, m = {}", k, g.n(), g.m());
    println!("graph6 {}", to_graph6(g));
    println!("{}", built.witness);

    let Recognition::Found(w) = find_skeleton_decomposition(g, ViiiReading::PerfectMatching) else {
        panic!("a generated skeleton must be recognised");
    };
    println!(
        "recognised with k = {} from {} leaf-to-leaf paths",
        w.k,
        w.paths.len()
    );

    let p = param_report(g);
    println!("nu - mu = {} - {} = {}", p.nu, p.mu, p.nu - p.mu);

    let t = skeleton_matchings(g, &w).expect("witness passed every condition");
    println!("M  = {:?}", g.edge_pairs(t.m.edges()));
    println!("H  = {:?}", g.edge_pairs(t.h.edges()));
    println!("H' = {:?}", g.edge_pairs(t.h_prime.edges()));
    let covered = t.triple().covered() == g.all_edges();
    println!("M, H and H' cover every edge: {covered}");
}

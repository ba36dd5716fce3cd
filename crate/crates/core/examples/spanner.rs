//! The smallest graph whose largest "good" matching pair falls short of a
//! maximum matching: a 10-vertex tree with `nu = 5` but `mu = 4`.
//!
//! ```text
//! cargo run --example spanner
//! cargo run --example spanner -- --dot | dot -Tsvg > spanner.svg
//! ```

use disjoint_matchings::matchings::{enumerate_maximum_matchings, is_saturated, param_report};
use disjoint_matchings::pec::pec_minima;
use disjoint_matchings::skeleton::{find_skeleton_decomposition, generate_spanner, ViiiReading};
use disjoint_matchings::to_graph6;

fn main() {
    let g = generate_spanner();
    let p = param_report(&g);

    if std::env::args().any(|a| a == "--dot") {
        print!("{}", g.to_dot_highlighted(p.max_matching.edges()));
        return;
    }

    println!("graph6      {}", to_graph6(&g));
    println!("edges       {:?}", g.edges());
    println!("nu          {}", p.nu);
    println!("lambda      {}", p.lambda);
    println!("mu, mu'     {}, {}", p.mu, p.mu_prime);
    println!("mu / nu     {}", p.ratio);

    let minima = pec_minima(&g);
    println!("p, e, e_p   {}, {}, {}", minima.p, minima.e, minima.ep);

    let all = enumerate_maximum_matchings(&g, 8);
    println!("maximum matchings: {}", all.items.len());
    println!("  M  = {:?}", g.edge_pairs(p.max_matching.edges()));
    println!("best pair");
    println!("  H  = {:?}", g.edge_pairs(p.pair.h.edges()));
    println!("  H' = {:?}", g.edge_pairs(p.pair.h_prime.edges()));

    let sat = is_saturated(&g).expect("tiny graph");
    println!("saturated: {}", sat.saturated);
    if let Some(w) = find_skeleton_decomposition(&g, ViiiReading::PerfectMatching).witness() {
        println!("{w}");
    }
}

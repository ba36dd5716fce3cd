//! `nu`, `lambda` and `mu` of any graph given as graph6, with witnesses and
//! a check against plain enumeration of all matching pairs.
//!
//! ```text
//! cargo run --example parameters -- 'IheA@GUAo'      # Petersen graph
//! ```

use disjoint_matchings::budget::Budget;
use disjoint_matchings::matchings::{lambda_mu_exhaustive, param_report_with};
use disjoint_matchings::parse_graph6;

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "IheA@GUAo".to_string());
    let g = match parse_graph6(&text) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("bad graph6 {text:?}: {e}");
            std::process::exit(2);
        }
    };
    println!("n = {}, m = {}", g.n(), g.m());

    // cap the search so a large input fails fast instead of running for hours
    let budget = Budget::time(std::time::Duration::from_secs(30));
    let p = match param_report_with(&g, &budget) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("gave up: {e}");
            std::process::exit(1);
        }
    };
    println!(
        "nu = {}  lambda = {}  mu = {}  mu' = {}  ratio = {}",
        p.nu, p.lambda, p.mu, p.mu_prime, p.ratio
    );
    println!("M  = {:?}", g.edge_pairs(p.max_matching.edges()));
    println!("H  = {:?}", g.edge_pairs(p.pair.h.edges()));
    println!("H' = {:?}", g.edge_pairs(p.pair.h_prime.edges()));

    if g.m() <= 24 {
        let (lambda, mu) = lambda_mu_exhaustive(&g, &Budget::unlimited()).expect("unlimited");
        println!("exhaustive: lambda = {lambda}, mu = {mu}");
        assert_eq!((lambda, mu), (p.lambda, p.mu));
    }
}

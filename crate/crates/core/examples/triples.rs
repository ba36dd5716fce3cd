//! Maximally intersecting triples `(M, H, H')` and the alternating chains
//! they form, with the structural checks run on each chain.
//!
//! ```text
//! cargo run --example triples -- 'IhCH?CO?G'
//! ```

use disjoint_matchings::alternating::{check_hh_lemma, check_mh_lemma, maximal_chains};
use disjoint_matchings::matchings::{maximally_intersecting_all, DEFAULT_CAP};
use disjoint_matchings::{parse_graph6, Budget, Graph};

fn show_chains(
    g: &Graph,
    label: &str,
    a: disjoint_matchings::EdgeSet,
    b: disjoint_matchings::EdgeSet,
) {
    for ch in maximal_chains(g, a, b).expect("both sides are matchings") {
        let kind = if ch.is_path() { "path" } else { "cycle" };
        println!("  {label} {kind:5} length {}  {:?}", ch.len(), ch.vertices);
    }
}

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "IhCH?CO?G".to_string());
    let g = parse_graph6(&text).expect("valid graph6");
    let search = maximally_intersecting_all(&g, DEFAULT_CAP, &Budget::unlimited())
        .expect("unlimited budget");
    println!(
        "{} optimal triples out of {} examined",
        search.optima.len(),
        search.examined
    );

    for (i, t) in search.optima.iter().enumerate().take(4) {
        println!("triple {i}: {:?}", t.stats);
        println!("  M  = {:?}", g.edge_pairs(t.m.edges()));
        println!("  H  = {:?}", g.edge_pairs(t.h()));
        println!("  H' = {:?}", g.edge_pairs(t.h_prime()));
        show_chains(&g, "M-H ", t.m.edges(), t.h());
        show_chains(&g, "H-H'", t.h(), t.h_prime());
        for verdict in [
            check_mh_lemma(&g, t).unwrap(),
            check_hh_lemma(&g, t).unwrap(),
        ] {
            for c in &verdict.clauses {
                print!("  {}:{}", c.id, if c.pass { "ok" } else { "FAIL" });
            }
            println!();
        }
    }
}

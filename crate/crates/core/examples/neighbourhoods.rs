//! Which vertices can be adjacent given an optimal pair `(H, H')`: the two
//! neighbourhood checks on a few graphs where they fail, with the reason.

use disjoint_matchings::alternating::section6_verdicts;
use disjoint_matchings::parse_graph6;

fn main() {
    for text in ["D@{", "F?D|o", "F~~~w", "IhCH?CO?G"] {
        let g = parse_graph6(text).expect("valid graph6");
        let verdicts = section6_verdicts(&g).expect("small graph");
        println!("{text}: {} optimal pairs", verdicts.len());
        for (pair, v) in verdicts.iter().filter(|(_, v)| !v.passed()).take(2) {
            println!(
                "  H = {:?}  H' = {:?}",
                g.edge_pairs(pair.h.edges()),
                g.edge_pairs(pair.h_prime.edges())
            );
            for c in v.failures() {
                println!("    {}: {}", c.id, c.detail.as_deref().unwrap_or(""));
            }
        }
    }
}

//! Spanning subgraphs made of paths and even cycles, and how their minimal
//! counts determine the matching parameters.

use disjoint_matchings::matchings::max_matching;
use disjoint_matchings::pec::{
    check_pec_identities, count_pec, enumerate_pec, pec_from_matching, pec_minima,
};
use disjoint_matchings::{Budget, Graph};

fn main() {
    let c4 = Graph::cycle(4);
    let all = enumerate_pec(&c4, 64);
    println!("C4 has {} decompositions:", all.decompositions.len());
    for d in &all.decompositions {
        println!("  {:?}", c4.edge_pairs(d.edges));
    }

    for (name, g) in [
        ("P5", Graph::path(5)),
        ("C5", Graph::cycle(5)),
        ("K4", Graph::complete(4)),
        (
            "Petersen",
            disjoint_matchings::parse_graph6("IheA@GUAo").unwrap(),
        ),
    ] {
        let m = pec_minima(&g);
        let count = count_pec(&g, &Budget::unlimited()).unwrap();
        println!(
            "{name:9} decompositions {count:>6}  p = {}  e = {}  e_p = {}",
            m.p, m.e, m.ep
        );
        let v = check_pec_identities(&g);
        for c in &v.checks {
            println!("          {:<28} {} = {}", c.name, c.lhs, c.rhs);
        }
    }

    // a maximum matching read as a decomposition: matched edges plus isolated vertices
    let g = Graph::path(5);
    let d = pec_from_matching(&g, &max_matching(&g)).unwrap();
    println!(
        "P5 from a maximum matching: {:?}, {} even paths",
        g.edge_pairs(d.edges),
        d.e
    );
}

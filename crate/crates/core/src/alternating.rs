//! Alternating chains and checkers for the structural lemmas about
//! maximally intersecting triples and `Lambda_mu` pairs.
//!
//! The checkers read the raw edge sets of the triple or pair they are given
//! and never consult solver internals, so they double as oracles for the
//! solvers.

use serde::Serialize;

use crate::budget::Budget;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::matchings::{self, DisjointPair, MatchingTriple, PairOptimum, TripleSearch};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainKind {
    Path,
    Cycle,
}

/// Which of the two sets an alternating edge comes from: `A \ B` or `B \ A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    A,
    B,
}

/// A maximal alternating path or cycle.
///
/// Paths start at their smaller endpoint. Cycles start at their smallest
/// vertex and continue towards its smaller neighbour on the cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AlternatingChain {
    pub kind: ChainKind,
    pub vertices: Vec<Vertex>,
    /// Edge indices in walk order; a cycle's closing edge comes last.
    pub edges: Vec<usize>,
    pub edge_labels: Vec<Side>,
}

impl AlternatingChain {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.edges.len() % 2 == 1
    }

    pub fn is_path(&self) -> bool {
        self.kind == ChainKind::Path
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges.iter().copied().collect()
    }

    /// The two end-edges of a path (one edge for length-1 paths).
    pub fn end_edges(&self) -> Vec<usize> {
        match (self.kind, self.edges.as_slice()) {
            (ChainKind::Cycle, _) | (_, []) => Vec::new(),
            (_, [only]) => vec![*only],
            (_, [first, .., last]) => vec![*first, *last],
        }
    }

    pub fn end_vertices(&self) -> Vec<Vertex> {
        match self.kind {
            ChainKind::Cycle => Vec::new(),
            ChainKind::Path => vec![self.vertices[0], *self.vertices.last().expect("nonempty")],
        }
    }

    pub fn inner_vertices(&self) -> &[Vertex] {
        match self.kind {
            ChainKind::Cycle => &self.vertices,
            ChainKind::Path if self.vertices.len() <= 2 => &[],
            ChainKind::Path => &self.vertices[1..self.vertices.len() - 1],
        }
    }
}

fn canonical_cycle(mut walk: Vec<Vertex>) -> Vec<Vertex> {
    let start = (0..walk.len())
        .min_by_key(|&i| walk[i])
        .expect("nonempty cycle");
    walk.rotate_left(start);
    if walk.len() > 2 && walk[walk.len() - 1] < walk[1] {
        walk[1..].reverse();
    }
    walk
}

/// The maximal `A, B` alternating chains: the components of
/// `(A \ B) ∪ (B \ A)`, sorted by vertex sequence.
///
/// Alternation is only well defined when `A \ B` and `B \ A` are matchings;
/// otherwise [`Error::NotAMatching`] is returned.
pub fn maximal_chains(g: &Graph, a: EdgeSet, b: EdgeSet) -> Result<Vec<AlternatingChain>> {
    g.check_subset(a)?;
    g.check_subset(b)?;
    let only_a = a - b;
    let only_b = b - a;
    g.check_matching(only_a)?;
    g.check_matching(only_b)?;
    let census = g.census(only_a | only_b);
    let label = |i: usize| if only_a.contains(i) { Side::A } else { Side::B };
    let build = |kind: ChainKind, vertices: Vec<Vertex>| {
        let mut edges: Vec<usize> = vertices
            .windows(2)
            .map(|w| g.edge_index(w[0], w[1]).expect("chain edge"))
            .collect();
        if kind == ChainKind::Cycle {
            edges.push(
                g.edge_index(vertices[vertices.len() - 1], vertices[0])
                    .expect("closing edge"),
            );
        }
        let edge_labels = edges.iter().map(|&i| label(i)).collect();
        AlternatingChain {
            kind,
            vertices,
            edges,
            edge_labels,
        }
    };
    let mut chains: Vec<AlternatingChain> = census
        .paths
        .into_iter()
        .filter(|p| p.len() > 1)
        .map(|mut p| {
            if p[p.len() - 1] < p[0] {
                p.reverse();
            }
            build(ChainKind::Path, p)
        })
        .chain(
            census
                .cycles
                .into_iter()
                .map(|c| build(ChainKind::Cycle, canonical_cycle(c))),
        )
        .collect();
    chains.sort_by(|x, y| x.vertices.cmp(&y.vertices));
    Ok(chains)
}

/// Per-vertex `(H, H')` saturation: the degree in `H ∪ H'` equals
/// `min(2, deg_G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationMap {
    pub saturated: Vec<bool>,
}

impl SaturationMap {
    pub fn all_saturated(&self) -> bool {
        self.saturated.iter().all(|&s| s)
    }

    pub fn unsaturated(&self) -> Vec<Vertex> {
        (0..self.saturated.len())
            .filter(|&v| !self.saturated[v])
            .collect()
    }
}

pub fn saturation(g: &Graph, pair: &DisjointPair) -> SaturationMap {
    let union = pair.union();
    SaturationMap {
        saturated: (0..g.n())
            .map(|v| g.degree_in(union, v) == g.degree(v).min(2))
            .collect(),
    }
}

/// One lemma clause with the first counterexample found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Clause {
    pub id: &'static str,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<AlternatingChain>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Clause {
    fn new(id: &'static str) -> Self {
        Clause {
            id,
            pass: true,
            chain: None,
            detail: None,
        }
    }

    fn fail(&mut self, chain: Option<&AlternatingChain>, detail: String) {
        if self.pass {
            self.pass = false;
            self.chain = chain.cloned();
            self.detail = Some(detail);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaVerdict {
    pub clauses: Vec<Clause>,
}

impl LemmaVerdict {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.pass)
    }

    pub fn clause(&self, id: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.id == id)
    }
}

/// Checks the three clauses about maximal `M`-`H` chains:
/// (a) they are odd paths with end-edges in `M`; (b) their end-edges lie in
/// `H'`; (c) all their vertices touch `H'`.
pub fn check_mh_lemma(g: &Graph, t: &MatchingTriple) -> Result<LemmaVerdict> {
    let m = t.m.edges();
    let h_prime = t.h_prime();
    let chains = maximal_chains(g, m, t.h())?;
    let mut a = Clause::new("a");
    let mut b = Clause::new("b");
    let mut c = Clause::new("c");
    for ch in &chains {
        if !ch.is_path() || !ch.is_odd() {
            a.fail(Some(ch), "chain is not an odd path".into());
        } else if let Some(&e) = ch.end_edges().iter().find(|&&e| !m.contains(e)) {
            a.fail(Some(ch), format!("end-edge {:?} not in M", g.edge(e)));
        }
        if ch.is_path() {
            if let Some(&e) = ch.end_edges().iter().find(|&&e| !h_prime.contains(e)) {
                b.fail(Some(ch), format!("end-edge {:?} not in H'", g.edge(e)));
            }
        }
        if let Some(&v) = ch
            .vertices
            .iter()
            .find(|&&v| (g.incident(v) & h_prime).is_empty())
        {
            c.fail(Some(ch), format!("vertex {v} not incident to H'"));
        }
    }
    Ok(LemmaVerdict {
        clauses: vec![a, b, c],
    })
}

/// Checks the five clauses about maximal `H`-`H'` chains of a maximally
/// intersecting triple.
pub fn check_hh_lemma(g: &Graph, t: &MatchingTriple) -> Result<LemmaVerdict> {
    let m = t.m.edges();
    let h = t.h();
    let h_prime = t.h_prime();
    let hh = maximal_chains(g, h, h_prime)?;
    let mh = maximal_chains(g, m, h)?;
    let union = h | h_prime;
    let mut a = Clause::new("a");
    let mut b = Clause::new("b");
    let mut c = Clause::new("c");
    let mut d = Clause::new("d");
    let mut e = Clause::new("e");

    for ch in hh.iter().filter(|ch| ch.is_path()) {
        if ch.is_odd() {
            if let Some(&x) = ch.end_edges().iter().find(|&&x| !h.contains(x)) {
                a.fail(
                    Some(ch),
                    format!("odd path has end-edge {:?} in H'", g.edge(x)),
                );
            }
        }
        if let Some(&x) = ch
            .end_edges()
            .iter()
            .find(|&&x| h.contains(x) && !m.contains(x))
        {
            e.fail(
                Some(ch),
                format!("end-edge {:?} in H but not in M", g.edge(x)),
            );
        }
    }
    for ch in hh.iter().filter(|ch| !ch.is_odd()) {
        let set = ch.edge_set();
        let with_h = (set & h & m).len();
        let with_h_prime = (set & h_prime & m).len();
        if with_h < with_h_prime {
            d.fail(
                Some(ch),
                format!("|H∩M| = {with_h} < |H'∩M| = {with_h_prime}"),
            );
        }
    }
    for ch in mh.iter().filter(|ch| ch.is_path()) {
        for x in ch.end_edges() {
            let ok = hh
                .iter()
                .any(|p| p.is_path() && !p.is_odd() && p.end_edges().contains(&x));
            if !ok {
                b.fail(
                    Some(ch),
                    format!(
                        "end-edge {:?} is not an end-edge of an even H-H' path",
                        g.edge(x)
                    ),
                );
            }
        }
        for &v in ch.inner_vertices() {
            if g.degree_in(union, v) != 2 {
                c.fail(
                    Some(ch),
                    format!("inner vertex {v} is an end of an H-H' path"),
                );
            }
        }
    }
    Ok(LemmaVerdict {
        clauses: vec![a, b, c, d, e],
    })
}

/// Checks the two unsaturated-vertex lemmas for a pair in `Lambda_mu`.
///
/// Clause `6.1`: no two adjacent unsaturated vertices, unless they are the
/// two ends of one even maximal `H`-`H'` path. The adjacency may be through
/// any edge of `G`, so an edge of `H` alone in its component fails the check
/// when both its ends have another neighbour. Clause `6.2`: no end-vertex of a
/// nontrivial even maximal `H`-`H'` path is adjacent to an inner vertex of
/// an odd one or to an inner odd vertex `x_2, x_4, .., x_{2k-2}` of an even
/// one `x_0 .. x_{2k}` (counting `x_0` as the first vertex).
///
/// Both are checked exactly as stated. The second does not hold in general:
/// in `F?D|o` the pair `H = {06, 15, 34}`, `H' = {25, 36}` has the even path
/// `1 5 2` whose end 2 is adjacent to the inner vertex 6 of `0 6 3 4`.
pub fn check_section6(g: &Graph, pair: &DisjointPair) -> Result<LemmaVerdict> {
    let opt = matchings::pair_optimum_with(g, &Budget::unlimited())?;
    check_section6_against(g, pair, &opt)
}

/// As [`check_section6`], with `lambda` and `mu` already known.
pub fn check_section6_against(
    g: &Graph,
    pair: &DisjointPair,
    opt: &PairOptimum,
) -> Result<LemmaVerdict> {
    pair.validate(g)?;
    if pair.total() != opt.lambda {
        return Err(Error::NotInLambda {
            total: pair.total(),
            lambda: opt.lambda,
        });
    }
    if pair.h.len() != opt.mu {
        return Err(Error::NotInLambdaMu {
            size: pair.h.len(),
            mu: opt.mu,
        });
    }
    Ok(section6_unchecked(g, pair))
}

pub(crate) fn section6_unchecked(g: &Graph, pair: &DisjointPair) -> LemmaVerdict {
    let sat = saturation(g, pair);
    let chains =
        maximal_chains(g, pair.h.edges(), pair.h_prime.edges()).expect("pair of matchings");
    // for every vertex: (chain index, position) on a nontrivial path
    let mut place: Vec<Option<(usize, usize)>> = vec![None; g.n()];
    for (ci, ch) in chains.iter().enumerate().filter(|(_, ch)| ch.is_path()) {
        for (pos, &v) in ch.vertices.iter().enumerate() {
            place[v] = Some((ci, pos));
        }
    }
    let is_end = |v: Vertex| match place[v] {
        Some((ci, pos)) => pos == 0 || pos == chains[ci].len(),
        None => false,
    };

    let mut l61 = Clause::new("6.1");
    for &(u, v) in g.edges() {
        if sat.saturated[u] || sat.saturated[v] {
            continue;
        }
        let same_even_path = match (place[u], place[v]) {
            (Some((cu, _)), Some((cv, _))) => {
                cu == cv && !chains[cu].is_odd() && is_end(u) && is_end(v)
            }
            _ => false,
        };
        if !same_even_path {
            let e = g.edge_index(u, v).expect("edge of g");
            let how = if pair.union().contains(e) {
                "by an edge of H or H'"
            } else {
                "by an edge outside H and H'"
            };
            l61.fail(
                None,
                format!("unsaturated vertices {u} and {v} are adjacent {how}"),
            );
        }
    }

    let mut l62 = Clause::new("6.2");
    for (ci, p) in chains.iter().enumerate() {
        if !p.is_path() || p.is_odd() {
            continue;
        }
        for u in p.end_vertices() {
            for &(v, _) in g.neighbors(u) {
                let Some((cv, pos)) = place[v] else { continue };
                let q = &chains[cv];
                let inner = pos > 0 && pos < q.len();
                let bad = if q.is_odd() {
                    inner
                } else {
                    inner && pos % 2 == 0
                };
                if bad {
                    let what = match (q.is_odd(), cv == ci) {
                        (true, _) => "an odd path",
                        (false, true) => "its own path at an odd position",
                        (false, false) => "another even path at an odd position",
                    };
                    l62.fail(
                        Some(&chains[ci]),
                        format!("end-vertex {u} is adjacent to inner vertex {v} of {what}"),
                    );
                }
            }
        }
    }
    LemmaVerdict {
        clauses: vec![l61, l62],
    }
}

/// Both neighbourhood checks for every pair in `Lambda_mu`.
pub fn section6_verdicts(g: &Graph) -> Result<Vec<(DisjointPair, LemmaVerdict)>> {
    let set = matchings::mu_and_lambda_mu(g, matchings::DEFAULT_CAP)?;
    Ok(set
        .pairs
        .into_iter()
        .map(|pair| {
            let v = section6_unchecked(g, &pair);
            (pair, v)
        })
        .collect())
}

/// Outcome of checking the leaf conjecture on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConjectureRecord {
    /// Connected, bipartite and `mu / nu < 1`.
    pub applicable: bool,
    /// Every examined triple has only leaves as ends of its maximal `M`-`H`
    /// paths. Vacuously true when not applicable.
    pub holds: bool,
    pub triples_examined: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ConjectureWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConjectureWitness {
    pub m: Vec<(Vertex, Vertex)>,
    pub h: Vec<(Vertex, Vertex)>,
    pub h_prime: Vec<(Vertex, Vertex)>,
    pub chain: AlternatingChain,
    pub non_leaf: Vertex,
}

pub fn conjecture_scan(g: &Graph) -> Result<ConjectureRecord> {
    conjecture_scan_with(g, &Budget::unlimited())
}

pub fn conjecture_scan_with(g: &Graph, budget: &Budget) -> Result<ConjectureRecord> {
    let record = ConjectureRecord {
        applicable: false,
        holds: true,
        triples_examined: 0,
        witness: None,
    };
    if !g.is_connected() || !g.is_bipartite() {
        return Ok(record);
    }
    let params = matchings::param_report_with(g, budget)?;
    if !params.ratio.is_below_one() {
        return Ok(record);
    }
    let search = matchings::maximally_intersecting_all(g, matchings::DEFAULT_CAP, budget)?;
    conjecture_from(g, &search)
}

/// The leaf check over precomputed optimal triples of a graph already known
/// to be connected, bipartite and below ratio 1.
pub fn conjecture_from(g: &Graph, search: &TripleSearch) -> Result<ConjectureRecord> {
    let mut record = ConjectureRecord {
        applicable: true,
        holds: true,
        triples_examined: 0,
        witness: None,
    };
    for t in &search.optima {
        record.triples_examined += 1;
        for ch in maximal_chains(g, t.m.edges(), t.h())? {
            if let Some(v) = ch.end_vertices().into_iter().find(|&v| g.degree(v) != 1) {
                record.holds = false;
                record.witness = Some(ConjectureWitness {
                    m: g.edge_pairs(t.m.edges()),
                    h: g.edge_pairs(t.h()),
                    h_prime: g.edge_pairs(t.h_prime()),
                    chain: ch,
                    non_leaf: v,
                });
                return Ok(record);
            }
        }
    }
    Ok(record)
}

/// Swaps `H` and `H'` along one chain of `H ∪ H'`.
pub fn swap_along(pair: &DisjointPair, chain: &AlternatingChain) -> DisjointPair {
    let set = chain.edge_set();
    let h = (pair.h.edges() - set) | (pair.h_prime.edges() & set);
    let h2 = (pair.h_prime.edges() - set) | (pair.h.edges() & set);
    DisjointPair {
        h: matchings::Matching::new_unchecked(h),
        h_prime: matchings::Matching::new_unchecked(h2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matchings::{maximally_intersecting, Matching};

    fn set(g: &Graph, pairs: &[(Vertex, Vertex)]) -> EdgeSet {
        g.edge_set_of(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn equal_sets_have_no_chains() {
        let g = Graph::cycle(5);
        let a = set(&g, &[(0, 1), (2, 3)]);
        assert!(maximal_chains(&g, a, a).unwrap().is_empty());
    }

    #[test]
    fn c4_perfect_matchings_form_one_cycle() {
        let g = Graph::cycle(4);
        let chains =
            maximal_chains(&g, set(&g, &[(0, 1), (2, 3)]), set(&g, &[(1, 2), (0, 3)])).unwrap();
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].kind, ChainKind::Cycle);
        assert_eq!(chains[0].vertices, vec![0, 1, 2, 3]);
        assert_eq!(chains[0].len(), 4);
        assert_eq!(
            chains[0].edge_labels,
            vec![Side::A, Side::B, Side::A, Side::B]
        );
    }

    #[test]
    fn lone_edges_are_length_one_chains() {
        let g = Graph::path(5);
        let chains = maximal_chains(&g, set(&g, &[(0, 1), (3, 4)]), set(&g, &[(1, 2)])).unwrap();
        assert_eq!(chains.len(), 2);
        assert_eq!(chains[0].vertices, vec![0, 1, 2]);
        assert_eq!(chains[1].vertices, vec![3, 4]);
        assert!(chains[1].is_odd());
    }

    #[test]
    fn non_matching_difference_is_rejected() {
        let g = Graph::path(3);
        assert!(maximal_chains(&g, g.all_edges(), EdgeSet::EMPTY).is_err());
    }

    #[test]
    fn chains_cover_the_symmetric_difference() {
        let g = Graph::complete(6);
        let ms = matchings::enumerate_perfect_matchings(&g, 100, &Budget::unlimited()).unwrap();
        for a in &ms.items {
            for b in &ms.items {
                let chains = maximal_chains(&g, a.edges(), b.edges()).unwrap();
                let mut seen = EdgeSet::EMPTY;
                for ch in &chains {
                    assert!(seen.is_disjoint(ch.edge_set()));
                    seen |= ch.edge_set();
                    for w in ch.edge_labels.windows(2) {
                        assert_ne!(w[0], w[1]);
                    }
                }
                assert_eq!(seen, a.edges() ^ b.edges());
            }
        }
    }

    #[test]
    fn saturation_examples() {
        let g = Graph::path(3);
        let pair = DisjointPair::new(
            Matching::new(&g, set(&g, &[(0, 1)])).unwrap(),
            Matching::new(&g, set(&g, &[(1, 2)])).unwrap(),
        )
        .unwrap();
        assert!(saturation(&g, &pair).all_saturated());
        let half = DisjointPair::new(pair.h, Matching::empty()).unwrap();
        assert_eq!(saturation(&g, &half).unsaturated(), vec![1, 2]);
    }

    #[test]
    fn lemmas_hold_on_small_triples() {
        for g in [
            Graph::complete(2),
            Graph::cycle(4),
            Graph::path(4),
            Graph::complete(4),
        ] {
            let t = maximally_intersecting(&g).unwrap();
            assert!(check_mh_lemma(&g, &t).unwrap().passed());
            assert!(check_hh_lemma(&g, &t).unwrap().passed());
        }
    }

    #[test]
    fn section6_rejects_pairs_outside_lambda_mu() {
        let g = Graph::path(3);
        let pair = DisjointPair::new(
            Matching::new(&g, set(&g, &[(0, 1)])).unwrap(),
            Matching::empty(),
        )
        .unwrap();
        assert!(matches!(
            check_section6(&g, &pair),
            Err(Error::NotInLambda { .. })
        ));
        let k2 = Graph::complete(2);
        let pair = DisjointPair::new(
            Matching::empty(),
            Matching::new(&k2, k2.all_edges()).unwrap(),
        )
        .unwrap();
        assert!(matches!(
            check_section6(&k2, &pair),
            Err(Error::NotInLambdaMu { .. })
        ));
        let pair = pair.swapped();
        assert!(check_section6(&k2, &pair).unwrap().passed());
    }

    #[test]
    fn conjecture_not_applicable_off_bipartite() {
        let r = conjecture_scan(&Graph::cycle(5)).unwrap();
        assert!(!r.applicable && r.holds);
        let r = conjecture_scan(&Graph::cycle(4)).unwrap();
        assert!(!r.applicable);
    }
}

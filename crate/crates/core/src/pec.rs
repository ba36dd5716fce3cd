//! Path/even-cycle decompositions and the parameters `p`, `e`, `e_p`.
//!
//! A decomposition is a spanning subgraph whose components are paths or even
//! cycles; an isolated vertex is an even path of length zero. All searches
//! walk edges in index order, try "take" before "skip", and reject a take
//! that would create a vertex of degree 3 or close an odd cycle. The first
//! optimum found is therefore the least one in [`EdgeSet::canonical_cmp`]
//! order.

use serde::Serialize;

use crate::budget::Budget;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::formats::to_graph6;
use crate::graph::{ComponentCensus, Graph, Vertex};
use crate::matchings::{self, DisjointPair, Matching};

/// A spanning subgraph whose components are paths or even cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PecDecomposition {
    pub edges: EdgeSet,
    pub census: ComponentCensus,
    /// Number of path components.
    pub p: usize,
    /// Number of even path components.
    pub e: usize,
}

impl PecDecomposition {
    pub fn from_edges(g: &Graph, edges: EdgeSet) -> Result<PecDecomposition> {
        g.check_subset(edges)?;
        let census = g.census(edges);
        if let Some(other) = census.others.first() {
            return Err(Error::NotPec(format!(
                "vertex {} has degree above 2",
                other.offending
            )));
        }
        if census.odd_cycles > 0 {
            return Err(Error::NotPec("contains an odd cycle".into()));
        }
        Ok(PecDecomposition {
            edges,
            p: census.paths.len(),
            e: census.even_paths,
            census,
        })
    }

    pub fn odd_paths(&self) -> usize {
        self.census.odd_paths
    }
}

/// Result of a capped enumeration.
#[derive(Clone, Debug, Default)]
pub struct PecEnumeration {
    pub decompositions: Vec<PecDecomposition>,
    /// More decompositions exist than were returned.
    pub overflow: bool,
}

/// `p(G)`, `e(G)` and `e_p(G)` with one witness per minimum.
#[derive(Clone, Debug)]
pub struct PecMinima {
    pub p: usize,
    pub e: usize,
    pub ep: usize,
    pub p_witness: PecDecomposition,
    pub e_witness: PecDecomposition,
    pub ep_witness: PecDecomposition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PecValues {
    pub p: usize,
    pub e: usize,
    pub ep: usize,
}

impl PecMinima {
    pub fn values(&self) -> PecValues {
        PecValues {
            p: self.p,
            e: self.e,
            ep: self.ep,
        }
    }
}

// ---------------------------------------------------------------------------
// search engine

/// Incremental state of a partial decomposition.
///
/// Every component is a path or a closed even cycle. For a path, both
/// endpoints store the opposite endpoint and the path length; entries of
/// interior vertices go stale and are never read.
pub(crate) struct PecState<'g> {
    g: &'g Graph,
    deg: Vec<u8>,
    other_end: Vec<Vertex>,
    plen: Vec<u32>,
    rem: Vec<u32>,
    chosen: EdgeSet,
    undecided: usize,
    paths: usize,
    even: usize,
}

enum Undo {
    Close,
    Merge {
        a: Vertex,
        a_end: Vertex,
        a_len: u32,
        b: Vertex,
        b_end: Vertex,
        b_len: u32,
        even_before: usize,
    },
}

impl<'g> PecState<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        PecState {
            g,
            deg: vec![0; n],
            other_end: (0..n).collect(),
            plen: vec![0; n],
            rem: (0..n).map(|v| g.degree(v) as u32).collect(),
            chosen: EdgeSet::EMPTY,
            undecided: g.m(),
            paths: n,
            even: n,
        }
    }

    pub(crate) fn chosen(&self) -> EdgeSet {
        self.chosen
    }

    pub(crate) fn paths(&self) -> usize {
        self.paths
    }

    pub(crate) fn even_paths(&self) -> usize {
        self.even
    }

    fn decide(&mut self, i: usize) {
        let (u, v) = self.g.edge(i);
        self.rem[u] -= 1;
        self.rem[v] -= 1;
        self.undecided -= 1;
    }

    fn undecide(&mut self, i: usize) {
        let (u, v) = self.g.edge(i);
        self.rem[u] += 1;
        self.rem[v] += 1;
        self.undecided += 1;
    }

    fn try_take(&mut self, i: usize) -> Option<Undo> {
        let (u, v) = self.g.edge(i);
        if self.deg[u] >= 2 || self.deg[v] >= 2 {
            return None;
        }
        let undo = if self.other_end[u] == v && self.deg[u] == 1 {
            // u and v end the same path: closing it makes a cycle of length+1
            if self.plen[u].is_multiple_of(2) {
                return None;
            }
            self.paths -= 1;
            Undo::Close
        } else {
            let (a, b) = (self.other_end[u], self.other_end[v]);
            let (la, lb) = (self.plen[u], self.plen[v]);
            let undo = Undo::Merge {
                a,
                a_end: self.other_end[a],
                a_len: self.plen[a],
                b,
                b_end: self.other_end[b],
                b_len: self.plen[b],
                even_before: self.even,
            };
            let len = la + lb + 1;
            self.even -= (la % 2 == 0) as usize + (lb % 2 == 0) as usize;
            self.even += (len % 2 == 0) as usize;
            self.paths -= 1;
            self.other_end[a] = b;
            self.other_end[b] = a;
            self.plen[a] = len;
            self.plen[b] = len;
            undo
        };
        self.deg[u] += 1;
        self.deg[v] += 1;
        self.chosen.insert(i);
        self.decide(i);
        Some(undo)
    }

    fn untake(&mut self, i: usize, undo: Undo) {
        let (u, v) = self.g.edge(i);
        self.undecide(i);
        self.chosen.remove(i);
        self.deg[u] -= 1;
        self.deg[v] -= 1;
        self.paths += 1;
        if let Undo::Merge {
            a,
            a_end,
            a_len,
            b,
            b_end,
            b_len,
            even_before,
        } = undo
        {
            // restore b first: when a == b is impossible, order is irrelevant
            self.other_end[b] = b_end;
            self.plen[b] = b_len;
            self.other_end[a] = a_end;
            self.plen[a] = a_len;
            self.even = even_before;
        }
    }

    /// Upper bound on the number of edges any completion can still add.
    pub(crate) fn extra_edge_bound(&self) -> usize {
        let caps: usize = (0..self.deg.len())
            .map(|v| (2 - self.deg[v] as u32).min(self.rem[v]) as usize)
            .sum();
        (caps / 2).min(self.undecided)
    }

    /// Even paths that no remaining edge can touch.
    pub(crate) fn closed_even_paths(&self) -> usize {
        (0..self.deg.len())
            .filter(|&v| {
                let w = self.other_end[v];
                self.deg[v] <= 1
                    && v <= w
                    && self.rem[v] == 0
                    && self.rem[w] == 0
                    && self.plen[v].is_multiple_of(2)
            })
            .count()
    }

    fn lower_bound_p(&self) -> usize {
        self.paths - self.extra_edge_bound()
    }

    fn lower_bound_e(&self) -> usize {
        let extra = self.extra_edge_bound();
        self.closed_even_paths()
            .max(self.even.saturating_sub(2 * extra))
    }
}

pub(crate) trait PecVisitor {
    /// True cuts the subtree below the current node.
    fn prune(&mut self, st: &PecState<'_>) -> bool;
    /// Called on every complete decomposition; false stops the search.
    fn leaf(&mut self, st: &PecState<'_>) -> bool;
}

/// Depth-first walk over all decompositions, in canonical order.
pub(crate) fn search<V: PecVisitor>(g: &Graph, visitor: &mut V, budget: &Budget) -> Result<()> {
    fn rec<V: PecVisitor>(
        st: &mut PecState<'_>,
        i: usize,
        visitor: &mut V,
        budget: &Budget,
    ) -> Result<bool> {
        budget.tick()?;
        if visitor.prune(st) {
            return Ok(true);
        }
        if i == st.g.m() {
            return Ok(visitor.leaf(st));
        }
        if let Some(undo) = st.try_take(i) {
            let go = rec(st, i + 1, visitor, budget)?;
            st.untake(i, undo);
            if !go {
                return Ok(false);
            }
        }
        st.decide(i);
        let go = rec(st, i + 1, visitor, budget)?;
        st.undecide(i);
        Ok(go)
    }
    let mut st = PecState::new(g);
    rec(&mut st, 0, visitor, budget)?;
    Ok(())
}

struct Collect {
    cap: usize,
    out: Vec<EdgeSet>,
    overflow: bool,
}

impl PecVisitor for Collect {
    fn prune(&mut self, _: &PecState<'_>) -> bool {
        false
    }
    fn leaf(&mut self, st: &PecState<'_>) -> bool {
        if self.out.len() == self.cap {
            self.overflow = true;
            return false;
        }
        self.out.push(st.chosen());
        true
    }
}

/// Minimises `key` given an admissible lower bound on it.
struct Minimise<K, L> {
    key: K,
    lower: L,
    best: Option<(usize, usize, EdgeSet)>,
}

impl<K, L> PecVisitor for Minimise<K, L>
where
    K: Fn(&PecState<'_>) -> (usize, usize),
    L: Fn(&PecState<'_>) -> (usize, usize),
{
    fn prune(&mut self, st: &PecState<'_>) -> bool {
        match self.best {
            Some((a, b, _)) => (self.lower)(st) >= (a, b),
            None => false,
        }
    }
    fn leaf(&mut self, st: &PecState<'_>) -> bool {
        let k = (self.key)(st);
        if self.best.is_none_or(|(a, b, _)| k < (a, b)) {
            self.best = Some((k.0, k.1, st.chosen()));
        }
        true
    }
}

fn minimise<K, L>(g: &Graph, key: K, lower: L, budget: &Budget) -> Result<EdgeSet>
where
    K: Fn(&PecState<'_>) -> (usize, usize),
    L: Fn(&PecState<'_>) -> (usize, usize),
{
    let mut v = Minimise {
        key,
        lower,
        best: None,
    };
    search(g, &mut v, budget)?;
    Ok(v.best
        .expect("the empty edge set is always a decomposition")
        .2)
}

struct WithEdgeCount {
    target: usize,
    cap: usize,
    out: Vec<EdgeSet>,
    overflow: bool,
}

impl PecVisitor for WithEdgeCount {
    fn prune(&mut self, st: &PecState<'_>) -> bool {
        st.chosen().len() + st.extra_edge_bound() < self.target
    }
    fn leaf(&mut self, st: &PecState<'_>) -> bool {
        if st.chosen().len() != self.target {
            return true;
        }
        if self.out.len() == self.cap {
            self.overflow = true;
            return false;
        }
        self.out.push(st.chosen());
        true
    }
}

// ---------------------------------------------------------------------------
// public operations

/// Every decomposition of `g`, up to `cap` of them.
pub fn enumerate_pec(g: &Graph, cap: usize) -> PecEnumeration {
    enumerate_pec_with(g, cap, &Budget::unlimited()).expect("unlimited budget")
}

pub fn enumerate_pec_with(g: &Graph, cap: usize, budget: &Budget) -> Result<PecEnumeration> {
    let mut c = Collect {
        cap,
        out: Vec::new(),
        overflow: false,
    };
    search(g, &mut c, budget)?;
    let decompositions = c
        .out
        .into_iter()
        .map(|s| PecDecomposition::from_edges(g, s))
        .collect::<Result<Vec<_>>>()?;
    Ok(PecEnumeration {
        decompositions,
        overflow: c.overflow,
    })
}

/// Number of decompositions, without materialising them.
pub fn count_pec(g: &Graph, budget: &Budget) -> Result<u64> {
    struct Count(u64);
    impl PecVisitor for Count {
        fn prune(&mut self, _: &PecState<'_>) -> bool {
            false
        }
        fn leaf(&mut self, _: &PecState<'_>) -> bool {
            self.0 += 1;
            true
        }
    }
    let mut c = Count(0);
    search(g, &mut c, budget)?;
    Ok(c.0)
}

pub fn pec_minima(g: &Graph) -> PecMinima {
    pec_minima_with(g, &Budget::unlimited()).expect("unlimited budget")
}

/// Exact `p`, `e` and `e_p`. Three branch-and-bound sweeps: minimum path
/// count, minimum even-path count, and `(paths, even paths)`
/// lexicographically, the last one giving `e_p`.
pub fn pec_minima_with(g: &Graph, budget: &Budget) -> Result<PecMinima> {
    let p_set = minimise(
        g,
        |st| (st.paths(), 0),
        |st| (st.lower_bound_p(), 0),
        budget,
    )?;
    let e_set = minimise(
        g,
        |st| (st.even_paths(), 0),
        |st| (st.lower_bound_e(), 0),
        budget,
    )?;
    let ep_set = minimise(
        g,
        |st| (st.paths(), st.even_paths()),
        |st| {
            let p = st.lower_bound_p();
            // e only bounds the second key when p could still tie
            (p, st.lower_bound_e())
        },
        budget,
    )?;
    let p_witness = PecDecomposition::from_edges(g, p_set)?;
    let e_witness = PecDecomposition::from_edges(g, e_set)?;
    let ep_witness = PecDecomposition::from_edges(g, ep_set)?;
    Ok(PecMinima {
        p: p_witness.p,
        e: e_witness.e,
        ep: ep_witness.e,
        p_witness,
        e_witness,
        ep_witness,
    })
}

/// Largest edge count of a decomposition, with the canonical witness.
///
/// This is `lambda(G)` computed by branch and bound over decompositions
/// rather than over matching pairs.
pub fn max_pec_edges(g: &Graph, budget: &Budget) -> Result<(usize, EdgeSet)> {
    let m = g.m();
    let set = minimise(
        g,
        |st| (m - st.chosen().len(), 0),
        |st| (m - st.chosen().len() - st.extra_edge_bound(), 0),
        budget,
    )?;
    Ok((set.len(), set))
}

/// All decompositions with the maximum number of edges.
pub(crate) fn optimal_pecs(
    g: &Graph,
    cap: usize,
    budget: &Budget,
) -> Result<(usize, Vec<EdgeSet>, bool)> {
    let (lambda, _) = max_pec_edges(g, budget)?;
    let mut v = WithEdgeCount {
        target: lambda,
        cap,
        out: Vec::new(),
        overflow: false,
    };
    search(g, &mut v, budget)?;
    Ok((lambda, v.out, v.overflow))
}

/// The spanning subgraph `(V, M)` of a maximum matching.
///
/// Fails if `m` is not maximum, or if its even-path count differs from
/// `e(G)`.
pub fn pec_from_matching(g: &Graph, m: &Matching) -> Result<PecDecomposition> {
    m.validate(g)?;
    let nu = matchings::max_matching(g).len();
    if m.len() != nu {
        return Err(Error::NotMaximum { size: m.len(), nu });
    }
    let d = PecDecomposition::from_edges(g, m.edges())?;
    let e = pec_minima(g).e;
    if d.e != e {
        return Err(Error::Inconsistent {
            graph6: to_graph6(g),
            message: format!("e(G_M) = {} but e(G) = {}", d.e, e),
        });
    }
    Ok(d)
}

/// The spanning subgraph `(V, H ∪ H')` of a pair in `Lambda(G)`.
///
/// Checks `p(G_{H∪H'}) = p(G)` and, when `|H| = mu(G)`, also
/// `e(G_{H∪H'}) = e_p(G)`.
pub fn pec_from_pair(g: &Graph, pair: &DisjointPair) -> Result<PecDecomposition> {
    pair.validate(g)?;
    let opt = matchings::pair_optimum(g);
    if pair.total() != opt.lambda {
        return Err(Error::NotInLambda {
            total: pair.total(),
            lambda: opt.lambda,
        });
    }
    let d = PecDecomposition::from_edges(g, pair.union())?;
    let minima = pec_minima(g);
    let inconsistent = |message: String| Error::Inconsistent {
        graph6: to_graph6(g),
        message,
    };
    if d.p != minima.p {
        return Err(inconsistent(format!(
            "p(G_HH') = {} but p(G) = {}",
            d.p, minima.p
        )));
    }
    if pair.h.len() == opt.mu && d.e != minima.ep {
        return Err(inconsistent(format!(
            "e(G_HH') = {} but e_p(G) = {}",
            d.e, minima.ep
        )));
    }
    Ok(d)
}

/// One side-by-side comparison in a [`PecIdentityVerdict`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

/// The matching parameters recomputed through decompositions.
#[derive(Clone, Debug, Serialize)]
pub struct PecIdentityVerdict {
    pub graph6: String,
    pub n: usize,
    pub nu: usize,
    pub lambda: usize,
    pub mu: usize,
    pub mu_prime: usize,
    pub p: usize,
    pub e: usize,
    pub ep: usize,
    pub checks: Vec<IdentityCheck>,
}

impl PecIdentityVerdict {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

pub fn check_pec_identities(g: &Graph) -> PecIdentityVerdict {
    check_pec_identities_with(g, &Budget::unlimited()).expect("unlimited budget")
}

/// `nu`, `lambda`, `mu` come from the matching solvers; `p`, `e`, `e_p` from
/// the decomposition searches. The identities tie the two sides together.
pub fn check_pec_identities_with(g: &Graph, budget: &Budget) -> Result<PecIdentityVerdict> {
    let nu = matchings::max_matching(g).len();
    let opt = matchings::pair_optimum_with(g, budget)?;
    let minima = pec_minima_with(g, budget)?;
    Ok(pec_identities_from(g, nu, &opt, &minima))
}

/// The identity checks on values computed elsewhere.
pub fn pec_identities_from(
    g: &Graph,
    nu: usize,
    opt: &matchings::PairOptimum,
    minima: &PecMinima,
) -> PecIdentityVerdict {
    let n = g.n() as i64;
    let (lambda, mu) = (opt.lambda, opt.mu);
    let mu_prime = lambda - mu;
    let (p, e, ep) = (minima.p as i64, minima.e as i64, minima.ep as i64);
    let check = |name, lhs: i64, rhs: i64| IdentityCheck {
        name,
        lhs,
        rhs,
        pass: lhs == rhs,
    };
    let checks = vec![
        check("2nu = n - e", 2 * nu as i64, n - e),
        check("lambda = n - p", lambda as i64, n - p),
        check("2mu = n - e_p", 2 * mu as i64, n - ep),
        check("mu - mu' = p - e_p", mu as i64 - mu_prime as i64, p - ep),
        check("2mu' = n - 2p + e_p", 2 * mu_prime as i64, n - 2 * p + ep),
        check(
            "(mu = nu) iff (e = e_p)",
            (mu == nu) as i64,
            (minima.e == minima.ep) as i64,
        ),
    ];
    PecIdentityVerdict {
        graph6: to_graph6(g),
        n: g.n(),
        nu,
        lambda,
        mu,
        mu_prime,
        p: minima.p,
        e: minima.e,
        ep: minima.ep,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over all 2^m edge subsets.
    fn all_decompositions(g: &Graph) -> Vec<EdgeSet> {
        (0u128..1 << g.m())
            .map(EdgeSet::from_bits)
            .filter(|&s| g.census(s).is_pec())
            .collect()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(
            enumerate_pec(&Graph::complete(2), 100).decompositions.len(),
            2
        );
        assert_eq!(enumerate_pec(&Graph::cycle(3), 100).decompositions.len(), 7);
        assert_eq!(
            enumerate_pec(&Graph::cycle(4), 100).decompositions.len(),
            16
        );
        let capped = enumerate_pec(&Graph::cycle(4), 5);
        assert_eq!(capped.decompositions.len(), 5);
        assert!(capped.overflow);
    }

    #[test]
    fn enumeration_matches_subset_filter() {
        for g in [
            Graph::complete(4),
            Graph::complete(5),
            Graph::cycle(6),
            Graph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap(),
        ] {
            let mut got: Vec<u128> = enumerate_pec(&g, usize::MAX)
                .decompositions
                .iter()
                .map(|d| d.edges.bits())
                .collect();
            let mut want: Vec<u128> = all_decompositions(&g).iter().map(|s| s.bits()).collect();
            got.sort_unstable();
            want.sort_unstable();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn minima_match_brute_force() {
        for g in [
            Graph::complete(2),
            Graph::path(3),
            Graph::cycle(4),
            Graph::cycle(5),
            Graph::complete(5),
            Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap(),
        ] {
            let all: Vec<PecDecomposition> = all_decompositions(&g)
                .into_iter()
                .map(|s| PecDecomposition::from_edges(&g, s).unwrap())
                .collect();
            let p = all.iter().map(|d| d.p).min().unwrap();
            let e = all.iter().map(|d| d.e).min().unwrap();
            let ep = all.iter().filter(|d| d.p == p).map(|d| d.e).min().unwrap();
            let got = pec_minima(&g);
            assert_eq!((got.p, got.e, got.ep), (p, e, ep), "{}", to_graph6(&g));
            assert_eq!(got.ep_witness.p, p);
        }
    }

    #[test]
    fn small_minima() {
        let m = pec_minima(&Graph::cycle(4));
        assert_eq!((m.p, m.e, m.ep), (0, 0, 0));
        let m = pec_minima(&Graph::path(3));
        assert_eq!((m.p, m.e, m.ep), (1, 1, 1));
    }

    #[test]
    fn from_edges_rejects_non_pec() {
        let c3 = Graph::cycle(3);
        assert!(matches!(
            PecDecomposition::from_edges(&c3, c3.all_edges()),
            Err(Error::NotPec(_))
        ));
    }

    #[test]
    fn witnesses_are_canonically_least() {
        let g = Graph::complete(4);
        let all = all_decompositions(&g);
        let best = all
            .iter()
            .copied()
            .filter(|s| s.len() == 4)
            .min_by(|a, b| a.canonical_cmp(*b))
            .unwrap();
        assert_eq!(max_pec_edges(&g, &Budget::unlimited()).unwrap(), (4, best));
    }

    #[test]
    fn matching_and_pair_decompositions() {
        let c4 = Graph::cycle(4);
        let m = Matching::new(&c4, c4.edge_set_of([(0, 1), (2, 3)]).unwrap()).unwrap();
        let d = pec_from_matching(&c4, &m).unwrap();
        assert_eq!((d.census.odd_paths, d.e), (2, 0));

        let small = Matching::new(&c4, c4.edge_set_of([(0, 1)]).unwrap()).unwrap();
        assert!(matches!(
            pec_from_matching(&c4, &small),
            Err(Error::NotMaximum { size: 1, nu: 2 })
        ));

        let h = Matching::new(&c4, c4.edge_set_of([(0, 1), (2, 3)]).unwrap()).unwrap();
        let h2 = Matching::new(&c4, c4.edge_set_of([(1, 2), (0, 3)]).unwrap()).unwrap();
        let pair = DisjointPair::new(h, h2).unwrap();
        let d = pec_from_pair(&c4, &pair).unwrap();
        assert_eq!((d.p, d.census.even_cycles), (0, 1));

        let short = DisjointPair::new(
            Matching::new(&c4, c4.edge_set_of([(0, 1)]).unwrap()).unwrap(),
            Matching::new(&c4, EdgeSet::EMPTY).unwrap(),
        )
        .unwrap();
        assert!(matches!(
            pec_from_pair(&c4, &short),
            Err(Error::NotInLambda {
                total: 1,
                lambda: 4
            })
        ));

        let k2 = Graph::complete(2);
        let pair = DisjointPair::new(
            Matching::new(&k2, k2.all_edges()).unwrap(),
            Matching::new(&k2, EdgeSet::EMPTY).unwrap(),
        )
        .unwrap();
        let d = pec_from_pair(&k2, &pair).unwrap();
        assert_eq!((d.p, d.census.odd_paths), (1, 1));
    }

    #[test]
    fn identities_on_small_graphs() {
        for g in [
            Graph::complete(2),
            Graph::path(3),
            Graph::cycle(5),
            Graph::complete(5),
        ] {
            let v = check_pec_identities(&g);
            assert!(v.passed(), "{v:?}");
        }
        let v = check_pec_identities(&Graph::complete(2));
        assert_eq!((v.nu, v.lambda, v.mu, v.mu_prime), (1, 1, 1, 0));
        assert_eq!((v.p, v.e, v.ep), (1, 0, 0));
    }
}

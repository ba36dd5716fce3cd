//! Exact matching parameters: `nu`, `lambda`, `mu`, `mu'`, the sets
//! `Lambda(G)` and `Lambda_mu(G)`, and maximally intersecting triples.
//!
//! Two independent routes exist for the pair parameters. [`pair_optimum`]
//! is a branch and bound over assignments of edges to `H`, `H'` or neither.
//! [`lambda_and_lambda_set`] and [`mu_and_lambda_mu`] enumerate maximum-size
//! path/even-cycle decompositions and two-colour their components. The
//! routes are cross-checked against each other and against
//! [`for_each_disjoint_pair`], the plain exhaustive enumeration.

use std::cmp::Ordering;
use std::collections::VecDeque;

use serde::Serialize;

use crate::budget::Budget;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::formats::to_graph6;
use crate::graph::{Graph, Vertex};
use crate::pec;

/// An edge set with no two edges sharing a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Matching(EdgeSet);

impl Matching {
    pub fn new(g: &Graph, edges: EdgeSet) -> Result<Matching> {
        g.check_matching(edges)?;
        Ok(Matching(edges))
    }

    pub fn empty() -> Matching {
        Matching(EdgeSet::EMPTY)
    }

    pub(crate) fn new_unchecked(edges: EdgeSet) -> Matching {
        Matching(edges)
    }

    pub fn edges(&self) -> EdgeSet {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        g.check_matching(self.0)
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        2 * self.len() == g.n()
    }

    /// `mate[v]`, or `None` for uncovered vertices.
    pub fn mates(&self, g: &Graph) -> Vec<Option<Vertex>> {
        let mut mate = vec![None; g.n()];
        for i in self.0 {
            let (u, v) = g.edge(i);
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }
}

/// Disjoint matchings `(H, H')`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DisjointPair {
    pub h: Matching,
    pub h_prime: Matching,
}

impl DisjointPair {
    pub fn new(h: Matching, h_prime: Matching) -> Result<DisjointPair> {
        if !h.edges().is_disjoint(h_prime.edges()) {
            return Err(Error::NotDisjoint);
        }
        Ok(DisjointPair { h, h_prime })
    }

    pub fn total(&self) -> usize {
        self.h.len() + self.h_prime.len()
    }

    pub fn union(&self) -> EdgeSet {
        self.h.edges() | self.h_prime.edges()
    }

    pub fn swapped(&self) -> DisjointPair {
        DisjointPair {
            h: self.h_prime,
            h_prime: self.h,
        }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        self.h.validate(g)?;
        self.h_prime.validate(g)?;
        if !self.h.edges().is_disjoint(self.h_prime.edges()) {
            return Err(Error::NotDisjoint);
        }
        Ok(())
    }

    fn canonical_cmp(&self, other: &DisjointPair) -> Ordering {
        self.h
            .edges()
            .canonical_cmp(other.h.edges())
            .then(self.h_prime.edges().canonical_cmp(other.h_prime.edges()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TripleStats {
    pub size_m: usize,
    pub size_h: usize,
    pub size_h_prime: usize,
    /// `|M ∩ (H ∪ H')|`
    pub m_meets_union: usize,
    /// `|M ∩ H|`
    pub m_meets_h: usize,
}

/// A maximum matching together with a pair from `Lambda_mu`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatchingTriple {
    pub m: Matching,
    pub pair: DisjointPair,
    pub stats: TripleStats,
}

impl MatchingTriple {
    pub fn new(m: Matching, pair: DisjointPair) -> MatchingTriple {
        let stats = TripleStats {
            size_m: m.len(),
            size_h: pair.h.len(),
            size_h_prime: pair.h_prime.len(),
            m_meets_union: (m.edges() & pair.union()).len(),
            m_meets_h: (m.edges() & pair.h.edges()).len(),
        };
        MatchingTriple { m, pair, stats }
    }

    pub fn h(&self) -> EdgeSet {
        self.pair.h.edges()
    }

    pub fn h_prime(&self) -> EdgeSet {
        self.pair.h_prime.edges()
    }

    pub fn covered(&self) -> EdgeSet {
        self.m.edges() | self.pair.union()
    }

    /// Recomputes the statistics from the three sets.
    pub fn stats_consistent(&self) -> bool {
        MatchingTriple::new(self.m, self.pair).stats == self.stats
    }
}

// ---------------------------------------------------------------------------
// maximum matching

const NONE: usize = usize::MAX;

/// A maximum matching, by Edmonds' blossom algorithm.
pub fn max_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut mate = vec![NONE; n];
    for v in 0..n {
        if mate[v] == NONE {
            if let Some(&(w, _)) = g.neighbors(v).iter().find(|&&(w, _)| mate[w] == NONE) {
                mate[v] = w;
                mate[w] = v;
            }
        }
    }
    let mut blossom = Blossom::new(n);
    for root in 0..n {
        if mate[root] == NONE {
            if let Some(mut v) = blossom.find_augmenting_path(g, &mate, root) {
                while v != NONE {
                    let pv = blossom.parent[v];
                    let next = mate[pv];
                    mate[v] = pv;
                    mate[pv] = v;
                    v = next;
                }
            }
        }
    }
    let mut set = EdgeSet::EMPTY;
    for (v, &w) in mate.iter().enumerate() {
        if w != NONE && v < w {
            set.insert(g.edge_index(v, w).expect("matched along an edge"));
        }
    }
    Matching(set)
}

struct Blossom {
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom {
    fn new(n: usize) -> Self {
        Blossom {
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mate: &[usize], mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = self.parent[mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[mate[b]];
        }
    }

    fn mark_path(&mut self, mate: &[usize], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mate[v]]] = true;
            self.parent[v] = child;
            child = mate[v];
            v = self.parent[mate[v]];
        }
    }

    /// Returns the free vertex ending an augmenting path from `root`.
    fn find_augmenting_path(&mut self, g: &Graph, mate: &[usize], root: usize) -> Option<usize> {
        let n = g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &(to, _) in g.neighbors(v) {
                if self.base[v] == self.base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && self.parent[mate[to]] != NONE) {
                    let cur = self.lca(mate, v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(mate, v, cur, to);
                    self.mark_path(mate, to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if mate[to] == NONE {
                        return Some(to);
                    }
                    let next = mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }
}

/// Capped list with an explicit overflow flag.
#[derive(Clone, Debug, Default)]
pub struct Capped<T> {
    pub items: Vec<T>,
    pub overflow: bool,
}

/// All matchings of size `nu(g)`, in canonical order.
///
/// Intended for small graphs; the count can grow exponentially.
pub fn enumerate_maximum_matchings(g: &Graph, cap: usize) -> Capped<Matching> {
    enumerate_maximum_matchings_with(g, cap, &Budget::unlimited()).expect("unlimited budget")
}

pub fn enumerate_maximum_matchings_with(
    g: &Graph,
    cap: usize,
    budget: &Budget,
) -> Result<Capped<Matching>> {
    let nu = max_matching(g).len();
    enumerate_matchings_missing(g, g.n() - 2 * nu, cap, budget)
}

/// All perfect matchings.
pub fn enumerate_perfect_matchings(
    g: &Graph,
    cap: usize,
    budget: &Budget,
) -> Result<Capped<Matching>> {
    if g.n() % 2 == 1 {
        return Ok(Capped::default());
    }
    enumerate_matchings_missing(g, 0, cap, budget)
}

/// Matchings leaving exactly `slack` vertices uncovered (which must be the
/// minimum possible). The lowest undecided vertex is matched to each
/// undecided neighbour in turn, then left uncovered.
fn enumerate_matchings_missing(
    g: &Graph,
    slack: usize,
    cap: usize,
    budget: &Budget,
) -> Result<Capped<Matching>> {
    struct Ctx<'a> {
        g: &'a Graph,
        decided: Vec<bool>,
        set: EdgeSet,
        out: Capped<Matching>,
        cap: usize,
        budget: &'a Budget,
    }

    // an undecided vertex with no undecided neighbour must stay uncovered
    fn stranded(ctx: &Ctx<'_>, x: Vertex) -> bool {
        !ctx.decided[x] && ctx.g.neighbors(x).iter().all(|&(w, _)| ctx.decided[w])
    }

    fn rec(ctx: &mut Ctx<'_>, from: Vertex, slack: usize) -> Result<bool> {
        ctx.budget.tick()?;
        let Some(v) = (from..ctx.g.n()).find(|&v| !ctx.decided[v]) else {
            if ctx.out.items.len() == ctx.cap {
                ctx.out.overflow = true;
                return Ok(false);
            }
            ctx.out.items.push(Matching(ctx.set));
            return Ok(true);
        };
        ctx.decided[v] = true;
        for &(w, i) in ctx.g.neighbors(v) {
            if ctx.decided[w] {
                continue;
            }
            ctx.decided[w] = true;
            ctx.set.insert(i);
            let stuck = ctx
                .g
                .neighbors(v)
                .iter()
                .chain(ctx.g.neighbors(w))
                .filter(|&&(x, _)| stranded(ctx, x))
                .map(|&(x, _)| x)
                .collect::<std::collections::BTreeSet<_>>()
                .len();
            if stuck <= slack {
                let go = rec(ctx, v + 1, slack)?;
                if !go {
                    return Ok(false);
                }
            }
            ctx.set.remove(i);
            ctx.decided[w] = false;
        }
        if slack > 0 {
            let stuck = ctx
                .g
                .neighbors(v)
                .iter()
                .filter(|&&(x, _)| stranded(ctx, x))
                .count();
            if stuck < slack {
                let go = rec(ctx, v + 1, slack - 1)?;
                if !go {
                    return Ok(false);
                }
            }
        }
        ctx.decided[v] = false;
        Ok(true)
    }

    let mut ctx = Ctx {
        g,
        decided: vec![false; g.n()],
        set: EdgeSet::EMPTY,
        out: Capped::default(),
        cap,
        budget,
    };
    rec(&mut ctx, 0, slack)?;
    Ok(ctx.out)
}

// ---------------------------------------------------------------------------
// disjoint pairs, direct route

/// `lambda` and `mu` with a witness pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairOptimum {
    pub lambda: usize,
    pub mu: usize,
    pub witness: DisjointPair,
}

pub fn pair_optimum(g: &Graph) -> PairOptimum {
    pair_optimum_with(g, &Budget::unlimited()).expect("unlimited budget")
}

/// Branch and bound over edge assignments `H / H' / neither`, maximising
/// `(|H| + |H'|, |H|)` lexicographically.
///
/// Bounds: every vertex takes at most two more edges (one per matching) and
/// only undecided incident edges can supply them; each matching has at most
/// `nu` edges.
pub fn pair_optimum_with(g: &Graph, budget: &Budget) -> Result<PairOptimum> {
    struct Ctx<'a> {
        g: &'a Graph,
        nu: usize,
        in_h: Vec<bool>,
        in_h2: Vec<bool>,
        rem: Vec<u32>,
        h: EdgeSet,
        h2: EdgeSet,
        best: (usize, usize),
        best_pair: (EdgeSet, EdgeSet),
        budget: &'a Budget,
    }

    fn bound(ctx: &Ctx<'_>) -> (usize, usize) {
        let mut cap_total = 0usize;
        let mut cap_h = 0usize;
        let mut cap_h2 = 0usize;
        for v in 0..ctx.g.n() {
            let r = ctx.rem[v] as usize;
            let free_h = !ctx.in_h[v] as usize;
            let free_h2 = !ctx.in_h2[v] as usize;
            cap_total += (free_h + free_h2).min(r);
            cap_h += free_h.min(r);
            cap_h2 += free_h2.min(r);
        }
        let (h, h2) = (ctx.h.len(), ctx.h2.len());
        let max_h = (h + cap_h / 2).min(ctx.nu);
        let max_h2 = (h2 + cap_h2 / 2).min(ctx.nu);
        let total = (h + h2 + cap_total / 2).min(max_h + max_h2);
        (total, max_h)
    }

    fn rec(ctx: &mut Ctx<'_>, i: usize) -> Result<()> {
        ctx.budget.tick()?;
        if bound(ctx) <= ctx.best {
            return Ok(());
        }
        if i == ctx.g.m() {
            ctx.best = (ctx.h.len() + ctx.h2.len(), ctx.h.len());
            ctx.best_pair = (ctx.h, ctx.h2);
            return Ok(());
        }
        let (u, v) = ctx.g.edge(i);
        ctx.rem[u] -= 1;
        ctx.rem[v] -= 1;
        if !ctx.in_h[u] && !ctx.in_h[v] {
            ctx.in_h[u] = true;
            ctx.in_h[v] = true;
            ctx.h.insert(i);
            rec(ctx, i + 1)?;
            ctx.h.remove(i);
            ctx.in_h[u] = false;
            ctx.in_h[v] = false;
        }
        if !ctx.in_h2[u] && !ctx.in_h2[v] {
            ctx.in_h2[u] = true;
            ctx.in_h2[v] = true;
            ctx.h2.insert(i);
            rec(ctx, i + 1)?;
            ctx.h2.remove(i);
            ctx.in_h2[u] = false;
            ctx.in_h2[v] = false;
        }
        rec(ctx, i + 1)?;
        ctx.rem[u] += 1;
        ctx.rem[v] += 1;
        Ok(())
    }

    let n = g.n();
    let mut ctx = Ctx {
        g,
        nu: max_matching(g).len(),
        in_h: vec![false; n],
        in_h2: vec![false; n],
        rem: (0..n).map(|v| g.degree(v) as u32).collect(),
        h: EdgeSet::EMPTY,
        h2: EdgeSet::EMPTY,
        best: (0, 0),
        best_pair: (EdgeSet::EMPTY, EdgeSet::EMPTY),
        budget,
    };
    if g.m() == 0 {
        return Ok(PairOptimum {
            lambda: 0,
            mu: 0,
            witness: DisjointPair::new(Matching::empty(), Matching::empty())?,
        });
    }
    // with an edge present the optimum beats the empty pair, so starting
    // the incumbent at (0, 0) loses nothing
    rec(&mut ctx, 0)?;
    let (h, h2) = ctx.best_pair;
    Ok(PairOptimum {
        lambda: ctx.best.0,
        mu: ctx.best.1,
        witness: DisjointPair {
            h: Matching(h),
            h_prime: Matching(h2),
        },
    })
}

/// Calls `visit` on every ordered pair of disjoint matchings `(H, H')`.
///
/// Plain exhaustive enumeration with only validity pruning; used as an
/// oracle for the branch-and-bound routes.
pub fn for_each_disjoint_pair<F>(g: &Graph, budget: &Budget, mut visit: F) -> Result<()>
where
    F: FnMut(EdgeSet, EdgeSet),
{
    #[allow(clippy::too_many_arguments)]
    fn rec<F: FnMut(EdgeSet, EdgeSet)>(
        g: &Graph,
        i: usize,
        cover_h: &mut Vec<bool>,
        cover_h2: &mut Vec<bool>,
        h: EdgeSet,
        h2: EdgeSet,
        budget: &Budget,
        visit: &mut F,
    ) -> Result<()> {
        budget.tick()?;
        if i == g.m() {
            visit(h, h2);
            return Ok(());
        }
        let (u, v) = g.edge(i);
        rec(g, i + 1, cover_h, cover_h2, h, h2, budget, visit)?;
        if !cover_h[u] && !cover_h[v] {
            cover_h[u] = true;
            cover_h[v] = true;
            rec(
                g,
                i + 1,
                cover_h,
                cover_h2,
                h | EdgeSet::singleton(i),
                h2,
                budget,
                visit,
            )?;
            cover_h[u] = false;
            cover_h[v] = false;
        }
        if !cover_h2[u] && !cover_h2[v] {
            cover_h2[u] = true;
            cover_h2[v] = true;
            rec(
                g,
                i + 1,
                cover_h,
                cover_h2,
                h,
                h2 | EdgeSet::singleton(i),
                budget,
                visit,
            )?;
            cover_h2[u] = false;
            cover_h2[v] = false;
        }
        Ok(())
    }
    let n = g.n();
    rec(
        g,
        0,
        &mut vec![false; n],
        &mut vec![false; n],
        EdgeSet::EMPTY,
        EdgeSet::EMPTY,
        budget,
        &mut visit,
    )
}

/// `(lambda, mu)` by exhaustive enumeration of all disjoint pairs.
pub fn lambda_mu_exhaustive(g: &Graph, budget: &Budget) -> Result<(usize, usize)> {
    let mut best = (0, 0);
    for_each_disjoint_pair(g, budget, |h, h2| {
        best = best.max((h.len() + h2.len(), h.len()));
    })?;
    Ok(best)
}

// ---------------------------------------------------------------------------
// Lambda and Lambda_mu through decompositions

#[derive(Clone, Debug)]
pub struct LambdaSet {
    pub lambda: usize,
    pub pairs: Vec<DisjointPair>,
    pub overflow: bool,
}

#[derive(Clone, Debug)]
pub struct LambdaMuSet {
    pub lambda: usize,
    pub mu: usize,
    pub mu_prime: usize,
    pub pairs: Vec<DisjointPair>,
    pub overflow: bool,
}

/// Edge lists of the nontrivial components of a decomposition, each in walk
/// order, tagged with whether the component is a path of odd length.
fn component_edge_walks(g: &Graph, set: EdgeSet) -> Vec<(Vec<usize>, bool)> {
    let census = g.census(set);
    let to_edges = |walk: &[Vertex], closed: bool| -> Vec<usize> {
        let mut out: Vec<usize> = walk
            .windows(2)
            .map(|w| g.edge_index(w[0], w[1]).expect("component edge"))
            .collect();
        if closed {
            out.push(
                g.edge_index(walk[walk.len() - 1], walk[0])
                    .expect("cycle edge"),
            );
        }
        out
    };
    let mut comps = Vec::new();
    for p in census.paths.iter().filter(|p| p.len() > 1) {
        let edges = to_edges(p, false);
        let odd = edges.len() % 2 == 1;
        comps.push((edges, odd));
    }
    for c in &census.cycles {
        comps.push((to_edges(c, true), false));
    }
    comps
}

/// All alternating two-colourings of `set`'s components. With `max_h`, odd
/// paths are coloured only with `H` on both end edges.
fn colourings(
    g: &Graph,
    set: EdgeSet,
    max_h: bool,
    out: &mut Vec<DisjointPair>,
    cap: usize,
) -> bool {
    let comps = component_edge_walks(g, set);
    let mut free = Vec::new();
    let mut h = EdgeSet::EMPTY;
    let mut h2 = EdgeSet::EMPTY;
    for (edges, odd) in comps {
        let (even_pos, odd_pos): (EdgeSet, EdgeSet) = (
            edges.iter().step_by(2).copied().collect(),
            edges.iter().skip(1).step_by(2).copied().collect(),
        );
        if max_h && odd {
            h |= even_pos;
            h2 |= odd_pos;
        } else {
            free.push((even_pos, odd_pos));
        }
    }
    let k = free.len();
    for mask in 0u64..1 << k {
        let mut a = h;
        let mut b = h2;
        for (j, &(x, y)) in free.iter().enumerate() {
            if mask >> j & 1 == 0 {
                a |= x;
                b |= y;
            } else {
                a |= y;
                b |= x;
            }
        }
        if out.len() == cap {
            return false;
        }
        out.push(DisjointPair {
            h: Matching(a),
            h_prime: Matching(b),
        });
    }
    true
}

/// Largest `|H|` over colourings of a decomposition: odd paths give one
/// extra edge to `H`.
fn best_h(g: &Graph, set: EdgeSet) -> usize {
    let census = g.census(set);
    (set.len() + census.odd_paths) / 2
}

pub fn lambda_and_lambda_set(g: &Graph, cap: usize) -> LambdaSet {
    lambda_and_lambda_set_with(g, cap, &Budget::unlimited()).expect("unlimited budget")
}

/// `lambda(G)` and `Lambda(G)` (up to `cap` pairs, canonical order).
pub fn lambda_and_lambda_set_with(g: &Graph, cap: usize, budget: &Budget) -> Result<LambdaSet> {
    let (lambda, sets, mut overflow) = pec::optimal_pecs(g, usize::MAX, budget)?;
    let mut pairs = Vec::new();
    for s in sets {
        if !colourings(g, s, false, &mut pairs, cap) {
            overflow = true;
            break;
        }
    }
    pairs.sort_by(DisjointPair::canonical_cmp);
    Ok(LambdaSet {
        lambda,
        pairs,
        overflow,
    })
}

pub fn mu_and_lambda_mu(g: &Graph, cap: usize) -> Result<LambdaMuSet> {
    mu_and_lambda_mu_with(g, cap, &Budget::unlimited())
}

/// `mu(G)`, `mu'(G)` and `Lambda_mu(G)` (up to `cap` pairs).
///
/// `mu` comes from [`pair_optimum`]; the pairs from decompositions. The two
/// must agree, otherwise an [`Error::Inconsistent`] is returned.
pub fn mu_and_lambda_mu_with(g: &Graph, cap: usize, budget: &Budget) -> Result<LambdaMuSet> {
    let opt = pair_optimum_with(g, budget)?;
    let (lambda, sets, mut overflow) = pec::optimal_pecs(g, usize::MAX, budget)?;
    let inconsistent = |message: String| Error::Inconsistent {
        graph6: to_graph6(g),
        message,
    };
    if lambda != opt.lambda {
        return Err(inconsistent(format!(
            "lambda: {} by decompositions, {} by pair search",
            lambda, opt.lambda
        )));
    }
    let best = sets.iter().map(|&s| best_h(g, s)).max().unwrap_or(0);
    if best != opt.mu {
        return Err(inconsistent(format!(
            "mu: {} by decompositions, {} by pair search",
            best, opt.mu
        )));
    }
    let mut pairs = Vec::new();
    for s in sets.into_iter().filter(|&s| best_h(g, s) == best) {
        if !colourings(g, s, true, &mut pairs, cap) {
            overflow = true;
            break;
        }
    }
    pairs.sort_by(DisjointPair::canonical_cmp);
    Ok(LambdaMuSet {
        lambda,
        mu: opt.mu,
        mu_prime: lambda - opt.mu,
        pairs,
        overflow,
    })
}

// ---------------------------------------------------------------------------
// maximally intersecting triples

/// Optimal triples of the lexicographic search.
#[derive(Clone, Debug)]
pub struct TripleSearch {
    /// All optimal triples, in canonical order (capped).
    pub optima: Vec<MatchingTriple>,
    /// Number of `(M, (H, H'))` combinations examined.
    pub examined: usize,
    pub overflow: bool,
}

impl TripleSearch {
    pub fn best(&self) -> Option<&MatchingTriple> {
        self.optima.first()
    }
}

/// Default cap on enumerated matchings and pairs.
pub const DEFAULT_CAP: usize = 1 << 20;

pub fn maximally_intersecting(g: &Graph) -> Result<MatchingTriple> {
    let s = maximally_intersecting_all(g, DEFAULT_CAP, &Budget::unlimited())?;
    Ok(s.optima.first().copied().unwrap_or(MatchingTriple::new(
        Matching::empty(),
        DisjointPair {
            h: Matching::empty(),
            h_prime: Matching::empty(),
        },
    )))
}

/// Every maximally intersecting triple: `M` maximum, `(H, H')` in
/// `Lambda_mu`, then `|M ∩ (H ∪ H')|` maximal, then `|M ∩ H|` maximal.
///
/// Nested enumeration over maximum matchings and `Lambda_mu`; optima are
/// listed with the maximum matching varying slowest, both in canonical
/// order.
pub fn maximally_intersecting_all(g: &Graph, cap: usize, budget: &Budget) -> Result<TripleSearch> {
    let ms = enumerate_maximum_matchings_with(g, cap, budget)?;
    let lm = mu_and_lambda_mu_with(g, cap, budget)?;
    let mut best = (0usize, 0usize);
    let mut optima: Vec<MatchingTriple> = Vec::new();
    let mut overflow = ms.overflow || lm.overflow;
    let mut examined = 0;
    for m in &ms.items {
        for pair in &lm.pairs {
            examined += 1;
            let key = (
                (m.edges() & pair.union()).len(),
                (m.edges() & pair.h.edges()).len(),
            );
            match key.cmp(&best) {
                Ordering::Greater => {
                    best = key;
                    optima.clear();
                    optima.push(MatchingTriple::new(*m, *pair));
                }
                Ordering::Equal => {
                    if optima.len() < cap {
                        optima.push(MatchingTriple::new(*m, *pair));
                    } else {
                        overflow = true;
                    }
                }
                Ordering::Less => {}
            }
        }
        if examined % 4096 == 0 {
            budget.tick()?;
        }
    }
    if optima.is_empty() {
        // edgeless graph: one empty triple
        optima.push(MatchingTriple::new(
            ms.items.first().copied().unwrap_or_default(),
            lm.pairs.first().copied().unwrap_or(DisjointPair {
                h: Matching::empty(),
                h_prime: Matching::empty(),
            }),
        ));
    }
    Ok(TripleSearch {
        optima,
        examined,
        overflow,
    })
}

#[derive(Clone, Debug)]
pub struct SaturationReport {
    pub saturated: bool,
    /// A maximally intersecting triple covering `E`, if any.
    pub witness: Option<MatchingTriple>,
    /// Either every optimal triple covers `E` or none does.
    pub all_triples_agree: bool,
    pub triples: usize,
    pub overflow: bool,
}

pub fn is_saturated(g: &Graph) -> Result<SaturationReport> {
    is_saturated_with(g, &Budget::unlimited())
}

pub fn is_saturated_with(g: &Graph, budget: &Budget) -> Result<SaturationReport> {
    let search = maximally_intersecting_all(g, DEFAULT_CAP, budget)?;
    Ok(saturation_from(g, &search))
}

pub(crate) fn saturation_from(g: &Graph, search: &TripleSearch) -> SaturationReport {
    let all = g.all_edges();
    let covering: Vec<&MatchingTriple> = search
        .optima
        .iter()
        .filter(|t| t.covered() == all)
        .collect();
    SaturationReport {
        saturated: !covering.is_empty(),
        witness: covering.first().copied().copied(),
        all_triples_agree: covering.is_empty() || covering.len() == search.optima.len(),
        triples: search.optima.len(),
        overflow: search.overflow,
    }
}

// ---------------------------------------------------------------------------
// parameter report

/// `mu / nu` in lowest terms, undefined for edgeless graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ratio {
    Undefined,
    Value { num: usize, den: usize },
}

impl Ratio {
    pub fn new(num: usize, den: usize) -> Ratio {
        if den == 0 {
            return Ratio::Undefined;
        }
        let g = gcd(num, den);
        Ratio::Value {
            num: num / g,
            den: den / g,
        }
    }

    pub fn is_below_one(&self) -> bool {
        matches!(self, Ratio::Value { num, den } if num < den)
    }
}

impl std::fmt::Display for Ratio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Ratio::Undefined => f.write_str("undefined"),
            Ratio::Value { num, den } => write!(f, "{num}/{den}"),
        }
    }
}

impl Serialize for Ratio {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Clone, Debug)]
pub struct ParamReport {
    pub nu: usize,
    pub lambda: usize,
    pub mu: usize,
    pub mu_prime: usize,
    pub ratio: Ratio,
    pub max_matching: Matching,
    pub pair: DisjointPair,
}

impl ParamReport {
    /// The bounds every graph must satisfy.
    pub fn invariants_hold(&self) -> bool {
        self.mu <= self.nu
            && self.mu_prime <= self.mu
            && self.lambda == self.mu + self.mu_prime
            && 4 * self.nu <= 5 * self.mu
    }
}

pub fn param_report(g: &Graph) -> ParamReport {
    param_report_with(g, &Budget::unlimited()).expect("unlimited budget")
}

pub fn param_report_with(g: &Graph, budget: &Budget) -> Result<ParamReport> {
    let m = max_matching(g);
    let opt = pair_optimum_with(g, budget)?;
    let report = ParamReport {
        nu: m.len(),
        lambda: opt.lambda,
        mu: opt.mu,
        mu_prime: opt.lambda - opt.mu,
        ratio: Ratio::new(opt.mu, m.len()),
        max_matching: m,
        pair: opt.witness,
    };
    debug_assert!(report.invariants_hold(), "{report:?}");
    Ok(report)
}

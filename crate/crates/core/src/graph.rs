//! Simple undirected graphs on the vertex set `{0, .., n-1}`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};

pub type Vertex = usize;

/// Upper bound on the number of edges; edge subsets are 128-bit sets.
pub const MAX_EDGES: usize = 128;

/// An immutable simple graph.
///
/// Edges are stored in lexicographic order of `(min, max)` endpoints and that
/// position is the edge's index in every [`EdgeSet`] over this graph.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    // (neighbour, edge index), sorted by neighbour
    adj: Vec<Vec<(Vertex, usize)>>,
    incident: Vec<EdgeSet>,
}

impl Graph {
    /// Builds a graph, rejecting loops, parallel edges and bad labels.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        if list.len() > MAX_EDGES {
            return Err(Error::TooManyEdges(list.len()));
        }
        let mut adj = vec![Vec::new(); n];
        let mut incident = vec![EdgeSet::EMPTY; n];
        for (i, &(u, v)) in list.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
            incident[u].insert(i);
            incident[v].insert(i);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
            incident,
        })
    }

    pub fn empty(n: usize) -> Graph {
        Graph::new(n, std::iter::empty()).expect("edgeless graph is valid")
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid clique")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, i: usize) -> (Vertex, Vertex) {
        self.edges[i]
    }

    /// Neighbours of `v` with the connecting edge index, sorted by neighbour.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, usize)] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Edges incident to `v`.
    #[inline]
    pub fn incident(&self, v: Vertex) -> EdgeSet {
        self.incident[v]
    }

    #[inline]
    pub fn degree_in(&self, set: EdgeSet, v: Vertex) -> usize {
        (set & self.incident[v]).len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adj[u]
            .binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|pos| self.adj[u][pos].1)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// All edges as a set.
    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.m())
    }

    /// Checks that every member of `set` is an edge of this graph.
    pub fn check_subset(&self, set: EdgeSet) -> Result<()> {
        match (set - self.all_edges()).first() {
            Some(i) => Err(Error::ForeignEdge(i)),
            None => Ok(()),
        }
    }

    /// Collects the edge indices of `(u, v)` pairs; fails on non-edges.
    pub fn edge_set_of<I>(&self, pairs: I) -> Result<EdgeSet>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut s = EdgeSet::EMPTY;
        for (u, v) in pairs {
            match self.edge_index(u, v) {
                Some(i) => s.insert(i),
                None => return Err(Error::NotASubgraph),
            }
        }
        Ok(s)
    }

    pub fn edge_pairs(&self, set: EdgeSet) -> Vec<(Vertex, Vertex)> {
        set.iter().map(|i| self.edges[i]).collect()
    }

    /// Vertices touched by `set`, as a membership vector.
    pub fn covered(&self, set: EdgeSet) -> Vec<bool> {
        let mut c = vec![false; self.n];
        for i in set {
            let (u, v) = self.edges[i];
            c[u] = true;
            c[v] = true;
        }
        c
    }

    /// Returns `Err(NotAMatching(v))` naming a vertex covered twice.
    pub fn check_matching(&self, set: EdgeSet) -> Result<()> {
        self.check_subset(set)?;
        for v in 0..self.n {
            if self.degree_in(set, v) > 1 {
                return Err(Error::NotAMatching(v));
            }
        }
        Ok(())
    }

    pub fn is_matching(&self, set: EdgeSet) -> bool {
        self.check_matching(set).is_ok()
    }

    /// The spanning subgraph `(V, set)` as a graph in its own right.
    pub fn spanning_subgraph(&self, set: EdgeSet) -> Graph {
        Graph::new(self.n, set.iter().map(|i| self.edges[i])).expect("subgraph of a valid graph")
    }

    /// Induced subgraph on `V \ removed`, plus the map from new to old labels.
    pub fn remove_vertices(&self, removed: &[Vertex]) -> Result<(Graph, Vec<Vertex>)> {
        let mut gone = vec![false; self.n];
        for &v in removed {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            gone[v] = true;
        }
        let keep: Vec<Vertex> = (0..self.n).filter(|&v| !gone[v]).collect();
        let mut relabel = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            relabel[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| !gone[u] && !gone[v])
            .map(|&(u, v)| (relabel[u], relabel[v]));
        Ok((Graph::new(keep.len(), edges)?, keep))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("permutation of a valid graph")
    }

    pub fn leaves(&self) -> Vec<Vertex> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Connected components of the spanning subgraph `(V, set)`, each sorted.
    pub fn vertex_components(&self, set: EdgeSet) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &(w, i) in &self.adj[u] {
                    if set.contains(i) && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// A graph on zero vertices is reported as not connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.vertex_components(self.all_edges()).len() == 1
    }

    /// Two-colouring of `(V, set)`, or an odd cycle if none exists.
    pub fn two_coloring(&self, set: EdgeSet) -> std::result::Result<Vec<bool>, Vec<Vertex>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &(w, i) in &self.adj[u] {
                    if !set.contains(i) {
                        continue;
                    }
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => {
                            return Err(odd_cycle(u, w, &parent, &depth));
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(color.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring(self.all_edges()).is_ok()
    }

    /// Degrees, leaves, connectivity and bipartiteness in one record.
    pub fn basic_queries(&self) -> BasicQueries {
        let coloring = self.two_coloring(self.all_edges());
        let (bipartition, odd_cycle) = match coloring {
            Ok(c) => (Some(c), None),
            Err(cycle) => (None, Some(cycle)),
        };
        BasicQueries {
            degrees: (0..self.n).map(|v| self.degree(v)).collect(),
            leaves: self.leaves(),
            is_connected: self.is_connected(),
            is_bipartite: bipartition.is_some(),
            bipartition,
            odd_cycle,
        }
    }

    /// Classifies each component of `(V, set)` as a path, a cycle or neither.
    pub fn census(&self, set: EdgeSet) -> ComponentCensus {
        let mut census = ComponentCensus::default();
        for comp in self.vertex_components(set) {
            let deg = |v: Vertex| self.degree_in(set, v);
            if let Some(&bad) = comp.iter().find(|&&v| deg(v) > 2) {
                census.others.push(OtherComponent {
                    vertices: comp,
                    offending: bad,
                });
                continue;
            }
            let ends: Vec<Vertex> = comp.iter().copied().filter(|&v| deg(v) <= 1).collect();
            if comp.len() == 1 {
                census.paths.push(comp);
                census.even_paths += 1;
            } else if ends.is_empty() {
                let cyc = self.walk_cycle(set, comp[0]);
                if cyc.len().is_multiple_of(2) {
                    census.even_cycles += 1;
                } else {
                    census.odd_cycles += 1;
                }
                census.cycles.push(cyc);
            } else {
                let walk = self.walk_path(set, ends[0]);
                if (walk.len() - 1).is_multiple_of(2) {
                    census.even_paths += 1;
                } else {
                    census.odd_paths += 1;
                }
                census.paths.push(walk);
            }
        }
        census
    }

    /// Vertex sequence of the path in `set` starting at endpoint `start`.
    pub(crate) fn walk_path(&self, set: EdgeSet, start: Vertex) -> Vec<Vertex> {
        let mut walk = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = self.adj[cur]
                .iter()
                .find(|&&(w, i)| set.contains(i) && w != prev)
                .map(|&(w, _)| w);
            match next {
                Some(w) => {
                    walk.push(w);
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        walk
    }

    /// Cycle through `start` in `set`, leaving towards the smaller neighbour.
    pub(crate) fn walk_cycle(&self, set: EdgeSet, start: Vertex) -> Vec<Vertex> {
        let mut walk = vec![start];
        let mut prev = start;
        let mut cur = self.adj[start]
            .iter()
            .find(|&&(_, i)| set.contains(i))
            .map(|&(w, _)| w)
            .expect("cycle vertex has an edge");
        while cur != start {
            walk.push(cur);
            let next = self.adj[cur]
                .iter()
                .find(|&&(w, i)| set.contains(i) && w != prev)
                .map(|&(w, _)| w)
                .expect("cycle vertex has two edges");
            prev = cur;
            cur = next;
        }
        walk
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.n {
            let _ = writeln!(s, "  {v};");
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(s, "  {u} -- {v};");
        }
        s.push_str("}\n");
        s
    }

    /// DOT rendering with edges of `highlight` drawn bold.
    pub fn to_dot_highlighted(&self, highlight: EdgeSet) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.n {
            let _ = writeln!(s, "  {v};");
        }
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if highlight.contains(i) {
                let _ = writeln!(s, "  {u} -- {v} [style=bold];");
            } else {
                let _ = writeln!(s, "  {u} -- {v};");
            }
        }
        s.push_str("}\n");
        s
    }
}

fn odd_cycle(u: Vertex, w: Vertex, parent: &[Vertex], depth: &[usize]) -> Vec<Vertex> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicQueries {
    pub degrees: Vec<usize>,
    pub leaves: Vec<Vertex>,
    pub is_connected: bool,
    pub is_bipartite: bool,
    pub bipartition: Option<Vec<bool>>,
    pub odd_cycle: Option<Vec<Vertex>>,
}

/// A component containing a vertex of degree at least 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OtherComponent {
    pub vertices: Vec<Vertex>,
    pub offending: Vertex,
}

/// Components of a spanning subgraph sorted into paths and cycles.
///
/// Paths are listed from one endpoint to the other; an isolated vertex is a
/// path of length zero and is counted as even.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComponentCensus {
    pub paths: Vec<Vec<Vertex>>,
    pub cycles: Vec<Vec<Vertex>>,
    pub others: Vec<OtherComponent>,
    pub odd_paths: usize,
    pub even_paths: usize,
    pub even_cycles: usize,
    pub odd_cycles: usize,
}

impl ComponentCensus {
    /// True if every component is a path or an even cycle.
    pub fn is_pec(&self) -> bool {
        self.others.is_empty() && self.odd_cycles == 0
    }

    pub fn vertex_count(&self) -> usize {
        self.paths.iter().map(Vec::len).sum::<usize>()
            + self.cycles.iter().map(Vec::len).sum::<usize>()
            + self.others.iter().map(|o| o.vertices.len()).sum::<usize>()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::new(2, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = Graph::new(4, [(3, 2), (1, 0), (0, 3)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (2, 3)]);
        assert_eq!(g.edge_index(3, 0), Some(1));
        assert_eq!(g.edge_index(1, 2), None);
    }

    #[test]
    fn census_of_small_graphs() {
        let c4 = Graph::cycle(4);
        let c = c4.census(c4.all_edges());
        assert_eq!((c.even_cycles, c.paths.len()), (1, 0));
        assert_eq!(c.cycles[0], vec![0, 1, 2, 3]);

        let g = Graph::new(3, [(0, 1)]).unwrap();
        let c = g.census(g.all_edges());
        assert_eq!((c.odd_paths, c.even_paths), (1, 1));
        assert!(c.is_pec());

        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = star.census(star.all_edges());
        assert_eq!(c.others.len(), 1);
        assert_eq!(c.others[0].offending, 0);
    }

    #[test]
    fn queries() {
        let c3 = Graph::cycle(3);
        let q = c3.basic_queries();
        assert!(!q.is_bipartite);
        assert_eq!(q.odd_cycle.as_ref().map(Vec::len), Some(3));

        let q = Graph::empty(3).basic_queries();
        assert!(!q.is_connected);
        assert!(q.leaves.is_empty());

        let c5 = Graph::cycle(5);
        let cyc = c5.basic_queries().odd_cycle.unwrap();
        assert_eq!(cyc.len(), 5);
        for w in cyc.windows(2) {
            assert!(c5.has_edge(w[0], w[1]));
        }
        assert!(c5.has_edge(cyc[0], *cyc.last().unwrap()));
    }

    #[test]
    fn remove_vertices_relabels() {
        let k2 = Graph::complete(2);
        let (g, map) = k2.remove_vertices(&[]).unwrap();
        assert_eq!(g, k2);
        assert_eq!(map, vec![0, 1]);

        let (g, map) = k2.remove_vertices(&[0]).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
        assert_eq!(map, vec![1]);

        let (g, map) = Graph::cycle(4).remove_vertices(&[2]).unwrap();
        assert_eq!(g, Graph::new(3, [(0, 1), (0, 2)]).unwrap());
        assert_eq!(map, vec![0, 1, 3]);

        assert!(k2.remove_vertices(&[5]).is_err());
    }

    #[test]
    fn dot_export_lists_edges() {
        let dot = Graph::path(3).to_dot();
        assert!(dot.contains("0 -- 1;"));
        assert!(dot.contains("1 -- 2;"));
    }
}

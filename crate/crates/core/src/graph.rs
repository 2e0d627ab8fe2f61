//! Immutable simple graphs and the graph algebra used throughout the crate.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::VertexSet;
use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one bitset per vertex; the constructors guarantee
/// no loops and symmetric adjacency.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// Wire form: `{"n": .., "edges": [[u, v], ...]}` with 0-based vertices.
#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        if r.n == 0 {
            return Err(Error::input("a graph needs at least one vertex"));
        }
        let edges: Vec<_> = r.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::from_edges(r.n, &edges)
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::empty(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::edgeless(n);
        for u in 0..n {
            g.adj[u] = VertexSet::full(n);
            g.adj[u].remove(u);
        }
        g
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("path edges are valid")
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::input(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    /// Builds a graph from an explicit edge list. Loops, duplicate edges (in
    /// either orientation) and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::edgeless(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            if g.adj[u].contains(v) {
                return Err(Error::input(format!("duplicate edge ({u}, {v})")));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Like [`Graph::from_edges`], but silently ignores repeated pairs.
    pub(crate) fn from_edge_iter(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::edgeless(n);
        for (u, v) in edges {
            debug_assert!(u != v);
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighbourhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    /// Swaps edges and non-edges.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Self::edgeless(n);
        for u in 0..n {
            let mut row = VertexSet::full(n);
            row.difference_with(&self.adj[u]);
            row.remove(u);
            g.adj[u] = row;
        }
        g
    }

    /// `self + other`: the vertices of `other` are shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Self::from_edge_iter(shift + other.n(), edges)
    }

    /// Disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let cross = (0..shift).flat_map(|u| (0..other.n()).map(move |v| (u, v + shift)));
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)))
            .chain(cross);
        Self::from_edge_iter(shift + other.n(), edges)
    }

    /// Subgraph induced by `s`, relabelled `0..|s|` in increasing order of the
    /// original identifiers.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        if s.universe() != self.n() {
            return Err(Error::input(format!(
                "vertex set over 0..{} used with a graph on {} vertices",
                s.universe(),
                self.n()
            )));
        }
        Ok(self.induced_unchecked(&s.to_vec()))
    }

    /// Subgraph induced by a list of vertices (order and duplicates are
    /// normalised away).
    pub fn induced_by(&self, vertices: &[usize]) -> Result<Graph> {
        if let Some(&bad) = vertices.iter().find(|&&v| v >= self.n()) {
            return Err(Error::input(format!(
                "vertex {bad} is not in a graph on {} vertices",
                self.n()
            )));
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        Ok(self.induced_unchecked(&sorted))
    }

    fn induced_unchecked(&self, sorted: &[usize]) -> Graph {
        let mut g = Self::edgeless(sorted.len());
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate().skip(i + 1) {
                if self.adj[u].contains(v) {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        g
    }

    /// Image of the graph under `perm`: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = VertexSet::empty(n);
        if perm.len() != n {
            return Err(Error::input("permutation length differs from vertex count"));
        }
        for &p in perm {
            if p >= n || seen.contains(p) {
                return Err(Error::input("relabelling is not a permutation"));
            }
            seen.insert(p);
        }
        Ok(Self::from_edge_iter(n, self.edges().map(|(u, v)| (perm[u], perm[v]))))
    }

    /// The connected component of `start` inside the subgraph induced by
    /// `within`. `start` must belong to `within`.
    pub fn component_within(&self, start: usize, within: &VertexSet) -> VertexSet {
        debug_assert!(within.contains(start));
        let mut seen = VertexSet::empty(self.n());
        seen.insert(start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(self.n());
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(within);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    /// Components of the subgraph induced by `within`, ordered by smallest
    /// member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut rest = within.clone();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.component_within(v, within);
            rest.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Whether the subgraph induced by `within` is connected. The empty set
    /// counts as connected.
    pub fn is_connected_within(&self, within: &VertexSet) -> bool {
        match within.first() {
            None => true,
            Some(v) => self.component_within(v, within).len() == within.len(),
        }
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(&self.vertices())
    }

    /// Whether `s` is pairwise adjacent.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut others = s.clone();
            others.remove(v);
            others.is_subset(&self.adj[v])
        })
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Whether `v` is adjacent to every other vertex.
    pub fn is_universal(&self, v: usize) -> bool {
        self.degree(v) + 1 == self.n()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

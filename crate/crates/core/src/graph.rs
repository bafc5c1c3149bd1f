//! Finite simple undirected graphs over dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::bitset::{VertexSet, MAX_VERTICES};

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("{0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("requires connected graph")]
    Disconnected,
    #[error("contract violation: {0}")]
    Contract(String),
}

/// Immutable simple graph with bitset adjacency rows.
///
/// An optional side table maps ids to display labels; it plays no part in
/// equality.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::empty(); n],
            labels: None,
        })
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            g.insert_edge(a, b)?;
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        Graph {
            n: adj.len(),
            adj,
            labels: None,
        }
    }

    pub(crate) fn insert_edge(&mut self, a: Vertex, b: Vertex) -> Result<(), GraphError> {
        for v in [a, b] {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        if self.adj[a].contains(b) {
            return Err(GraphError::DuplicateEdge(a.min(b), a.max(b)));
        }
        self.adj[a].insert(b);
        self.adj[b].insert(a);
        Ok(())
    }

    /// Attaches display labels, one per vertex.
    pub fn with_labels<S: Into<String>>(mut self, labels: Vec<S>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels.into_iter().map(Into::into).collect());
        self
    }

    pub fn label(&self, v: Vertex) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<Vertex> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.adj[a].contains(b)
    }

    /// `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.adj[v]
    }

    /// `N[v] = N(v) ∪ {v}`.
    #[inline]
    pub fn closed_neighborhood(&self, v: Vertex) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Degree sequence sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edges `(i, j)` with `i < j` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices()
            .flat_map(move |a| self.adj[a].iter().filter(move |&b| b > a).map(move |b| (a, b)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Vertices reachable from `start` inside the subgraph induced on `allowed`.
    /// `start` itself must be in `allowed`.
    pub fn reach_within(&self, start: Vertex, allowed: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::empty();
            for v in frontier.iter() {
                next = next.union(&self.adj[v]);
            }
            next = next.intersection(allowed).difference(&seen);
            seen = seen.union(&next);
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.reach_within(0, &self.all()).len() == self.n
    }

    pub fn require_connected(&self) -> Result<(), GraphError> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(GraphError::Disconnected)
        }
    }

    /// Connected components, each as a vertex set, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.induced_components(&self.all())
    }

    /// Components of the subgraph induced on `within`, ordered by least member.
    pub fn induced_components(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut left = *within;
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach_within(v, &left);
            left = left.difference(&c);
            out.push(c);
        }
        out
    }

    /// True iff `a` and `b` lie in different components of `G - S`.
    pub fn separates(&self, s: &VertexSet, a: Vertex, b: Vertex) -> Result<bool, GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(GraphError::Contract(format!("separates: a = b = {a}")));
        }
        if s.contains(a) || s.contains(b) {
            return Err(GraphError::Contract(format!(
                "separates: endpoint in separator (a={a}, b={b}, S={s})"
            )));
        }
        let allowed = self.all().difference(s);
        Ok(!self.reach_within(a, &allowed).contains(b))
    }

    /// Hop distances from `src`; `None` for unreachable vertices.
    pub fn bfs(&self, src: Vertex) -> Vec<Option<usize>> {
        self.bfs_within(src, &self.all())
    }

    /// Hop distances from `src` inside the subgraph induced on `allowed`.
    pub fn bfs_within(&self, src: Vertex, allowed: &VertexSet) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].unwrap();
            for w in self.adj[v].intersection(allowed).iter() {
                if dist[w].is_none() {
                    dist[w] = Some(dv + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Lexicographically least shortest path from `src` to `dst` inside the
    /// subgraph induced on `allowed` (both endpoints must be allowed).
    pub fn shortest_path_within(
        &self,
        src: Vertex,
        dst: Vertex,
        allowed: &VertexSet,
    ) -> Option<Vec<Vertex>> {
        // distances from dst, then greedy walk from src choosing least id
        let dist = self.bfs_within(dst, allowed);
        let mut d = dist[src]?;
        let mut path = vec![src];
        let mut cur = src;
        while d > 0 {
            let next = self.adj[cur]
                .intersection(allowed)
                .iter()
                .find(|&w| dist[w] == Some(d - 1))?;
            path.push(next);
            cur = next;
            d -= 1;
        }
        Some(path)
    }

    /// All-pairs hop distances.
    pub fn distances(&self) -> DistanceMatrix {
        let d = self.vertices().map(|v| self.bfs(v)).collect();
        DistanceMatrix { n: self.n, d }
    }

    /// Subgraph induced on `keep`, relabelled to `0..keep.len()` in increasing
    /// order of the original ids. Returns the graph and the id map.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<Vertex>) {
        let map: Vec<Vertex> = keep.iter().collect();
        let mut adj = vec![VertexSet::empty(); map.len()];
        for (i, &a) in map.iter().enumerate() {
            for (j, &b) in map.iter().enumerate() {
                if self.has_edge(a, b) {
                    adj[i].insert(j);
                }
            }
        }
        (Graph::from_adjacency(adj), map)
    }

    /// Graph with vertices relabelled so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::empty(); self.n];
        for (a, b) in self.edges() {
            adj[perm[a]].insert(perm[b]);
            adj[perm[b]].insert(perm[a]);
        }
        Graph::from_adjacency(adj)
    }

    /// The same graph without edge `ab`.
    pub fn without_edge(&self, a: Vertex, b: Vertex) -> Graph {
        let mut adj = self.adj.clone();
        adj[a].remove(b);
        adj[b].remove(a);
        Graph {
            n: self.n,
            adj,
            labels: self.labels.clone(),
        }
    }
}

/// All-pairs shortest-path hop counts; `None` marks unreachable pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Vec<Option<usize>>>,
}

impl DistanceMatrix {
    #[inline]
    pub fn get(&self, a: Vertex, b: Vertex) -> Option<usize> {
        self.d[a][b]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for row in &self.d {
            for x in row {
                best = best.max((*x)?);
            }
        }
        Some(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(Graph::empty(257), Err(GraphError::TooLarge(257))));
    }

    #[test]
    fn neighborhoods_match_edges() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.neighbors(0).to_vec(), vec![1, 2]);
        assert_eq!(g.closed_neighborhood(0).to_vec(), vec![0, 1, 2]);
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn separation_examples() {
        let g = c4();
        assert!(g.separates(&VertexSet::pair(1, 3), 0, 2).unwrap());
        assert!(!g.separates(&VertexSet::empty(), 0, 2).unwrap());
        let p = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(p.separates(&VertexSet::singleton(1), 0, 2).unwrap());
    }

    #[test]
    fn separation_contract() {
        let g = c4();
        assert!(matches!(
            g.separates(&VertexSet::singleton(0), 0, 2),
            Err(GraphError::Contract(_))
        ));
        assert!(matches!(
            g.separates(&VertexSet::empty(), 1, 1),
            Err(GraphError::Contract(_))
        ));
    }

    #[test]
    fn distance_examples() {
        assert_eq!(c4().distances().get(0, 2), Some(2));
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let d = k3.distances();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(d.get(a, b), Some(usize::from(a != b)));
            }
        }
        let two = Graph::empty(2).unwrap();
        assert_eq!(two.distances().get(0, 1), None);
        assert!(!two.is_connected());
    }

    #[test]
    fn lexicographic_shortest_path() {
        let g = c4();
        assert_eq!(g.shortest_path_within(0, 2, &g.all()), Some(vec![0, 1, 2]));
        let allowed = g.all().difference(&VertexSet::singleton(1));
        assert_eq!(g.shortest_path_within(0, 2, &allowed), Some(vec![0, 3, 2]));
    }

    #[test]
    fn labels_do_not_affect_equality() {
        let a = c4();
        let b = c4().with_labels(vec!["u", "x", "y", "v"]);
        assert_eq!(a, b);
        assert_eq!(b.vertex_by_label("y"), Some(2));
        assert_eq!(b.label(3), "v");
    }
}

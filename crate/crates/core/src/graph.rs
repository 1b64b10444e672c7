//! Simple undirected graphs over dense vertex ids `0..n`.
//!
//! Every construction in the crate is assembled from the handful of
//! operations here: disjoint union, join, isolated padding and vertex
//! deletion. Union and join keep the ids of the left operand and shift the
//! right operand by `left.n()`, so constructions are reproducible.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A set of vertex ids. Range checks happen against the graph it is used with.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(BTreeSet<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        self.0.remove(&v)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn max(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    fn check_range(&self, n: usize) -> Result<()> {
        match self.max() {
            Some(v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl Extend<Vertex> for VertexSet {
    fn extend<I: IntoIterator<Item = Vertex>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(vs: [Vertex; N]) -> Self {
        vs.into_iter().collect()
    }
}

/// Immutable simple graph. Neighbor lists are kept sorted, so edge iteration
/// is lexicographic in `(min endpoint, max endpoint)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

/// Result of [`Graph::delete_vertices`]: the compacted survivor graph and,
/// for each new id, the id it had in the original graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub original: Vec<Vertex>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate pairs (in either order)
    /// collapse to a single edge.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        Graph::from_edges(n, edges.iter().copied())
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph { adj, m })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    /// Maximum degree; 0 for edgeless and empty graphs.
    pub fn max_deg(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn isolated_count(&self) -> usize {
        self.adj.iter().filter(|l| l.is_empty()).count()
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(self.n() + other.n(), edges).expect("union of valid graphs")
    }

    /// Disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let cross = (0..self.n()).flat_map(|u| (0..other.n()).map(move |v| (u, v + shift)));
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)))
            .chain(cross);
        Graph::from_edges(self.n() + other.n(), edges).expect("join of valid graphs")
    }

    pub fn add_isolated(&self, t: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj.resize(self.n() + t, Vec::new());
        Graph { adj, m: self.m }
    }

    /// `copies` disjoint copies of `self`; copy `c` occupies ids
    /// `[c * n, (c + 1) * n)`.
    pub fn copies(&self, copies: usize) -> Graph {
        let n = self.n();
        let edges =
            (0..copies).flat_map(|c| self.edges().map(move |(u, v)| (u + c * n, v + c * n)));
        Graph::from_edges(n * copies, edges).expect("copies of a valid graph")
    }

    /// Returns a copy of `self` with the extra edges added.
    pub fn with_edges<I>(&self, extra: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Graph::from_edges(self.n(), self.edges().chain(extra))
    }

    pub fn delete_vertices(&self, doomed: &VertexSet) -> Result<InducedSubgraph> {
        doomed.check_range(self.n())?;
        let mut new_id = vec![usize::MAX; self.n()];
        let mut original = Vec::with_capacity(self.n() - doomed.len());
        for v in self.vertices().filter(|&v| !doomed.contains(v)) {
            new_id[v] = original.len();
            original.push(v);
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|(u, v)| (new_id[u], new_id[v]));
        let graph = Graph::from_edges(original.len(), edges)?;
        Ok(InducedSubgraph { graph, original })
    }

    pub fn is_vertex_cover(&self, cover: &VertexSet) -> Result<bool> {
        cover.check_range(self.n())?;
        Ok(self
            .edges()
            .all(|(u, v)| cover.contains(u) || cover.contains(v)))
    }

    /// True iff every edge has exactly one endpoint in `side`.
    pub fn is_bipartition(&self, side: &VertexSet) -> bool {
        self.edges()
            .all(|(u, v)| side.contains(u) != side.contains(v))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, cycle, path, star};

    #[test]
    fn make_graph_examples() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));

        let g = Graph::new(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!((g.n(), g.m()), (3, 1));

        assert_eq!(Graph::new(1, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = Graph::new(4, &[(3, 2), (1, 0), (2, 0), (0, 3)]).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (0, 3), (2, 3)]);
    }

    #[test]
    fn disjoint_union_examples() {
        let k1 = Graph::empty(1);
        let u = k1.disjoint_union(&k1);
        assert_eq!((u.n(), u.m()), (2, 0));

        let k2 = complete(2);
        let u = k2.disjoint_union(&k2);
        assert_eq!(u.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);

        let g = cycle(5);
        assert_eq!(g.disjoint_union(&Graph::empty(0)), g);
        assert_eq!(Graph::empty(0).disjoint_union(&g), g);
    }

    #[test]
    fn join_examples() {
        let k1 = Graph::empty(1);
        assert_eq!(k1.join(&k1), complete(2));
        assert_eq!(complete(2).join(&k1), complete(3));

        let two = Graph::empty(2);
        let k22 = two.join(&two);
        assert_eq!(k22.m(), 4);
        assert!(k22.vertices().all(|v| k22.degree(v) == 2));
        assert!(!k22.has_edge(0, 1) && !k22.has_edge(2, 3));
    }

    #[test]
    fn add_isolated_examples() {
        let k2 = complete(2);
        assert_eq!(k2.add_isolated(0), k2);
        let g = k2.add_isolated(3);
        assert_eq!((g.n(), g.m()), (5, 1));
        assert_eq!(Graph::empty(0).add_isolated(4), Graph::empty(4));
    }

    #[test]
    fn delete_vertices_examples() {
        let r = complete(3).delete_vertices(&VertexSet::from([0])).unwrap();
        assert_eq!(r.graph, complete(2));
        assert_eq!(r.original, vec![1, 2]);

        let r = complete(2)
            .delete_vertices(&VertexSet::from([0, 1]))
            .unwrap();
        assert_eq!(r.graph, Graph::empty(0));

        let r = path(3).delete_vertices(&VertexSet::from([1])).unwrap();
        assert_eq!(r.graph, Graph::empty(2));
        assert_eq!(r.original, vec![0, 2]);

        assert!(complete(2).delete_vertices(&VertexSet::from([5])).is_err());
    }

    #[test]
    fn max_deg_examples() {
        assert_eq!(complete(2).max_deg(), 1);
        assert_eq!(star(5).max_deg(), 5);
        assert_eq!(cycle(4).max_deg(), 2);
        assert_eq!(Graph::empty(3).max_deg(), 0);
        assert_eq!(Graph::empty(0).max_deg(), 0);
    }

    #[test]
    fn vertex_cover_examples() {
        let k2 = complete(2);
        assert!(k2.is_vertex_cover(&VertexSet::from([0])).unwrap());
        assert!(!k2.is_vertex_cover(&VertexSet::new()).unwrap());
        assert!(cycle(4).is_vertex_cover(&VertexSet::from([0, 2])).unwrap());
        assert!(k2.is_vertex_cover(&VertexSet::from([7])).is_err());
    }

    #[test]
    fn copies_lay_out_in_blocks() {
        let g = path(3).copies(2);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (3, 4), (4, 5)]
        );
        assert_eq!(path(3).copies(0), Graph::empty(0));
    }
}

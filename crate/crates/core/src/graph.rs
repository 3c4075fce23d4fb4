//! Immutable simple undirected graphs over the vertices `0..n`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::GraphError;
use crate::vertex_set::VertexSet;

/// A finite simple undirected graph on the vertices `0..n`.
///
/// Adjacency is stored as one bitset row per vertex. Once built a graph is
/// never mutated; every operation that changes structure returns a new
/// value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices. `n = 0` is allowed.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::empty(n)).collect(),
        }
    }

    /// Builds a graph from an edge list. Repeated edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Builds a graph from adjacency rows, checking symmetry, irreflexivity
    /// and ranges.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self, GraphError> {
        let g = Graph { n: adj.len(), adj };
        g.validate()?;
        Ok(g)
    }

    /// Checks the simple-graph invariants on the stored adjacency.
    pub fn validate(&self) -> Result<(), GraphError> {
        if self.adj.len() != self.n {
            return Err(GraphError::OwnerMismatch {
                set_n: self.adj.len(),
                graph_n: self.n,
            });
        }
        for (u, row) in self.adj.iter().enumerate() {
            if row.owner_n() != self.n {
                return Err(GraphError::OwnerMismatch {
                    set_n: row.owner_n(),
                    graph_n: self.n,
                });
            }
            if row.contains(u) {
                return Err(GraphError::SelfLoop(u));
            }
            for v in row {
                if !self.adj[v].contains(u) {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> core::ops::Range<usize> {
        0..self.n
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        if s.owner_n() == self.n {
            Ok(())
        } else {
            Err(GraphError::OwnerMismatch {
                set_n: s.owner_n(),
                graph_n: self.n,
            })
        }
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let bad = || GraphError::BadPermutation {
            len: perm.len(),
            n: self.n,
        };
        if perm.len() != self.n {
            return Err(bad());
        }
        let image = VertexSet::from_vertices(self.n, perm.iter().copied()).map_err(|_| bad())?;
        if image.len() != self.n {
            return Err(bad());
        }
        let mut b = GraphBuilder::new(self.n);
        for (u, v) in self.edges() {
            b.add_edge(perm[u], perm[v])?;
        }
        Ok(b.build())
    }

    /// The subgraph induced on `keep`, together with the map from new to
    /// original vertex indices. The map is increasing.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_set(keep)?;
        let map: Vec<usize> = keep.to_vec();
        let mut index = alloc::vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            index[old] = new;
        }
        let mut b = GraphBuilder::new(map.len());
        for (new_u, &old_u) in map.iter().enumerate() {
            for old_v in self.adj[old_u].intersection(keep).iter() {
                let new_v = index[old_v];
                if new_u < new_v {
                    b.add_edge(new_u, new_v)?;
                }
            }
        }
        Ok((b.build(), map))
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut b = GraphBuilder::new(self.n + other.n);
        for (u, v) in self.edges() {
            b.push_edge(u, v);
        }
        for (u, v) in other.edges() {
            b.push_edge(u + shift, v + shift);
        }
        b.build()
    }

    /// The complement graph.
    pub fn complement(&self) -> Graph {
        let adj = (0..self.n)
            .map(|v| {
                let mut row = self.adj[v].complement();
                row.remove(v);
                row
            })
            .collect();
        Graph { n: self.n, adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// Incremental edge insertion ahead of freezing a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    adj: Vec<VertexSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            n,
            adj: (0..n).map(|_| VertexSet::empty(n)).collect(),
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder {
            n: g.n,
            adj: g.adj.clone(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Appends a new isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        let v = self.n;
        self.n += 1;
        let n = self.n;
        for row in self.adj.iter_mut() {
            let mut grown = VertexSet::empty(n);
            grown.union_with_smaller(row);
            *row = grown;
        }
        self.adj.push(VertexSet::empty(n));
        v
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.push_edge(u, v);
        Ok(())
    }

    #[inline]
    pub(crate) fn push_edge(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            adj: self.adj,
        }
    }
}

impl VertexSet {
    /// Copies the members of a set over fewer vertices into `self`.
    pub(crate) fn union_with_smaller(&mut self, other: &VertexSet) {
        debug_assert!(other.owner_n() <= self.owner_n());
        for v in other {
            self.insert(v);
        }
    }
}

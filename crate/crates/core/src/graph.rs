//! Immutable simple undirected graphs with bitset adjacency.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::{words_for, Iter, VertexSet};
use crate::error::{Error, Result};

pub type Vertex = usize;

/// A simple undirected graph on the vertices `0..n`.
///
/// Self-loops are never stored: in the games every vertex is reflexive and
/// "moving along the loop" is a pass, which the solvers model directly.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
    edge_count: usize,
    name: Option<String>,
}

/// `dominated` has every neighbour inside the closed neighbourhood of
/// `dominator`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominatedPair {
    pub dominated: Vertex,
    pub dominator: Vertex,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        let stride = words_for(n);
        Graph { n, stride, rows: alloc::vec![0; stride * n], edge_count: 0, name: None }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidEdge { u, v, n });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let (wu, bu) = (v / 64, v % 64);
        if self.rows[u * self.stride + wu] >> bu & 1 == 0 {
            self.rows[u * self.stride + wu] |= 1 << bu;
            self.rows[v * self.stride + u / 64] |= 1 << (u % 64);
            self.edge_count += 1;
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.n
    }

    /// Adjacency row of `v` as packed words.
    #[inline]
    pub fn row(&self, v: Vertex) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && (self.row(u)[v / 64] >> (v % 64)) & 1 == 1
    }

    pub fn neighbors(&self, v: Vertex) -> Iter<'_> {
        Iter::new(self.row(v))
    }

    pub fn neighbor_set(&self, v: Vertex) -> VertexSet {
        VertexSet::from_words(self.row(v), self.n)
    }

    pub fn closed_neighbor_set(&self, v: Vertex) -> VertexSet {
        let mut s = self.neighbor_set(v);
        s.insert(v);
        s
    }

    /// Closed neighbourhood `N[v]` in ascending order.
    pub fn closed_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.neighbors(v).collect();
        let pos = out.partition_point(|&w| w < v);
        out.insert(pos, v);
        out
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Does `dominator` dominate `dominated`, i.e. `N(dominated) ⊆ N[dominator]`?
    pub fn dominates(&self, dominator: Vertex, dominated: Vertex) -> bool {
        if dominator == dominated {
            return false;
        }
        let mut closed = self.neighbor_set(dominator);
        closed.insert(dominator);
        self.neighbor_set(dominated).is_subset_of(closed.words())
    }

    /// Subgraph induced by the vertices where `keep` is true, together with
    /// the map from new ids back to the original ids.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<Vertex>) {
        let old_ids: Vec<Vertex> = keep.iter().filter(|&v| v < self.n).collect();
        let mut new_id = alloc::vec![usize::MAX; self.n];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let mut h = Graph::empty(old_ids.len());
        for (i, &v) in old_ids.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = new_id[w];
                if j != usize::MAX && j > i {
                    h.add_edge(i, j);
                }
            }
        }
        h.name = self.name.clone();
        (h, old_ids)
    }

    /// `self` with vertex `v` deleted; later vertices shift down by one.
    pub fn remove_vertex(&self, v: Vertex) -> Graph {
        let mut keep = VertexSet::full(self.n);
        keep.remove(v);
        self.induced_subgraph(&keep).0
    }
}

/// Labelled equality; names are ignored.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

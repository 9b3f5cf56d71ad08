//! Simple undirected graphs with stable vertex identifiers.
//!
//! Vertices carry arbitrary `u32` identifiers that survive every structural
//! operation (induced subgraphs keep the host's ids, complements keep the
//! vertex set), so certificates can always be reported in terms of the input
//! graph. Internally each vertex also has a dense index: its rank among the
//! sorted identifiers.

mod cobip;
mod embed;
mod families;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub use cobip::{cobipartite_partition, CoBipartition, OddCycle};
pub use embed::{automorphisms, find_induced, find_induced_with, is_isomorphic, DEFAULT_PATTERN_CAP};
pub use families::{generate_family, FamilyId};

pub type Vertex = u32;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Graph {
    ids: Vec<Vertex>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on vertices `1..=n` with the given edges.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let ids: Vec<Vertex> = (1..=n as Vertex).collect();
        Graph::with_vertices(ids, edges)
    }

    /// Graph on an arbitrary identifier set. Identifiers must be distinct.
    pub fn with_vertices(
        ids: impl IntoIterator<Item = Vertex>,
        edges: &[(Vertex, Vertex)],
    ) -> Result<Graph> {
        let mut ids: Vec<Vertex> = ids.into_iter().collect();
        ids.sort_unstable();
        if let Some(w) = ids.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("duplicate vertex {}", w[0])));
        }
        let mut g = Graph {
            adj: vec![Vec::new(); ids.len()],
            ids,
        };
        for &(u, v) in edges {
            if u == v {
                return Err(Error::invalid(format!("loop at edge ({u}, {v})")));
            }
            let (Some(i), Some(j)) = (g.index_of(u), g.index_of(v)) else {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) has an endpoint outside the vertex set"
                )));
            };
            g.adj[i].push(j);
            g.adj[j].push(i);
        }
        for (i, list) in g.adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (u, v) = (g.ids[i], g.ids[w[0]]);
                return Err(Error::invalid(format!(
                    "edge ({}, {}) listed more than once",
                    u.min(v),
                    u.max(v)
                )));
            }
        }
        Ok(g)
    }

    /// Builds from dense-index adjacency lists; lists must be symmetric.
    pub(crate) fn from_index_lists(ids: Vec<Vertex>, mut adj: Vec<Vec<usize>>) -> Graph {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Graph { ids, adj }
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            ids: (1..=n as Vertex).collect(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Graph {
        Graph::empty(n).complement()
    }

    /// The cycle `1 - 2 - ... - n - 1`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::invalid(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (1..=n as Vertex).map(|i| (i, i % n as Vertex + 1)).collect();
        Graph::new(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Vertex identifiers in increasing order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.ids
    }

    pub fn vertex(&self, index: usize) -> Vertex {
        self.ids[index]
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.index_of(v).is_some()
    }

    pub(crate) fn require(&self, v: Vertex) -> Result<usize> {
        self.index_of(v)
            .ok_or_else(|| Error::invalid(format!("vertex {v} is not in the graph")))
    }

    /// Sorted neighbour indices of the vertex with dense index `i`.
    pub fn neighbor_indices(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let list: &[usize] = match self.index_of(v) {
            Some(i) => &self.adj[i],
            None => &[],
        };
        list.iter().map(|&j| self.ids[j])
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.index_of(v).map_or(0, |i| self.adj[i].len())
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(i), Some(j)) => self.adjacent(i, j),
            _ => false,
        }
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (i, list) in self.adj.iter().enumerate() {
            for &j in list.iter().filter(|&&j| j > i) {
                out.push((self.ids[i], self.ids[j]));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut adj = vec![Vec::new(); n];
        let mut mark = vec![false; n];
        for i in 0..n {
            for &j in &self.adj[i] {
                mark[j] = true;
            }
            adj[i] = (0..n).filter(|&j| j != i && !mark[j]).collect();
            for &j in &self.adj[i] {
                mark[j] = false;
            }
        }
        Graph {
            ids: self.ids.clone(),
            adj,
        }
    }

    /// Subgraph induced by `keep`; identifiers are preserved.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Result<Graph> {
        let mut idx: Vec<usize> = keep.iter().map(|&v| self.require(v)).collect::<Result<_>>()?;
        idx.sort_unstable();
        idx.dedup();
        Ok(self.induced_by_indices(&idx))
    }

    /// `idx` must be sorted and duplicate-free.
    pub(crate) fn induced_by_indices(&self, idx: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.order()];
        for (k, &i) in idx.iter().enumerate() {
            pos[i] = k;
        }
        let adj = idx
            .iter()
            .map(|&i| {
                self.adj[i]
                    .iter()
                    .filter_map(|&j| (pos[j] != usize::MAX).then_some(pos[j]))
                    .collect()
            })
            .collect();
        Graph {
            ids: idx.iter().map(|&i| self.ids[i]).collect(),
            adj,
        }
    }

    pub fn remove_vertex(&self, v: Vertex) -> Result<Graph> {
        let i = self.require(v)?;
        let keep: Vec<usize> = (0..self.order()).filter(|&k| k != i).collect();
        Ok(self.induced_by_indices(&keep))
    }

    /// `G * v`: complements the subgraph induced by the neighbourhood of `v`.
    pub fn local_complement(&self, v: Vertex) -> Result<Graph> {
        let c = self.require(v)?;
        let nbrs = &self.adj[c];
        let mut in_nbhd = vec![false; self.order()];
        for &j in nbrs {
            in_nbhd[j] = true;
        }
        let mut adj = self.adj.clone();
        for &a in nbrs {
            let outside: Vec<usize> = adj[a].iter().copied().filter(|&j| !in_nbhd[j]).collect();
            let inside = nbrs.iter().copied().filter(|&j| j != a && !self.adjacent(a, j));
            let mut list = outside;
            list.extend(inside);
            list.sort_unstable();
            adj[a] = list;
        }
        Ok(Graph {
            ids: self.ids.clone(),
            adj,
        })
    }

    /// Applies local complementations in sequence: `G * v1 v2 ...`.
    pub fn local_complement_seq(&self, seq: &[Vertex]) -> Result<Graph> {
        seq.iter().try_fold(self.clone(), |g, &v| g.local_complement(v))
    }

    /// Disjoint union; identifier sets must not intersect.
    pub fn union(&self, other: &Graph) -> Result<Graph> {
        if let Some(v) = other.ids.iter().find(|v| self.contains(**v)) {
            return Err(Error::invalid(format!("vertex {v} occurs in both graphs")));
        }
        let mut edges = self.edges();
        edges.extend(other.edges());
        Graph::with_vertices(self.ids.iter().chain(other.ids.iter()).copied(), &edges)
    }

    /// `G + H`: disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.union(other)?;
        let mut adj = core::mem::take(&mut g.adj);
        let left: Vec<usize> = self.ids.iter().map(|&v| g.index_of(v).unwrap()).collect();
        let right: Vec<usize> = other.ids.iter().map(|&v| g.index_of(v).unwrap()).collect();
        for &i in &left {
            adj[i].extend(right.iter().copied());
        }
        for &j in &right {
            adj[j].extend(left.iter().copied());
        }
        Ok(Graph::from_index_lists(g.ids, adj))
    }

    /// Adds a vertex `id` adjacent to every existing vertex.
    pub fn with_universal_vertex(&self, id: Vertex) -> Result<Graph> {
        self.join(&Graph::with_vertices([id], &[])?)
    }

    /// Renames vertices with `f`, which must be injective on the vertex set.
    pub fn relabel(&self, f: impl Fn(Vertex) -> Vertex) -> Result<Graph> {
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (f(u), f(v))).collect();
        Graph::with_vertices(self.ids.iter().map(|&v| f(v)), &edges)
    }

    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        let idx: Option<Vec<usize>> = set.iter().map(|&v| self.index_of(v)).collect();
        let Some(idx) = idx else { return false };
        idx.iter()
            .enumerate()
            .all(|(a, &i)| idx[a + 1..].iter().all(|&j| i == j || self.adjacent(i, j)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    /// Adjacency bitmasks by dense index, for graphs with at most 64 vertices.
    pub fn masks(&self) -> Option<Vec<u64>> {
        (self.order() <= 64).then(|| {
            self.adj
                .iter()
                .map(|l| l.iter().fold(0u64, |m, &j| m | (1 << j)))
                .collect()
        })
    }

    pub(crate) fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }
}

//! Finite simple undirected graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Adjacency rows are fixed-width 128-bit sets, so every neighbourhood query
//! is a single word operation.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 128;

/// A set of vertices packed into one word.
pub type VertexSet = u128;

/// Iterates the members of a vertex set in ascending order.
pub fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

/// Builds a vertex set from a list of vertex ids.
pub fn set_of(vertices: &[usize]) -> VertexSet {
    vertices.iter().fold(0, |acc, &v| acc | bit(v))
}

#[inline]
pub(crate) const fn bit(v: usize) -> VertexSet {
    1u128 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn full_set(n: usize) -> VertexSet {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Which subconstituent of a vertex to extract.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subconstituent {
    /// Induced on the neighbours of the vertex.
    First,
    /// Induced on the non-neighbours of the vertex, the vertex itself excluded.
    Second,
}

/// Finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.adj[v] = full_set(n) & !bit(v);
        }
        Ok(g)
    }

    /// Cycle `C_n` on `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Path on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from an adjacency predicate evaluated on every pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbourhood rows, checking symmetry and loops.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        for (v, &row) in rows.iter().enumerate() {
            if row & !full_set(n) != 0 {
                return Err(Error::VertexOutOfRange { vertex: 127 - row.leading_zeros() as usize, n });
            }
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            for u in members(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::Malformed(format!("adjacency of {v} and {u} is not symmetric")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Adds the edge `uv`. Panics on out-of-range vertices or loops.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "invalid edge {u}-{v}");
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "invalid edge {u}-{v}");
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Neighbourhood of `v` as a bit set.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertex_set(&self) -> VertexSet {
        full_set(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|u| members(self.adj[u] & !full_set(u + 1)).map(move |v| (u, v))).collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn complement(&self) -> Graph {
        let all = full_set(self.n);
        let adj = (0..self.n).map(|v| !self.adj[v] & all & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Degrees in vertex order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// `Some(k)` if every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    /// Vertices outside `s` adjacent to every member of `s`, ascending.
    pub fn common_neighbors(&self, s: &[usize]) -> Result<Vec<usize>> {
        for &v in s {
            self.check_vertex(v)?;
        }
        Ok(members(self.common_neighbor_set(set_of(s))).collect())
    }

    pub(crate) fn common_neighbor_set(&self, s: VertexSet) -> VertexSet {
        members(s).fold(self.vertex_set(), |acc, v| acc & self.adj[v]) & !s
    }

    /// Subgraph induced by `s`, relabelled by the order-preserving map.
    ///
    /// Returns the graph together with the old vertex id of each new vertex.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
        for &v in s {
            self.check_vertex(v)?;
        }
        let mut old: Vec<usize> = s.to_vec();
        old.sort_unstable();
        old.dedup();
        Ok((self.induced_ordered(&old), old))
    }

    /// Subgraph induced by the listed vertices, new vertex `i` being `order[i]`.
    ///
    /// The caller guarantees distinct in-range entries.
    pub fn induced_ordered(&self, order: &[usize]) -> Graph {
        let k = order.len();
        let mut adj = vec![0; k];
        for i in 0..k {
            for j in i + 1..k {
                if self.has_edge(order[i], order[j]) {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
            }
        }
        Graph { n: k, adj }
    }

    pub fn subconstituent(&self, v: usize, which: Subconstituent) -> Result<Graph> {
        self.check_vertex(v)?;
        let set = match which {
            Subconstituent::First => self.adj[v],
            Subconstituent::Second => self.vertex_set() & !self.adj[v] & !bit(v),
        };
        let order: Vec<usize> = members(set).collect();
        Ok(self.induced_ordered(&order))
    }

    /// Graph obtained by relabelling vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0; self.n];
        for u in 0..self.n {
            for w in members(self.adj[u]) {
                adj[perm[u]] |= bit(perm[w]);
            }
        }
        Graph { n: self.n, adj }
    }

    /// Adds a new vertex adjacent to `nbrs`; returns its id.
    pub fn push_vertex(&mut self, nbrs: VertexSet) -> Result<usize> {
        if self.n == MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n + 1));
        }
        let v = self.n;
        let nbrs = nbrs & full_set(v);
        self.n += 1;
        self.adj.push(nbrs);
        for u in members(nbrs) {
            self.adj[u] |= bit(v);
        }
        Ok(v)
    }

    /// Whether the subgraph induced by `set` is connected. The empty set counts as connected.
    pub fn is_connected_within(&self, set: VertexSet) -> bool {
        if set == 0 {
            return true;
        }
        let start = set.trailing_zeros() as usize;
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            next &= set & !seen;
            seen |= next;
            frontier = next;
        }
        seen == set
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertex_set())
    }

    /// Number of triangles; zero means triangle-free.
    pub fn triangle_count(&self) -> usize {
        let mut count = 0;
        for (u, v) in self.edges() {
            count += (self.adj[u] & self.adj[v] & !full_set(v + 1)).count_ones() as usize;
        }
        count
    }

    /// Whether `map` is an embedding of `pattern` into `self`:
    /// injective, in range, preserving adjacency and non-adjacency.
    pub fn is_embedding(&self, pattern: &Graph, map: &[usize]) -> bool {
        if map.len() != pattern.order() {
            return false;
        }
        let mut used = 0;
        for &v in map {
            if v >= self.n || used & bit(v) != 0 {
                return false;
            }
            used |= bit(v);
        }
        for i in 0..map.len() {
            for j in i + 1..map.len() {
                if pattern.has_edge(i, j) != self.has_edge(map[i], map[j]) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

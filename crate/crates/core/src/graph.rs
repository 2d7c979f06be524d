//! Compact mutable graph with O(1) edge tests and exact backtracking restoration.
//!
//! Vertices are labeled `0..n`. Adjacency is one `u64` bitset row per vertex,
//! sized for at most [`MAX_VERTICES`] vertices; the search trees this engine
//! explores stay far below that.

use std::hash::{Hash, Hasher};

/// Hard capacity of the bitset rows. Searches never grow past this.
pub const MAX_VERTICES: usize = 64;

#[inline(always)]
const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates over the set bit positions of a mask, ascending.
#[inline]
pub fn bits(mask: u64) -> BitIter {
    BitIter(mask)
}

#[derive(Clone, Copy)]
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline(always)]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Simple undirected graph on vertices `0..n` with bitset adjacency rows and
/// cached degrees.
///
/// Invariants (enforced by the mutators): adjacency is symmetric, irreflexive,
/// all bits at index ≥ n are clear, and `deg[v]` equals the popcount of row v.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
    deg: [u8; MAX_VERTICES],
}

impl Graph {
    /// The empty graph on zero vertices.
    pub fn empty() -> Self {
        Graph {
            n: 0,
            adj: [0; MAX_VERTICES],
            deg: [0; MAX_VERTICES],
        }
    }

    /// An edgeless graph on `n` vertices.
    pub fn with_vertices(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph capacity is {MAX_VERTICES}");
        let mut g = Graph::empty();
        g.n = n;
        g
    }

    /// The path v0 v1 … v(k-1) on `k` vertices.
    pub fn new_path(k: usize) -> Self {
        assert!(k >= 2, "a path needs at least 2 vertices, got {k}");
        let mut g = Graph::with_vertices(k);
        for i in 0..k - 1 {
            g.add_edge(i, i + 1);
        }
        g
    }

    #[inline(always)]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline(always)]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        self.adj[i] & bit(j) != 0
    }

    /// Neighbor bitset of `v`.
    #[inline(always)]
    pub fn neighbors(&self, v: usize) -> u64 {
        debug_assert!(v < self.n);
        self.adj[v]
    }

    #[inline(always)]
    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(v < self.n);
        self.deg[v] as usize
    }

    /// Mask with one bit per vertex of the graph.
    #[inline(always)]
    pub fn vertex_mask(&self) -> u64 {
        if self.n == MAX_VERTICES {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    pub fn edge_count(&self) -> usize {
        self.deg[..self.n].iter().map(|&d| d as usize).sum::<usize>() / 2
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.deg[..self.n].iter().map(|&d| d as usize).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.deg[..self.n].iter().map(|&d| d as usize).max()
    }

    /// Edges as sorted `(i, j)` pairs with `i < j`, lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            for j in bits(self.adj[i] & !(bit(i) | (bit(i) - 1))) {
                out.push((i, j));
            }
        }
        out
    }

    /// Appends an isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        assert!(self.n < MAX_VERTICES, "graph capacity is {MAX_VERTICES}");
        let v = self.n;
        self.n += 1;
        debug_assert_eq!(self.adj[v], 0);
        debug_assert_eq!(self.deg[v], 0);
        v
    }

    /// Removes the last vertex, which must be isolated. Inverse of `add_vertex`.
    pub fn pop_vertex(&mut self) {
        assert!(self.n > 0, "pop_vertex on the empty graph");
        let v = self.n - 1;
        assert_eq!(self.deg[v], 0, "pop_vertex on a non-isolated vertex");
        self.n -= 1;
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i < self.n && j < self.n, "vertex out of range");
        assert_ne!(i, j, "self-loops are not allowed");
        assert_eq!(self.adj[i] & bit(j), 0, "edge {{{i},{j}}} already present");
        self.adj[i] |= bit(j);
        self.adj[j] |= bit(i);
        self.deg[i] += 1;
        self.deg[j] += 1;
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) {
        assert!(i < self.n && j < self.n, "vertex out of range");
        assert_ne!(i, j);
        assert_ne!(self.adj[i] & bit(j), 0, "edge {{{i},{j}}} not present");
        self.adj[i] &= !bit(j);
        self.adj[j] &= !bit(i);
        self.deg[i] -= 1;
        self.deg[j] -= 1;
    }

    /// The vertex with the largest index having degree less than 3, or `None`
    /// when the minimum degree is at least 3. The CLI prints `None` as -1.
    pub fn get_largest_low_degree_vertex(&self) -> Option<usize> {
        (0..self.n).rev().find(|&v| self.deg[v] < 3)
    }

    /// Deterministic digest of `(n, adjacency bits)`. Equal graphs give equal
    /// fingerprints; used to assert exact restoration after backtracking.
    pub fn fingerprint(&self) -> u64 {
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.n.hash(&mut h);
        self.adj[..self.n].hash(&mut h);
        h.finish()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A reversible mutation applied through a [`MutationLog`].
#[derive(Clone, Copy, Debug)]
enum Mutation {
    EdgeAdded(u8, u8),
    VertexAdded,
}

/// Position in a mutation log, taken before a group of mutations so the group
/// can be rolled back exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LogMark(usize);

/// Ordered record of reversible mutations. Rolling back to a mark restores the
/// graph bit-identically to its state when the mark was taken.
#[derive(Default)]
pub struct MutationLog {
    entries: Vec<Mutation>,
}

impl MutationLog {
    pub fn new() -> Self {
        MutationLog::default()
    }

    #[inline]
    pub fn mark(&self) -> LogMark {
        LogMark(self.entries.len())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    #[inline]
    pub fn add_edge(&mut self, g: &mut Graph, i: usize, j: usize) {
        g.add_edge(i, j);
        self.entries.push(Mutation::EdgeAdded(i as u8, j as u8));
    }

    #[inline]
    pub fn add_vertex(&mut self, g: &mut Graph) -> usize {
        let v = g.add_vertex();
        self.entries.push(Mutation::VertexAdded);
        v
    }

    /// Undoes, in reverse order, every mutation recorded after `mark`.
    pub fn rollback_to(&mut self, g: &mut Graph, mark: LogMark) {
        assert!(mark.0 <= self.entries.len(), "mark is ahead of the log");
        while self.entries.len() > mark.0 {
            match self.entries.pop().unwrap() {
                Mutation::EdgeAdded(i, j) => g.remove_edge(i as usize, j as usize),
                Mutation::VertexAdded => g.pop_vertex(),
            }
        }
    }
}

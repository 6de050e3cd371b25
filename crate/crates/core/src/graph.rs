//! Finite simple graphs on the dense vertex set `0..n`.

use std::fmt;

use crate::bits::{self, VertexSet};

/// A finite simple graph. Vertices are `0..n`; adjacency is symmetric and
/// irreflexive.
///
/// Rows are packed bitsets, `words` `u64`s per vertex, so the small graphs
/// that dominate the enumerator fit in a single word per row while pixel
/// images of any size are still representable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = bits::words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list.
    ///
    /// Panics on self-loops or endpoints `>= n`. Repeated edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(
            u < self.n && v < self.n,
            "edge ({u}, {v}) out of range for n = {}",
            self.n
        );
        assert_ne!(u, v, "self-loop at vertex {u}");
        bits::set(self.row_mut(u), v);
        bits::set(self.row_mut(v), u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(
            u < self.n && v < self.n,
            "edge ({u}, {v}) out of range for n = {}",
            self.n
        );
        bits::clear(self.row_mut(u), v);
        bits::clear(self.row_mut(v), u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// Open neighbourhood of `v` as packed words.
    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Closed neighbourhood of `v` as packed words.
    pub(crate) fn closed_row(&self, v: usize) -> Vec<u64> {
        let mut r = self.row(v).to_vec();
        bits::set(&mut r, v);
        r
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::test(self.row(u), v)
    }

    /// `u` and `v` are adjacent or equal.
    #[inline]
    pub fn adjacent_or_equal(&self, u: usize, v: usize) -> bool {
        u == v || self.has_edge(u, v)
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter(self.row(v))
    }

    /// `{v}` together with every vertex adjacent to `v`.
    ///
    /// Panics if `v >= n`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        assert!(v < self.n, "vertex {v} out of range for n = {}", self.n);
        VertexSet::from_words(self.closed_row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// True iff every vertex is reachable from vertex 0. The empty graph
    /// counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reachable_from(0).len() == self.n
    }

    fn reachable_from(&self, start: usize) -> VertexSet {
        let mut seen = vec![0u64; self.words];
        bits::set(&mut seen, start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !bits::test(&seen, v) {
                    bits::set(&mut seen, v);
                    stack.push(v);
                }
            }
        }
        VertexSet::from_words(seen)
    }

    /// Connected components, each sorted ascending, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.n];
        let mut out = Vec::new();
        for v in 0..self.n {
            if assigned[v] {
                continue;
            }
            let comp = self.reachable_from(v).to_vec();
            for &u in &comp {
                assigned[u] = true;
            }
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `keep`; vertex `keep[i]` becomes vertex `i`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

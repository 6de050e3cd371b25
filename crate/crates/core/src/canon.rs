//! Canonical labelling of small graphs.
//!
//! The search is a plain individualization-refinement tree: colour
//! refinement to an equitable ordered partition, then branch on each vertex of
//! the first non-singleton cell. Every leaf is a discrete partition, i.e. a
//! relabelling; the canonical labelling is the leaf whose relabelled upper
//! triangle (in graph6 bit order) is numerically least. Automorphisms found
//! between leaves with equal certificates prune sibling branches in the same
//! orbit of the pointwise stabiliser of the individualized prefix.

use std::fmt;

use crate::graph::Graph;
use crate::graph6;

/// Largest order accepted by [`canonical_form`]; the certificate of an
/// 11-vertex graph (55 bits) still fits in a `u64`.
pub const MAX_CANON_ORDER: usize = 11;

const MAX: usize = MAX_CANON_ORDER;

/// Relabelling-invariant key of a graph: the graph6 text of its canonically
/// relabelled form. Equal keys iff isomorphic graphs; for a fixed order the
/// key length is fixed, and key order matches certificate order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// The canonical representative itself.
    pub fn graph(&self) -> Graph {
        graph6::decode(&self.0).expect("canonical keys are valid graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Adjacency rows of a graph with at most [`MAX_CANON_ORDER`] vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct SmallGraph {
    pub n: usize,
    pub adj: [u16; MAX],
}

impl SmallGraph {
    pub fn from_graph(g: &Graph) -> Self {
        assert!(
            g.n() <= MAX,
            "canonical labelling supports at most {MAX} vertices, got {}",
            g.n()
        );
        let mut adj = [0u16; MAX];
        for (v, row) in adj.iter_mut().enumerate().take(g.n()) {
            *row = g.row(v)[0] as u16;
        }
        SmallGraph { n: g.n(), adj }
    }

    /// Rebuilds the graph whose certificate is `code`.
    pub fn from_code(n: usize, code: u64) -> Self {
        let mut adj = [0u16; MAX];
        let pairs = n * n.saturating_sub(1) / 2;
        let mut bit = pairs;
        for j in 1..n {
            for i in 0..j {
                bit -= 1;
                if code >> bit & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        SmallGraph { n, adj }
    }

    pub fn to_graph(self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u] >> v & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Certificate of this graph under labelling `lab` (vertex -> position).
    fn code_under(&self, lab: &[u8; MAX]) -> u64 {
        let mut inv = [0usize; MAX];
        for v in 0..self.n {
            inv[lab[v] as usize] = v;
        }
        let mut code = 0u64;
        for j in 1..self.n {
            let row = self.adj[inv[j]];
            for &u in &inv[..j] {
                code = (code << 1) | (row >> u & 1) as u64;
            }
        }
        code
    }

    /// Canonical certificate and the labelling that achieves it.
    pub fn canonical(&self) -> (u64, [u8; MAX]) {
        let mut search = Search {
            g: self,
            best: None,
            autos: Vec::new(),
        };
        let mut prefix = Vec::with_capacity(self.n);
        search.visit([0u8; MAX], &mut prefix);
        search.best.expect("search reaches at least one leaf")
    }
}

struct Search<'a> {
    g: &'a SmallGraph,
    best: Option<(u64, [u8; MAX])>,
    autos: Vec<[u8; MAX]>,
}

impl Search<'_> {
    fn visit(&mut self, mut colour: [u8; MAX], prefix: &mut Vec<u8>) {
        let n = self.g.n;
        let cells = refine(self.g, &mut colour);
        if cells == n {
            self.leaf(colour);
            return;
        }

        // first non-singleton cell; colours are cell start positions
        let mut size = [0u8; MAX];
        for &c in &colour[..n] {
            size[c as usize] += 1;
        }
        let target = (0..n).find(|&c| size[c] > 1).expect("partition is not discrete") as u8;
        let mut explored: Vec<u8> = Vec::new();
        for w in 0..n as u8 {
            if colour[w as usize] != target {
                continue;
            }
            if !explored.is_empty() && self.same_orbit(w, &explored, prefix) {
                continue;
            }
            let mut child = colour;
            for v in 0..n {
                if colour[v] == target && v != w as usize {
                    child[v] = target + 1;
                }
            }
            prefix.push(w);
            self.visit(child, prefix);
            prefix.pop();
            explored.push(w);
        }
    }

    fn leaf(&mut self, lab: [u8; MAX]) {
        let code = self.g.code_under(&lab);
        match &self.best {
            Some((best, _)) if code > *best => {}
            Some((best, best_lab)) if code == *best => {
                let n = self.g.n;
                let mut inv = [0u8; MAX];
                for v in 0..n {
                    inv[best_lab[v] as usize] = v as u8;
                }
                let mut gamma = [0u8; MAX];
                for v in 0..n {
                    gamma[v] = inv[lab[v] as usize];
                }
                if (0..n).any(|v| gamma[v] as usize != v) {
                    self.autos.push(gamma);
                }
            }
            _ => self.best = Some((code, lab)),
        }
    }

    /// Whether `w` shares an orbit with an explored sibling under the group
    /// generated by the known automorphisms that fix `prefix` pointwise.
    fn same_orbit(&self, w: u8, explored: &[u8], prefix: &[u8]) -> bool {
        let n = self.g.n;
        let mut parent = [0u8; MAX];
        for (v, p) in parent.iter_mut().enumerate().take(n) {
            *p = v as u8;
        }
        fn find(parent: &mut [u8; MAX], mut x: u8) -> u8 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if prefix.iter().any(|&p| gamma[p as usize] != p) {
                continue;
            }
            any = true;
            for v in 0..n as u8 {
                let a = find(&mut parent, v);
                let b = find(&mut parent, gamma[v as usize]);
                if a != b {
                    parent[a as usize] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, w);
        explored.iter().any(|&e| find(&mut parent, e) == root)
    }
}

/// Refines `colour` to the coarsest equitable partition finer than it.
/// Colours are cell start positions, so the result is an ordered partition
/// determined only by the graph and the input colouring. Returns the number
/// of cells.
fn refine(g: &SmallGraph, colour: &mut [u8; MAX]) -> usize {
    let n = g.n;
    let mut cells = {
        let mut seen = 0u16;
        for &c in &colour[..n] {
            seen |= 1 << c;
        }
        seen.count_ones() as usize
    };
    while cells < n {
        let mut sig = [[0u8; MAX]; MAX];
        for (v_sig, &adj) in sig.iter_mut().zip(&g.adj[..n]) {
            let mut row = adj;
            while row != 0 {
                let u = row.trailing_zeros() as usize;
                row &= row - 1;
                v_sig[colour[u] as usize] += 1;
            }
        }
        let mut order = [0u8; MAX];
        for (k, o) in order.iter_mut().enumerate().take(n) {
            *o = k as u8;
        }
        order[..n].sort_unstable_by(|&a, &b| {
            let (a, b) = (a as usize, b as usize);
            colour[a]
                .cmp(&colour[b])
                .then_with(|| sig[a][..n].cmp(&sig[b][..n]))
        });
        let mut next = [0u8; MAX];
        let mut start = 0u8;
        let mut distinct = 0;
        for k in 0..n {
            let v = order[k] as usize;
            if k == 0 || {
                let p = order[k - 1] as usize;
                colour[p] != colour[v] || sig[p][..n] != sig[v][..n]
            } {
                start = k as u8;
                distinct += 1;
            }
            next[v] = start;
        }
        *colour = next;
        if distinct == cells {
            break;
        }
        cells = distinct;
    }
    cells
}

/// Canonical key of `g`. Panics if `g` has more than [`MAX_CANON_ORDER`]
/// vertices.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(graph6::encode(&canonical_graph(g)))
}

/// `labels[v]` is the position of vertex `v` in the canonical ordering.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let small = SmallGraph::from_graph(g);
    let (_, lab) = small.canonical();
    lab[..g.n()].iter().map(|&l| l as usize).collect()
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Graph {
    let small = SmallGraph::from_graph(g);
    let (code, _) = small.canonical();
    SmallGraph::from_code(g.n(), code).to_graph()
}

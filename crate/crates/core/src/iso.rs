//! Isomorphism testing.

use crate::canon::{canonical_form, MAX_CANON_ORDER};
use crate::graph::Graph;

fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

/// True iff an edge-preserving bijection between `g` and `h` exists.
///
/// Uses canonical keys up to [`MAX_CANON_ORDER`] vertices and falls back to
/// [`find_isomorphism`] above that.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() || degree_sequence(g) != degree_sequence(h) {
        return false;
    }
    if g.n() <= MAX_CANON_ORDER {
        canonical_form(g) == canonical_form(h)
    } else {
        find_isomorphism(g, h).is_some()
    }
}

/// Direct search for a bijection `map` with `g.has_edge(u, v) ==
/// h.has_edge(map[u], map[v])`. Vertices are matched in index order, with
/// degrees and already-mapped adjacencies checked at each step.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let n = g.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if v == g.n() {
            return true;
        }
        for t in 0..h.n() {
            if used[t] || g.degree(v) != h.degree(t) {
                continue;
            }
            if (0..v).any(|u| g.has_edge(u, v) != h.has_edge(map[u], t)) {
                continue;
            }
            map[v] = t;
            used[t] = true;
            if extend(g, h, v + 1, map, used) {
                return true;
            }
            used[t] = false;
        }
        false
    }

    extend(g, h, 0, &mut map, &mut used).then_some(map)
}

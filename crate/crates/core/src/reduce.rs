//! Reduction maps: verification, search, enumeration and full reduction.
//!
//! A reduction of a graph is a self-map `f` on its vertices such that
//!
//! * (R1) `f` is not surjective,
//! * (R2) every vertex moves within its closed neighbourhood,
//! * (R3) adjacent vertices land on adjacent or equal vertices.
//!
//! A graph with no reduction is irreducible.

use std::fmt;
use std::str::FromStr;

use crate::bits;
use crate::graph::Graph;

/// A total self-map on the vertices of some host graph: vertex `x` goes to
/// `self[x]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReductionMap(Vec<usize>);

/// A player's arrangement of vertices on spots. Vertex `i` sits on the spot
/// of vertex `spot[i]`, which makes it the same object as a candidate
/// reduction map.
pub type Placement = ReductionMap;

impl ReductionMap {
    pub fn new(images: Vec<usize>) -> Self {
        ReductionMap(images)
    }

    pub fn identity(n: usize) -> Self {
        ReductionMap((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Distinct images, ascending.
    pub fn image(&self) -> Vec<usize> {
        let mut hit = vec![false; self.0.len()];
        for &y in &self.0 {
            if y < hit.len() {
                hit[y] = true;
            }
        }
        (0..hit.len()).filter(|&v| hit[v]).collect()
    }

    /// Vertices no vertex is mapped to, ascending.
    pub fn vacated(&self) -> Vec<usize> {
        let mut hit = vec![false; self.0.len()];
        for &y in &self.0 {
            if y < hit.len() {
                hit[y] = true;
            }
        }
        (0..hit.len()).filter(|&v| !hit[v]).collect()
    }
}

impl std::ops::Index<usize> for ReductionMap {
    type Output = usize;

    fn index(&self, x: usize) -> &usize {
        &self.0[x]
    }
}

impl From<Vec<usize>> for ReductionMap {
    fn from(v: Vec<usize>) -> Self {
        ReductionMap(v)
    }
}

impl fmt::Debug for ReductionMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Comma-separated images, e.g. `1,2,3,4,0,0`.
impl fmt::Display for ReductionMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, y) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{y}")?;
        }
        Ok(())
    }
}

impl FromStr for ReductionMap {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.trim().is_empty() {
            return Ok(ReductionMap(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("{:?} is not a vertex id", t.trim()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(ReductionMap)
    }
}

/// Which of the three conditions a map satisfies, and where it fails.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionReport {
    /// Vertices nothing is mapped to. R1 holds iff this is non-empty.
    pub vacant: Vec<usize>,
    /// Vertices `x` with `f(x)` outside the closed neighbourhood of `x` (R2).
    pub far_moves: Vec<usize>,
    /// Edges `(u, v)`, `u < v`, whose endpoints land on distinct
    /// non-adjacent vertices (R3).
    pub broken_edges: Vec<(usize, usize)>,
}

impl ReductionReport {
    pub fn not_onto(&self) -> bool {
        !self.vacant.is_empty()
    }

    pub fn local(&self) -> bool {
        self.far_moves.is_empty()
    }

    pub fn preserves_adjacency(&self) -> bool {
        self.broken_edges.is_empty()
    }

    pub fn is_reduction(&self) -> bool {
        self.not_onto() && self.local() && self.preserves_adjacency()
    }
}

impl fmt::Display for ReductionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_reduction() {
            return write!(f, "valid reduction, vacated {:?}", self.vacant);
        }
        let mut failures = Vec::new();
        if !self.not_onto() {
            failures.push("no vertex is vacated".to_string());
        }
        if !self.local() {
            failures.push(format!("vertices moved beyond a neighbour: {:?}", self.far_moves));
        }
        if !self.preserves_adjacency() {
            failures.push(format!("edges pulled apart: {:?}", self.broken_edges));
        }
        f.write_str(&failures.join("; "))
    }
}

/// Evaluates each condition separately.
///
/// Panics if `f` does not have one entry per vertex or maps outside the
/// graph.
pub fn diagnose(g: &Graph, f: &ReductionMap) -> ReductionReport {
    let n = g.n();
    assert_eq!(
        f.len(),
        n,
        "map has {} entries for a graph on {n} vertices",
        f.len()
    );
    assert!(f.0.iter().all(|&y| y < n), "map sends a vertex outside 0..{n}");
    ReductionReport {
        vacant: f.vacated(),
        far_moves: (0..n).filter(|&x| !g.adjacent_or_equal(x, f[x])).collect(),
        broken_edges: g
            .edges()
            .into_iter()
            .filter(|&(u, v)| !g.adjacent_or_equal(f[u], f[v]))
            .collect(),
    }
}

/// True iff `f` satisfies R1, R2 and R3 on `g`.
pub fn verify_reduction(g: &Graph, f: &ReductionMap) -> bool {
    diagnose(g, f).is_reduction()
}

/// Outcome of [`find_reduction`]; a witness is present iff the graph is
/// reducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionVerdict {
    pub witness: Option<ReductionMap>,
}

impl ReductionVerdict {
    pub fn reducible(&self) -> bool {
        self.witness.is_some()
    }
}

/// Searches for a reduction of `g`.
///
/// Components are searched one at a time in order of their smallest vertex;
/// a reduction of one component extends by the identity to the whole graph.
/// Within a component the search first looks for a fold: the first vertex
/// `u` (by id) with a neighbour `v` such that `N[u] ⊆ N[v]`, giving the map
/// `u -> v` fixing everything else. Failing that, for each candidate vacated
/// vertex `v` in ascending order it runs a backtracking search with domains
/// `N[x] \ {v}`, assigning the vertex with the fewest remaining values first
/// (ties to the smallest id), trying values in ascending order, and
/// forward-checking adjacency preservation against unassigned neighbours.
pub fn find_reduction(g: &Graph) -> ReductionVerdict {
    let comps = g.components();
    if comps.len() <= 1 {
        return ReductionVerdict {
            witness: reduce_connected(g).map(ReductionMap),
        };
    }
    for comp in comps {
        if comp.len() < 2 {
            continue;
        }
        let sub = g.induced_subgraph(&comp);
        if let Some(local) = reduce_connected(&sub) {
            let mut f: Vec<usize> = (0..g.n()).collect();
            for (i, &x) in comp.iter().enumerate() {
                f[x] = comp[local[i]];
            }
            return ReductionVerdict {
                witness: Some(ReductionMap(f)),
            };
        }
    }
    ReductionVerdict { witness: None }
}

pub fn is_reducible(g: &Graph) -> bool {
    find_reduction(g).reducible()
}

fn reduce_connected(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    let closed: Vec<Vec<u64>> = (0..n).map(|v| g.closed_row(v)).collect();

    for u in 0..n {
        for v in g.neighbors(u) {
            if bits::is_subset(&closed[u], &closed[v]) {
                let mut f: Vec<usize> = (0..n).collect();
                f[u] = v;
                return Some(f);
            }
        }
    }

    let mut search = Backtrack::new(g, &closed);
    (0..n).find_map(|vacated| search.run(vacated))
}

struct Backtrack<'a> {
    g: &'a Graph,
    closed: &'a [Vec<u64>],
    words: usize,
    /// One domain table per depth; `levels[d]` holds `n * words` words.
    levels: Vec<Vec<u64>>,
    assigned: Vec<bool>,
    f: Vec<usize>,
}

impl<'a> Backtrack<'a> {
    fn new(g: &'a Graph, closed: &'a [Vec<u64>]) -> Self {
        let n = g.n();
        let words = g.words();
        Backtrack {
            g,
            closed,
            words,
            levels: vec![vec![0; n * words]; n + 1],
            assigned: vec![false; n],
            f: vec![0; n],
        }
    }

    fn run(&mut self, vacated: usize) -> Option<Vec<usize>> {
        let (n, w) = (self.g.n(), self.words);
        let root = &mut self.levels[0];
        for x in 0..n {
            let dom = &mut root[x * w..(x + 1) * w];
            dom.copy_from_slice(&self.closed[x]);
            bits::clear(dom, vacated);
            if bits::is_empty(dom) {
                return None;
            }
        }
        self.assigned.iter_mut().for_each(|a| *a = false);
        self.solve(0).then(|| self.f.clone())
    }

    fn solve(&mut self, depth: usize) -> bool {
        let (n, w) = (self.g.n(), self.words);
        let mut pick = None;
        let mut best = usize::MAX;
        for x in 0..n {
            if self.assigned[x] {
                continue;
            }
            let size = bits::count(&self.levels[depth][x * w..(x + 1) * w]);
            if size < best {
                best = size;
                pick = Some(x);
                if size == 1 {
                    break;
                }
            }
        }
        let Some(x) = pick else {
            return true;
        };

        let domain = self.levels[depth][x * w..(x + 1) * w].to_vec();
        self.assigned[x] = true;
        for a in bits::iter(&domain) {
            let (head, tail) = self.levels.split_at_mut(depth + 1);
            let next = &mut tail[0];
            next.copy_from_slice(&head[depth]);
            let mut wiped = false;
            for y in self.g.neighbors(x) {
                if self.assigned[y] {
                    continue;
                }
                let dom = &mut next[y * w..(y + 1) * w];
                for (d, c) in dom.iter_mut().zip(&self.closed[a]) {
                    *d &= c;
                }
                if bits::is_empty(dom) {
                    wiped = true;
                    break;
                }
            }
            if wiped {
                continue;
            }
            self.f[x] = a;
            if self.solve(depth + 1) {
                return true;
            }
        }
        self.assigned[x] = false;
        false
    }
}

/// Lazily enumerates every reduction of a graph in lexicographic order of
/// the image vector. The search space is the product of closed
/// neighbourhood sizes, so this is meant for small graphs.
pub struct Reductions<'a> {
    g: &'a Graph,
    candidates: Vec<Vec<usize>>,
    f: Vec<usize>,
    next_choice: Vec<usize>,
    depth: usize,
    exhausted: bool,
}

impl<'a> Reductions<'a> {
    pub fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Reductions {
            g,
            candidates: (0..n).map(|v| g.closed_neighborhood(v).to_vec()).collect(),
            f: vec![0; n],
            next_choice: vec![0; n],
            depth: 0,
            exhausted: n == 0,
        }
    }

    fn onto(&self) -> bool {
        let mut hit = vec![false; self.f.len()];
        for &y in &self.f {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }
}

impl Iterator for Reductions<'_> {
    type Item = ReductionMap;

    fn next(&mut self) -> Option<ReductionMap> {
        let n = self.g.n();
        loop {
            if self.exhausted {
                return None;
            }
            let d = self.depth;
            if d == n {
                self.depth -= 1;
                if !self.onto() {
                    return Some(ReductionMap(self.f.clone()));
                }
                continue;
            }
            let mut advanced = false;
            while self.next_choice[d] < self.candidates[d].len() {
                let a = self.candidates[d][self.next_choice[d]];
                self.next_choice[d] += 1;
                let fits = self
                    .g
                    .neighbors(d)
                    .take_while(|&u| u < d)
                    .all(|u| self.g.adjacent_or_equal(self.f[u], a));
                if fits {
                    self.f[d] = a;
                    self.depth += 1;
                    if d + 1 < n {
                        self.next_choice[d + 1] = 0;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                if d == 0 {
                    self.exhausted = true;
                } else {
                    self.depth -= 1;
                }
            }
        }
    }
}

/// All reductions of `g`, lexicographically ordered.
pub fn enumerate_reductions(g: &Graph) -> Vec<ReductionMap> {
    Reductions::new(g).collect()
}

/// Result of applying one reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    /// Induced subgraph on the image, relabelled `0..k` in ascending order of
    /// the old ids.
    pub graph: Graph,
    /// `kept[new] = old`.
    pub kept: Vec<usize>,
    /// `relabel[old] = Some(new)` for surviving vertices.
    pub relabel: Vec<Option<usize>>,
}

/// Replaces `g` by the induced subgraph on the image of `f`.
///
/// Panics if `f` is not a reduction of `g`.
pub fn reduce_step(g: &Graph, f: &ReductionMap) -> ReductionStep {
    let report = diagnose(g, f);
    assert!(report.is_reduction(), "not a reduction: {report}");
    let kept = f.image();
    let mut relabel = vec![None; g.n()];
    for (new, &old) in kept.iter().enumerate() {
        relabel[old] = Some(new);
    }
    ReductionStep {
        graph: g.induced_subgraph(&kept),
        kept,
        relabel,
    }
}

/// An irreducible graph reached by repeated reduction steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullReduction {
    /// Induced subgraph of the input on `kept`.
    pub graph: Graph,
    /// Surviving original vertex ids, ascending.
    pub kept: Vec<usize>,
    pub steps: usize,
}

/// Reduces each component until it is irreducible.
pub fn reduce_fully_traced(g: &Graph) -> FullReduction {
    let mut kept = Vec::new();
    let mut steps = 0;
    for comp in g.components() {
        let mut ids = comp.clone();
        let mut sub = g.induced_subgraph(&comp);
        while let Some(f) = reduce_connected(&sub) {
            let step = reduce_step(&sub, &ReductionMap(f));
            ids = step.kept.iter().map(|&i| ids[i]).collect();
            sub = step.graph;
            steps += 1;
        }
        kept.extend(ids);
    }
    kept.sort_unstable();
    FullReduction {
        graph: g.induced_subgraph(&kept),
        kept,
        steps,
    }
}

pub fn reduce_fully(g: &Graph) -> Graph {
    reduce_fully_traced(g).graph
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Outer 5-cycle a..e (0..4) with a centre 5 joined to a and d.
    fn twisted() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 3)])
    }

    #[test]
    fn verify_examples() {
        let edge = Graph::path(2);
        assert!(verify_reduction(&edge, &vec![0, 0].into()));
        assert!(!verify_reduction(&edge, &vec![1, 0].into()));
        assert!(verify_reduction(&twisted(), &vec![1, 2, 3, 4, 0, 0].into()));
    }

    #[test]
    fn diagnostics_name_each_failure() {
        let g = twisted();
        let r = diagnose(&g, &vec![0, 1, 2, 3, 4, 0].into());
        assert_eq!(r.vacant, vec![5]);
        assert!(r.far_moves.is_empty());
        assert_eq!(r.broken_edges, vec![(3, 5)]);

        let r = diagnose(&g, &ReductionMap::identity(6));
        assert!(r.vacant.is_empty() && r.far_moves.is_empty() && r.broken_edges.is_empty());

        let r = diagnose(&Graph::path(3), &vec![2, 1, 2].into());
        assert_eq!(r.far_moves, vec![0]);
        assert_eq!(r.vacant, vec![0]);
    }

    #[test]
    #[should_panic]
    fn arity_mismatch_is_a_contract_violation() {
        verify_reduction(&Graph::path(3), &vec![0, 0].into());
    }

    #[test]
    fn find_examples() {
        assert!(!is_reducible(&Graph::empty(0)));
        assert!(!is_reducible(&Graph::empty(1)));
        assert!(!is_reducible(&Graph::cycle(5)));
        assert!(is_reducible(&Graph::cycle(4)));
        assert!(is_reducible(&twisted()));
        assert!(is_reducible(&Graph::complete(3)));
        assert!(!is_reducible(&Graph::cycle(6)));
        assert!(!is_reducible(&Graph::cycle(7)));
        assert!(!is_reducible(&Graph::empty(3)));
    }

    #[test]
    fn twisted_graph_needs_the_search() {
        // no dominated vertex, so the witness comes from backtracking
        let g = twisted();
        let w = find_reduction(&g).witness.unwrap();
        assert!(verify_reduction(&g, &w));
        assert!((0..6).all(|x| w[x] != x));
    }

    #[test]
    fn disconnected_witness_is_lifted() {
        let g = Graph::cycle(5).disjoint_union(&Graph::path(2));
        let w = find_reduction(&g).witness.unwrap();
        assert!(verify_reduction(&g, &w));
        assert_eq!(&w.as_slice()[..5], &[0, 1, 2, 3, 4]);
    }

    #[test]
    fn enumerate_small() {
        assert!(enumerate_reductions(&Graph::empty(1)).is_empty());
        assert_eq!(
            enumerate_reductions(&Graph::path(2)),
            vec![vec![0, 0].into(), vec![1, 1].into()]
        );
        let all = enumerate_reductions(&twisted());
        assert!(!all.is_empty());
        assert!(all.iter().all(|f| verify_reduction(&twisted(), f)));
        assert!(all.contains(&vec![1, 2, 3, 4, 0, 0].into()));
    }

    #[test]
    fn step_examples() {
        let s = reduce_step(&Graph::path(2), &vec![0, 0].into());
        assert_eq!(s.graph, Graph::empty(1));
        assert_eq!(s.relabel, vec![Some(0), None]);

        let s = reduce_step(&twisted(), &vec![1, 2, 3, 4, 0, 0].into());
        assert_eq!(s.graph, Graph::cycle(5));
        assert_eq!(s.kept, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    #[should_panic]
    fn step_rejects_invalid_maps() {
        reduce_step(&Graph::cycle(5), &ReductionMap::identity(5));
    }

    #[test]
    fn full_reduction() {
        assert_eq!(reduce_fully(&Graph::cycle(5)), Graph::cycle(5));
        assert_eq!(reduce_fully(&Graph::path(7)), Graph::empty(1));
        assert_eq!(reduce_fully(&Graph::cycle(4)), Graph::empty(1));
        let g = Graph::path(3).disjoint_union(&Graph::cycle(6));
        let r = reduce_fully_traced(&g);
        assert_eq!(r.graph.n(), 7);
        assert_eq!(&r.kept[1..], &[3, 4, 5, 6, 7, 8]);
    }

    #[test]
    fn placement_text() {
        let p: Placement = "1, 2,3,4,0,0".parse().unwrap();
        assert_eq!(p.as_slice(), &[1, 2, 3, 4, 0, 0]);
        assert_eq!(p.to_string(), "1,2,3,4,0,0");
        assert_eq!("[0,0]".parse::<Placement>().unwrap().as_slice(), &[0, 0]);
        assert!("1,x".parse::<Placement>().is_err());
    }
}

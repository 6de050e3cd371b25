//! Slow reference implementations written straight from the definitions.
//! They share nothing with the library beyond reading `Graph` edges.

#![allow(dead_code)]

use std::collections::HashSet;

use nbrs_core::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(g: &Graph) -> Matrix {
    let n = g.n();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

/// Not onto, every vertex stays in its closed neighbourhood, every edge lands
/// on an edge or a single vertex.
pub fn is_reduction(m: &Matrix, f: &[usize]) -> bool {
    let n = m.len();
    let mut hit = vec![false; n];
    for &y in f {
        hit[y] = true;
    }
    if hit.iter().all(|&h| h) {
        return false;
    }
    for x in 0..n {
        if f[x] != x && !m[x][f[x]] {
            return false;
        }
        for y in 0..n {
            if m[x][y] && f[x] != f[y] && !m[f[x]][f[y]] {
                return false;
            }
        }
    }
    true
}

/// All `n^n` self-maps in lexicographic order.
pub fn all_maps(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = if n == 0 { None } else { Some(vec![0; n]) };
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        let mut i = n;
        while i > 0 {
            i -= 1;
            succ[i] += 1;
            if succ[i] < n {
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(cur)
    })
}

pub fn reductions(g: &Graph) -> Vec<Vec<usize>> {
    let m = matrix(g);
    all_maps(g.n()).filter(|f| is_reduction(&m, f)).collect()
}

pub fn is_reducible(g: &Graph) -> bool {
    let m = matrix(g);
    all_maps(g.n()).any(|f| is_reduction(&m, &f))
}

fn connected(m: &Matrix) -> bool {
    let n = m.len();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if m[u][v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Every permutation of `0..n`.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    permutations(&(0..n).collect::<Vec<_>>())
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn code(m: &Matrix, p: &[usize], pairs: &[(usize, usize)]) -> u64 {
    pairs
        .iter()
        .fold(0, |acc, &(u, v)| (acc << 1) | m[p[u]][p[v]] as u64)
}

/// Connected graphs on `n` labelled vertices, one per isomorphism class.
/// Only labellings with non-decreasing degrees are visited; each is reduced
/// to the smallest code over permutations that stay inside equal-degree
/// blocks. Feasible up to seven vertices.
pub fn connected_classes(n: usize) -> Vec<Graph> {
    assert!(n <= 7);
    let pairs = pairs(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut m = vec![vec![false; n]; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                m[u][v] = true;
                m[v][u] = true;
            }
        }
        let deg: Vec<usize> = m.iter().map(|r| r.iter().filter(|&&b| b).count()).collect();
        if deg.windows(2).any(|w| w[0] > w[1]) || !connected(&m) {
            continue;
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            match blocks.last_mut() {
                Some(b) if deg[b[0]] == deg[v] => b.push(v),
                _ => blocks.push(vec![v]),
            }
        }
        let mut perms = vec![Vec::new()];
        for b in &blocks {
            let mut next = Vec::new();
            for prefix in &perms {
                for p in permutations(b) {
                    let mut full: Vec<usize> = prefix.clone();
                    full.extend(p);
                    next.push(full);
                }
            }
            perms = next;
        }
        let best = perms.iter().map(|p| code(&m, p, &pairs)).min().unwrap();
        if seen.insert(best) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| best >> (pairs.len() - 1 - i) & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            out.push(Graph::from_edges(n, &edges));
        }
    }
    out
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let (a, b) = (matrix(g), matrix(h));
    let n = g.n();
    all_permutations(n)
        .iter()
        .any(|p| (0..n).all(|u| (0..n).all(|v| a[u][v] == b[p[u]][p[v]])))
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = pairs(n).into_iter().filter(|_| rng.random_bool(p)).collect();
    Graph::from_edges(n, &edges)
}

/// A random connected graph: a random spanning tree plus extra edges.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = random_graph(rng, n, p);
    for v in 1..n {
        let u = rng.random_range(0..v);
        if !g.has_edge(u, v) {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn shuffled(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

//! Enumeration of connected graphs up to isomorphism and their
//! classification into reducible and irreducible classes.
//!
//! Graphs of order `k + 1` are grown from the class representatives of order
//! `k` by adding a vertex joined to every non-empty subset of the old
//! vertices. Every connected graph has a vertex whose removal leaves it
//! connected, so this reaches every class; duplicates are removed by
//! canonical certificate. Work is spread over the current rayon pool and the
//! output is sorted, so results do not depend on the thread count.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm, SmallGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::reduce::is_reducible;

/// Largest order the enumerator accepts.
pub const MAX_ENUM_ORDER: usize = 9;

/// Canonical certificates of the connected classes of order `n`, ascending.
fn connected_codes(n: usize) -> Vec<u64> {
    assert!(
        (1..=MAX_ENUM_ORDER).contains(&n),
        "order {n} outside 1..={MAX_ENUM_ORDER}"
    );
    let mut codes = vec![0u64];
    for k in 1..n {
        let mut next: Vec<u64> = codes
            .par_iter()
            .flat_map_iter(|&code| {
                let parent = SmallGraph::from_code(k, code);
                (1u16..1 << k).map(move |nbhd| {
                    let mut child = parent;
                    child.n = k + 1;
                    child.adj[k] = nbhd;
                    let mut rest = nbhd;
                    while rest != 0 {
                        let u = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        child.adj[u] |= 1 << k;
                    }
                    child.canonical().0
                })
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        codes = next;
    }
    codes
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, each in canonical form, sorted by canonical key.
///
/// Panics unless `1 <= n <= 9`.
pub fn enumerate_connected(n: usize) -> Vec<Graph> {
    connected_codes(n)
        .into_iter()
        .map(|code| SmallGraph::from_code(n, code).to_graph())
        .collect()
}

/// A connected irreducible class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub graph: Graph,
    pub n: usize,
    pub canonical: CanonicalForm,
}

impl CatalogEntry {
    pub fn new(graph: Graph) -> Self {
        let canonical = canonical_form(&graph);
        CatalogEntry {
            n: graph.n(),
            graph,
            canonical,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub order: usize,
    /// Number of connected classes examined.
    pub classes: usize,
    /// The irreducible ones, sorted by canonical key.
    pub catalog: Vec<CatalogEntry>,
}

impl Classification {
    /// Number of connected irreducible classes.
    pub fn count(&self) -> usize {
        self.catalog.len()
    }
}

fn irreducible_entries(graphs: Vec<Graph>) -> Vec<CatalogEntry> {
    let flags: Vec<bool> = graphs.par_iter().map(is_reducible).collect();
    let mut catalog: Vec<CatalogEntry> = graphs
        .into_iter()
        .zip(flags)
        .filter(|(_, reducible)| !reducible)
        .map(|(g, _)| CatalogEntry::new(g))
        .collect();
    catalog.sort_by(|a, b| a.canonical.cmp(&b.canonical));
    catalog
}

/// Enumerates the connected classes of order `n` and keeps the irreducible
/// ones.
pub fn classify(n: usize) -> Classification {
    let graphs = enumerate_connected(n);
    let classes = graphs.len();
    Classification {
        order: n,
        classes,
        catalog: irreducible_entries(graphs),
    }
}

/// Classifies an externally produced stream of graphs (for example the
/// output of another generator). Disconnected graphs are dropped, isomorphic
/// duplicates are merged, and the result is grouped by order.
pub fn classify_graphs(graphs: impl IntoIterator<Item = Graph>) -> BTreeMap<usize, Classification> {
    let mut by_order: BTreeMap<usize, BTreeMap<CanonicalForm, Graph>> = BTreeMap::new();
    for g in graphs {
        if g.n() == 0 || !g.is_connected() {
            continue;
        }
        let key = canonical_form(&g);
        by_order.entry(g.n()).or_default().entry(key).or_insert(g);
    }
    by_order
        .into_iter()
        .map(|(order, classes)| {
            let count = classes.len();
            let graphs: Vec<Graph> = classes.into_keys().map(|k| k.graph()).collect();
            (
                order,
                Classification {
                    order,
                    classes: count,
                    catalog: irreducible_entries(graphs),
                },
            )
        })
        .collect()
}

/// Writes a catalog: a `# order=N count=K` header, then the canonical graph6
/// line of each entry in key order.
pub fn export_catalog(entries: &[CatalogEntry], order: usize, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    write_catalog(entries, order, &mut out).map_err(|e| Error::io(path, e))?;
    out.flush().map_err(|e| Error::io(path, e))
}

pub fn write_catalog(entries: &[CatalogEntry], order: usize, out: &mut impl Write) -> std::io::Result<()> {
    let mut keys: Vec<&CanonicalForm> = entries.iter().map(|e| &e.canonical).collect();
    keys.sort();
    writeln!(out, "# connected irreducible graphs")?;
    writeln!(out, "# order={order} count={}", keys.len())?;
    for key in keys {
        writeln!(out, "{key}")?;
    }
    Ok(())
}

/// Contents of a catalog file.
#[derive(Clone, Debug, Default)]
pub struct CatalogFile {
    /// `(order, count)` from the header, when present.
    pub header: Option<(usize, usize)>,
    pub graphs: Vec<(usize, Graph)>,
}

pub fn read_catalog(path: impl AsRef<Path>) -> Result<CatalogFile> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let header = text.lines().find_map(|line| {
        let rest = line.strip_prefix('#')?.trim();
        let mut order = None;
        let mut count = None;
        for field in rest.split_whitespace() {
            if let Some(v) = field.strip_prefix("order=") {
                order = v.parse().ok();
            } else if let Some(v) = field.strip_prefix("count=") {
                count = v.parse().ok();
            }
        }
        Some((order?, count?))
    });
    let graphs = graph6::read_all(BufReader::new(text.as_bytes()))?;
    Ok(CatalogFile { header, graphs })
}

/// Findings of [`verify_catalog`]; the catalog checks out iff `problems` is
/// empty.
#[derive(Clone, Debug, Default)]
pub struct CatalogCheck {
    pub entries: usize,
    pub problems: Vec<String>,
}

impl CatalogCheck {
    pub fn ok(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Re-checks that every entry is connected and irreducible, that no two
/// entries are isomorphic, and that the header (if any) agrees.
pub fn verify_catalog(file: &CatalogFile) -> CatalogCheck {
    let mut problems = Vec::new();
    let reducible: Vec<bool> = file.graphs.par_iter().map(|(_, g)| is_reducible(g)).collect();
    let mut seen: BTreeMap<CanonicalForm, usize> = BTreeMap::new();
    let mut orders = BTreeSet::new();
    for ((line, g), reducible) in file.graphs.iter().zip(reducible) {
        orders.insert(g.n());
        if !g.is_connected() {
            problems.push(format!("line {line}: graph is disconnected"));
        }
        if reducible {
            problems.push(format!("line {line}: graph is reducible"));
        }
        if g.n() <= crate::canon::MAX_CANON_ORDER {
            if let Some(first) = seen.insert(canonical_form(g), *line) {
                problems.push(format!("line {line}: isomorphic to line {first}"));
            }
        } else {
            problems.push(format!("line {line}: order {} too large to check", g.n()));
        }
    }
    if let Some((order, count)) = file.header {
        if count != file.graphs.len() {
            problems.push(format!(
                "header count {count} but {} graphs listed",
                file.graphs.len()
            ));
        }
        if orders.iter().any(|&n| n != order) {
            problems.push(format!("header order {order} but graphs of orders {orders:?}"));
        }
    }
    CatalogCheck {
        entries: file.graphs.len(),
        problems,
    }
}

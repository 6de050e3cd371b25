//! Puzzle levels and the win condition.
//!
//! A level is a drawn graph. The player drags vertices onto spots; vertex
//! `i` ending on the spot of vertex `spot[i]` is the placement `spot`, and a
//! placement wins exactly when it is a reduction map of the level's graph:
//! some spot is empty, every vertex sits on or next to its starting spot,
//! and edges are never pulled apart.

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, MAX_CANON_ORDER};
use crate::enumerate::{enumerate_connected, MAX_ENUM_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layout::{lattice_positions, layout};
use crate::pixels::{AdjacencyMode, PixelImage};
use crate::reduce::{diagnose, find_reduction, is_reducible, Placement, ReductionReport};

#[derive(Clone, Debug, PartialEq)]
pub struct Level {
    pub id: String,
    pub graph: Graph,
    /// Display coordinates of each vertex's spot.
    pub positions: Vec<[f64; 2]>,
    /// Exhibition level with no winning placement.
    pub irreducible: bool,
}

/// Stable id derived from the canonical key, e.g. `n5-44...`.
pub fn level_id(g: &Graph) -> String {
    format!("n{}-{}", g.n(), hex::encode(canonical_form(g).as_bytes()))
}

impl Level {
    /// Checks that positions match the graph and are pairwise distinct.
    pub fn new(id: impl Into<String>, graph: Graph, positions: Vec<[f64; 2]>) -> Result<Self> {
        let id = id.into();
        if positions.len() != graph.n() {
            return Err(Error::LevelFormat(format!(
                "level {id}: {} positions for {} vertices",
                positions.len(),
                graph.n()
            )));
        }
        let mut seen = BTreeSet::new();
        for p in &positions {
            if !p[0].is_finite() || !p[1].is_finite() {
                return Err(Error::LevelFormat(format!(
                    "level {id}: non-finite position {p:?}"
                )));
            }
            if !seen.insert((p[0].to_bits(), p[1].to_bits())) {
                return Err(Error::LevelFormat(format!("level {id}: repeated position {p:?}")));
            }
        }
        let irreducible = !is_reducible(&graph);
        Ok(Level {
            id,
            graph,
            positions,
            irreducible,
        })
    }

    /// A level for a small graph, with a canonical id and a computed layout.
    pub fn from_graph(graph: Graph) -> Self {
        assert!(graph.n() <= MAX_CANON_ORDER, "level ids need a canonical key");
        let positions = layout(&graph);
        let irreducible = !is_reducible(&graph);
        Level {
            id: level_id(&graph),
            graph,
            positions,
            irreducible,
        }
    }

    /// A level drawn on the image's own lattice.
    pub fn from_image(id: impl Into<String>, image: &PixelImage, mode: AdjacencyMode) -> Self {
        let graph = image.to_graph(mode);
        let irreducible = !is_reducible(&graph);
        Level {
            id: id.into(),
            positions: lattice_positions(image, 10.0),
            graph,
            irreducible,
        }
    }

    /// Difficulty rank: vertex count, then edge count.
    pub fn difficulty(&self) -> (usize, usize) {
        (self.graph.n(), self.graph.edge_count())
    }

    pub fn check(&self, placement: &Placement) -> ReductionReport {
        check_win(self, placement)
    }
}

/// Judges a final placement.
///
/// The report's `broken_edges` are the edges to draw red. Panics if the
/// placement does not cover exactly the level's vertices.
pub fn check_win(level: &Level, placement: &Placement) -> ReductionReport {
    diagnose(&level.graph, placement)
}

/// Which graphs go into a generated corpus.
#[derive(Clone, Debug)]
pub struct Selection {
    pub orders: RangeInclusive<usize>,
    /// Cap on solvable levels per order.
    pub limit: Option<usize>,
    /// Also ship every irreducible class of each order, flagged as such.
    pub include_irreducible: bool,
}

impl Selection {
    pub fn orders(orders: RangeInclusive<usize>) -> Self {
        Selection {
            orders,
            limit: None,
            include_irreducible: false,
        }
    }
}

/// Builds a corpus from the enumerated connected classes.
///
/// Within each order the classes are ranked by edge count, then canonical
/// key; the first `limit` solvable ones are kept. The output is sorted by
/// difficulty and is a pure function of the selection.
///
/// Panics if the orders leave `1..=9`.
pub fn generate_levels(selection: &Selection) -> Vec<Level> {
    let mut levels = Vec::new();
    for n in selection.orders.clone() {
        assert!(
            (1..=MAX_ENUM_ORDER).contains(&n),
            "order {n} outside 1..={MAX_ENUM_ORDER}"
        );
        let mut graphs: Vec<(Graph, bool)> = enumerate_connected(n)
            .into_par_iter()
            .map(|g| {
                let reducible = is_reducible(&g);
                (g, reducible)
            })
            .collect();
        // stable sort keeps canonical-key order within an edge count
        graphs.sort_by_key(|(g, _)| g.edge_count());
        let solvable = graphs
            .iter()
            .filter(|(_, r)| *r)
            .take(selection.limit.unwrap_or(usize::MAX));
        let exhibition = graphs
            .iter()
            .filter(|(_, r)| !*r && selection.include_irreducible);
        let chosen: Vec<&Graph> = solvable.chain(exhibition).map(|(g, _)| g).collect();
        let mut built: Vec<Level> = chosen
            .into_par_iter()
            .map(|g| Level::from_graph(g.clone()))
            .collect();
        built.sort_by(|a, b| a.difficulty().cmp(&b.difficulty()).then_with(|| a.id.cmp(&b.id)));
        levels.extend(built);
    }
    levels
}

/// A level as stored in the corpus file consumed by the UI.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LevelRecord {
    pub id: String,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub positions: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub irreducible: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct LevelFile {
    pub levels: Vec<LevelRecord>,
}

impl From<&Level> for LevelRecord {
    fn from(level: &Level) -> Self {
        LevelRecord {
            id: level.id.clone(),
            n: level.graph.n(),
            edges: level.graph.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            positions: level.positions.clone(),
            irreducible: level.irreducible,
        }
    }
}

impl TryFrom<LevelRecord> for Level {
    type Error = Error;

    fn try_from(rec: LevelRecord) -> Result<Level> {
        let bad = |msg: String| Error::LevelFormat(format!("level {}: {msg}", rec.id));
        let mut graph = Graph::empty(rec.n);
        let mut prev: Option<[usize; 2]> = None;
        for &[u, v] in &rec.edges {
            if u >= v || v >= rec.n {
                return Err(bad(format!("edge [{u}, {v}] must satisfy u < v < n")));
            }
            if prev.is_some_and(|p| p >= [u, v]) {
                return Err(bad("edges must be sorted and distinct".into()));
            }
            prev = Some([u, v]);
            graph.add_edge(u, v);
        }
        let level = Level::new(rec.id.clone(), graph, rec.positions)?;
        if level.irreducible != rec.irreducible {
            return Err(bad(format!(
                "marked irreducible={} but the graph is {}",
                rec.irreducible,
                if level.irreducible {
                    "irreducible"
                } else {
                    "reducible"
                }
            )));
        }
        Ok(level)
    }
}

/// Writes the corpus as `{"levels":[...]}`, one level per line, in the given
/// order.
pub fn write_levels(levels: &[Level], out: &mut impl Write) -> std::io::Result<()> {
    writeln!(out, "{{\"levels\":[")?;
    for (i, level) in levels.iter().enumerate() {
        let line = serde_json::to_string(&LevelRecord::from(level)).map_err(std::io::Error::other)?;
        let sep = if i + 1 < levels.len() { "," } else { "" };
        writeln!(out, "{line}{sep}")?;
    }
    writeln!(out, "]}}")
}

pub fn save_levels(levels: &[Level], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    write_levels(levels, &mut out)
        .and_then(|_| out.flush())
        .map_err(|e| Error::io(path, e))
}

/// Parses and validates a corpus: ids unique, edges normalized, positions
/// distinct, irreducible flags truthful.
pub fn parse_levels(text: &str) -> std::result::Result<Vec<Level>, Error> {
    let file: LevelFile = serde_json::from_str(text).map_err(|e| Error::LevelFormat(e.to_string()))?;
    let mut ids = BTreeSet::new();
    file.levels
        .into_iter()
        .map(|rec| {
            if !ids.insert(rec.id.clone()) {
                return Err(Error::LevelFormat(format!("duplicate level id {}", rec.id)));
            }
            Level::try_from(rec)
        })
        .collect()
}

pub fn load_levels(path: impl AsRef<Path>) -> Result<Vec<Level>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_levels(&text).map_err(|e| match e {
        Error::LevelFormat(msg) => Error::LevelFormat(format!("{}: {msg}", path.display())),
        other => other,
    })
}

/// A (level, placement, expected verdict) triple for replay in other
/// implementations of the win check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub level: String,
    pub spot: Vec<usize>,
    pub won: bool,
    pub vacant: Vec<usize>,
    pub far_moves: Vec<usize>,
    pub red_edges: Vec<[usize; 2]>,
    /// `win`, or the failed conditions joined by `+` (`no-vacancy`,
    /// `far-move`, `broken-edge`), with `stacked` appended when two vertices
    /// share a spot.
    pub kind: String,
}

impl Fixture {
    pub fn new(level: &Level, placement: &Placement) -> Self {
        let report = check_win(level, placement);
        let mut parts = Vec::new();
        if report.is_reduction() {
            parts.push("win");
        } else {
            if !report.not_onto() {
                parts.push("no-vacancy");
            }
            if !report.local() {
                parts.push("far-move");
            }
            if !report.preserves_adjacency() {
                parts.push("broken-edge");
            }
        }
        if placement.image().len() < placement.len() {
            parts.push("stacked");
        }
        Fixture {
            level: level.id.clone(),
            spot: placement.as_slice().to_vec(),
            won: report.is_reduction(),
            red_edges: report.broken_edges.iter().map(|&(u, v)| [u, v]).collect(),
            vacant: report.vacant,
            far_moves: report.far_moves,
            kind: parts.join("+"),
        }
    }
}

pub const FIXTURE_SEED: u64 = 0x6669_7874;

/// Conformance fixtures for each level: the solver's winning placement, the
/// identity, and up to `per_kind` random placements of every failure kind
/// that turns up in a seeded sample of perturbations.
pub fn conformance_fixtures(levels: &[Level], per_kind: usize) -> Vec<Fixture> {
    let mut rng = ChaCha8Rng::seed_from_u64(FIXTURE_SEED);
    let mut out = Vec::new();
    for level in levels {
        let n = level.graph.n();
        let mut kinds: std::collections::BTreeMap<String, usize> = Default::default();
        let mut push = |f: Fixture, out: &mut Vec<Fixture>, cap: usize| {
            let seen = kinds.entry(f.kind.clone()).or_default();
            if *seen < cap
                && !out
                    .iter()
                    .any(|g: &Fixture| g.level == f.level && g.spot == f.spot)
            {
                *seen += 1;
                out.push(f);
            }
        };
        let witness = find_reduction(&level.graph).witness;
        push(Fixture::new(level, &Placement::identity(n)), &mut out, usize::MAX);
        if let Some(w) = &witness {
            push(Fixture::new(level, w), &mut out, usize::MAX);
        }
        if n == 0 {
            continue;
        }
        let base = witness.unwrap_or_else(|| Placement::identity(n)).into_vec();
        for _ in 0..400 {
            let mut spot = base.clone();
            for _ in 0..rng.random_range(1..=2) {
                let v = rng.random_range(0..n);
                spot[v] = if rng.random_bool(0.5) {
                    rng.random_range(0..n)
                } else {
                    let nbhd = level.graph.closed_neighborhood(v).to_vec();
                    nbhd[rng.random_range(0..nbhd.len())]
                };
            }
            push(Fixture::new(level, &Placement::new(spot)), &mut out, per_kind);
        }
    }
    out
}

/// Writes fixtures as `{"fixtures":[...]}`, one per line.
pub fn write_fixtures(fixtures: &[Fixture], out: &mut impl Write) -> std::io::Result<()> {
    writeln!(out, "{{\"fixtures\":[")?;
    for (i, f) in fixtures.iter().enumerate() {
        let line = serde_json::to_string(f).map_err(std::io::Error::other)?;
        let sep = if i + 1 < fixtures.len() { "," } else { "" };
        writeln!(out, "{line}{sep}")?;
    }
    writeln!(out, "]}}")
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureFile {
    pub fixtures: Vec<Fixture>,
}

//! Append-only store of verified solutions, one JSON object per line.

use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::levels::{check_win, Level};
use crate::reduce::Placement;

/// One line of the solution file: `{"level", "spot", "solver", "ts"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub level: String,
    pub spot: Vec<usize>,
    /// Free-form tag naming who or what solved it.
    pub solver: String,
    /// Seconds since the Unix epoch.
    pub ts: u64,
}

impl SolutionRecord {
    /// A record stamped with the current time.
    pub fn now(level: &Level, placement: &Placement, solver: impl Into<String>) -> Self {
        let ts = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        SolutionRecord {
            level: level.id.clone(),
            spot: placement.as_slice().to_vec(),
            solver: solver.into(),
            ts,
        }
    }
}

/// Single-writer store. Each record is appended with one `write` call on a
/// file opened in append mode, so a concurrent reader sees whole lines.
#[derive(Clone, Debug)]
pub struct SolutionStore {
    path: PathBuf,
}

impl SolutionStore {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        SolutionStore { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Appends `rec` if its placement wins `level`; otherwise returns
    /// [`Error::Rejected`] and leaves the file untouched.
    pub fn record(&self, level: &Level, rec: &SolutionRecord) -> Result<()> {
        if rec.level != level.id {
            return Err(Error::LevelFormat(format!(
                "record is for level {} but was checked against {}",
                rec.level, level.id
            )));
        }
        if rec.spot.len() != level.graph.n() || rec.spot.iter().any(|&s| s >= level.graph.n()) {
            return Err(Error::LevelFormat(format!(
                "placement {:?} does not fit level {} with {} vertices",
                rec.spot,
                level.id,
                level.graph.n()
            )));
        }
        let report = check_win(level, &Placement::new(rec.spot.clone()));
        if !report.is_reduction() {
            return Err(Error::Rejected {
                level: level.id.clone(),
                report,
            });
        }
        let mut line = serde_json::to_string(rec).map_err(|e| Error::Json {
            path: self.path.clone(),
            source: e,
        })?;
        line.push('\n');
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(|e| Error::io(&self.path, e))?;
        file.write_all(line.as_bytes())
            .map_err(|e| Error::io(&self.path, e))
    }

    /// All records, in insertion order. A missing file is an empty store.
    pub fn load_all(&self) -> Result<Vec<SolutionRecord>> {
        let file = match std::fs::File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(Error::io(&self.path, e)),
        };
        let mut out = Vec::new();
        for (idx, line) in BufReader::new(file).lines().enumerate() {
            let line = line.map_err(|e| Error::io(&self.path, e))?;
            if line.trim().is_empty() {
                continue;
            }
            let rec = serde_json::from_str(&line).map_err(|e| Error::Json {
                path: self.path.join(format!("line {}", idx + 1)),
                source: e,
            })?;
            out.push(rec);
        }
        Ok(out)
    }

    /// Records for one level, in insertion order.
    pub fn load(&self, level_id: &str) -> Result<Vec<SolutionRecord>> {
        Ok(self
            .load_all()?
            .into_iter()
            .filter(|r| r.level == level_id)
            .collect())
    }
}

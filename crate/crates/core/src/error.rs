use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::reduce::ReductionReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6: {reason} at byte offset {offset}")]
    Graph6 { offset: usize, reason: String },

    #[error("pixel image, line {line}: {reason}")]
    Pixels { line: usize, reason: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("level file: {0}")]
    LevelFormat(String),

    #[error("placement for level {level} is not a win: {report}")]
    Rejected { level: String, report: ReductionReport },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn graph6(offset: usize, reason: impl Into<String>) -> Self {
        Error::Graph6 {
            offset,
            reason: reason.into(),
        }
    }
}

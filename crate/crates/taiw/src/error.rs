use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the taiw library and CLI.
#[derive(Debug, Error)]
pub enum TaiwError {
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Bad configuration file, unknown key value, or invalid flag combination.
    #[error("config error: {0}")]
    Config(String),

    /// Malformed input data, reported with a 1-based line number.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: u64, msg: String },

    /// Violated data precondition (empty dataset, too few baskets, bad id, ...).
    #[error("data error: {0}")]
    Data(String),

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    /// Training produced a non-finite loss; carries enough context to reproduce.
    #[error("non-finite loss at epoch {epoch}, batch {batch}: {msg}")]
    NonFinite {
        epoch: usize,
        batch: usize,
        msg: String,
    },
}

impl TaiwError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        TaiwError::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, TaiwError>;

use std::path::PathBuf;

use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Weyl type `{0}`")]
    InvalidType(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("group order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: String, cap: u64 },

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("no Shi digraph data for {0}; supply it with --data <path>, or run `verify --oracle-only`")]
    DataUnavailable(String),

    #[error("forbidden paths overlap: {0}")]
    Overlap(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("digraph validation failed: {0}")]
    Validation(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed digraph json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

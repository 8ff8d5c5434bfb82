use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = HarnessError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Core(#[from] varchenko_core::Error),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error("invalid JSON: {0}")]
    Json(String),

    #[error("{0}")]
    Usage(String),
}

impl HarnessError {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        HarnessError::Parse { line, message: message.into() }
    }
}

use std::path::PathBuf;

use thiserror::Error;

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid document: {0}")]
    Document(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] pentagon_core::Error),
}

impl CliError {
    /// 1 when a mathematical check failed, 2 for bad input or usage.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_check_failure() => 1,
            _ => 2,
        }
    }
}

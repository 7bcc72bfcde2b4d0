//! Error kinds mapped onto scriptable exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{path}: {detail}")]
    Io { path: String, detail: String },
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
}

impl CliError {
    /// 2 for validation failures, 3 for hypothesis failures, 4 for I/O and
    /// configuration problems.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Hypothesis(_) => 3,
            CliError::Config(_) | CliError::Io { .. } => 4,
        }
    }
}

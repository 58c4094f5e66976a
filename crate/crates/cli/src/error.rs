use std::path::PathBuf;

use increg::{AnticycleError, ChainError, OracleError, SweepError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("ParseError: cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("ParseError: {0}")]
    Parse(#[from] serde_json::Error),
    /// The file parsed but does not describe a chain.
    #[error("ChainError: {0}")]
    InvalidSpec(ChainError),
    #[error("InvalidInput: {0}")]
    InvalidInput(String),
    #[error("ChainError: {0}")]
    Chain(#[from] ChainError),
    #[error("OracleError: {0}")]
    Oracle(#[from] OracleError),
    #[error("AnticycleError: {0}")]
    Anticycle(#[from] AnticycleError),
    #[error("SweepError: {0}")]
    Sweep(#[from] SweepError),
    /// `report` is the full suite output, printed before the error.
    #[error("verification failed: {failed} of {total} checks")]
    VerificationFailed {
        failed: usize,
        total: usize,
        report: String,
    },
}

impl CliError {
    /// 2 for input the tool cannot use, 1 for failures while computing.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. }
            | CliError::Parse(_)
            | CliError::InvalidSpec(_)
            | CliError::InvalidInput(_)
            | CliError::Chain(ChainError::IndexBelowStability { .. }) => 2,
            _ => 1,
        }
    }
}

use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced by the command layer, each with a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("state space of {required} states exceeds the budget of {budget} states")]
    Budget { required: u64, budget: u64 },
    #[error("{0} invariant violation(s)")]
    Violations(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io { .. } => 1,
            CliError::Budget { .. } => 2,
            CliError::Violations(_) => 3,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }
}

impl From<pursuit_core::Error> for CliError {
    fn from(e: pursuit_core::Error) -> Self {
        match e {
            pursuit_core::Error::Budget { required, budget } => CliError::Budget { required, budget },
            other => CliError::Input(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

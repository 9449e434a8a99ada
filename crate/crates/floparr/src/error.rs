use std::io;
use std::path::PathBuf;

use floparr_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("cannot read input {0:?}: not Dynkin data and not a readable file")]
    Input(String),
    #[error("plot needs a two-dimensional arrangement, got dimension {0}")]
    NotRankTwo(usize),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => match e {
                Error::Parse(_) | Error::InvalidType { .. } | Error::UnknownNode { .. } => 2,
                Error::EmptySurvivingSet => 3,
                Error::Overflow { .. } => 4,
                Error::UnknownChamber(_) => 5,
                _ => 1,
            },
            CliError::Json(_) | CliError::Input(_) | CliError::Usage(_) => 2,
            CliError::NotRankTwo(_) => 6,
            CliError::Io { .. } => 1,
        }
    }
}

//! CLI error classification.
//!
//! Exit codes: 0 success (including mathematical verdict payloads),
//! 2 usage or parse errors, 3 resource-guard refusals, 4 internal
//! inconsistency (a theorem-guaranteed object was not found).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] kneser_core::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Parse(String),
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_INCONSISTENT: i32 = 4;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(kneser_core::Error::Guard { .. }) => EXIT_GUARD,
            CliError::Core(kneser_core::Error::Inconsistency(_)) => EXIT_INCONSISTENT,
            CliError::Core(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_USAGE,
            CliError::Parse(_) => EXIT_USAGE,
        }
    }
}

pub fn parse_err<T>(msg: impl std::fmt::Display) -> Result<T, CliError> {
    Err(CliError::Parse(msg.to_string()))
}

pub type CliResult<T> = Result<T, CliError>;

use std::process::ExitCode;

use packsyz_core::Error;

/// Exit status for a successful run.
pub const EXIT_OK: u8 = 0;
/// Exit status when a verification does not pass.
pub const EXIT_VERIFY: u8 = 1;
/// Exit status for malformed invocations.
pub const EXIT_USAGE: u8 = 2;
/// Exit status when a resource cap stops a computation.
pub const EXIT_CAP: u8 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("verification failed")]
    Failed,
}

pub type CliResult<T> = Result<T, CliError>;

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(Error::ResourceCap { .. }) => EXIT_CAP,
            CliError::Core(
                Error::InvalidPartition(_) | Error::SizeMismatch { .. } | Error::Precondition(_) | Error::Parse(_),
            ) => EXIT_USAGE,
            _ => EXIT_VERIFY,
        }
    }

    pub fn into_exit(self) -> ExitCode {
        ExitCode::from(self.exit_code())
    }
}

use std::io;
use std::path::PathBuf;

/// Everything the binary can fail with, mapped onto stable exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot parse {what}: {detail}")]
    Parse { what: String, detail: String },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error(transparent)]
    Precondition(#[from] compbern_core::Error),
    #[error("{failed} check(s) failed")]
    VerifyFailed { failed: usize },
}

impl CliError {
    pub fn parse(what: impl Into<String>, detail: impl ToString) -> Self {
        CliError::Parse { what: what.into(), detail: detail.to_string() }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } | CliError::Io { .. } => 2,
            CliError::Precondition(_) => 3,
            CliError::VerifyFailed { .. } => 4,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

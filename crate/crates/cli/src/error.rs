use thiserror::Error;

/// Failures surfaced by the command-line front end, each with its exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Domain(#[from] dense_coding::Error),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(dense_coding::Error::InvalidBracket { .. }) => 2,
            CliError::Domain(_) => 3,
            CliError::Io { .. } => 4,
        }
    }
}

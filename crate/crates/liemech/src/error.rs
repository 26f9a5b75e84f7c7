use std::path::PathBuf;

/// Everything the command line can fail with.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] liemech_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    /// A flag value that does not parse (bad JSON, wrong shape).
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Format(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            _ => 1,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Domain(e) => e.code(),
            CliError::Io { .. } => "io",
            CliError::Input(_) => "usage",
            CliError::Format(_) => "format",
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    /// One line: `error: <code>: <message>`.
    pub fn render(&self) -> String {
        let msg = self.to_string().replace('\n', " ");
        format!("error: {}: {}", self.code(), msg)
    }
}

pub type CliResult<T> = Result<T, CliError>;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad configuration or parameters; exit status 2.
    #[error("{0}")]
    Validation(String),
    /// Failure while running a valid experiment; exit status 1.
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        CliError::Validation(msg.into())
    }
}

impl From<subfbm_core::Error> for CliError {
    fn from(e: subfbm_core::Error) -> Self {
        use subfbm_core::Error as E;
        match e {
            E::Domain { .. } | E::Degenerate(_) => CliError::Validation(e.to_string()),
            _ => CliError::Runtime(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Runtime(format!("I/O error: {e}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;

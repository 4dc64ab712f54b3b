use thiserror::Error;

/// Error type shared by every module in the crate.
///
/// The variants map onto the CLI exit-code contract: domain, parse,
/// resource and generation failures exit with code 2; numeric failures
/// (eigensolver non-convergence, non-finite data) exit with code 3.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Input violates a documented precondition (bad parameter, id out of
    /// range, isolated vertex for the normalized Laplacian, ...).
    #[error("invalid input: {0}")]
    Domain(String),

    /// Malformed edge-list text. Line numbers are 1-based.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A configured limit was exceeded (dense eigensolver cap).
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// Numerical failure: iteration cap hit or non-finite values.
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// Random-graph sampling could not satisfy the request.
    #[error("generation failed: {0}")]
    Generation(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }

    /// Process exit code used by the CLI for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Numeric(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter or argument violates the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The coefficient series did not reach the tail criterion.
    #[error("coefficient series did not converge within {terms} terms (coherence parameter {param})")]
    NonConvergence { terms: usize, param: f64 },

    /// A closed-form expression left the domain of an inverse trig function.
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Process exit status for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Parse(_) => 2,
            Error::NonConvergence { .. } | Error::Numerical(_) => 3,
            Error::Io(_) => 1,
        }
    }
}

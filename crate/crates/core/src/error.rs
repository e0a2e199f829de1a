use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The caller handed in data that violates an operation's precondition.
    #[error("input error: {0}")]
    Input(String),

    #[error("oracle limit: graph has {n} vertices, limit is {limit}")]
    OracleLimit { n: usize, limit: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The graph is not C4-free with independence number at most two.
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    /// A step that a proof says cannot fail did fail. Either the
    /// input did not meet the preconditions or there is a bug.
    #[error("guarantee violated: {0}")]
    GuaranteeViolated(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn guarantee(msg: impl Into<String>) -> Self {
        Error::GuaranteeViolated(msg.into())
    }
}

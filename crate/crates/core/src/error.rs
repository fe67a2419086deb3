use thiserror::Error;

/// Errors raised by constructors, parsers and the certificate machinery.
///
/// Verification failures are not errors: verifiers return a [`Verdict`](crate::Verdict)
/// that names the first violated condition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameters for {family}: {message}")]
    BadParameter { family: String, message: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid host tree: {0}")]
    InvalidTree(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("malformed certificate: {0}")]
    Certificate(String),

    #[error("no feasible representation: {0}")]
    Infeasible(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Outcome of a certificate check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<V> {
    Accept,
    Reject(V),
}

impl<V> Verdict<V> {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }

    pub fn violation(&self) -> Option<&V> {
        match self {
            Verdict::Accept => None,
            Verdict::Reject(v) => Some(v),
        }
    }
}

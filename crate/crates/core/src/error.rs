use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    /// A relation's right-hand side mentions a generator that is not strictly
    /// later than the relation's own generators.
    #[error("line {line}: {message}")]
    IndexOrder { line: usize, message: String },

    #[error("line {line}: exponent {exponent} out of range 1..{prime}")]
    ExponentRange {
        line: usize,
        exponent: u64,
        prime: u32,
    },

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("collection exceeded the step budget of {budget} rewrites")]
    StepBudget { budget: usize },

    #[error("inconsistent presentation: {0}")]
    Inconsistent(String),

    #[error("group order {order} exceeds the cap {cap}")]
    OrderCap { order: u128, cap: usize },

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("invalid central amalgamation: {0}")]
    InvalidAmalgam(String),

    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A search that a theorem guarantees to succeed did not; this points at
    /// a bug (or a counterexample).
    #[error("theorem check failed: {0}")]
    TheoremFailure(String),

    #[error("unknown group key `{0}`")]
    UnknownKey(String),

    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),

    #[error("corpus error: {0}")]
    Corpus(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

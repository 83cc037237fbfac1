use thiserror::Error;

pub type Result<T> = std::result::Result<T, JacoError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JacoError {
    /// An argument outside the domain of the operation (`n = 0`, etc).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: u64, n: u64 },

    #[error("invalid Zeckendorf representation: {0}")]
    InvalidZeckendorf(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    /// The row engine was advanced before its three seed rows were emitted.
    #[error("row engine used before seeding")]
    NotSeeded,

    /// A property the construction guarantees did not hold. Never recovered from.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl JacoError {
    pub(crate) fn vertices_from_one() -> Self {
        JacoError::Domain("vertices are indexed from 1".to_owned())
    }
}

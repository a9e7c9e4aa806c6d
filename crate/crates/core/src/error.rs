use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("presentation mismatch: {0}")]
    PresentationMismatch(String),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("presentation is not confluent: {0}")]
    NotConfluent(String),

    #[error("not a braided bimonoid: {0}")]
    NotBimonoid(String),

    #[error("internal degree {degree} exceeds truncation {limit}")]
    Truncation { degree: u32, limit: u32 },

    #[error("arity mismatch: expected {expected}, got {found}")]
    Arity { expected: usize, found: usize },

    #[error("index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("invalid resolution: {0}")]
    InvalidResolution(String),

    #[error("exactness fails at homological degree {hdeg}, internal degree {ideg}")]
    Exactness { hdeg: usize, ideg: u32 },

    #[error("linear system has no solution: {0}")]
    Unsolvable(String),

    #[error("degree error: {0}")]
    Degree(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

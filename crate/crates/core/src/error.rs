use thiserror::Error;

/// Errors raised by the exact engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix has no left inverse (column rank {rank} < {cols})")]
    NoLeftInverse { rank: usize, cols: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse rational from {0:?}")]
    ParseRat(String),
    #[error("object mismatch: expected {expected}, found {found}")]
    ObjectMismatch { expected: String, found: String },
    #[error("morphism is not parity preserving")]
    OddMorphism,
    #[error("not an idempotent")]
    NotIdempotent,
    #[error("invalid permutation: {0}")]
    InvalidPerm(String),
    #[error("incompatible power spaces: {0}")]
    PowerMismatch(String),
    #[error("degree out of range: {0}")]
    Degree(String),
    #[error("pairing is not perfect")]
    NotPerfect,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not a section: f∘s differs from the identity")]
    NotSection,
    #[error("not a sign functor: {0}")]
    NotSignFunctor(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

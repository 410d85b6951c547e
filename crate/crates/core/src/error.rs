use thiserror::Error;

/// Errors raised by the library. Every operation is pure, so an error always
/// describes a problem with the inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {degree} outside the range {min}..={max}")]
    DegreeOutOfRange { degree: i64, min: i64, max: i64 },

    #[error("arity {arity} out of range for ambient dimension {dim}")]
    ArityOutOfRange { arity: usize, dim: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("map does not commute with the differentials in degree {degree}")]
    NonChainMap { degree: i64 },

    #[error("differential squares to a nonzero map at degree {degree}")]
    NotAComplex { degree: i64 },

    #[error("skewness at ({i},{j})")]
    NotSkew { i: usize, j: usize },

    #[error("jacobi identity fails on basis triple ({i},{j},{k})")]
    NotLie { i: usize, j: usize, k: usize },

    #[error("representation is not flat on generators ({i},{j})")]
    NotFlat { i: usize, j: usize },

    #[error("arity mismatch: {0}")]
    ArityMismatch(String),

    #[error("multiderivations live on different ambient spaces ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("cochain is not closed")]
    NotCocycle,

    #[error("multiderivation has a nonzero component of weight {weight}")]
    NotLinear { weight: i64 },

    #[error("{0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation error: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

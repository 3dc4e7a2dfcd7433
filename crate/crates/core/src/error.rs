//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported Lie type/rank: {0}")]
    UnsupportedCartan(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("weight is not dominant: {0:?}")]
    NonDominantWeight(Vec<i64>),

    #[error("pole at q = 1 in denominator {0}")]
    PoleAtQOne(String),

    #[error("square root not available for {0}")]
    SqrtUnsupported(String),

    #[error("division by zero field element")]
    DivisionByZero,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("tensor square has a summand of multiplicity > 1 at weight {0:?}")]
    Multiplicity(Vec<i64>),

    #[error("module relations failed:\n{0}")]
    RelationFailure(String),

    #[error("classical specialization degenerated to zero for component {0:?}")]
    DegenerateSpecialization(Vec<i64>),

    #[error("braiding certification failed: {0}")]
    CertificationFailure(String),

    #[error("braid word strand count {word} does not match representation on {rep} strands")]
    StrandMismatch { word: usize, rep: usize },

    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },

    #[error("dimension cap exceeded: {dim} > {cap}")]
    CapExceeded { dim: usize, cap: usize },

    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

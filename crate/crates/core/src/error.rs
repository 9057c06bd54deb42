use thiserror::Error;

/// Errors raised by the numerical routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix contains non-finite entries")]
    NonFinite,
    #[error("matrix is not Hermitian (relative defect {defect:e})")]
    NotHermitian { defect: f64 },
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("invalid signature entry {0}, expected +1 or -1")]
    InvalidSignature(i32),
    #[error("space is not a proper Pontryagin space (p = {p}, q = {q})")]
    NotPontryagin { p: usize, q: usize },
    #[error("subspace is degenerate: its indefinite Gram matrix is singular")]
    DegenerateSubspace,
    #[error("vectors are not J-orthonormal (Gram defect {defect:e})")]
    NotJOrthonormal { defect: f64 },
    #[error("family is not a frame: rank {rank} < dimension {dim}")]
    NotFrame { rank: usize, dim: usize },
    #[error("frame operator is numerically singular (condition number {condition:e})")]
    SingularFrameOperator { condition: f64 },
    #[error("operator is not positive definite (smallest eigenvalue {min_eigenvalue:e})")]
    NotPositiveDefinite { min_eigenvalue: f64 },
    #[error("target diagonal is not majorized by the spectrum")]
    NotMajorized,
    #[error("families have different index counts ({left} vs {right})")]
    KMismatch { left: usize, right: usize },
    #[error("invalid parameters: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;

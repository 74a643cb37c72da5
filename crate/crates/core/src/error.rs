use thiserror::Error;

use crate::schouten::JacobiWitness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("variable index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero polynomial has no square-free decomposition")]
    ZeroPolynomial,
    #[error("invalid chart: {0}")]
    InvalidChart(String),
    #[error("operands live on different charts")]
    ChartMismatch,
    #[error("expected a pure-grade multivector")]
    NonPureGrade,
    #[error("expected grade {expected}, found {found:?}")]
    WrongGrade { expected: usize, found: Option<usize> },
    #[error("contraction is only defined for forms of degree 1 or 2")]
    UnsupportedFormGrade,
    #[error("operation needs a plain volume (no connection shift)")]
    ShiftedVolume,
    #[error("volume density must be nonzero")]
    ZeroDensity,
    #[error("coefficients must be polynomial")]
    NonPolynomial,
    #[error("Poisson structure has not been Jacobi-verified")]
    UnverifiedStructure,
    #[error("bivector fails the Jacobi identity: {0}")]
    NotPoisson(JacobiWitness),
    #[error("connection is not flat (D^2 != 0)")]
    NonFlatConnection,
    #[error("top power needs an even chart dimension, got {0}")]
    OddDimension(usize),
    #[error("Poisson tensor is degenerate everywhere (top power vanishes)")]
    DegenerateStructure,
    #[error("invalid structure constants: {0}")]
    InvalidStructureConstants(String),
    #[error("Poisson tensor does not vanish at the origin")]
    NotVanishingAtOrigin,
    #[error("maximum degree must be at least 1")]
    InvalidMaxDegree,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
}

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("non-invertible series: constant term is zero")]
    NonInvertible,
    #[error("exponential of the constant term is not representable in this coefficient ring")]
    ExpNotRepresentable,
    #[error("sequence kind mismatch: {0}")]
    KindMismatch(String),
    #[error("entry ({n}, {k}) lies outside the lower triangle")]
    OutsideTriangle { n: usize, k: usize },
    #[error("Cesàro order must be finite and nonnegative, got {0}")]
    NegativeOrder(f64),
    #[error("normalising sequence must be positive and nondecreasing (index {0})")]
    BadGamma(usize),
    #[error("exponent p must satisfy p >= 1, got {0}")]
    BadExponent(f64),
    #[error("radius must lie in [0, 1], got {0}")]
    BadRadius(f64),
    #[error("b is not non-extreme at grid resolution (node {0})")]
    NotNonExtreme(usize),
    #[error("b not in unit ball at this truncation (degree {0})")]
    NotInUnitBall(usize),
    #[error("index {index} too large for dimension {dim}")]
    DimensionTooSmall { index: usize, dim: usize },
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

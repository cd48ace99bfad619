use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("matrix size n = {0} is out of range (need n >= 2)")]
    BadSize(usize),
    #[error("truncation degree must be at least 1")]
    BadDegree,
    #[error("index ({i}, {j}) out of range for n = {n}")]
    BadIndex { i: usize, j: usize, n: usize },
    #[error("degree {needed} exceeds the truncation degree {max}")]
    Truncation { needed: u32, max: u32 },
    #[error("operation requires {0} mode")]
    WrongMode(&'static str),
    #[error("elements belong to different algebra contexts")]
    ContextMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series is not invertible: constant term is {0}, expected 1")]
    NotUnitConstant(String),
    #[error("matrix series is not invertible: constant part is not the identity")]
    NotIdentityConstant,
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RttError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("R-matrix evaluated at a pole ({0})")]
    Pole(String),
    #[error("invalid minor: {0}")]
    InvalidMinor(String),
    #[error("invalid range: {0}")]
    Range(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("cannot parse rational number from {0:?}")]
    Rational(String),
    #[error("cannot parse index list from {0:?}")]
    IndexList(String),
}

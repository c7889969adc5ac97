use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unsupported dimension {0} (only 2 and 3 are supported)")]
    UnsupportedDimension(usize),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("prime {0} divides a denominator")]
    BadPrime(u64),
    #[error("degenerate position: {0}")]
    DegeneratePosition(String),
    #[error("points are not coplanar")]
    NonCoplanar,
    #[error("stress space of dimension {0} is outside the supported covector range")]
    UnsupportedStressDimension(usize),
    #[error("graph mismatch: {0}")]
    GraphMismatch(String),
    #[error("identical inputs: {0}")]
    IdenticalInput(String),
    #[error("level {level} exceeds the cap {cap}")]
    CapExceeded { level: usize, cap: usize },
    #[error("degenerate construction: {0}")]
    DegenerateConstruction(String),
    #[error("empty sample set: {0}")]
    EmptySamples(String),
    #[error("configuration is not normalizable: {0}")]
    NotNormalizable(String),
    #[error("configuration is too degenerate: {0}")]
    DeeperDegeneracy(String),
    #[error("unsupported vertex count {0}")]
    UnsupportedN(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("floating-point literal rejected: {0}")]
    FloatRejected(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

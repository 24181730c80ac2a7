use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {parts:?}: parts must be positive and weakly decreasing")]
    InvalidPartition { parts: Vec<u32> },

    #[error("invalid composition {parts:?}: parts must be positive")]
    InvalidComposition { parts: Vec<u32> },

    #[error("subset element {element} lies outside [1, {max}]")]
    InvalidSubset { element: u32, max: u32 },

    #[error("size mismatch: left has size {left}, right has size {right}")]
    SizeMismatch { left: u32, right: u32 },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("degree must be at least 1, got {0}")]
    InvalidDegree(u32),

    #[error("unknown basis pair {0:?}")]
    UnknownPair(String),

    #[error("{pair} at n = {n} exceeds the enumeration budget (max n = {max})")]
    BudgetExceeded { pair: String, n: u32, max: u32 },

    /// An assembled matrix violated unit diagonal or lower triangularity.
    /// This is an ordering or counting bug, never a user error.
    #[error("{0}")]
    Triangularity(Box<TriangularityViolation>),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed matrix data: {0}")]
    Malformed(String),
}

/// The first offending entry of a matrix that is not unitriangular.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{context}: entry at row {row} ({row_label}), column {col} ({col_label}) is {value}, expected {expected}")]
pub struct TriangularityViolation {
    pub context: String,
    pub row: usize,
    pub col: usize,
    pub row_label: String,
    pub col_label: String,
    pub value: String,
    pub expected: String,
}

pub type Result<T> = std::result::Result<T, Error>;

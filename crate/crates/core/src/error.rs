use thiserror::Error;

/// Every failure the library can signal.
///
/// Variants that describe a violated mathematical expectation
/// (`NonzeroRemainder`, `NonIntegral`) are correctness alarms: they should
/// never fire on valid inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("inexact polynomial division: nonzero remainder")]
    NonzeroRemainder,
    #[error("non-integral coefficient where an integer was required")]
    NonIntegral,
    #[error("invalid partition {0:?}: parts must be positive and nonincreasing")]
    InvalidPartition(Vec<usize>),
    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid m-sequence at index {index}: {reason}")]
    InvalidMSeq { index: usize, reason: String },
    #[error("invalid area sequence at index {index}: {reason}")]
    InvalidArea { index: usize, reason: String },
    #[error("edge set is not the incomparability graph of a natural unit interval order: {0}")]
    NotUnitInterval(String),
    #[error("brute-force bound exceeded: n = {n} > {bound}")]
    BruteForceBound { n: usize, bound: usize },
    #[error("the given edges do not form a triangle of the graph")]
    NotATriangle,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("parameter out of range: {0}")]
    RangeViolation(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;

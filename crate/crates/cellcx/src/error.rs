use exactla::LinAlgError;
use thiserror::Error;
use umor::UMorError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CellError {
    #[error(transparent)]
    Linear(#[from] LinAlgError),
    #[error(transparent)]
    Ring(#[from] UMorError),
    #[error("genus mismatch: expected {expected}, got {got}")]
    GenusMismatch { expected: usize, got: usize },
    #[error("coefficient too large for a matrix entry")]
    Overflow,
    #[error("boundary of boundary is nonzero for g={g}, n={n} at bar-degree {b}")]
    NotAComplex { g: usize, n: u32, b: usize },
    #[error("free group map of rank {got} does not act on genus {genus}")]
    MapRank { genus: usize, got: usize },
}

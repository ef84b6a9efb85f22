use exactla::LinAlgError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtError {
    #[error(transparent)]
    Linear(#[from] LinAlgError),
    #[error("variable heights must be at least 2 and d0 at least 1")]
    BadAlgebra,
    #[error("malformed module data: {0}")]
    Malformed(String),
    #[error("variable {var} is not nilpotent of the required order at weight {weight}")]
    NotNilpotent { var: usize, weight: i64 },
    #[error("variables {a} and {b} do not commute at weight {weight}")]
    NotCommuting { a: usize, b: usize, weight: i64 },
    #[error("pairing is not invariant, symmetric and nondegenerate at weight {weight}")]
    BadPairing { weight: i64 },
    #[error("the operation needs an invariant pairing")]
    MissingPairing,
    #[error("subspace at weight {weight} is not stable under the action")]
    NotStable { weight: i64 },
    #[error("barcode reconstruction failed for variable {var}")]
    BarcodeMismatch { var: usize },
    #[error("module is not free over the first variable")]
    NotFree,
    #[error("tameness violated: {0}")]
    TamenessViolation(String),
}

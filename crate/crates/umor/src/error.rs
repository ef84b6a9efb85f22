use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UMorError {
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("coefficient overflow")]
    Overflow,
    #[error("element is not a sum of distinct quadratic exterior monomials")]
    NotQuadraticExterior,
}

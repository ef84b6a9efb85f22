use cellcx::CellError;
use freegroup::FreeGroupError;
use thiserror::Error;
use umor::UMorError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum McgError {
    #[error(transparent)]
    FreeGroup(#[from] FreeGroupError),
    #[error(transparent)]
    Ring(#[from] UMorError),
    #[error(transparent)]
    Cell(#[from] CellError),
    #[error("map of rank {rank} -> {target} is not an endomorphism of the genus-{genus} free group")]
    RankMismatch { genus: usize, rank: usize, target: usize },
    #[error("candidate file line {line}: {source}")]
    Parse { line: usize, source: FreeGroupError },
    #[error("abelianization is not the identity mod {p}")]
    AbelianizationNontrivial { p: u64 },
    #[error("xi is nonzero mod {p} on generator {generator}")]
    XiNonzero { p: u64, generator: usize },
    #[error("supplied inverse does not compose to the identity")]
    NotAnInverse,
    #[error("{0} must be a positive prime")]
    BadModulus(u64),
}

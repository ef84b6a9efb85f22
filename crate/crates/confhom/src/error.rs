use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfhomError {
    #[error("{0}")]
    Usage(String),
    #[error("estimated {estimate} cells exceed the cap of {cap}; raise --max-cells to proceed")]
    TooLarge { estimate: u64, cap: u64 },
    #[error(transparent)]
    Linear(#[from] exactla::LinAlgError),
    #[error(transparent)]
    Cell(#[from] cellcx::CellError),
    #[error(transparent)]
    Ext(#[from] extengine::ExtError),
    #[error(transparent)]
    Mcg(#[from] mcg::McgError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl ConfhomError {
    /// 2 for usage problems, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            ConfhomError::Usage(_) | ConfhomError::TooLarge { .. } => 2,
            _ => 1,
        }
    }
}

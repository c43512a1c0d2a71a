use thiserror::Error;

#[derive(Debug, Error)]
pub enum AppError {
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] fbcalc_core::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl AppError {
    /// Process exit code: 3 for numerical failures, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Core(e) if e.is_numeric() => 3,
            _ => 2,
        }
    }
}

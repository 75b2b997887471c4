use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("{0}")]
    Usage(String),
    #[error("methods disagree: {0}")]
    Disagreement(String),
    #[error(transparent)]
    Core(#[from] toric_core::Error),
}

impl CliError {
    /// 0 success, 2 input error, 3 resource cap exceeded, 1 internal failure.
    pub fn exit_code(&self) -> i32 {
        use toric_core::Error as E;
        match self {
            CliError::Core(E::FiberCapExceeded { .. }) => 3,
            CliError::Core(E::GenerationCheckFailed(_)) | CliError::Disagreement(_) => 1,
            CliError::Core(E::Overflow) => 3,
            _ => 2,
        }
    }
}

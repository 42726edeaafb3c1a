use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("invalid rational literal `{0}`")]
    BadRational(String),
    #[error("unsupported: {0}")]
    Unsupported(&'static str),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("grade mismatch: expected {expected}, found {found}")]
    GradeMismatch { expected: usize, found: usize },
}

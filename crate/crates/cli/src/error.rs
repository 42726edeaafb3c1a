use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}:{column}: {message}")]
    Json {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("expression error at column {column}: {message}")]
    Expression { column: usize, message: String },
    #[error("{0}")]
    Semantic(String),
}

impl CliError {
    /// 1 for semantic failures, 2 for unreadable or malformed input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Semantic(_) => 1,
            _ => 2,
        }
    }
}

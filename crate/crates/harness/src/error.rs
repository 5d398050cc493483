use gradspec_core::AlgebraError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    /// Not valid JSON, or JSON that does not match the instance schema.
    #[error("{source_name}: parse error at line {line}, column {column}: {message}")]
    Parse { source_name: String, line: usize, column: usize, message: String },
    /// Well-formed description that does not define a valid structure.
    #[error("{source_name}: invalid {location}: {error}")]
    Validation { source_name: String, location: &'static str, error: AlgebraError },
    #[error("{path}: {error}")]
    Io { path: String, error: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl HarnessError {
    /// Process exit code under the CLI contract.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

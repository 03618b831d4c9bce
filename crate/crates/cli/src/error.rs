use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("algebraic failure: {0}")]
    Algebra(ncquo::Error),
    #[error("residual check failed: {0}")]
    Residual(String),
}

impl CliError {
    /// 0 ok, 1 residual check failed, 2 parse or usage error, 3 algebraic failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Residual(_) => 1,
            CliError::Io { .. } | CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Algebra(_) => 3,
        }
    }
}

impl From<ncquo::Error> for CliError {
    fn from(e: ncquo::Error) -> Self {
        match e {
            ncquo::Error::InvalidArgument(m) => CliError::Usage(m),
            other => CliError::Algebra(other),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

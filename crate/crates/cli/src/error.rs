use thiserror::Error;

use solvcohom_core::lie::ValidationReport;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error("parse error at {at}: {message}")]
    Parse { at: String, message: String },

    #[error("validation failed:\n{0}")]
    Invalid(ValidationReport),

    #[error("{0}")]
    Mode(String),

    #[error(transparent)]
    Core(solvcohom_core::Error),
}

impl From<solvcohom_core::Error> for CliError {
    fn from(e: solvcohom_core::Error) -> Self {
        match e {
            solvcohom_core::Error::Invalid(r) => CliError::Invalid(r),
            solvcohom_core::Error::Mode(m) => CliError::Mode(m),
            other => CliError::Core(other),
        }
    }
}

impl CliError {
    /// 1 for validation and mode problems, 2 for unreadable or malformed input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } => 2,
            CliError::Invalid(_) | CliError::Mode(_) | CliError::Core(_) => 1,
        }
    }
}

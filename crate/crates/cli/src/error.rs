use thiserror::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INADMISSIBLE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] besselw::Error),
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use besselw::Error as E;
        match self {
            CliError::Usage(_) | CliError::Json(_) => EXIT_USAGE,
            CliError::Core(e) => match e {
                E::ParseRational(_)
                | E::InvalidSeedSet(_)
                | E::InvalidParameter { .. }
                | E::InvalidSpec(_)
                | E::InvalidGrid(_)
                | E::InvalidLevel { .. }
                | E::ZeroBeta => EXIT_USAGE,
                E::Inadmissible(_) => EXIT_INADMISSIBLE,
                _ => EXIT_FAIL,
            },
            CliError::Io(_) | CliError::Csv(_) => EXIT_FAIL,
        }
    }
}

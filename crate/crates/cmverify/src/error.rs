use thiserror::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown scenario `{0}` (try `cmverify list`)")]
    UnknownScenario(String),

    #[error("config: {0}")]
    Config(String),

    #[error("scenario `{0}` produces no data series")]
    NoSeries(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl VerifyError {
    pub fn exit_code(&self) -> i32 {
        match self {
            VerifyError::UnknownScenario(_) | VerifyError::Config(_) | VerifyError::NoSeries(_) => EXIT_USAGE,
            _ => EXIT_FAIL,
        }
    }
}

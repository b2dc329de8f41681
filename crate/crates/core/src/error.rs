use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum PvgError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid series: {0}")]
    InvalidSeries(String),

    #[error("node index out of range: ({i}, {j}) with n = {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },

    #[error("series too short: need {needed} samples after decimation, have {available}")]
    TooShort { needed: usize, available: usize },

    #[error("sample rate {source_hz} Hz is not an integer multiple of target rate {target_hz} Hz")]
    RateMismatch { source_hz: f64, target_hz: f64 },

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("random baseline has zero clustering; small-worldness is undefined")]
    DegenerateBaseline,

    #[error("power-law fit needs at least 3 distinct degrees >= 1, found {distinct}")]
    InsufficientSupport { distinct: usize },

    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error("invalid config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, PvgError>;

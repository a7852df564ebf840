use thiserror::Error;

/// Error type shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A coefficient or Lyapunov evaluation produced NaN/inf; names the point.
    #[error("non-finite value from {what} at t={t}, x={x:?}")]
    NonFinite { what: String, t: f64, x: Vec<f64> },

    /// A path exceeded the overflow guard during integration.
    #[error("integration overflow on path {path} at step {step} (t={t}, |x|={norm:.3e})")]
    Overflow {
        path: usize,
        step: usize,
        t: f64,
        norm: f64,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed data: {0}")]
    Format(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

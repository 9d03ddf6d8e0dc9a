use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParams { name: &'static str, reason: String },

    #[error("invalid time {0}: the propagator route needs t > 0")]
    InvalidTime(f64),

    #[error("momentum cutoff too small: {reason}")]
    CutoffTooSmall { reason: String },

    #[error("initial level {0} is not supported by this operation")]
    UnsupportedLevel(u8),

    #[error("unsupported ensemble: {0}")]
    UnsupportedEnsemble(&'static str),

    #[error("quadrature did not converge: error estimate {estimate:.3e} > tolerance {tolerance:.3e} after {segments} segments")]
    NotConverged {
        estimate: f64,
        tolerance: f64,
        segments: usize,
    },
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParams {
            name,
            reason: reason.into(),
        }
    }
}

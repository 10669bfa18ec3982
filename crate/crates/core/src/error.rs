use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The supplied partial quotients cannot certify the floor needed for
    /// this sequence index.
    #[error("insufficient precision: cannot certify symbol at index {index}")]
    InsufficientPrecision { index: i64 },

    #[error("window exhausted at step {step}: {detail}")]
    WindowExhausted { step: usize, detail: String },

    #[error("no divergence at step {step}: consecutive occurrences never disagree inside the window")]
    NoDivergence { step: usize },

    #[error("decode failed at step {step}: {detail}")]
    Decode { step: usize, detail: String },

    #[error("budget exceeded: need {needed} symbols, budget is {budget}")]
    Budget { needed: u128, budget: usize },

    #[error("resource limit: {0}")]
    Resource(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// True for failures caused by a too-small window, precision or budget
    /// rather than by malformed input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::InsufficientPrecision { .. }
                | Error::WindowExhausted { .. }
                | Error::NoDivergence { .. }
                | Error::Budget { .. }
                | Error::Resource(_)
        )
    }
}

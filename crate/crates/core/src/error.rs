use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The requested gain pushes a squeezing parameter to or past the
    /// divergence point (`g² tanh r ≥ 1` or `g tanh s ≥ 1`).
    #[error("unphysical gain: {0}")]
    UnphysicalGain(String),

    #[error("cutoff too large: {0}")]
    CutoffTooLarge(String),

    /// A numerical budget (truncation tail, grid error) was exceeded.
    #[error("budget violation: {0}")]
    Budget(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

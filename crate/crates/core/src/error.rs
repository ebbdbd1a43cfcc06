use thiserror::Error;

/// Errors raised by the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live in different rings.
    #[error("ring context mismatch: {0}")]
    Context(String),
    /// A caller-supplied argument violates an operation's contract.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// Input failed a structural validator (homogeneity, smoothness, ...).
    #[error("validation failed: {0}")]
    Validation(String),
    /// The input is degenerate for the requested quantity.
    #[error("degenerate input: {0}")]
    Degenerate(String),
    /// An operation's precondition does not hold on this input.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Randomized construction could not be completed from this seed.
    #[error("seed error: {0}")]
    Seed(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    /// True for errors caused by bad user input rather than internal failure.
    pub fn is_user_error(&self) -> bool {
        !matches!(self, Error::Degenerate(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

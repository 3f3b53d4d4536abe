use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text input outside the expression grammar; `position` is a byte offset.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// A hypothesis of the requested construction does not hold. The message
    /// names the hypothesis.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    /// Group operations were requested on a curve with 4A^3 + 27B^2 = 0.
    #[error("singular curve: 4A^3 + 27B^2 = 0")]
    SingularCurve,

    /// A search or certification budget ran out. Not a proof of anything.
    #[error("budget exhausted: {0}")]
    Exhausted(String),

    /// An internal re-verification failed. Always a bug.
    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub fn hypothesis(msg: impl Into<String>) -> Self {
        Error::Hypothesis(msg.into())
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 4,
            Error::Hypothesis(_) | Error::SingularCurve => 2,
            Error::Exhausted(_) => 3,
            Error::Verification(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

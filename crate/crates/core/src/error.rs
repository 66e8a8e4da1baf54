use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("operation undefined on the zero ideal")]
    ZeroIdeal,

    #[error("index {value} outside the admissible range {range}")]
    Range { value: Box<Rat>, range: String },

    #[error("index {requested} exceeds the spectrum cutoff {cutoff}")]
    CutoffExceeded {
        requested: Box<Rat>,
        cutoff: Box<Rat>,
    },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("hypothesis violated by component {index} ({label}): {reason}")]
    Hypothesis {
        index: usize,
        label: String,
        reason: String,
    },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("exponent overflow")]
    Overflow,
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

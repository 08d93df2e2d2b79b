use thiserror::Error;

/// Errors reported by the library.
///
/// `InvariantViolation` is never expected on correct input: it means a
/// structural identity (integrality, vanishing tail, exact cancellation) did
/// not hold, which points at a bug rather than at bad arguments.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inner series must have zero constant term, found {0}")]
    NonzeroConstantTerm(String),

    #[error("series has zero constant term and cannot be inverted")]
    NotInvertible,

    #[error("square root requires constant term 1, found {0}")]
    SqrtConstantTerm(String),

    #[error("{what} = {value} exceeds the configured cap {cap}; raise it with {env_var}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
        env_var: &'static str,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invariant violated in {context}: {detail}")]
    InvariantViolation { context: String, detail: String },

    #[error("no sign change of {polynomial} found in (0, 1)")]
    NoSignChange { polynomial: String },
}

impl Error {
    pub(crate) fn invariant(context: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::InvariantViolation {
            context: context.into(),
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

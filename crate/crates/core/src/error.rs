use thiserror::Error;

/// Errors surfaced by the algebra kernel and the verification batteries.
#[derive(Debug, Error)]
pub enum Error {
    /// A value violates a documented precondition (inhomogeneous input,
    /// off-curve point, insufficient precision, ...).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Arithmetic failure in an exact domain (non-square element,
    /// non-integral division, non-invertible scalar).
    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    /// A structural configuration problem (unregistered curve relation,
    /// unknown map name, unknown target).
    #[error("configuration error: {0}")]
    Config(String),

    /// An internal cross-check failed; indicates an algebra bug rather
    /// than bad input.
    #[error("integrity error: {0}")]
    Integrity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
    pub fn arith(msg: impl Into<String>) -> Self {
        Error::Arithmetic(msg.into())
    }
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
    pub fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }
}

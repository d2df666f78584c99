use thiserror::Error;

/// Errors shared by every numerical routine in this crate.
///
/// The split matters to callers: `Domain`, `Pole` and `Singular` mean the
/// request itself was invalid, `NonConvergence` means a valid request could
/// not be resolved within the configured iteration budget, and the remaining
/// variants belong to the verification harness.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Input outside the domain a routine is specified for.
    #[error("domain error: {0}")]
    Domain(String),

    /// A parameter combination that puts a pole in a denominator factor.
    #[error("pole error: {0}")]
    Pole(String),

    /// An iteration or series hit its cap before reaching the target accuracy.
    #[error("did not converge: {0}")]
    NonConvergence(String),

    /// A prefactor or normalization is singular at the requested point.
    #[error("singular: {0}")]
    Singular(String),

    /// Identity id not present in the registry.
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),

    /// Grid configuration rejected (parse failure or out-of-domain values).
    #[error("grid error: {0}")]
    Grid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn pole(msg: impl Into<String>) -> Self {
        Error::Pole(msg.into())
    }
    pub fn no_convergence(msg: impl Into<String>) -> Self {
        Error::NonConvergence(msg.into())
    }
    pub fn singular(msg: impl Into<String>) -> Self {
        Error::Singular(msg.into())
    }
    pub fn grid(msg: impl Into<String>) -> Self {
        Error::Grid(msg.into())
    }
}

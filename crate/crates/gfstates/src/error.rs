//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error in {context}: {message}")]
    Domain { context: &'static str, message: String },

    /// A series or quadrature did not reach the requested accuracy within
    /// its budget. Carries the best available estimate.
    #[error("convergence failure in {context}: best estimate {best_estimate:e}, error {error_estimate:e}")]
    Convergence {
        context: &'static str,
        best_estimate: f64,
        error_estimate: f64,
    },

    /// Parameter combination hits a pole (e.g. 2F1 with non-positive integer c).
    #[error("pole in {context}: {message}")]
    Pole { context: &'static str, message: String },

    /// Two coefficient series from different families were combined.
    #[error("family mismatch: {0}")]
    FamilyMismatch(String),

    /// A closed form whose expansion must contain only integer powers
    /// produced residual half-integer-power coefficients above tolerance.
    #[error("internal consistency failure in {context}: half-power residual {residual}")]
    HalfPowerResidual { context: &'static str, residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(context: &'static str, message: impl Into<String>) -> Self {
        Error::Domain { context, message: message.into() }
    }
}

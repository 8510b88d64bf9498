//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument was outside the supported domain (non-finite, wrong sign,
    /// negative real part, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An unscaled quantity is not representable in f64. The scaled or ratio
    /// form of the same routine stays finite; use that instead.
    #[error("overflow: {0}; use the scaled/ratio form instead")]
    Overflow(String),

    /// The input sequence is identically zero or otherwise carries no usable
    /// information for the requested quantity.
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// The nearest-neighbour correlation that must be rescaled to 2 vanishes,
    /// so the datum cannot be normalized.
    #[error("degenerate normalization: the correlation quantity is zero (|Q| = {quantity:e})")]
    DegenerateNormalization { quantity: f64 },

    /// Operation defined only for a specific dimension.
    #[error("unsupported dimension {got}: {reason}")]
    UnsupportedDimension { got: usize, reason: &'static str },

    /// Requested box radius leaves too much mass outside the truncation box.
    #[error("truncation error: relative tail {tail:e} above the allowed {limit:e}; increase N")]
    Truncation { tail: f64, limit: f64 },

    /// A convergent denominator of a continued fraction vanished.
    #[error("degenerate continued fraction: convergent denominator q_{index} is zero")]
    DegenerateFraction { index: usize },

    /// Boundary constraint of the Dirichlet variant violated.
    #[error("constraint violation: {0}")]
    ConstraintViolation(String),

    /// The null space of the finite operator pencil is not one-dimensional.
    #[error(
        "ambiguous minimizer: kernel not one-dimensional \
         (sigma_min = {sigma_min:e}, next = {sigma_next:e}, largest = {sigma_max:e})"
    )]
    AmbiguousMinimizer {
        sigma_min: f64,
        sigma_next: f64,
        sigma_max: f64,
    },

    /// Variant does not support the requested operation.
    #[error("unsupported variant: {0}")]
    UnsupportedVariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

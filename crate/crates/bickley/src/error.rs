//! Error types shared by every operation in this crate.
//!
//! All fallible operations return [`Result`]. Domain and configuration
//! violations are rejected eagerly; numerical failures carry enough state
//! (a partial value, an error estimate) for the caller to decide whether
//! the partial result is still useful.

use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of evaluation, bounds, and verification routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation
    /// (e.g. `x <= 0`, an order past the supported range, a Gamma pole).
    Domain(String),
    /// A configuration value violates its documented invariant
    /// (e.g. a relative tolerance below the double-precision floor).
    Config(String),
    /// Quadrature refinement hit its level limit before the requested
    /// tolerance was met. `partial` is the best available value and
    /// `err_est` the estimated absolute error actually achieved.
    Convergence {
        /// Best value computed before giving up.
        partial: f64,
        /// Estimated absolute error of `partial`.
        err_est: f64,
    },
    /// The integrand (or an intermediate scale factor) exceeds the range
    /// of `f64`, so no honest finite value can be returned.
    Overflow(String),
    /// A Monte-Carlo estimate whose standard error exceeds half of the
    /// estimate itself; the run is reported rather than trusted.
    VarianceExplosion {
        /// The (untrustworthy) point estimate.
        estimate: f64,
        /// Its estimated standard error.
        std_error: f64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Config(msg) => write!(f, "config error: {msg}"),
            Error::Convergence { partial, err_est } => write!(
                f,
                "convergence failure: refinement limit reached \
                 (partial value {partial:e}, estimated error {err_est:e})"
            ),
            Error::Overflow(msg) => write!(f, "overflow: {msg}"),
            Error::VarianceExplosion {
                estimate,
                std_error,
            } => write!(
                f,
                "variance explosion: standard error {std_error:e} exceeds \
                 half of the estimate {estimate:e}"
            ),
        }
    }
}

impl std::error::Error for Error {}

impl Error {
    /// True for errors a command-line front end should map to a usage /
    /// domain exit status rather than a numerical-failure status.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Domain(_) | Error::Config(_))
    }
}

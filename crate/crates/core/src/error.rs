use thiserror::Error;

/// Failures surfaced by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole at s = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    #[error("{what} overflows at s = {re} + {im}i")]
    Overflow {
        what: &'static str,
        re: f64,
        im: f64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("non-finite integrand value at abscissa {at}")]
    NonFiniteIntegrand { at: f64 },

    #[error("quadrature did not converge: value {value_re} + {value_im}i, error estimate {error_estimate:e} after {evaluations} evaluations")]
    NonConvergence {
        value_re: f64,
        value_im: f64,
        error_estimate: f64,
        evaluations: usize,
    },

    #[error("contour tail estimate {tail:e} exceeds tolerance {tolerance:e}; increase the line half-height")]
    TailDominates { tail: f64, tolerance: f64 },

    #[error("kernel series needs more than {n_max} terms for tolerance {abs_tol:e} at t = {t}")]
    TruncationCapExceeded { t: f64, n_max: usize, abs_tol: f64 },

    #[error("critical-line value at t = {t} has imaginary part {im:e} against scale {scale:e}")]
    NotReal { t: f64, im: f64, scale: f64 },

    #[error("growth fit needs at least two radii, got {0}")]
    DegenerateFit(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

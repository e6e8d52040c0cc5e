//! Gamma, zeta and xi on the complex plane, plus critical-line zero location.
//!
//! These are the reference side of every identity check in the crate: they
//! share no code with the quadrature engines.

mod gamma;
mod xi;
mod zeros;
mod zeta;

pub use gamma::complex_gamma;
pub use xi::{xi, xi_critical_line, CRITICAL_LINE_IMAG_TOL, SINGULAR_DISC_RADIUS};
pub use zeros::{
    find_zeta_zeros, find_zeta_zeros_with, first_zeta_zeros, SuspectInterval, SuspectReason,
    ZeroScan, ZeroScanConfig, ZetaZero, DEFAULT_SCAN_STEP, MAX_SCAN_HEIGHT,
};
pub use zeta::riemann_zeta;

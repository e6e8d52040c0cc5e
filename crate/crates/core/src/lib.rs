//! Mellin-transform solutions of the functional equation
//!
//! ```text
//! f(z, y + x) + z f(z, y) = z g(y)
//! ```
//!
//! for kernels satisfying H(t) = t⁻¹ H(1/t), specialised to g = ξ through the
//! theta kernel H̄, together with numerical checks of every identity linking
//! the two solution representations.

pub mod acceptance;
pub mod error;
pub mod quadrature;
pub mod solver;
pub mod special;
pub mod theta;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Complex scalar used for s, z, y and ξ(s).
pub type ComplexValue = Complex64;

pub use quadrature::{QuadratureResult, QuadratureSpec};
pub use solver::{ResidualReport, SolverParams};
pub use special::ZetaZero;

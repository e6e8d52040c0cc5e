//! Solutions of f(z, y+x) + z f(z, y) = z g(y) for self-reciprocal kernels.
//!
//! Two representations are provided: the real-axis integral against the
//! kernel H and the vertical-line integral against its Mellin transform g.
//! Every check compares one against an independent evaluation of the other
//! side.

mod growth;
mod kernel;
mod params;
mod report;
mod solve;
mod synthetic;

pub use growth::{fit_growth_envelope, sample_circle, CircleSample, GrowthEnvelope, MIN_DELTA};
pub use kernel::{SelfReciprocalKernel, SyntheticKernel, ThetaKernel, ZeroKernel};
pub use params::{SolverParams, DEFAULT_ABSCISSA, MAX_STEP};
pub use report::{Identity, Representation, ResidualReport};
pub use solve::{CheckFloors, ControlReport, Solver, OFF_ZERO_THRESHOLD};
pub use synthetic::{synthetic_grid, synthetic_kernel_suite, SYNTHETIC_FLOOR};

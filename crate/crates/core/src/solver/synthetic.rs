//! End-to-end check of the real-axis solution with H₀(t) = t^{−1/2}e^{−(t+1/t)},
//! which involves no ξ machinery at all.

use num_complex::Complex64;

use super::kernel::{SelfReciprocalKernel, SyntheticKernel};
use super::params::SolverParams;
use super::report::{Identity, Representation, ResidualReport};
use super::solve::{CheckFloors, Solver};
use crate::error::Result;
use crate::quadrature::QuadratureSpec;

/// Residual floor for the synthetic-kernel checks.
pub const SYNTHETIC_FLOOR: f64 = 1e-8;

const RECIPROCITY_GRID: [f64; 7] = [0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0];

/// (z, y, x) cells of the functional-equation part of the suite.
pub fn synthetic_grid() -> Vec<(Complex64, Complex64, f64)> {
    vec![
        (Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0), 0.5),
        (Complex64::new(2.0, 0.0), Complex64::new(0.5, 3.0), 0.25),
        (Complex64::new(1.0, 1.0), Complex64::new(0.3, 0.0), 1.0),
    ]
}

/// Self-reciprocity of H₀, the symmetry g₀(2) = g₀(−1), and the functional
/// equation on [`synthetic_grid`], in that order.
pub fn synthetic_kernel_suite(quad: &QuadratureSpec) -> Result<Vec<ResidualReport>> {
    let floors = CheckFloors {
        functional_equation: SYNTHETIC_FLOOR,
        ..CheckFloors::default()
    };
    let solver = Solver::new(SyntheticKernel::default(), *quad)?.with_floors(floors);
    let kernel = solver.kernel();
    let mut reports = Vec::new();

    let mut worst = 0.0f64;
    for &t in &RECIPROCITY_GRID {
        let direct = kernel.value(t)?;
        let mirrored = kernel.value(1.0 / t)? / t;
        worst = worst.max((direct - mirrored).abs());
    }
    reports.push(ResidualReport::new(
        Identity::KernelSelfReciprocity,
        None,
        Representation::None,
        Complex64::new(worst, 0.0),
        worst,
        1e-15,
        2 * RECIPROCITY_GRID.len(),
    ));

    let s = Complex64::new(2.0, 0.0);
    let g = solver.transform(s)?;
    let g_mirror = solver.transform(Complex64::new(1.0, 0.0) - s)?;
    reports.push(ResidualReport::new(
        Identity::MellinSymmetry,
        None,
        Representation::None,
        g,
        (g - g_mirror).norm(),
        1e-10,
        0,
    ));

    for (z, y, x) in synthetic_grid() {
        let p = SolverParams::with_default_abscissa(z, y, x)?;
        reports.push(solver.feq_residual(&p)?);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes() {
        let reports = synthetic_kernel_suite(&QuadratureSpec::default()).unwrap();
        assert_eq!(reports.len(), 5);
        for r in &reports {
            assert!(r.passed, "{r:?}");
        }
        assert_eq!(reports[0].residual, 0.0);
    }
}

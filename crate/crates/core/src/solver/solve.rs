use std::f64::consts::PI;

use num_complex::Complex64;

use super::kernel::{SelfReciprocalKernel, ThetaKernel};
use super::params::SolverParams;
use super::report::{Identity, Representation, ResidualReport};
use crate::error::Result;
use crate::quadrature::{
    integrate_semi_infinite, integrate_vertical_line, QuadratureResult, QuadratureSpec,
};
use crate::special::ZetaZero;

/// Lower limits for check tolerances. The tolerance of a check is
/// 10 × the summed quadrature error estimates, but never below these.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckFloors {
    pub functional_equation: f64,
    pub representation: f64,
    pub abscissa: f64,
    pub residue: f64,
    pub zero_criterion: f64,
}

impl Default for CheckFloors {
    fn default() -> Self {
        Self {
            functional_equation: 1e-7,
            representation: 1e-7,
            abscissa: 1e-9,
            residue: 1e-7,
            zero_criterion: 1e-6,
        }
    }
}

const ERROR_BUDGET_FACTOR: f64 = 10.0;

/// Step of the central difference used for the sensitivity of the
/// zero-criterion combination to the zero ordinate.
const SENSITIVITY_STEP: f64 = 1e-4;

/// Magnitude the zero-criterion combination must exceed away from a zero.
pub const OFF_ZERO_THRESHOLD: f64 = 1e-4;

fn composed(floor: f64, estimates: f64) -> f64 {
    floor.max(ERROR_BUDGET_FACTOR * estimates)
}

/// The zero-criterion combination evaluated away from a zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ControlReport {
    pub y: Complex64,
    /// f̄(z, y+x) + z f̄(z, y)
    pub combination: Complex64,
    /// z ξ(y)
    pub expected: Complex64,
    pub magnitude: f64,
    pub threshold: f64,
    /// magnitude > threshold
    pub discriminates: bool,
}

/// Both representations of the solution of f(z, y+x) + z f(z, y) = z g(y)
/// for a self-reciprocal kernel, and the identity checks built on them.
#[derive(Debug, Clone)]
pub struct Solver<K> {
    kernel: K,
    quad: QuadratureSpec,
    floors: CheckFloors,
}

impl Solver<ThetaKernel> {
    /// The ξ case: H = H̄, g = ξ.
    pub fn theta(quad: QuadratureSpec) -> Result<Self> {
        Self::new(ThetaKernel::default(), quad)
    }
}

impl<K: SelfReciprocalKernel> Solver<K> {
    pub fn new(kernel: K, quad: QuadratureSpec) -> Result<Self> {
        quad.validate()?;
        Ok(Self {
            kernel,
            quad,
            floors: CheckFloors::default(),
        })
    }

    pub fn with_floors(mut self, floors: CheckFloors) -> Self {
        self.floors = floors;
        self
    }

    pub fn kernel(&self) -> &K {
        &self.kernel
    }

    pub fn quad(&self) -> &QuadratureSpec {
        &self.quad
    }

    /// g(s) of the kernel.
    pub fn transform(&self, s: Complex64) -> Result<Complex64> {
        self.kernel.mellin(s, &self.quad)
    }

    /// f(z, y) = ∫₀^∞ (z uˣ / (1 + z uˣ)) u^{−y} H(u) du, i.e. the real-axis
    /// representation after u = t^{1/x}.
    pub fn f_real_rep(&self, p: &SolverParams) -> Result<QuadratureResult> {
        p.validate()?;
        let (z, y, x) = (p.z, p.y, p.x);
        integrate_semi_infinite(
            |u| {
                let h = self.kernel.value(u)?;
                if h == 0.0 {
                    return Ok(Complex64::new(0.0, 0.0));
                }
                let log_u = u.ln();
                let w = z * (x * log_u).exp();
                let ratio = if w.norm() > 1.0 {
                    1.0 / (1.0 + 1.0 / w)
                } else {
                    w / (1.0 + w)
                };
                Ok(ratio * (-y * log_u).exp() * h)
            },
            &self.quad,
        )?
        .require_converged()
    }

    /// f(z, y) = (1/x) ∫₀^∞ (z t / (z t + 1)) t^{−y/x + 1/x − 1} H(t^{1/x}) dt,
    /// without the substitution.
    pub fn f_real_rep_raw(&self, p: &SolverParams) -> Result<QuadratureResult> {
        p.validate()?;
        let (z, y, x) = (p.z, p.y, p.x);
        let exponent = -y / x + 1.0 / x - 1.0;
        integrate_semi_infinite(
            |t| {
                let log_t = t.ln();
                let u = (log_t / x).exp();
                if u == 0.0 || !u.is_finite() {
                    return Ok(Complex64::new(0.0, 0.0));
                }
                let h = self.kernel.value(u)?;
                if h == 0.0 {
                    return Ok(Complex64::new(0.0, 0.0));
                }
                let w = z * t;
                let ratio = if w.norm() > 1.0 {
                    1.0 / (1.0 + 1.0 / w)
                } else {
                    w / (1.0 + w)
                };
                Ok(ratio * (exponent * log_t).exp() * (h / x))
            },
            &self.quad,
        )?
        .require_converged()
    }

    /// (1/2πi) ∫_{(c)} g(y + xs) (π / sin πs) z^{−s} ds on the line ℜ(s) = c.
    fn line_integral(&self, p: &SolverParams, c: f64) -> Result<QuadratureResult> {
        let log_z = p.z.ln();
        integrate_vertical_line(
            |s| {
                let g = self.kernel.mellin(p.y + p.x * s, &self.quad)?;
                Ok(g * PI / (s * PI).sin() * (-s * log_z).exp())
            },
            c,
            &self.quad,
        )?
        .require_converged()
    }

    /// f(z, y) = −(1/2πi) ∫_{(a)} g(y + xs) (π / sin πs) z^{−s} ds, with the
    /// principal branch of Log z.
    pub fn f_contour_rep(&self, p: &SolverParams) -> Result<QuadratureResult> {
        p.validate()?;
        let mut r = self.line_integral(p, p.a)?;
        r.value = -r.value;
        Ok(r)
    }

    /// |f(z, y+x) + z f(z, y) − z g(y)| with both f values from the
    /// real-axis representation and g(y) from the kernel's own transform.
    pub fn feq_residual(&self, p: &SolverParams) -> Result<ResidualReport> {
        let shifted = self.f_real_rep(&p.shifted())?;
        let base = self.f_real_rep(p)?;
        let g = self.transform(p.y)?;
        let lhs = shifted.value + p.z * base.value;
        let residual = (lhs - p.z * g).norm();
        let tolerance = composed(
            self.floors.functional_equation,
            shifted.error_estimate + p.z.norm() * base.error_estimate,
        );
        Ok(ResidualReport::new(
            Identity::FunctionalEquation,
            Some(*p),
            Representation::RealAxis,
            lhs,
            residual,
            tolerance,
            shifted.evaluations + base.evaluations,
        ))
    }

    /// |f_real − f_contour| / (1 + |f_real|).
    pub fn representation_residual(&self, p: &SolverParams) -> Result<ResidualReport> {
        let real = self.f_real_rep(p)?;
        let contour = self.f_contour_rep(p)?;
        let scale = 1.0 + real.value.norm();
        let residual = (real.value - contour.value).norm() / scale;
        let tolerance = composed(
            self.floors.representation,
            (real.error_estimate + contour.error_estimate) / scale,
        );
        Ok(ResidualReport::new(
            Identity::RepresentationEquivalence,
            Some(*p),
            Representation::Both,
            contour.value,
            residual,
            tolerance,
            real.evaluations + contour.evaluations,
        ))
    }

    /// |f_contour(a) − f_contour(other)| for two abscissae in (−1, 0).
    pub fn abscissa_residual(&self, p: &SolverParams, other: f64) -> Result<ResidualReport> {
        let second = SolverParams { a: other, ..*p };
        second.validate()?;
        let first = self.f_contour_rep(p)?;
        let moved = self.f_contour_rep(&second)?;
        let residual = (first.value - moved.value).norm();
        let tolerance = composed(
            self.floors.abscissa,
            first.error_estimate + moved.error_estimate,
        );
        Ok(ResidualReport::new(
            Identity::AbscissaIndependence,
            Some(*p),
            Representation::Contour,
            first.value,
            residual,
            tolerance,
            first.evaluations + moved.evaluations,
        ))
    }

    /// Residue check behind the contour shift: between ℜ(s) = a and
    /// ℜ(s) = a + 1 the only pole is s = 0, with residue g(y), so
    /// (1/2πi)(I_{a+1} − I_a) must equal g(y). `value` holds the residue.
    pub fn contour_shift_residue_check(&self, p: &SolverParams) -> Result<ResidualReport> {
        p.validate()?;
        let right = self.line_integral(p, p.a + 1.0)?;
        let left = self.line_integral(p, p.a)?;
        let residue = right.value - left.value;
        let g = self.transform(p.y)?;
        let residual = (residue - g).norm();
        let tolerance = composed(
            self.floors.residue,
            right.error_estimate + left.error_estimate,
        );
        Ok(ResidualReport::new(
            Identity::ContourShiftResidue,
            Some(*p),
            Representation::Contour,
            residue,
            residual,
            tolerance,
            right.evaluations + left.evaluations,
        ))
    }

    /// f(z, y+x) + z f(z, y) from the real-axis representation.
    fn combination(&self, p: &SolverParams) -> Result<(Complex64, f64, usize)> {
        let shifted = self.f_real_rep(&p.shifted())?;
        let base = self.f_real_rep(p)?;
        Ok((
            shifted.value + p.z * base.value,
            shifted.error_estimate + p.z.norm() * base.error_estimate,
            shifted.evaluations + base.evaluations,
        ))
    }

    /// |f(z, ρ+x) + z f(z, ρ)| at ρ = ½ + iγ.
    ///
    /// The tolerance adds the sensitivity of the combination to γ (central
    /// difference) times the zero's ordinate error to the quadrature budget.
    pub fn rh_residual(&self, z: Complex64, zero: &ZetaZero, x: f64) -> Result<ResidualReport> {
        let p = SolverParams::with_default_abscissa(z, zero.rho(), x)?;
        let (combo, error, evaluations) = self.combination(&p)?;
        let up = p.with_y(p.y + Complex64::new(0.0, SENSITIVITY_STEP));
        let down = p.with_y(p.y - Complex64::new(0.0, SENSITIVITY_STEP));
        let (c_up, _, n_up) = self.combination(&up)?;
        let (c_down, _, n_down) = self.combination(&down)?;
        let slope = (c_up - c_down).norm() / (2.0 * SENSITIVITY_STEP);
        let tolerance = composed(
            self.floors.zero_criterion,
            error + slope * zero.ordinate_error,
        );
        Ok(ResidualReport::new(
            Identity::ZeroCriterion,
            Some(p),
            Representation::RealAxis,
            combo,
            combo.norm(),
            tolerance,
            evaluations + n_up + n_down,
        ))
    }

    /// The zero-criterion combination at a point that is not a zero; it
    /// should reproduce z g(y) and exceed [`OFF_ZERO_THRESHOLD`].
    pub fn off_zero_control(&self, z: Complex64, y: Complex64, x: f64) -> Result<ControlReport> {
        let p = SolverParams::with_default_abscissa(z, y, x)?;
        let (combination, _, _) = self.combination(&p)?;
        let expected = z * self.transform(y)?;
        let magnitude = combination.norm();
        Ok(ControlReport {
            y,
            combination,
            expected,
            magnitude,
            threshold: OFF_ZERO_THRESHOLD,
            discriminates: magnitude > OFF_ZERO_THRESHOLD,
        })
    }
}

//! Integration engines: double-exponential (exp-sinh) quadrature on (0, ∞)
//! and truncated trapezoidal quadrature along a vertical line ℜ(s) = a.
//!
//! Both engines refine by halving the step and estimate the error from the
//! difference between successive levels. Summation order is fixed, so a
//! given integrand and spec always produce bit-identical results.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerances and limits shared by both engines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Number of step-halving levels, counting the coarsest one.
    pub max_levels: usize,
    /// Truncation half-height T of vertical-line integrals.
    pub line_halfheight: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_levels: 12,
            line_halfheight: 40.0,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !(positive(self.abs_tol) && positive(self.rel_tol) && positive(self.line_halfheight)) {
            return Err(Error::InvalidArgument(format!(
                "quadrature tolerances must be positive: {self:?}"
            )));
        }
        if self.max_levels < 3 {
            return Err(Error::InvalidArgument(format!(
                "max_levels must be >= 3, got {}",
                self.max_levels
            )));
        }
        Ok(())
    }

    fn target(&self, value: Complex64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.norm())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: Complex64,
    pub error_estimate: f64,
    pub evaluations: usize,
    /// False when `max_levels` ran out before the target was met; `value`
    /// and `error_estimate` then hold the last level.
    pub converged: bool,
    /// Heuristic tail beyond ±T (vertical line only), already included in
    /// `error_estimate`.
    pub tail_estimate: f64,
}

impl QuadratureResult {
    /// Turn a non-converged result into [`Error::NonConvergence`].
    pub fn require_converged(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::NonConvergence {
                value_re: self.value.re,
                value_im: self.value.im,
                error_estimate: self.error_estimate,
                evaluations: self.evaluations,
            })
        }
    }
}

const EPS: f64 = f64::EPSILON;
/// Rounding floor of the error estimate, in units of ε·∫|f| as seen on
/// the coarsest level. Fixed per call so the estimate is monotone in depth.
const ROUNDOFF_FACTOR: f64 = 16.0;

/// Coarsest step of the exp-sinh rule.
const EXP_SINH_STEP: f64 = 0.5;
/// |π/2 · sinh u| is kept below this so exp() stays finite with room for the weight.
const EXP_SINH_MAX_EXPONENT: f64 = 690.0;
/// The outward walk always reaches at least this |u|.
const EXP_SINH_MIN_REACH: f64 = 4.0;
/// Samples below this fraction of the largest one count as underflowed.
const NEGLIGIBLE: f64 = 1e-20;

fn exp_sinh_node(u: f64) -> (f64, f64) {
    let t = (FRAC_PI_2 * u.sinh()).exp();
    (t, FRAC_PI_2 * u.cosh() * t)
}

fn finite(v: Complex64) -> bool {
    v.re.is_finite() && v.im.is_finite()
}

/// Neumaier-compensated sum of one real component.
#[derive(Default)]
struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.carry += (self.sum - t) + v;
        } else {
            self.carry += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

/// Running sums for one refinement sequence. Compensated so that deep
/// levels with tens of thousands of nodes do not drift.
#[derive(Default)]
struct Trapezoid {
    re: CompensatedSum,
    im: CompensatedSum,
    abs_sum: f64,
    evaluations: usize,
}

impl Trapezoid {
    fn add(&mut self, v: Complex64, weight: f64) {
        self.re.add(v.re * weight);
        self.im.add(v.im * weight);
        self.abs_sum += v.norm() * weight;
        self.evaluations += 1;
    }

    fn sum(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

/// ∫₀^∞ f(t) dt with the substitution t = exp(π/2 · sinh u).
///
/// The u-range is fixed on the coarsest level by walking outward until the
/// weighted integrand underflows (or t would leave the `f64` range); finer
/// levels only fill in midpoints.
pub fn integrate_semi_infinite<F>(f: F, spec: &QuadratureSpec) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<Complex64>,
{
    spec.validate()?;
    let sample = |u: f64| -> Result<Complex64> {
        let (t, w) = exp_sinh_node(u);
        if t == 0.0 || w == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let v = f(t)? * w;
        if !finite(v) {
            return Err(Error::NonFiniteIntegrand { at: t });
        }
        Ok(v)
    };
    let u_limit = (EXP_SINH_MAX_EXPONENT / FRAC_PI_2).asinh();

    let mut acc = Trapezoid::default();
    let centre = sample(0.0)?;
    acc.add(centre, 1.0);
    let mut peak = centre.norm();
    let mut reach = [0usize; 2];
    for (side, sign) in [(0usize, 1.0f64), (1, -1.0)] {
        let mut quiet = 0;
        let mut j = 1usize;
        loop {
            let u = sign * j as f64 * EXP_SINH_STEP;
            if u.abs() > u_limit {
                break;
            }
            let v = sample(u)?;
            acc.add(v, 1.0);
            peak = peak.max(v.norm());
            reach[side] = j;
            if v.norm() <= NEGLIGIBLE * peak {
                quiet += 1;
            } else {
                quiet = 0;
            }
            if quiet >= 2 && u.abs() >= EXP_SINH_MIN_REACH {
                break;
            }
            j += 1;
        }
    }
    let u_hi = reach[0] as f64 * EXP_SINH_STEP;
    let u_lo = -(reach[1] as f64) * EXP_SINH_STEP;

    let mut h = EXP_SINH_STEP;
    let mut estimate = acc.sum() * h;
    let roundoff = ROUNDOFF_FACTOR * EPS * acc.abs_sum * h;
    let mut error = f64::INFINITY;
    for level in 1..spec.max_levels {
        h *= 0.5;
        let mut u = u_lo + h;
        while u < u_hi {
            acc.add(sample(u)?, 1.0);
            u += 2.0 * h;
        }
        let next = acc.sum() * h;
        error = (next - estimate).norm().max(roundoff);
        estimate = next;
        if level >= 2 && error <= spec.target(estimate) {
            return Ok(QuadratureResult {
                value: estimate,
                error_estimate: error,
                evaluations: acc.evaluations,
                converged: true,
                tail_estimate: 0.0,
            });
        }
    }
    Ok(QuadratureResult {
        value: estimate,
        error_estimate: error,
        evaluations: acc.evaluations,
        converged: false,
        tail_estimate: 0.0,
    })
}

/// Fraction of the half-line used for the tail fit.
const TAIL_WINDOW: f64 = 0.1;

/// Bound on ∫_T^∞ |F| from samples on the outer decade of one half-line,
/// assuming |F(τ)| ≤ C e^{−κτ}. κ comes from a least-squares fit of
/// log|F|; C is then raised until the envelope covers every sample.
fn fitted_tail(samples: &[(f64, f64)], halfheight: f64) -> f64 {
    let live: Vec<(f64, f64)> = samples
        .iter()
        .filter(|(_, m)| *m > 0.0)
        .map(|&(t, m)| (t, m.ln()))
        .collect();
    match live.len() {
        0 => return 0.0,
        1 => return f64::INFINITY,
        _ => {}
    }
    let n = live.len() as f64;
    let mean_t = live.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_l = live.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = live.iter().map(|p| (p.0 - mean_t).powi(2)).sum();
    let sxy: f64 = live.iter().map(|p| (p.0 - mean_t) * (p.1 - mean_l)).sum();
    let kappa = -sxy / sxx;
    if !(kappa.is_finite() && kappa > 0.0) {
        return f64::INFINITY;
    }
    let log_c = live
        .iter()
        .map(|&(t, l)| l + kappa * t)
        .fold(f64::NEG_INFINITY, f64::max);
    (log_c - kappa * halfheight).exp() / kappa
}

/// (1/2π) ∫_{−T}^{T} F(a + iτ) dτ, i.e. (1/2πi) ∫_{(a)} F(s) ds truncated at
/// |ℑ s| = T, by the trapezoidal rule in τ.
///
/// A fitted estimate of the neglected tails is added to the error estimate;
/// if it alone exceeds the tolerance the call fails with
/// [`Error::TailDominates`].
pub fn integrate_vertical_line<F>(f: F, a: f64, spec: &QuadratureSpec) -> Result<QuadratureResult>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    spec.validate()?;
    if !a.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "contour abscissa must be finite, got {a}"
        )));
    }
    let half = spec.line_halfheight;
    let window = (1.0 - TAIL_WINDOW) * half;
    let mut upper_tail = Vec::new();
    let mut lower_tail = Vec::new();
    let mut sample = |tau: f64, acc: &mut Trapezoid, weight: f64| -> Result<()> {
        let v = f(Complex64::new(a, tau))?;
        if !finite(v) {
            return Err(Error::NonFiniteIntegrand { at: tau });
        }
        if tau >= window {
            upper_tail.push((tau, v.norm()));
        } else if tau <= -window {
            lower_tail.push((-tau, v.norm()));
        }
        acc.add(v, weight);
        Ok(())
    };

    let cells = half.ceil().max(1.0) as usize;
    let mut h = half / cells as f64;
    let mut acc = Trapezoid::default();
    sample(-half, &mut acc, 0.5)?;
    sample(half, &mut acc, 0.5)?;
    for j in 1..2 * cells {
        sample(-half + j as f64 * h, &mut acc, 1.0)?;
    }
    let mut estimate = acc.sum() * h;
    let roundoff = ROUNDOFF_FACTOR * EPS * acc.abs_sum * h;
    let mut error = f64::INFINITY;
    let mut converged = false;
    for level in 1..spec.max_levels {
        h *= 0.5;
        let nodes = (2 * cells) << (level - 1);
        for m in 0..nodes {
            sample(-half + (2 * m + 1) as f64 * h, &mut acc, 1.0)?;
        }
        let next = acc.sum() * h;
        error = (next - estimate).norm().max(roundoff);
        estimate = next;
        if level >= 2 && error <= spec.target(estimate / (2.0 * PI)) * 2.0 * PI {
            converged = true;
            break;
        }
    }
    let value = estimate / (2.0 * PI);
    let tail = (fitted_tail(&upper_tail, half) + fitted_tail(&lower_tail, half)) / (2.0 * PI);
    let tolerance = spec.target(value);
    if tail > tolerance {
        return Err(Error::TailDominates { tail, tolerance });
    }
    Ok(QuadratureResult {
        value,
        error_estimate: error / (2.0 * PI) + tail,
        evaluations: acc.evaluations,
        converged,
        tail_estimate: tail,
    })
}

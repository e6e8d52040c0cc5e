//! The self-reciprocal theta kernel
//!
//! ```text
//! H̄(t) = 2t² Σ_{n≥1} (2π²n⁴t² − 3πn²) e^{−πn²t²},   t > 0,
//! ```
//!
//! whose Mellin transform is ξ(s), with rigorous truncation control.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quadrature::{integrate_semi_infinite, QuadratureResult, QuadratureSpec};

/// Truncation controls for the H̄ series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSeriesParams {
    /// Target for the bound on the neglected tail.
    pub abs_tol: f64,
    /// Hard cap on the number of terms.
    pub n_max: usize,
}

impl Default for KernelSeriesParams {
    fn default() -> Self {
        Self {
            abs_tol: 1e-20,
            n_max: 1000,
        }
    }
}

impl KernelSeriesParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol.is_finite() && self.abs_tol > 0.0) || self.n_max < 1 {
            return Err(Error::InvalidArgument(format!(
                "invalid kernel series params: {self:?}"
            )));
        }
        Ok(())
    }
}

/// One evaluation of H̄ with its truncation data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HbarEvaluation {
    pub value: f64,
    /// Terms summed.
    pub terms: usize,
    /// Tail bound at the argument actually summed (already scaled by 1/t
    /// when reflected).
    pub tail_bound: f64,
    /// Whether the series was summed at 1/t.
    pub reflected: bool,
}

fn check_argument(t: f64) -> Result<()> {
    if t.is_finite() && t > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "theta kernel needs t > 0, got {t}"
        )))
    }
}

fn series_term(n: f64, t: f64) -> f64 {
    let nt2 = n * n * t * t;
    2.0 * t * t * (2.0 * PI * PI * nt2 * n * n - 3.0 * PI * n * n) * (-PI * nt2).exp()
}

/// Majorant of |term_n(t)|: 2t²(2π²n⁴t² + 3πn²) e^{−πn²t²}.
fn majorant(n: f64, t: f64) -> f64 {
    let nt2 = n * n * t * t;
    2.0 * t * t * (2.0 * PI * PI * nt2 * n * n + 3.0 * PI * n * n) * (-PI * nt2).exp()
}

/// Bound on majorant(n+1)/majorant(n) for every index ≥ n; decreasing in n.
fn ratio_bound(n: f64, t: f64) -> f64 {
    ((n + 1.0) / n).powi(4) * (-PI * (2.0 * n + 1.0) * t * t).exp()
}

/// Upper bound on |Σ_{n>N} term_n(t)|.
///
/// Majorant terms are summed explicitly from N+1 until the ratio bound
/// drops below ½; the rest is closed with a geometric series. Nonincreasing
/// in `n_terms`.
pub fn hbar_tail_bound(t: f64, n_terms: usize) -> f64 {
    let mut bound = 0.0;
    let mut n = n_terms.max(1) as f64 + 1.0;
    loop {
        let m = majorant(n, t);
        let q = ratio_bound(n, t);
        if q < 0.5 || m == 0.0 {
            return bound + m / (1.0 - q);
        }
        bound += m;
        n += 1.0;
    }
}

/// Σ term_n(t) for n = 1..N, where N is the first count whose tail bound
/// is below `abs_tol`. No reflection.
fn sum_direct(t: f64, abs_tol: f64, n_max: usize) -> Result<(f64, usize, f64)> {
    let mut n_terms = 1;
    let tail = loop {
        let tail = hbar_tail_bound(t, n_terms);
        if tail < abs_tol {
            break tail;
        }
        if n_terms >= n_max {
            return Err(Error::TruncationCapExceeded { t, n_max, abs_tol });
        }
        n_terms += 1;
    };
    let value = (1..=n_terms).map(|n| series_term(n as f64, t)).sum();
    Ok((value, n_terms, tail))
}

/// H̄(t) by direct summation at `t`, whatever its size.
pub fn hbar_direct(t: f64, params: &KernelSeriesParams) -> Result<f64> {
    check_argument(t)?;
    params.validate()?;
    Ok(sum_direct(t, params.abs_tol, params.n_max)?.0)
}

/// H̄(t) with truncation data. For t < 1 the series is summed at 1/t and
/// mapped back through H̄(t) = t⁻¹ H̄(1/t).
pub fn hbar_detailed(t: f64, params: &KernelSeriesParams) -> Result<HbarEvaluation> {
    check_argument(t)?;
    params.validate()?;
    if t >= 1.0 {
        let (value, terms, tail_bound) = sum_direct(t, params.abs_tol, params.n_max)?;
        return Ok(HbarEvaluation {
            value,
            terms,
            tail_bound,
            reflected: false,
        });
    }
    let inv = 1.0 / t;
    let (value, terms, tail) = sum_direct(inv, params.abs_tol * t, params.n_max)?;
    Ok(HbarEvaluation {
        value: value * inv,
        terms,
        tail_bound: tail * inv,
        reflected: true,
    })
}

/// H̄(t) for t > 0.
pub fn hbar(t: f64, params: &KernelSeriesParams) -> Result<f64> {
    Ok(hbar_detailed(t, params)?.value)
}

/// |H̄(t) − t⁻¹H̄(1/t)| with both sides summed directly (no reflection).
pub fn selfdual_residual(t: f64) -> Result<f64> {
    let params = KernelSeriesParams::default();
    let lhs = hbar_direct(t, &params)?;
    let rhs = hbar_direct(1.0 / t, &params)? / t;
    Ok((lhs - rhs).abs())
}

/// ∫₀^∞ t^{s−1} H̄(t) dt by exp-sinh quadrature. Converges for every s.
pub fn mellin_hbar(s: Complex64, quad: &QuadratureSpec) -> Result<QuadratureResult> {
    mellin_hbar_with(s, quad, &KernelSeriesParams::default())
}

pub fn mellin_hbar_with(
    s: Complex64,
    quad: &QuadratureSpec,
    params: &KernelSeriesParams,
) -> Result<QuadratureResult> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "mellin transform at non-finite s = {s}"
        )));
    }
    let exponent = s - 1.0;
    integrate_semi_infinite(
        |t| {
            let h = hbar(t, params)?;
            if h == 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            Ok((exponent * t.ln()).exp() * h)
        },
        quad,
    )?
    .require_converged()
}

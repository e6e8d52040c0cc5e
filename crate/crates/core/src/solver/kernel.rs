use num_complex::Complex64;

use crate::error::Result;
use crate::quadrature::{integrate_semi_infinite, QuadratureSpec};
use crate::special::xi;
use crate::theta::{hbar, KernelSeriesParams};

/// A kernel with H(t) = t⁻¹ H(1/t) and its Mellin transform g.
pub trait SelfReciprocalKernel: Sync {
    fn label(&self) -> &'static str;

    /// H(t) for t > 0.
    fn value(&self, t: f64) -> Result<f64>;

    /// g(s) = ∫₀^∞ t^{s−1} H(t) dt.
    fn mellin(&self, s: Complex64, quad: &QuadratureSpec) -> Result<Complex64>;
}

/// H̄ with g = ξ evaluated through Γ and ζ, independently of any quadrature.
#[derive(Debug, Clone, Copy, Default)]
pub struct ThetaKernel {
    pub series: KernelSeriesParams,
}

impl SelfReciprocalKernel for ThetaKernel {
    fn label(&self) -> &'static str {
        "theta"
    }

    fn value(&self, t: f64) -> Result<f64> {
        hbar(t, &self.series)
    }

    fn mellin(&self, s: Complex64, _quad: &QuadratureSpec) -> Result<Complex64> {
        xi(s)
    }
}

/// H₀(t) = t^{−1/2} e^{−c(t + 1/t)}; its Mellin transform is computed by
/// quadrature.
#[derive(Debug, Clone, Copy)]
pub struct SyntheticKernel {
    pub c: f64,
}

impl Default for SyntheticKernel {
    fn default() -> Self {
        Self { c: 1.0 }
    }
}

impl SelfReciprocalKernel for SyntheticKernel {
    fn label(&self) -> &'static str {
        "synthetic"
    }

    fn value(&self, t: f64) -> Result<f64> {
        if !(t.is_finite() && t > 0.0) {
            return Err(crate::Error::InvalidArgument(format!(
                "synthetic kernel needs t > 0, got {t}"
            )));
        }
        Ok(t.powf(-0.5) * (-self.c * (t + 1.0 / t)).exp())
    }

    fn mellin(&self, s: Complex64, quad: &QuadratureSpec) -> Result<Complex64> {
        let exponent = s - 1.0;
        let r = integrate_semi_infinite(
            |t| {
                let h = self.value(t)?;
                if h == 0.0 {
                    return Ok(Complex64::new(0.0, 0.0));
                }
                Ok((exponent * t.ln()).exp() * h)
            },
            quad,
        )?;
        Ok(r.require_converged()?.value)
    }
}

/// H ≡ 0.
#[derive(Debug, Clone, Copy, Default)]
pub struct ZeroKernel;

impl SelfReciprocalKernel for ZeroKernel {
    fn label(&self) -> &'static str {
        "zero"
    }

    fn value(&self, _t: f64) -> Result<f64> {
        Ok(0.0)
    }

    fn mellin(&self, _s: Complex64, _quad: &QuadratureSpec) -> Result<Complex64> {
        Ok(Complex64::new(0.0, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn synthetic_is_exactly_self_reciprocal() {
        let k = SyntheticKernel::default();
        for t in [0.125, 0.3, 1.0, 2.0, 7.5] {
            let lhs = k.value(t).unwrap();
            let rhs = k.value(1.0 / t).unwrap() / t;
            assert!((lhs - rhs).abs() <= 4.0 * f64::EPSILON * lhs, "t = {t}");
        }
    }

    #[test]
    fn synthetic_transform_reference() {
        // 2 K_{s−1/2}(2) at 50 digits
        let k = SyntheticKernel::default();
        let quad = QuadratureSpec::default();
        let g2 = k.mellin(Complex64::new(2.0, 0.0), &quad).unwrap();
        assert!((g2.re - 0.359_813_315_904_184_34).abs() < 1e-12);
        let g = k.mellin(Complex64::new(0.5, 3.0), &quad).unwrap();
        assert!((g - Complex64::new(0.028_476_081_511_166_362, 0.0)).norm() < 1e-12);
    }
}

//! The completed zeta function ξ(s) = ½ s(s−1) π^{−s/2} Γ(s/2) ζ(s) and its
//! critical-line restriction Ξ(t) = ξ(½ + it).

use std::f64::consts::PI;

use num_complex::Complex64;

use super::gamma::{check_finite, ln_gamma, MAX_EXP_ARG};
use super::zeta::zeta_direct;
use crate::error::{Error, Result};

/// Radius of the disc around s = 1 inside which ξ is evaluated as ξ(1 − s).
pub const SINGULAR_DISC_RADIUS: f64 = 1e-3;

/// Relative bound on the discarded imaginary part of ξ(½ + it).
pub const CRITICAL_LINE_IMAG_TOL: f64 = 1e-10;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// ξ(s) / ζ(s) = (s − 1) π^{−s/2} Γ(1 + s/2).
///
/// Writing ½ s Γ(s/2) as Γ(1 + s/2) removes the 0·∞ form at s = 0.
pub(crate) fn xi_prefactor(s: Complex64) -> Result<Complex64> {
    let log = -0.5 * s * PI.ln() + ln_gamma(s * 0.5 + 1.0)?;
    if log.re > MAX_EXP_ARG {
        return Err(Error::Overflow {
            what: "xi",
            re: s.re,
            im: s.im,
        });
    }
    Ok((s - 1.0) * log.exp())
}

/// Prefactor and zeta factor for ℜ(s) ≥ −1 away from s = 1.
fn xi_parts(s: Complex64) -> Result<(Complex64, Complex64)> {
    Ok((xi_prefactor(s)?, zeta_direct(s)?))
}

/// Riemann ξ(s). Entire; ξ(0) = ξ(1) = ½ and ξ(s) = ξ(1 − s).
pub fn xi(s: Complex64) -> Result<Complex64> {
    check_finite(s, "xi")?;
    if (s - ONE).norm() < SINGULAR_DISC_RADIUS || s.re < -1.0 {
        return xi(ONE - s);
    }
    let (prefactor, zeta) = xi_parts(s)?;
    let value = prefactor * zeta;
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::Overflow {
            what: "xi",
            re: s.re,
            im: s.im,
        });
    }
    Ok(value)
}

/// Ξ(t) = ξ(½ + it), real for real `t`.
///
/// The imaginary part of the complex evaluation is checked against
/// [`CRITICAL_LINE_IMAG_TOL`] relative to |prefactor|·(1 + |ζ|), the scale of
/// the rounding error in the product, and then discarded.
pub fn xi_critical_line(t: f64) -> Result<f64> {
    if !t.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "critical line: non-finite t = {t}"
        )));
    }
    let s = Complex64::new(0.5, t);
    let (prefactor, zeta) = xi_parts(s)?;
    let value = prefactor * zeta;
    let scale = prefactor.norm() * (1.0 + zeta.norm());
    if value.im.abs() > CRITICAL_LINE_IMAG_TOL * scale {
        return Err(Error::NotReal {
            t,
            im: value.im,
            scale,
        });
    }
    Ok(value.re)
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn removable_points() {
        assert!((xi(c(0.0, 0.0)).unwrap() - 0.5).norm() < 1e-15);
        assert!((xi(c(1.0, 0.0)).unwrap() - 0.5).norm() < 1e-15);
        // 50-digit references just inside/outside the singular discs
        let near0 = xi(c(1e-4, 0.0)).unwrap();
        assert!((near0 - c(0.499_998_845_331_270_77, 0.0)).norm() < 1e-14);
        let near1 = xi(c(1.0, 2e-4)).unwrap();
        assert!((near1 - c(0.499_999_999_533_122_7, 2.309_570_894_620_168e-6)).norm() < 1e-14);
        let edge = xi(c(1.0 + 1.001e-3, 0.0)).unwrap();
        let inside = xi(c(1.0 + 0.999e-3, 0.0)).unwrap();
        assert!((edge - inside).norm() < 1e-5);
    }

    #[test]
    fn reference_values() {
        let cases = [
            (c(0.5, 0.0), c(0.497_120_778_188_314_1, 0.0)),
            (c(2.0, 0.0), c(PI / 6.0, 0.0)),
            (c(-1.0, 0.0), c(PI / 6.0, 0.0)),
            (c(0.5, 3.0), c(0.403_165_207_257_074, 0.0)),
            (c(0.5, 15.0), c(-7.056_979_588_215_474e-4, 0.0)),
            (
                c(0.3, 40.0),
                c(2.072_300_207_436_540_4e-11, -6.872_382_811_941_960_2e-12),
            ),
        ];
        for (s, want) in cases {
            let got = xi(s).unwrap();
            assert!(
                (got - want).norm() <= 1e-12 * want.norm(),
                "s = {s}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn conjugate_pair_on_critical_line() {
        let up = xi(c(0.5, 3.0)).unwrap();
        let down = xi(c(0.5, -3.0)).unwrap();
        assert!((up - down.conj()).norm() < 1e-15);
        assert!((xi(c(0.5, 3.0)).unwrap() - xi(c(0.5, -3.0)).unwrap()).norm() < 1e-14);
    }

    #[test]
    fn critical_line_is_real_and_even() {
        assert!(xi_critical_line(0.0).unwrap() > 0.0);
        for t in [0.5, 3.0, 14.0, 27.5, 60.0] {
            let a = xi_critical_line(t).unwrap();
            let b = xi_critical_line(-t).unwrap();
            assert!((a - b).abs() <= 1e-12 * a.abs().max(1e-30), "t = {t}");
        }
        assert!(xi_critical_line(14.134_725).unwrap().abs() < 1e-6);
    }

    #[test]
    fn non_finite_inputs_rejected() {
        assert!(xi(c(f64::NAN, 0.0)).is_err());
        assert!(xi_critical_line(f64::INFINITY).is_err());
    }

    #[test]
    fn far_real_axis_overflows() {
        assert!(matches!(xi(c(700.0, 0.0)), Err(Error::Overflow { .. })));
        assert!(matches!(xi(c(-700.0, 0.0)), Err(Error::Overflow { .. })));
    }
}

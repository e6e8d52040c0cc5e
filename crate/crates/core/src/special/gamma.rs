//! Complex Gamma function by the Lanczos approximation (g = 7, nine terms),
//! with the reflection formula on the left half-plane.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Largest `x` with `exp(x)` finite.
pub(crate) const MAX_EXP_ARG: f64 = 709.78;

fn is_pole(s: Complex64) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0
}

pub(crate) fn check_finite(s: Complex64, what: &'static str) -> Result<()> {
    if s.re.is_finite() && s.im.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "{what}: non-finite argument {s}"
        )))
    }
}

/// `ln Γ(s)` on some branch. Only the real part and the value modulo 2πi
/// are meaningful; callers exponentiate.
pub(crate) fn ln_gamma(s: Complex64) -> Result<Complex64> {
    check_finite(s, "gamma")?;
    if is_pole(s) {
        return Err(Error::Pole { re: s.re, im: s.im });
    }
    if s.re < 0.5 {
        let sin = (s * PI).sin();
        let rest = ln_gamma(Complex64::new(1.0, 0.0) - s)?;
        return Ok(Complex64::new(PI.ln(), 0.0) - sin.ln() - rest);
    }
    let z = s - 1.0;
    let mut series = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        series += *c / (z + i as f64);
    }
    let w = z + LANCZOS_G + 0.5;
    Ok(0.5 * (2.0 * PI).ln() + (z + 0.5) * w.ln() - w + series.ln())
}

/// Γ(s) for complex `s`.
///
/// Fails with [`Error::Pole`] at the nonpositive integers and with
/// [`Error::Overflow`] once |Γ(s)| leaves the `f64` range.
pub fn complex_gamma(s: Complex64) -> Result<Complex64> {
    let log = ln_gamma(s)?;
    if log.re > MAX_EXP_ARG {
        return Err(Error::Overflow {
            what: "gamma",
            re: s.re,
            im: s.im,
        });
    }
    Ok(log.exp())
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn half_and_integers() {
        assert!(rel(complex_gamma(c(0.5, 0.0)).unwrap(), c(PI.sqrt(), 0.0)) < 1e-14);
        assert!(rel(complex_gamma(c(5.0, 0.0)).unwrap(), c(24.0, 0.0)) < 1e-14);
        let mut fact = 1.0;
        for n in 1..30 {
            let g = complex_gamma(c(n as f64, 0.0)).unwrap();
            assert!(rel(g, c(fact, 0.0)) < 1e-13, "n = {n}");
            fact *= n as f64;
        }
    }

    #[test]
    fn reference_values() {
        // 50-digit reference values (tests/oracle/generate.py).
        let cases = [
            (
                c(0.5, 3.0),
                c(0.021_445_670_552_430_646, 0.006_865_364_837_261_678),
            ),
            (
                c(-2.5, 1.0),
                c(-0.041_736_625_807_893_614, -0.086_369_107_369_763_485),
            ),
            (
                c(10.3, -7.2),
                c(-17_164.737_013_580_025, 59_673.136_487_158_603),
            ),
        ];
        for (s, want) in cases {
            let got = complex_gamma(s).unwrap();
            assert!(rel(got, want) < 1e-12, "s = {s}: {got} vs {want}");
        }
    }

    #[test]
    fn poles_are_errors() {
        for n in 0..5 {
            let s = c(-(n as f64), 0.0);
            assert!(matches!(complex_gamma(s), Err(Error::Pole { .. })));
        }
        assert!(complex_gamma(c(-1.0, 1e-300)).is_ok());
    }

    #[test]
    fn overflow_is_an_error() {
        assert!(matches!(
            complex_gamma(c(180.0, 0.0)),
            Err(Error::Overflow { .. })
        ));
        assert!(complex_gamma(c(170.0, 0.0)).unwrap().re.is_finite());
    }

    #[test]
    fn recurrence_across_the_reflection_seam() {
        for &(re, im) in &[(0.3, 0.7), (-0.2, 4.0), (0.49, -12.0), (-7.3, 2.5)] {
            let s = c(re, im);
            let lhs = complex_gamma(s + 1.0).unwrap();
            let rhs = s * complex_gamma(s).unwrap();
            assert!(rel(lhs, rhs) < 1e-13, "s = {s}");
        }
    }

    #[test]
    fn stirling_decay_on_vertical_lines() {
        for sigma in [1.0, 2.0, 3.0] {
            for t in [10.0, 20.0, 40.0_f64] {
                let g = complex_gamma(c(sigma, t)).unwrap().norm();
                let ratio = g / (t.powf(sigma - 0.5) * (-PI * t / 2.0).exp());
                assert!(
                    (0.1..=10.0).contains(&ratio),
                    "σ={sigma} t={t} ratio={ratio}"
                );
            }
        }
    }
}

//! Riemann zeta by Euler–Maclaurin summation.

use num_complex::Complex64;

use super::gamma::check_finite;
use super::xi::{xi, xi_prefactor};
use crate::error::{Error, Result};

/// Bernoulli numbers B_2, B_4, ..., B_30 as exact fractions.
const BERNOULLI_EVEN: [(f64, f64); 15] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
    (8553103.0, 6.0),
    (-23749461029.0, 870.0),
    (8615841276005.0, 14322.0),
];

/// Target for the Euler–Maclaurin remainder relative to max(1, |partial sum|).
const REMAINDER_TARGET: f64 = 1e-17;

/// `B_{2k} / (2k)!` for k = 1..=15.
fn bernoulli_coefficients() -> [f64; 15] {
    let mut out = [0.0; 15];
    let mut factorial = 1.0;
    for (k, (num, den)) in BERNOULLI_EVEN.iter().enumerate() {
        let two_k = 2.0 * (k as f64 + 1.0);
        factorial *= (two_k - 1.0) * two_k;
        out[k] = num / den / factorial;
    }
    out
}

/// Euler–Maclaurin with `n` leading terms. Returns `None` when the
/// correction series does not reach the remainder target within the
/// tabulated Bernoulli numbers.
fn euler_maclaurin(s: Complex64, n: usize) -> Option<(Complex64, f64)> {
    let coef = bernoulli_coefficients();
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 1..n {
        sum += (-s * (j as f64).ln()).exp();
    }
    let nf = n as f64;
    let n_pow = (-s * nf.ln()).exp();
    sum += n_pow * nf / (s - 1.0) + 0.5 * n_pow;

    // term_k = c_k (s)_{2k-1} N^{-s-2k+1}
    let mut rising = s;
    let mut power = n_pow / nf;
    let mut term = coef[0] * rising * power;
    for k in 1..=coef.len() {
        sum += term;
        if k == coef.len() {
            break;
        }
        let kf = k as f64;
        rising *= (s + 2.0 * kf - 1.0) * (s + 2.0 * kf);
        power /= nf * nf;
        let next = coef[k] * rising * power;
        // |R_k| <= |s + 2k + 1| / (σ + 2k + 1) |T_{k+1}|
        let bound = (s + 2.0 * kf + 1.0).norm() / (s.re + 2.0 * kf + 1.0) * next.norm();
        if bound.is_finite() && bound > 0.0 && bound < REMAINDER_TARGET * sum.norm().max(1.0) {
            return Some((sum, bound));
        }
        if bound == 0.0 {
            return Some((sum, 0.0));
        }
        term = next;
    }
    None
}

/// Euler–Maclaurin evaluation valid on ℜ(s) ≥ −1, doubling the number of
/// leading terms until the remainder bound is met.
pub(crate) fn zeta_direct(s: Complex64) -> Result<Complex64> {
    let mut n = s.im.abs().max(10.0).ceil() as usize + 10;
    for _ in 0..8 {
        if let Some((value, _)) = euler_maclaurin(s, n) {
            return Ok(value);
        }
        n *= 2;
    }
    Err(Error::Overflow {
        what: "zeta",
        re: s.re,
        im: s.im,
    })
}

/// ζ(s) for complex `s ≠ 1`.
///
/// Direct Euler–Maclaurin summation on ℜ(s) ≥ −1; further left the value is
/// recovered from ξ(1 − s) through the completed-zeta symmetry.
pub fn riemann_zeta(s: Complex64) -> Result<Complex64> {
    check_finite(s, "zeta")?;
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole { re: 1.0, im: 0.0 });
    }
    if s.re >= -1.0 {
        return zeta_direct(s);
    }
    // trivial zeros
    if s.im == 0.0 && s.re.fract() == 0.0 && (s.re as i64) % 2 == 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let mirrored = xi(Complex64::new(1.0, 0.0) - s)?;
    Ok(mirrored / xi_prefactor(s)?)
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn classical_values() {
        assert!((riemann_zeta(c(2.0, 0.0)).unwrap() - PI * PI / 6.0).norm() < 1e-14);
        assert!((riemann_zeta(c(0.0, 0.0)).unwrap() - c(-0.5, 0.0)).norm() < 1e-15);
        assert!((riemann_zeta(c(-1.0, 0.0)).unwrap() - c(-1.0 / 12.0, 0.0)).norm() < 1e-12);
        assert!((riemann_zeta(c(4.0, 0.0)).unwrap() - PI.powi(4) / 90.0).norm() < 1e-14);
        assert!((riemann_zeta(c(-3.0, 0.0)).unwrap() - c(1.0 / 120.0, 0.0)).norm() < 1e-14);
        assert_eq!(riemann_zeta(c(-4.0, 0.0)).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn reference_values() {
        let cases = [
            (
                c(3.0, 40.0),
                c(0.932_609_143_928_498_36, -0.063_757_506_071_177_59),
            ),
            (
                c(-0.5, 25.0),
                c(-2.609_029_329_263_585_8, -1.397_699_299_722_355_4),
            ),
            (
                c(0.2, 55.0),
                c(3.680_059_908_508_281, -1.682_422_228_753_664_6),
            ),
        ];
        for (s, want) in cases {
            let got = riemann_zeta(s).unwrap();
            assert!((got - want).norm() / want.norm() < 1e-10, "s = {s}: {got}");
        }
    }

    #[test]
    fn near_first_zero() {
        let z = riemann_zeta(c(0.5, 14.134_725)).unwrap();
        assert!(z.norm() < 1e-5);
        let want = c(1.767_429_841_384_904e-8, -1.110_202_893_092_311_7e-7);
        assert!((z - want).norm() < 1e-13);
    }

    #[test]
    fn pole_at_one() {
        assert!(matches!(riemann_zeta(c(1.0, 0.0)), Err(Error::Pole { .. })));
        assert!(riemann_zeta(c(1.0, 1e-8)).is_ok());
    }

    #[test]
    fn left_half_plane_matches_functional_equation() {
        // ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)
        for &(re, im) in &[(-2.5, 1.0), (-5.3, 7.0), (-1.5, -3.0)] {
            let s = c(re, im);
            let one = c(1.0, 0.0);
            let rhs = (s * 2f64.ln()).exp()
                * ((s - 1.0) * PI.ln()).exp()
                * (s * PI / 2.0).sin()
                * crate::special::complex_gamma(one - s).unwrap()
                * riemann_zeta(one - s).unwrap();
            let lhs = riemann_zeta(s).unwrap();
            assert!((lhs - rhs).norm() / rhs.norm() < 1e-12, "s = {s}");
        }
    }
}

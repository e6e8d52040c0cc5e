use std::f64::consts::PI;

use feq_core::quadrature::{integrate_semi_infinite, integrate_vertical_line, QuadratureSpec};
use feq_core::{Complex64, Result};
use proptest::prelude::*;

fn real(v: f64) -> Result<Complex64> {
    Ok(Complex64::new(v, 0.0))
}

fn smooth_a(t: f64) -> f64 {
    (-t).exp() * t.sqrt()
}

fn smooth_b(t: f64) -> f64 {
    1.0 / (1.0 + t * t) / (1.0 + t.sqrt())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn semi_infinite_is_linear(alpha in -3.0..3.0f64, beta in -3.0..3.0f64) {
        let spec = QuadratureSpec::default();
        let fa = integrate_semi_infinite(|t| real(smooth_a(t)), &spec).unwrap().value;
        let fb = integrate_semi_infinite(|t| real(smooth_b(t)), &spec).unwrap().value;
        let mixed = integrate_semi_infinite(|t| real(alpha * smooth_a(t) + beta * smooth_b(t)), &spec).unwrap().value;
        prop_assert!((mixed - (alpha * fa + beta * fb)).norm() < 1e-12);
    }

    #[test]
    fn conjugate_symmetric_line_integrand_is_real(a in -0.9..-0.1f64, w in 0.5..4.0f64) {
        let z = Complex64::new(w, 0.0);
        let r = integrate_vertical_line(|s| Ok(-PI / (s * PI).sin() * z.powc(-s)), a, &QuadratureSpec::default()).unwrap();
        prop_assert!(r.value.im.abs() < 1e-12);
        prop_assert!((r.value.re - w / (1.0 + w)).abs() < 1e-10);
    }
}

#[test]
fn doubling_levels_never_increases_the_estimate() {
    let tight = |levels| QuadratureSpec {
        abs_tol: 1e-16,
        rel_tol: 1e-16,
        max_levels: levels,
        ..Default::default()
    };
    let integrands: [fn(f64) -> f64; 3] = [|t| (-t).exp(), |t| t.powf(-0.5) / (1.0 + t), smooth_b];
    for f in integrands {
        for levels in [3usize, 4, 6] {
            let lo = integrate_semi_infinite(|t| real(f(t)), &tight(levels)).unwrap();
            let hi = integrate_semi_infinite(|t| real(f(t)), &tight(2 * levels)).unwrap();
            assert!(
                hi.error_estimate <= lo.error_estimate,
                "levels {levels}: {lo:?} {hi:?}"
            );
        }
    }
    let gaussian = |s: Complex64| Ok(Complex64::new((-(s.im * s.im)).exp(), 0.0));
    for levels in [3usize, 4, 6] {
        let lo = integrate_vertical_line(gaussian, 0.0, &tight(levels)).unwrap();
        let hi = integrate_vertical_line(gaussian, 0.0, &tight(2 * levels)).unwrap();
        assert!(hi.error_estimate <= lo.error_estimate);
    }
}

#[test]
fn estimates_are_honest() {
    for tol in [1e-4, 1e-7, 1e-10] {
        let spec = QuadratureSpec {
            abs_tol: tol,
            rel_tol: tol,
            ..Default::default()
        };
        let r = integrate_semi_infinite(|t| real(t.powf(-0.5) / (1.0 + t)), &spec).unwrap();
        assert!((r.value.re - PI).abs() <= 3.0 * r.error_estimate);
        let r = integrate_semi_infinite(|t| real((-t).exp()), &spec).unwrap();
        assert!((r.value.re - 1.0).abs() <= 3.0 * r.error_estimate);
        let r = integrate_vertical_line(
            |s| Ok(-PI / (s * PI).sin() * Complex64::new(2.0, 0.0).powc(-s)),
            -0.5,
            &spec,
        )
        .unwrap();
        assert!((r.value - 2.0 / 3.0).norm() <= 3.0 * r.error_estimate);
    }
}

#[test]
fn identical_calls_are_bit_identical() {
    let spec = QuadratureSpec::default();
    let f = |t: f64| real(smooth_b(t));
    let a = integrate_semi_infinite(f, &spec).unwrap();
    let b = integrate_semi_infinite(f, &spec).unwrap();
    assert_eq!(a, b);
}

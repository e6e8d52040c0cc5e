//! The nine acceptance criteria, runnable from tests and the CLI.

use std::f64::consts::PI;
use std::time::Instant;

use crate::quadrature::integrate_semi_infinite;
use crate::solver::{
    fit_growth_envelope, synthetic_kernel_suite, Solver, SolverParams, ThetaKernel, SYNTHETIC_FLOOR,
};
use crate::special::{find_zeta_zeros, xi};
use crate::theta::{hbar, mellin_hbar, selfdual_residual, KernelSeriesParams};
use crate::{Complex64, QuadratureSpec, Result};

/// First zero ordinate, γ₁ = 14.1347251417346937904...
const GAMMA_1: f64 = 14.134_725_141_734_694;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Result<Outcome> {
    Ok(Outcome { passed, detail })
}

fn grid() -> Vec<(Complex64, Complex64, f64)> {
    let zs = [c(0.5, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(1.0, 1.0)];
    let ys = [c(0.3, 0.0), c(2.0, 0.0), c(0.5, 3.0)];
    let mut cells = Vec::new();
    for z in zs {
        for y in ys {
            for x in [0.25, 0.5, 1.0] {
                cells.push((z, y, x));
            }
        }
    }
    cells
}

fn solver() -> Result<Solver<ThetaKernel>> {
    Solver::theta(QuadratureSpec::default())
}

fn kernel_mellin_pair() -> Result<Outcome> {
    let mut worst = 0.0f64;
    for s in [c(-0.5, 0.0), c(-0.5, 1.0)] {
        let exponent = s - 1.0;
        let r = integrate_semi_infinite(
            |t| Ok((exponent * t.ln()).exp() * (t / (1.0 + t))),
            &QuadratureSpec::default(),
        )?
        .require_converged()?;
        let closed = -PI / (s * PI).sin();
        worst = worst.max((r.value - closed).norm());
    }
    // the second closed form is π / cosh π
    let reflected = (-PI / (c(-0.5, 1.0) * PI).sin() - PI / PI.cosh()).norm();
    outcome(
        worst < 1e-9 && reflected < 1e-14,
        format!("max |quad - (-pi/sin pi s)| = {worst:.2e} (tol 1e-9)"),
    )
}

fn self_reciprocity() -> Result<Outcome> {
    let mut worst = 0.0f64;
    let mut ok = true;
    for t in [0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0] {
        let r = selfdual_residual(t)?;
        let tol = 1e-12 * (1.0 + hbar(t, &KernelSeriesParams::default())?.abs());
        ok &= r < tol;
        worst = worst.max(r);
    }
    outcome(
        ok,
        format!("max residual = {worst:.2e} (tol 1e-12 (1 + |H|))"),
    )
}

fn mellin_of_kernel() -> Result<Outcome> {
    let points = [
        c(0.0, 0.0),
        c(1.0, 0.0),
        c(2.0, 0.0),
        c(0.5, 0.0),
        c(0.5, 3.0),
        c(-1.0, 0.0),
        c(0.5, 14.134_725),
    ];
    let mut worst = 0.0f64;
    for s in points {
        let m = mellin_hbar(s, &QuadratureSpec::default())?.value;
        let target = if s == c(0.0, 0.0) || s == c(1.0, 0.0) {
            c(0.5, 0.0)
        } else {
            xi(s)?
        };
        worst = worst.max((m - target).norm());
    }
    outcome(
        worst < 1e-8,
        format!("max |M[H](s) - xi(s)| = {worst:.2e} over 7 points (tol 1e-8)"),
    )
}

fn representation_equivalence() -> Result<Outcome> {
    let s = solver()?;
    let mut worst = 0.0f64;
    for (z, y, x) in grid() {
        let p = SolverParams::with_default_abscissa(z, y, x)?;
        let real = s.f_real_rep(&p)?.value;
        let contour = s.f_contour_rep(&p)?.value;
        worst = worst.max((real - contour).norm() / real.norm());
    }
    outcome(
        worst < 1e-7,
        format!("max relative |f_real - f_contour| = {worst:.2e} over 36 cells (tol 1e-7)"),
    )
}

fn functional_equation() -> Result<Outcome> {
    let s = solver()?;
    let mut worst = 0.0f64;
    let mut all_passed = true;
    for (z, y, x) in grid() {
        let r = s.feq_residual(&SolverParams::with_default_abscissa(z, y, x)?)?;
        worst = worst.max(r.residual);
        all_passed &= r.passed;
    }
    outcome(
        worst < 1e-7 && all_passed,
        format!("max residual = {worst:.2e} over 36 cells (tol 1e-7)"),
    )
}

fn residue_derivation() -> Result<Outcome> {
    let s = solver()?;
    let mut worst = 0.0f64;
    let mut drift = 0.0f64;
    for (z, y, x) in grid() {
        let p = SolverParams::with_default_abscissa(z, y, x)?;
        worst = worst.max(s.contour_shift_residue_check(&p)?.residual);
    }
    let mut seen = Vec::new();
    for (_, y, x) in grid() {
        if seen.contains(&(y, x)) {
            continue;
        }
        seen.push((y, x));
        let one = s.contour_shift_residue_check(&SolverParams::with_default_abscissa(
            c(1.0, 0.0),
            y,
            x,
        )?)?;
        let three = s.contour_shift_residue_check(&SolverParams::with_default_abscissa(
            c(3.0, 0.0),
            y,
            x,
        )?)?;
        drift = drift.max((one.value - three.value).norm());
    }
    outcome(
        worst < 1e-7 && drift < 1e-7,
        format!(
            "max residual = {worst:.2e}, max residue drift z=1 vs z=3 = {drift:.2e} (tol 1e-7)"
        ),
    )
}

fn zero_criterion() -> Result<Outcome> {
    let s = solver()?;
    let scan = find_zeta_zeros(0.0, 35.0, 0.05)?;
    let count_ok = scan.zeros.len() == 5;
    let first_ok = scan
        .zeros
        .first()
        .is_some_and(|z| (z.gamma - GAMMA_1).abs() < 1e-5);
    let mut worst = 0.0f64;
    for z in [c(1.0, 0.0), c(2.0, 1.0)] {
        for x in [0.25, 0.5] {
            for zero in &scan.zeros {
                worst = worst.max(s.rh_residual(z, zero, x)?.residual);
            }
        }
    }
    let control = s.off_zero_control(c(1.0, 0.0), c(0.5, 15.0), 0.5)?;
    outcome(
        count_ok && first_ok && worst < 1e-6 && control.magnitude > 1e-4,
        format!(
            "{} zeros in (0, 35), gamma_1 = {:.9}, max residual = {worst:.2e} (tol 1e-6), off-zero |combination| = {:.2e} (> 1e-4)",
            scan.zeros.len(),
            scan.zeros.first().map_or(f64::NAN, |z| z.gamma),
            control.magnitude
        ),
    )
}

fn synthetic_kernel() -> Result<Outcome> {
    let reports = synthetic_kernel_suite(&QuadratureSpec::default())?;
    let worst = reports.iter().map(|r| r.residual).fold(0.0, f64::max);
    let all = reports.iter().all(|r| r.passed);
    outcome(
        worst < SYNTHETIC_FLOOR && all,
        format!(
            "{} checks, max residual = {worst:.2e} (tol 1e-8)",
            reports.len()
        ),
    )
}

fn growth_envelope() -> Result<Outcome> {
    let mut env = fit_growth_envelope(&[5.0, 10.0, 15.0], 64)?;
    env.probe(&[30.0], 64)?;
    let sampled = env.samples.last().map_or(0.0, |s| s.max_modulus);
    let predicted = env.predicted(30.0);
    outcome(
        env.rate > 0.0 && sampled > predicted && env.max_violation_radius == Some(30.0),
        format!(
            "r = {:.4}, A = {:.4}, delta = {:.4}; R=30 sampled {sampled:.3e} vs predicted {predicted:.3e}, violation at {:?}",
            env.rate, env.amplitude, env.delta, env.max_violation_radius
        ),
    )
}

/// Result of one acceptance criterion.
#[derive(Debug, Clone, PartialEq)]
pub struct CriterionOutcome {
    pub index: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub wall_time_s: f64,
}

type Criterion = (&'static str, fn() -> Result<Outcome>);

const CRITERIA: [Criterion; 9] = [
    ("kernel Mellin pair", kernel_mellin_pair),
    ("self-reciprocity of H", self_reciprocity),
    ("Mellin transform of H equals xi", mellin_of_kernel),
    ("representation equivalence", representation_equivalence),
    ("functional equation", functional_equation),
    ("residue at s = 0", residue_derivation),
    ("zero criterion", zero_criterion),
    ("synthetic kernel end-to-end", synthetic_kernel),
    ("growth envelope diagnostic", growth_envelope),
];

/// Runs every criterion in order. A numerical error marks that criterion failed.
pub fn run_acceptance() -> Vec<CriterionOutcome> {
    CRITERIA
        .iter()
        .enumerate()
        .map(|(i, (name, run))| {
            let t = Instant::now();
            let (passed, detail) = match run() {
                Ok(o) => (o.passed, o.detail),
                Err(e) => (false, format!("error: {e}")),
            };
            CriterionOutcome {
                index: i + 1,
                name,
                passed,
                detail,
                wall_time_s: t.elapsed().as_secs_f64(),
            }
        })
        .collect()
}

impl std::fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {}. {}: {} ({:.2}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.index,
            self.name,
            self.detail,
            self.wall_time_s
        )
    }
}

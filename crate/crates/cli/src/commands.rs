use std::time::Instant;

use feq_core::acceptance::run_acceptance;
use feq_core::solver::{fit_growth_envelope, GrowthEnvelope, Solver, SolverParams, ThetaKernel};
use feq_core::special::{find_zeta_zeros, first_zeta_zeros, xi, SuspectReason, ZeroScan};
use feq_core::theta::{hbar_detailed, KernelSeriesParams};
use feq_core::{Complex64, Error};
use rayon::prelude::*;

use crate::args::{Command, GridArgs, QuadArgs};
use crate::error::CliError;
use crate::record::Record;

const DEFAULT_ZERO_COUNT: usize = 5;

pub fn run(command: &Command) -> Result<Vec<Record>, CliError> {
    match command {
        Command::EvalXi { s, .. } => Ok(eval_xi(s)),
        Command::EvalKernel { t, .. } => Ok(eval_kernel(t)),
        Command::VerifyFeq {
            grid, a_alt, quad, ..
        } => verify_feq(grid, *a_alt, quad),
        Command::VerifyResidue { grid, quad, .. } => verify_residue(grid, quad),
        Command::VerifyRh {
            zeros,
            t_range,
            step,
            z,
            x,
            control,
            quad,
            ..
        } => verify_rh(&scan(*zeros, *t_range, *step)?, z, x, control, quad),
        Command::FindZeros {
            zeros,
            t_range,
            step,
            ..
        } => Ok(zero_records(&scan(*zeros, *t_range, *step)?)),
        Command::FitGrowth {
            radii,
            probe_radii,
            samples,
            ..
        } => fit_growth(radii, probe_radii, *samples),
        Command::Suite { .. } => Ok(suite()),
    }
}

fn timed(f: impl FnOnce() -> Record) -> Record {
    let start = Instant::now();
    let mut r = f();
    r.wall_time_s = start.elapsed().as_secs_f64();
    r
}

fn usage(e: Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn solver(quad: &QuadArgs) -> Result<Solver<ThetaKernel>, CliError> {
    Solver::theta(quad.spec()).map_err(usage)
}

fn cells(grid: &GridArgs) -> Result<Vec<SolverParams>, CliError> {
    let mut out = Vec::with_capacity(grid.z.len() * grid.y.len() * grid.x.len());
    for &z in &grid.z {
        for &y in &grid.y {
            for &x in &grid.x {
                out.push(SolverParams::new(z, y, x, grid.a).map_err(usage)?);
            }
        }
    }
    Ok(out)
}

fn cell_record(command: &str, p: &SolverParams) -> Record {
    let mut r = Record::new(command).with_z(p.z).with_y(p.y);
    r.x = Some(p.x);
    r.a = Some(p.a);
    r
}

fn eval_xi(points: &[Complex64]) -> Vec<Record> {
    points
        .par_iter()
        .map(|&s| {
            timed(|| {
                let r = Record::new("eval-xi").with_s(s);
                match xi(s) {
                    Ok(v) => Record {
                        passed: true,
                        ..r.with_value(v)
                    },
                    Err(e) => r.failed(e),
                }
            })
        })
        .collect()
}

fn eval_kernel(points: &[f64]) -> Vec<Record> {
    let series = KernelSeriesParams::default();
    points
        .par_iter()
        .map(|&t| {
            timed(|| {
                let r = Record {
                    t: Some(t),
                    ..Record::new("eval-kernel")
                };
                match hbar_detailed(t, &series) {
                    Ok(h) => Record {
                        error_estimate: Some(h.tail_bound),
                        evaluations: Some(h.terms as u64),
                        note: h.reflected.then(|| "reflected".to_owned()),
                        passed: true,
                        ..r.with_value(Complex64::new(h.value, 0.0))
                    },
                    Err(e) => r.failed(e),
                }
            })
        })
        .collect()
}

fn verify_feq(
    grid: &GridArgs,
    a_alt: Option<f64>,
    quad: &QuadArgs,
) -> Result<Vec<Record>, CliError> {
    let solver = solver(quad)?;
    let cells = cells(grid)?;
    if let Some(b) = a_alt {
        SolverParams { a: b, ..cells[0] }
            .validate()
            .map_err(usage)?;
    }
    Ok(cells
        .par_iter()
        .flat_map_iter(|p| {
            let mut out = vec![
                timed(|| report_record("verify-feq", p, solver.feq_residual(p))),
                timed(|| report_record("verify-feq", p, solver.representation_residual(p))),
            ];
            if let Some(b) = a_alt {
                out.push(timed(|| {
                    report_record("verify-feq", p, solver.abscissa_residual(p, b))
                }));
            }
            out
        })
        .collect())
}

fn verify_residue(grid: &GridArgs, quad: &QuadArgs) -> Result<Vec<Record>, CliError> {
    let solver = solver(quad)?;
    Ok(cells(grid)?
        .par_iter()
        .map(|p| {
            timed(|| report_record("verify-residue", p, solver.contour_shift_residue_check(p)))
        })
        .collect())
}

fn report_record(
    command: &str,
    p: &SolverParams,
    report: feq_core::Result<feq_core::ResidualReport>,
) -> Record {
    match report {
        Ok(r) => Record::new(command).with_report(&r),
        Err(e) => cell_record(command, p).failed(e),
    }
}

fn scan(count: Option<usize>, range: Option<(f64, f64)>, step: f64) -> Result<ZeroScan, CliError> {
    let scan = match (count, range) {
        (_, Some((lo, hi))) => find_zeta_zeros(lo, hi, step),
        (n, None) => first_zeta_zeros(n.unwrap_or(DEFAULT_ZERO_COUNT), step),
    };
    scan.map_err(usage)
}

fn suspect_records(command: &str, scan: &ZeroScan) -> Vec<Record> {
    scan.suspects
        .iter()
        .map(|s| {
            let why = match s.reason {
                SuspectReason::SuspectedPair => "possible unresolved pair of zeros; reduce --step",
                SuspectReason::ResidualTooLarge => "sign change without a confirmed zero",
            };
            Record {
                bracket_lo: Some(s.lo),
                bracket_hi: Some(s.hi),
                ..Record::new(command)
            }
            .failed(why)
        })
        .collect()
}

fn zero_records(scan: &ZeroScan) -> Vec<Record> {
    let mut out: Vec<Record> = scan
        .zeros
        .iter()
        .map(|z| Record {
            gamma: Some(z.gamma),
            bracket_lo: Some(z.bracket_lo),
            bracket_hi: Some(z.bracket_hi),
            residual: Some(z.xi_residual),
            error_estimate: Some(z.ordinate_error),
            passed: true,
            ..Record::new("find-zeros").with_s(z.rho())
        })
        .collect();
    out.extend(suspect_records("find-zeros", scan));
    out
}

fn verify_rh(
    scan: &ZeroScan,
    zs: &[Complex64],
    xs: &[f64],
    controls: &[Complex64],
    quad: &QuadArgs,
) -> Result<Vec<Record>, CliError> {
    let solver = solver(quad)?;
    for &z in zs {
        for &x in xs {
            SolverParams::with_default_abscissa(z, Complex64::new(0.5, 0.0), x).map_err(usage)?;
        }
    }
    let mut jobs = Vec::new();
    for zero in &scan.zeros {
        for &z in zs {
            for &x in xs {
                jobs.push((zero, z, x));
            }
        }
    }
    let mut out: Vec<Record> = jobs
        .par_iter()
        .map(|&(zero, z, x)| {
            timed(|| {
                let base = Record {
                    gamma: Some(zero.gamma),
                    x: Some(x),
                    ..Record::new("verify-rh")
                };
                match solver.rh_residual(z, zero, x) {
                    Ok(r) => Record {
                        gamma: Some(zero.gamma),
                        ..Record::new("verify-rh").with_report(&r)
                    },
                    Err(e) => base.with_z(z).with_y(zero.rho()).failed(e),
                }
            })
        })
        .collect();
    let mut control_jobs = Vec::new();
    for &y in controls {
        for &z in zs {
            for &x in xs {
                control_jobs.push((y, z, x));
            }
        }
    }
    out.par_extend(control_jobs.par_iter().map(|&(y, z, x)| {
        timed(|| {
            let base = Record {
                identity: Some("off-zero-control".to_owned()),
                x: Some(x),
                ..Record::new("verify-rh")
            }
            .with_z(z)
            .with_y(y);
            match solver.off_zero_control(z, y, x) {
                Ok(c) => Record {
                    residual: Some(c.magnitude),
                    tolerance: Some(c.threshold),
                    passed: c.discriminates,
                    ..base.with_value(c.combination)
                },
                Err(e) => base.failed(e),
            }
        })
    }));
    out.extend(suspect_records("verify-rh", scan));
    Ok(out)
}

fn fit_growth(radii: &[f64], probes: &[f64], samples: usize) -> Result<Vec<Record>, CliError> {
    let mut env: GrowthEnvelope = fit_growth_envelope(radii, samples).map_err(usage)?;
    let fitted = env.samples.len();
    if !probes.is_empty() {
        env.probe(probes, samples).map_err(usage)?;
    }
    Ok(env
        .samples
        .iter()
        .enumerate()
        .map(|(k, s)| {
            let bound = env.bound(s.radius);
            Record {
                radius: Some(s.radius),
                max_modulus: Some(s.max_modulus),
                predicted: Some(env.predicted(s.radius)),
                bound: Some(bound),
                amplitude: Some(env.amplitude),
                rate: Some(env.rate),
                delta: Some(env.delta),
                residual: Some(env.fit_rms),
                within_envelope: Some(s.max_modulus <= bound),
                note: Some(if k < fitted { "fit" } else { "probe" }.to_owned()),
                passed: true,
                ..Record::new("fit-growth").with_s(s.argmax)
            }
        })
        .collect())
}

fn suite() -> Vec<Record> {
    run_acceptance()
        .into_iter()
        .map(|o| Record {
            identity: Some(o.name.to_owned()),
            note: Some(o.detail),
            passed: o.passed,
            wall_time_s: o.wall_time_s,
            ..Record::new("suite")
        })
        .collect()
}

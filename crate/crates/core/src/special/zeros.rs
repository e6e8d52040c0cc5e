//! Critical-line zeros of ζ located by sign changes of Ξ(t).

use super::xi::xi_critical_line;
use crate::error::{Error, Result};

/// Default grid step for the sign-change scan.
pub const DEFAULT_SCAN_STEP: f64 = 0.05;

/// Height above which the scan is not supported.
pub const MAX_SCAN_HEIGHT: f64 = 100.0;

/// A nontrivial zero ρ = ½ + iγ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaZero {
    pub gamma: f64,
    /// Scan-grid bracket with Ξ(lo)·Ξ(hi) < 0.
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    /// |Ξ(gamma)|.
    pub xi_residual: f64,
    /// Half-width of the final bisection interval.
    pub ordinate_error: f64,
}

impl ZetaZero {
    pub fn rho(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(0.5, self.gamma)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroScanConfig {
    /// Bisection stops once the bracket is narrower than this.
    pub ordinate_tol: f64,
    /// Upper bound on |Ξ(γ)| for an accepted zero.
    pub zero_tol: f64,
}

impl Default for ZeroScanConfig {
    fn default() -> Self {
        Self {
            ordinate_tol: 1e-12,
            zero_tol: 1e-10,
        }
    }
}

/// Why a grid interval was flagged instead of yielding a zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuspectReason {
    /// |Ξ| dips between two same-sign neighbours: a pair of zeros may lie
    /// inside a single grid cell.
    SuspectedPair,
    /// A sign change whose bisected |Ξ(γ)| stayed above the zero tolerance.
    ResidualTooLarge,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuspectInterval {
    pub lo: f64,
    pub hi: f64,
    pub reason: SuspectReason,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ZeroScan {
    /// Ascending in `gamma`.
    pub zeros: Vec<ZetaZero>,
    /// Warnings; non-empty means the step may be too coarse.
    pub suspects: Vec<SuspectInterval>,
}

fn bisect(mut lo: f64, mut hi: f64, mut f_lo: f64, tol: f64) -> Result<(f64, f64)> {
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = xi_critical_line(mid)?;
        if (f_mid >= 0.0) == (f_lo >= 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok((0.5 * (lo + hi), 0.5 * (hi - lo)))
}

/// Scan Ξ on `[t_lo, t_hi]` with the given step and refine every sign change
/// by bisection.
pub fn find_zeta_zeros(t_lo: f64, t_hi: f64, step: f64) -> Result<ZeroScan> {
    find_zeta_zeros_with(t_lo, t_hi, step, ZeroScanConfig::default())
}

pub fn find_zeta_zeros_with(
    t_lo: f64,
    t_hi: f64,
    step: f64,
    config: ZeroScanConfig,
) -> Result<ZeroScan> {
    if !(t_lo.is_finite() && t_hi.is_finite() && t_lo >= 0.0 && t_lo < t_hi) {
        return Err(Error::InvalidArgument(format!(
            "zero scan needs 0 <= t_lo < t_hi, got [{t_lo}, {t_hi}]"
        )));
    }
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "zero scan step must be positive, got {step}"
        )));
    }
    if t_hi > MAX_SCAN_HEIGHT {
        return Err(Error::InvalidArgument(format!(
            "zero scan limited to t <= {MAX_SCAN_HEIGHT}, got {t_hi}"
        )));
    }
    if !(config.ordinate_tol > 0.0 && config.zero_tol > 0.0) {
        return Err(Error::InvalidArgument(
            "zero scan tolerances must be positive".into(),
        ));
    }

    let cells = ((t_hi - t_lo) / step).ceil() as usize;
    let grid: Vec<f64> = (0..=cells)
        .map(|i| (t_lo + i as f64 * step).min(t_hi))
        .collect();
    let values = grid
        .iter()
        .map(|&t| xi_critical_line(t))
        .collect::<Result<Vec<_>>>()?;

    let mut scan = ZeroScan::default();
    for i in 0..cells {
        let (lo, hi) = (grid[i], grid[i + 1]);
        let (f_lo, f_hi) = (values[i], values[i + 1]);
        if (f_lo >= 0.0) != (f_hi >= 0.0) {
            let (gamma, ordinate_error) = bisect(lo, hi, f_lo, config.ordinate_tol)?;
            let xi_residual = xi_critical_line(gamma)?.abs();
            if xi_residual < config.zero_tol {
                scan.zeros.push(ZetaZero {
                    gamma,
                    bracket_lo: lo,
                    bracket_hi: hi,
                    xi_residual,
                    ordinate_error,
                });
            } else {
                scan.suspects.push(SuspectInterval {
                    lo,
                    hi,
                    reason: SuspectReason::ResidualTooLarge,
                });
            }
        } else if i > 0 {
            let prev = values[i - 1];
            let same_sign = (prev >= 0.0) == (f_lo >= 0.0);
            if same_sign && f_lo.abs() < prev.abs() && f_lo.abs() < f_hi.abs() {
                scan.suspects.push(SuspectInterval {
                    lo: grid[i - 1],
                    hi,
                    reason: SuspectReason::SuspectedPair,
                });
            }
        }
    }
    Ok(scan)
}

/// The first `count` zeros above the real axis, scanning upward from t = 0
/// with the given step.
pub fn first_zeta_zeros(count: usize, step: f64) -> Result<ZeroScan> {
    let mut scan = ZeroScan::default();
    let mut lo = 0.0;
    while scan.zeros.len() < count {
        if lo >= MAX_SCAN_HEIGHT {
            return Err(Error::InvalidArgument(format!(
                "only {} zeros below t = {MAX_SCAN_HEIGHT}, asked for {count}",
                scan.zeros.len()
            )));
        }
        let hi = (lo + 10.0).min(MAX_SCAN_HEIGHT);
        let chunk = find_zeta_zeros(lo, hi, step)?;
        scan.zeros.extend(chunk.zeros);
        scan.suspects.extend(chunk.suspects);
        lo = hi;
    }
    scan.zeros.truncate(count);
    Ok(scan)
}

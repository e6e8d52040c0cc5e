//! Empirical growth envelope |ξ(s)| ≤ A e^{(r+δ)|s|} on circles |s| = R.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special::xi;

/// Smallest slack added to the fitted rate.
pub const MIN_DELTA: f64 = 1e-3;

/// Maximum of |ξ| over one sampled circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleSample {
    pub radius: f64,
    pub max_modulus: f64,
    /// Sample point where the maximum was attained.
    pub argmax: Complex64,
}

/// Least-squares fit of log max_{|s|=R} |ξ(s)| ≈ log A + rR.
///
/// `delta` is the smallest slack (at least [`MIN_DELTA`]) for which the
/// envelope covers every fitted sample. The envelope is a diagnostic: ξ has
/// order one and maximal type, so no finite rate holds for all R, and later
/// probes are expected to break it.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthEnvelope {
    pub amplitude: f64,
    pub rate: f64,
    pub delta: f64,
    /// Radii fitted, then any probed radii, in call order.
    pub radii_sampled: Vec<f64>,
    pub samples: Vec<CircleSample>,
    /// Root-mean-square log residual of the fit.
    pub fit_rms: f64,
    /// Smallest sampled radius whose maximum exceeds the envelope.
    pub max_violation_radius: Option<f64>,
}

impl GrowthEnvelope {
    pub fn bound(&self, radius: f64) -> f64 {
        self.amplitude * ((self.rate + self.delta) * radius).exp()
    }

    /// Fitted prediction A e^{rR} without the slack.
    pub fn predicted(&self, radius: f64) -> f64 {
        self.amplitude * (self.rate * radius).exp()
    }

    /// Sample further circles against the fitted envelope and update
    /// `max_violation_radius`.
    pub fn probe(&mut self, radii: &[f64], samples_per_circle: usize) -> Result<()> {
        check_radii(radii, 1)?;
        check_samples(samples_per_circle)?;
        for &radius in radii {
            let sample = sample_circle(radius, samples_per_circle)?;
            self.radii_sampled.push(radius);
            self.samples.push(sample);
        }
        self.max_violation_radius = self
            .samples
            .iter()
            .filter(|s| s.max_modulus > self.bound(s.radius))
            .map(|s| s.radius)
            .fold(None, |acc: Option<f64>, r| {
                Some(acc.map_or(r, |a| a.min(r)))
            });
        Ok(())
    }
}

fn check_radii(radii: &[f64], min_len: usize) -> Result<()> {
    if radii.len() < min_len {
        return Err(Error::DegenerateFit(radii.len()));
    }
    if radii.iter().any(|r| !(r.is_finite() && *r > 0.0)) || radii.windows(2).any(|w| w[1] <= w[0])
    {
        return Err(Error::InvalidArgument(format!(
            "radii must be positive and ascending: {radii:?}"
        )));
    }
    Ok(())
}

fn check_samples(samples_per_circle: usize) -> Result<()> {
    if samples_per_circle < 8 {
        return Err(Error::InvalidArgument(format!(
            "need at least 8 samples per circle, got {samples_per_circle}"
        )));
    }
    Ok(())
}

/// max |ξ(R e^{iθ})| over θ = 2πk/M.
pub fn sample_circle(radius: f64, samples_per_circle: usize) -> Result<CircleSample> {
    let mut best = CircleSample {
        radius,
        max_modulus: -1.0,
        argmax: Complex64::new(radius, 0.0),
    };
    for k in 0..samples_per_circle {
        let s = Complex64::from_polar(radius, 2.0 * PI * k as f64 / samples_per_circle as f64);
        let m = xi(s)?.norm();
        if m > best.max_modulus {
            best.max_modulus = m;
            best.argmax = s;
        }
    }
    Ok(best)
}

pub fn fit_growth_envelope(radii: &[f64], samples_per_circle: usize) -> Result<GrowthEnvelope> {
    check_radii(radii, 2)?;
    check_samples(samples_per_circle)?;
    let samples = radii
        .iter()
        .map(|&r| sample_circle(r, samples_per_circle))
        .collect::<Result<Vec<_>>>()?;

    let n = samples.len() as f64;
    let logs: Vec<f64> = samples.iter().map(|s| s.max_modulus.ln()).collect();
    let mean_r = radii.iter().sum::<f64>() / n;
    let mean_l = logs.iter().sum::<f64>() / n;
    let sxx: f64 = radii.iter().map(|r| (r - mean_r).powi(2)).sum();
    let sxy: f64 = radii
        .iter()
        .zip(&logs)
        .map(|(r, l)| (r - mean_r) * (l - mean_l))
        .sum();
    let rate = sxy / sxx;
    if !(rate.is_finite() && rate > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "fitted growth rate {rate} is not positive"
        )));
    }
    let log_amplitude = mean_l - rate * mean_r;
    let residuals: Vec<f64> = radii
        .iter()
        .zip(&logs)
        .map(|(r, l)| l - log_amplitude - rate * r)
        .collect();
    let fit_rms = (residuals.iter().map(|e| e * e).sum::<f64>() / n).sqrt();
    let delta = radii
        .iter()
        .zip(&residuals)
        .map(|(r, e)| e / r * (1.0 + 1e-9))
        .fold(MIN_DELTA, f64::max);

    Ok(GrowthEnvelope {
        amplitude: log_amplitude.exp(),
        rate,
        delta,
        radii_sampled: radii.to_vec(),
        samples,
        fit_rms,
        max_violation_radius: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maximum_sits_on_the_real_axis() {
        for radius in [5.0, 10.0, 15.0] {
            let s = sample_circle(radius, 64).unwrap();
            assert!(
                s.argmax.im.abs() < 1e-9 * radius,
                "R = {radius}: {}",
                s.argmax
            );
        }
    }

    #[test]
    fn fit_is_increasing_and_covers_its_samples() {
        let env = fit_growth_envelope(&[5.0, 10.0, 15.0], 32).unwrap();
        assert!(env.rate > 0.0 && env.amplitude > 0.0 && env.delta > 0.0);
        for s in &env.samples {
            assert!(s.max_modulus <= env.bound(s.radius));
        }
        assert_eq!(env.max_violation_radius, None);
    }

    #[test]
    fn extrapolation_under_predicts() {
        let mut env = fit_growth_envelope(&[5.0, 10.0, 15.0], 32).unwrap();
        env.probe(&[30.0], 32).unwrap();
        let far = env.samples.last().unwrap();
        assert!(far.max_modulus > env.predicted(30.0));
        assert_eq!(env.max_violation_radius, Some(30.0));

        let wider = fit_growth_envelope(&[5.0, 10.0, 15.0, 30.0], 32).unwrap();
        assert!(wider.fit_rms > env.fit_rms);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(
            fit_growth_envelope(&[5.0], 16),
            Err(Error::DegenerateFit(1))
        ));
        assert!(fit_growth_envelope(&[10.0, 5.0], 16).is_err());
        assert!(fit_growth_envelope(&[5.0, 10.0], 4).is_err());
    }
}

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Centre of the admissible strip −1 < ℜ(s) < 0.
pub const DEFAULT_ABSCISSA: f64 = -0.5;

/// Largest supported step x.
pub const MAX_STEP: f64 = 2.0;

/// Inputs for one evaluation of f(z, y): the functional-equation variables
/// and the contour abscissa a.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverParams {
    pub z: Complex64,
    pub y: Complex64,
    pub x: f64,
    pub a: f64,
}

impl SolverParams {
    /// Validated parameters. `z` must lie off the cut (−∞, 0] so that
    /// 1 + z tˣ never vanishes on t > 0 and Log z is the principal branch.
    pub fn new(z: Complex64, y: Complex64, x: f64, a: f64) -> Result<Self> {
        let p = Self { z, y, x, a };
        p.validate()?;
        Ok(p)
    }

    pub fn with_default_abscissa(z: Complex64, y: Complex64, x: f64) -> Result<Self> {
        Self::new(z, y, x, DEFAULT_ABSCISSA)
    }

    pub fn validate(&self) -> Result<()> {
        let finite = |c: Complex64| c.re.is_finite() && c.im.is_finite();
        if !finite(self.z) || (self.z.im == 0.0 && self.z.re <= 0.0) {
            return Err(Error::InvalidArgument(format!(
                "z = {} must lie off the cut (-inf, 0]",
                self.z
            )));
        }
        if !finite(self.y) {
            return Err(Error::InvalidArgument(format!(
                "y = {} must be finite",
                self.y
            )));
        }
        if !(self.x > 0.0 && self.x <= MAX_STEP) {
            return Err(Error::InvalidArgument(format!(
                "step x = {} outside (0, {MAX_STEP}]",
                self.x
            )));
        }
        if !(self.a > -1.0 && self.a < 0.0) {
            return Err(Error::InvalidArgument(format!(
                "contour abscissa a = {} outside (-1, 0)",
                self.a
            )));
        }
        Ok(())
    }

    /// Same parameters with y replaced.
    pub fn with_y(&self, y: Complex64) -> Self {
        Self { y, ..*self }
    }

    pub fn with_z(&self, z: Complex64) -> Self {
        Self { z, ..*self }
    }

    /// Same parameters with y advanced by one step.
    pub fn shifted(&self) -> Self {
        self.with_y(self.y + self.x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn admissible() {
        assert!(SolverParams::new(c(1.0, 0.0), c(2.0, 0.0), 0.5, -0.5).is_ok());
        assert!(SolverParams::new(c(-1.0, 1e-9), c(2.0, 0.0), 0.5, -0.5).is_ok());
        assert!(SolverParams::new(c(1.0, 1.0), c(0.5, 3.0), 2.0, -0.01).is_ok());
    }

    #[test]
    fn rejected() {
        assert!(SolverParams::new(c(-2.0, 0.0), c(2.0, 0.0), 0.5, -0.5).is_err());
        assert!(SolverParams::new(c(0.0, 0.0), c(2.0, 0.0), 0.5, -0.5).is_err());
        assert!(SolverParams::new(c(1.0, 0.0), c(2.0, 0.0), 0.0, -0.5).is_err());
        assert!(SolverParams::new(c(1.0, 0.0), c(2.0, 0.0), 2.5, -0.5).is_err());
        assert!(SolverParams::new(c(1.0, 0.0), c(2.0, 0.0), 0.5, 0.0).is_err());
        assert!(SolverParams::new(c(1.0, 0.0), c(2.0, 0.0), 0.5, -1.0).is_err());
        assert!(SolverParams::new(c(1.0, 0.0), c(f64::NAN, 0.0), 0.5, -0.5).is_err());
    }
}

use clap::{Args, Parser, Subcommand, ValueEnum};
use feq_core::{Complex64, QuadratureSpec};

/// Mellin-transform solutions of f(z, y+x) + z f(z, y) = z g(y) and the
/// identity checks around them.
///
/// Complex literals are written `re`, `re+imi`, `re-imi` or `imi`.
/// Powers z^{-s} use the principal branch, so z must avoid (-inf, 0].
#[derive(Debug, Parser)]
#[command(name = "feq", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the completed zeta function xi(s).
    EvalXi {
        #[arg(long, value_delimiter = ',', value_parser = parse_complex, required = true, allow_hyphen_values = true)]
        s: Vec<Complex64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate the theta kernel H(t).
    EvalKernel {
        #[arg(long, value_delimiter = ',', required = true)]
        t: Vec<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the functional equation and representation agreement on a grid.
    VerifyFeq {
        #[command(flatten)]
        grid: GridArgs,
        /// Also compare the contour representation at this second abscissa.
        #[arg(long, allow_hyphen_values = true)]
        a_alt: Option<f64>,
        #[command(flatten)]
        quad: QuadArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check that shifting the contour across s = 0 recovers g(y).
    VerifyResidue {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        quad: QuadArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the zero criterion at nontrivial zeta zeros.
    VerifyRh {
        /// Use the first N zeros.
        #[arg(long, conflicts_with = "t_range")]
        zeros: Option<usize>,
        /// Use every zero with ordinate in LO:HI.
        #[arg(long, value_parser = parse_range)]
        t_range: Option<(f64, f64)>,
        #[arg(long, default_value_t = feq_core::special::DEFAULT_SCAN_STEP)]
        step: f64,
        #[arg(long, value_delimiter = ',', value_parser = parse_complex, default_value = "1", allow_hyphen_values = true)]
        z: Vec<Complex64>,
        #[arg(long, value_delimiter = ',', default_value = "0.5")]
        x: Vec<f64>,
        /// Off-zero control points y; each adds a record that passes when the
        /// combination is clearly nonzero.
        #[arg(long, value_delimiter = ',', value_parser = parse_complex, allow_hyphen_values = true)]
        control: Vec<Complex64>,
        #[command(flatten)]
        quad: QuadArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Locate zeta zeros on the critical line.
    FindZeros {
        #[arg(long, conflicts_with = "t_range")]
        zeros: Option<usize>,
        #[arg(long, value_parser = parse_range)]
        t_range: Option<(f64, f64)>,
        #[arg(long, default_value_t = feq_core::special::DEFAULT_SCAN_STEP)]
        step: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Fit log max |xi| on circles to log A + rR, then probe further radii.
    FitGrowth {
        #[arg(long, value_delimiter = ',', default_value = "5,10,15")]
        radii: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_value = "30")]
        probe_radii: Vec<f64>,
        /// Sample points per circle.
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the full acceptance suite.
    Suite {
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long, value_delimiter = ',', value_parser = parse_complex, default_value = "1", allow_hyphen_values = true)]
    pub z: Vec<Complex64>,
    #[arg(long, value_delimiter = ',', value_parser = parse_complex, default_value = "2", allow_hyphen_values = true)]
    pub y: Vec<Complex64>,
    #[arg(long, value_delimiter = ',', default_value = "0.5")]
    pub x: Vec<f64>,
    /// Contour abscissa in (-1, 0).
    #[arg(long, default_value_t = feq_core::solver::DEFAULT_ABSCISSA, allow_hyphen_values = true)]
    pub a: f64,
}

#[derive(Debug, Args)]
pub struct QuadArgs {
    #[arg(long, default_value_t = 1e-10)]
    pub abs_tol: f64,
    #[arg(long, default_value_t = 1e-10)]
    pub rel_tol: f64,
    #[arg(long, default_value_t = 12)]
    pub max_levels: usize,
    /// Half-height of the truncated vertical contour.
    #[arg(long = "T", default_value_t = 40.0)]
    pub line_halfheight: f64,
}

impl QuadArgs {
    pub fn spec(&self) -> QuadratureSpec {
        QuadratureSpec {
            abs_tol: self.abs_tol,
            rel_tol: self.rel_tol,
            max_levels: self.max_levels,
            line_halfheight: self.line_halfheight,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Jsonl,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write records here instead of standard output.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("invalid complex literal `{text}` (expected re, re+imi or imi)");
    let Some(body) = s.strip_suffix('i') else {
        return s
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| bad());
    };
    let split = body
        .char_indices()
        .rev()
        .find(|&(k, ch)| {
            k > 0 && (ch == '+' || ch == '-') && !matches!(body.as_bytes()[k - 1], b'e' | b'E')
        })
        .map(|(k, _)| k);
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().map_err(|_| bad())?,
    };
    let re = re.parse::<f64>().map_err(|_| bad())?;
    Ok(Complex64::new(re, im))
}

pub fn parse_range(text: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = text
        .split_once(':')
        .ok_or_else(|| format!("invalid range `{text}` (expected LO:HI)"))?;
    let lo = lo
        .trim()
        .parse::<f64>()
        .map_err(|e| format!("invalid range start `{lo}`: {e}"))?;
    let hi = hi
        .trim()
        .parse::<f64>()
        .map_err(|e| format!("invalid range end `{hi}`: {e}"))?;
    if lo < hi {
        Ok((lo, hi))
    } else {
        Err(format!("range `{text}` is empty"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        let c = Complex64::new;
        assert_eq!(parse_complex("1").unwrap(), c(1.0, 0.0));
        assert_eq!(parse_complex("0.5+3i").unwrap(), c(0.5, 3.0));
        assert_eq!(parse_complex("2-i").unwrap(), c(2.0, -1.0));
        assert_eq!(parse_complex("-1.5e-3+2e+1i").unwrap(), c(-1.5e-3, 20.0));
        assert_eq!(parse_complex("i").unwrap(), c(0.0, 1.0));
        assert_eq!(parse_complex("-4i").unwrap(), c(0.0, -4.0));
        assert_eq!(parse_complex(" 1 + 1i ").unwrap(), c(1.0, 1.0));
        for bad in ["", "x", "1+2j", "1++2i", "ii"] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0:35").unwrap(), (0.0, 35.0));
        assert!(parse_range("5:1").is_err());
        assert!(parse_range("5").is_err());
    }
}

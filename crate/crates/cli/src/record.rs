use std::io::Write;

use feq_core::solver::ResidualReport;
use feq_core::Complex64;
use serde::{Deserialize, Serialize};

use crate::args::Format;
use crate::error::CliError;

/// One output row. Every command fills the columns it has; the rest stay
/// empty, so the column set is the same for all commands.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub command: String,
    pub identity: Option<String>,
    pub representation: Option<String>,
    pub z_re: Option<f64>,
    pub z_im: Option<f64>,
    pub y_re: Option<f64>,
    pub y_im: Option<f64>,
    pub x: Option<f64>,
    pub a: Option<f64>,
    pub s_re: Option<f64>,
    pub s_im: Option<f64>,
    pub t: Option<f64>,
    pub value_re: Option<f64>,
    pub value_im: Option<f64>,
    pub residual: Option<f64>,
    pub tolerance: Option<f64>,
    pub error_estimate: Option<f64>,
    pub evaluations: Option<u64>,
    pub gamma: Option<f64>,
    pub bracket_lo: Option<f64>,
    pub bracket_hi: Option<f64>,
    pub radius: Option<f64>,
    pub max_modulus: Option<f64>,
    pub predicted: Option<f64>,
    pub bound: Option<f64>,
    pub amplitude: Option<f64>,
    pub rate: Option<f64>,
    pub delta: Option<f64>,
    pub within_envelope: Option<bool>,
    pub passed: bool,
    pub note: Option<String>,
    pub error: Option<String>,
    pub wall_time_s: f64,
}

impl Record {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_owned(),
            ..Default::default()
        }
    }

    pub fn with_z(mut self, z: Complex64) -> Self {
        self.z_re = Some(z.re);
        self.z_im = Some(z.im);
        self
    }

    pub fn with_y(mut self, y: Complex64) -> Self {
        self.y_re = Some(y.re);
        self.y_im = Some(y.im);
        self
    }

    pub fn with_s(mut self, s: Complex64) -> Self {
        self.s_re = Some(s.re);
        self.s_im = Some(s.im);
        self
    }

    pub fn with_value(mut self, v: Complex64) -> Self {
        self.value_re = Some(v.re);
        self.value_im = Some(v.im);
        self
    }

    pub fn failed(mut self, err: impl std::fmt::Display) -> Self {
        self.passed = false;
        self.error = Some(err.to_string());
        self
    }

    pub fn with_report(mut self, r: &ResidualReport) -> Self {
        self.identity = Some(r.identity.label().to_owned());
        self.representation = Some(r.representation.label().to_owned());
        if let Some(p) = r.params {
            self = self.with_z(p.z).with_y(p.y);
            self.x = Some(p.x);
            self.a = Some(p.a);
        }
        self.residual = Some(r.residual);
        self.tolerance = Some(r.tolerance);
        self.evaluations = Some(r.evaluations as u64);
        self.passed = r.passed;
        self.with_value(r.value)
    }
}

pub fn write_records(
    records: &[Record],
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        Format::Csv => {
            if records.is_empty() {
                out.write_all(&csv_header()?)?;
                return Ok(out.flush()?);
            }
            let mut w = csv::Writer::from_writer(out);
            for r in records {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Jsonl => {
            for r in records {
                serde_json::to_writer(&mut *out, r)?;
                out.write_all(b"\n")?;
            }
            out.flush()?;
        }
    }
    Ok(())
}

/// Header line alone, for runs that produce no rows.
fn csv_header() -> Result<Vec<u8>, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.serialize(Record::default())?;
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    let end = bytes
        .iter()
        .position(|&b| b == b'\n')
        .map_or(bytes.len(), |k| k + 1);
    Ok(bytes[..end].to_vec())
}

mod args;
mod commands;
mod error;
mod record;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, OutputArgs};
use error::CliError;

fn output_args(c: &Command) -> &OutputArgs {
    match c {
        Command::EvalXi { output, .. }
        | Command::EvalKernel { output, .. }
        | Command::VerifyFeq { output, .. }
        | Command::VerifyResidue { output, .. }
        | Command::VerifyRh { output, .. }
        | Command::FindZeros { output, .. }
        | Command::FitGrowth { output, .. }
        | Command::Suite { output } => output,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let records = match commands::run(&cli.command) {
        Ok(r) => r,
        Err(e @ CliError::Usage(_)) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    let output = output_args(&cli.command);
    let mut sink: Box<dyn Write> = match &output.out {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                eprintln!("error: cannot create {}: {e}", path.display());
                return ExitCode::FAILURE;
            }
        },
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    if let Err(e) = record::write_records(&records, output.format, &mut sink) {
        eprintln!("error: {e}");
        return ExitCode::FAILURE;
    }
    let failed = records.iter().filter(|r| !r.passed).count();
    if failed > 0 {
        eprintln!("{failed} of {} records failed", records.len());
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

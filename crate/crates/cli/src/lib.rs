//! Front end for `ciqh-core`: argument parsing, report rendering and the
//! parameter sweep.

pub mod args;
mod render;
mod sweep;

use std::io::Write;

use thiserror::Error;

use ciqh_core::certifier::{certify, numeric_oracle, CertifyError};
use ciqh_core::operator::{CompleteIntersection, VarietyError};
use ciqh_core::schubert::{line_invariant, SchubertError};

pub use args::Cli;
pub use render::CsvRow;
pub use sweep::{sweep, sweep_cases};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Task {
    Certify,
    Lines { j: u32 },
    Charpoly,
    Oracle { samples: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RunConfig {
    Case { case: CompleteIntersection, task: Task, format: Format },
    Sweep { n_max: u32, deg_max: u32, r_max: u32, format: Format },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            _ => 2,
        }
    }
}

impl From<CertifyError> for CliError {
    fn from(e: CertifyError) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<VarietyError> for CliError {
    fn from(e: VarietyError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SchubertError> for CliError {
    fn from(e: SchubertError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn format_of(f: &args::FormatArgs) -> Format {
    match (f.json, f.csv) {
        (true, _) => Format::Json,
        (_, true) => Format::Csv,
        _ => Format::Text,
    }
}

impl RunConfig {
    /// Validates parsed flags. Degree-1 factors are accepted here and
    /// dropped by [`CompleteIntersection::new`].
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        use args::Command;
        let case = |c: &args::CaseArgs| CompleteIntersection::new(c.n, &c.degrees);
        Ok(match cli.command {
            Command::Certify { case: c, format } => {
                RunConfig::Case { case: case(&c)?, task: Task::Certify, format: format_of(&format) }
            }
            Command::Lines { case: c, j, format } => {
                RunConfig::Case { case: case(&c)?, task: Task::Lines { j }, format: format_of(&format) }
            }
            Command::Charpoly { case: c, format } => {
                RunConfig::Case { case: case(&c)?, task: Task::Charpoly, format: format_of(&format) }
            }
            Command::Oracle { case: c, samples, seed, format } => {
                RunConfig::Case { case: case(&c)?, task: Task::Oracle { samples, seed }, format: format_of(&format) }
            }
            Command::Sweep { n_max, deg_max, r_max, format } => {
                if deg_max < 2 || r_max == 0 || n_max == 0 {
                    return Err(CliError::Input("sweep needs n-max >= 1, deg-max >= 2 and r-max >= 1".into()));
                }
                RunConfig::Sweep { n_max, deg_max, r_max, format: format_of(&format) }
            }
        })
    }
}

/// Executes one command, writing the report to `out` and warnings to `err`.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match config {
        RunConfig::Sweep { n_max, deg_max, r_max, format } => {
            let certs = sweep(&sweep_cases(*n_max, *deg_max, *r_max))?;
            render::sweep(&certs, *format, out)
        }
        RunConfig::Case { case, task, format } => {
            if case.dropped_linear() > 0 {
                writeln!(err, "warning: dropped {} linear factor(s); using {case}", case.dropped_linear())?;
            }
            match task {
                Task::Certify => render::certificate(&certify(case)?, *format, out),
                Task::Lines { j } => render::lines(case, &line_invariant(case.n(), case.degrees(), *j)?, *format, out),
                Task::Charpoly => render::charpoly(case, *format, out),
                Task::Oracle { samples, seed } => {
                    let report = numeric_oracle(case, *samples, *seed)?;
                    if report.contradiction {
                        return Err(CliError::Internal(format!("{case}: every oracle sample had a repeated root")));
                    }
                    render::oracle(case, &report, *format, out)
                }
            }
        }
    }
}

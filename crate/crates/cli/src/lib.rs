//! Batch runner for the exact verification suites.

pub mod args;
pub mod report;

use std::io::Write;
use std::path::Path;

use clap::Parser;
use dirac_core::runner::{self, SuiteConfig};
use thiserror::Error;

use args::{Cli, Command, Format, SuiteArgs};
pub use report::SuiteReport;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(#[from] dirac_core::Error),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("cannot serialize the report: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_USAGE,
            _ => EXIT_FAIL,
        }
    }
}

/// Execute every selected suite.
pub fn run(config: &SuiteConfig) -> Result<SuiteReport, CliError> {
    let records = runner::run(config)?;
    Ok(SuiteReport::new(config, &records))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.write_all(b"\n"))
                .or_else(|e| if e.kind() == std::io::ErrorKind::BrokenPipe { Ok(()) } else { Err(e) })
                .map_err(|source| CliError::Io { path: "stdout".into(), source })
        }
    }
}

fn run_command(a: &SuiteArgs) -> Result<i32, CliError> {
    let config = a.to_config()?;
    let report = run(&config)?;
    let text = match a.format {
        Format::Json => report.to_json()?,
        Format::Markdown => report.to_markdown(),
    };
    emit(&text, a.out.as_deref())?;
    let t = &report.summary.overall;
    eprintln!("{} cases: {} passed, {} failed", t.total, t.passed, t.failed);
    Ok(if report.all_pass() { EXIT_PASS } else { EXIT_FAIL })
}

fn list_command(a: &SuiteArgs) -> Result<i32, CliError> {
    let cases = runner::list_cases(&a.to_config()?)?;
    let text = match a.format {
        Format::Json => report::list_json(&cases)?,
        Format::Markdown => report::list_text(&cases),
    };
    emit(text.trim_end(), a.out.as_deref())?;
    Ok(EXIT_PASS)
}

/// Parse `argv`, run, and return the process exit code.
pub fn main_with<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    dirac_core::exec::init_from_env();
    let outcome = match &cli.command {
        Some(Command::ListCases(a)) => list_command(a),
        Some(Command::Run(a)) => run_command(a),
        None => run_command(&cli.run),
    };
    outcome.unwrap_or_else(|e| {
        eprintln!("dirac-verify: {e}");
        e.exit_code()
    })
}

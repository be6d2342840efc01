//! Command line surface.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dirac_core::runner::{QuatParams, Suite, SuiteConfig};

#[derive(Parser, Debug)]
#[command(name = "dirac-verify", version, about = "Exact verification of duality, Laplace and Dirac identities")]
#[command(args_conflicts_with_subcommands = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,

    #[command(flatten)]
    pub run: SuiteArgs,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Execute the selected suites and write the report.
    Run(SuiteArgs),
    /// Print the case matrix without executing anything.
    ListCases(SuiteArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Args, Debug, Clone)]
pub struct SuiteArgs {
    /// Suite to run; repeat or separate with commas. `all` selects every suite.
    #[arg(long = "suite", value_delimiter = ',', value_name = "NAME")]
    pub suites: Vec<String>,

    /// Base dimension; repeat or separate with commas.
    #[arg(long = "dim", value_delimiter = ',', value_name = "D")]
    pub dims: Vec<usize>,

    /// Largest power degree.
    #[arg(long = "n-max", default_value_t = 4)]
    pub n_max: usize,

    /// Quaternion algebra `(a,b)`; repeatable.
    #[arg(long = "quat", value_name = "A,B", allow_hyphen_values = true)]
    pub quats: Vec<String>,

    /// Seed for the random pairings.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Write the report here instead of standard output.
    #[arg(long = "out", value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Accept base dimensions above the default guard.
    #[arg(long)]
    pub allow_large: bool,
}

impl SuiteArgs {
    /// Translate the flags into a runner configuration.
    ///
    /// Omitted `--suite`, `--dim` and `--quat` fall back to the defaults. An
    /// explicitly empty `--suite ""` yields an empty suite list, which the
    /// runner rejects.
    pub fn to_config(&self) -> Result<SuiteConfig, dirac_core::Error> {
        let defaults = SuiteConfig::default();
        let suites = if self.suites.is_empty() {
            defaults.suites
        } else {
            let mut out = Vec::new();
            for s in self.suites.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
                if s == "all" {
                    out.extend(Suite::ALL);
                } else {
                    out.push(s.parse()?);
                }
            }
            out
        };
        let quaternion_params = if self.quats.is_empty() {
            defaults.quaternion_params
        } else {
            self.quats.iter().map(|q| q.parse::<QuatParams>()).collect::<Result<_, _>>()?
        };
        Ok(SuiteConfig {
            suites,
            dims: if self.dims.is_empty() { defaults.dims } else { self.dims.clone() },
            n_max: self.n_max,
            quaternion_params,
            seed: self.seed,
            allow_large: self.allow_large,
        })
    }
}

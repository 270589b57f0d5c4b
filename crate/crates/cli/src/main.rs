//! `ncpqg`: irreducible representations, fusion rules and dimensions of
//! noncrossing partition quantum groups.

mod commands;
mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use ncpqg_core::family::FamilyError;
use ncpqg_core::fusion::{FusionError, DEFAULT_BUDGET_POINTS};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Runtime(_) => 1,
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::Fusion(f) => f.into(),
            FamilyError::Parse(_)
            | FamilyError::Group(_)
            | FamilyError::Diagram(_)
            | FamilyError::Category(_)
            | FamilyError::ModulusMismatch(..) => CliError::Config(e.to_string()),
            other => CliError::Runtime(other.to_string()),
        }
    }
}

impl From<FusionError> for CliError {
    fn from(e: FusionError) -> Self {
        match e {
            FusionError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            FusionError::SmallN(_) | FusionError::Category(_) | FusionError::Diagram(_) => {
                CliError::Config(e.to_string())
            }
            other => CliError::Runtime(other.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Oplusplus,
    Wreath,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Diagram,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Plain,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "ncpqg",
    version,
    about = "Representation theory of noncrossing partition quantum groups"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Debug, clap::Args)]
pub struct Opts {
    /// Quantum group family.
    #[arg(long, global = true, value_enum, default_value = "oplusplus")]
    family: FamilyKind,
    /// The parameter ℓ of O_N^{++}(ℓ).
    #[arg(long, global = true, default_value_t = 0)]
    ell: u32,
    /// Γ: `Z`, `Z4`, `klein`, inline group JSON or a JSON file.
    #[arg(long, global = true, default_value = "Z2")]
    group: String,
    /// Λ: comma-separated generators (`g2`), inline subgroup JSON or a JSON
    /// file. Defaults to the trivial subgroup.
    #[arg(long, global = true)]
    lambda: Option<String>,
    /// Generating set: inline JSON or a JSON file. Defaults to one colour
    /// per generator.
    #[arg(long, global = true)]
    gens: Option<String>,
    /// The integer N ≥ 4 for dimensions.
    #[arg(long = "N", global = true)]
    n: Option<u64>,
    /// Longest word to enumerate.
    #[arg(long, global = true)]
    maxlen: Option<usize>,
    /// Limit on boundary points of any enumerated diagram.
    #[arg(long, global = true, env = "NCPQG_BUDGET", default_value_t = DEFAULT_BUDGET_POINTS)]
    budget_points: usize,
    #[arg(long, global = true, value_enum, default_value = "both")]
    method: Method,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decompose the tensor product of two labels.
    Fusion { left: String, right: String },
    /// List the irreducible representations reached by words up to
    /// `--maxlen` letters (with dimensions when `--N` is given).
    Irreps,
    /// Decide membership of a partition file in the family's category.
    Check { partition: PathBuf },
    /// Compare closed-form and diagram fusion on every label pair within
    /// the budget; exits with status 4 on any disagreement.
    Crosscheck,
    /// Dimensions of the irreducible representations at `--N`.
    Dims,
}

/// A rendered result together with its exit status.
pub struct Output {
    pub json: serde_json::Value,
    pub plain: String,
    pub csv: String,
    pub status: u8,
}

fn write_output(opts: &Opts, out: &Output) -> Result<(), CliError> {
    let mut text = match opts.format {
        Format::Json => {
            serde_json::to_string_pretty(&out.json).map_err(|e| CliError::Runtime(e.to_string()))?
        }
        Format::Plain => out.plain.trim_end().to_string(),
        Format::Csv => out.csv.trim_end().to_string(),
    };
    text.push('\n');
    match &opts.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Runtime(e.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result =
        config::load(&cli.opts).and_then(|family| commands::run(&family, &cli.command, &cli.opts));
    match result.and_then(|out| write_output(&cli.opts, &out).map(|()| out.status)) {
        Ok(status) => ExitCode::from(status),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

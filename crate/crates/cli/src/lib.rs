//! Command-line front end: group inspection, character tables, Fourier
//! transforms and their inverses, Plancherel checks on seeded data, the 1d
//! Ising evaluators, and the acceptance suite (`selftest`).
//!
//! Exit codes: 0 success, 1 computation failure or tolerance violation,
//! 2 usage error. `--json` switches every command to machine output. The
//! environment variable `ISING_KITCHEN_TOL` overrides the base identity
//! tolerance (default 1e-9) used when commands gate their results.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use ising_kitchen_core::algebra::AlgebraError;
use ising_kitchen_core::fourier::FourierError;
use ising_kitchen_core::group::GroupError;
use ising_kitchen_core::ising::IsingError;
use ising_kitchen_core::repr::ReprError;
use ising_kitchen_core::Tolerances;
use std::ffi::OsString;
use std::path::PathBuf;

mod commands;
pub mod formats;
pub mod registry;
pub mod selftest;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Registry(#[from] registry::RegistryError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Repr(#[from] ReprError),
    #[error(transparent)]
    Fourier(#[from] FourierError),
    #[error(transparent)]
    Ising(#[from] IsingError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("tolerance violated: {0}")]
    ToleranceViolation(String),
}

#[derive(Debug, Parser)]
#[command(
    name = "ising-kitchen",
    version,
    about = "Harmonic analysis on finite groups"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IsingMethod {
    /// Full 2^n spin sum.
    Brute,
    /// Convolution powers on the two-element group.
    Conv,
    /// Closed form (2cosh β)^n + (2sinh β)^n.
    Closed,
    /// All three plus their maximum pairwise gap.
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print order, exponent and conjugacy classes of a group
    /// (registry name like `s3`, or a JSON file with labels and a table).
    Group { name_or_file: String },
    /// Print the character table of a group.
    Chartable {
        #[arg(long)]
        group: String,
        /// Emit CSV instead of the aligned table.
        #[arg(long)]
        csv: bool,
    },
    /// Fourier-transform a function file into spectral blocks.
    Fourier {
        file: PathBuf,
        /// Registry name overriding the file's own group reference.
        #[arg(long)]
        group: Option<String>,
        /// User-supplied irrep set (JSON) instead of the catalog.
        #[arg(long)]
        irreps: Option<PathBuf>,
    },
    /// Inverse-transform a spectral file back to a function.
    Invert {
        file: PathBuf,
        /// Registry name overriding the file's irreps reference.
        #[arg(long)]
        group: Option<String>,
        /// User-supplied irrep set (JSON) instead of the catalog.
        #[arg(long)]
        irreps: Option<PathBuf>,
    },
    /// Evaluate the n-point Plancherel identity, on seeded random
    /// functions or on explicit function files.
    Plancherel {
        #[arg(long)]
        group: String,
        /// Number of seeded functions in the tuple (ignored with --file).
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Base seed; function i uses seed + i.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Function files forming the tuple (repeatable, ordered).
        #[arg(long)]
        file: Vec<PathBuf>,
    },
    /// Evaluate the periodic 1d Ising partition function.
    Ising {
        /// Inverse temperature; a comma-separated list sweeps it.
        #[arg(long)]
        beta: String,
        /// Node count; `a..b` sweeps the inclusive range.
        #[arg(long)]
        n: String,
        #[arg(long, value_enum, default_value_t = IsingMethod::All)]
        method: IsingMethod,
        /// Emit CSV rows (one per β × n combination).
        #[arg(long)]
        csv: bool,
    },
    /// Run the acceptance suite and print one line per criterion.
    Selftest,
}

/// Tolerances for CLI gating; `ISING_KITCHEN_TOL` overrides the base knob.
fn effective_tolerances() -> Tolerances {
    let mut tol = Tolerances::STANDARD;
    if let Ok(text) = std::env::var("ISING_KITCHEN_TOL") {
        if let Ok(value) = text.trim().parse::<f64>() {
            tol.identity = value;
        }
    }
    tol
}

/// Parse and dispatch; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    let tol = effective_tolerances();
    let outcome = match cli.command {
        Command::Group { name_or_file } => commands::group(&name_or_file, cli.json),
        Command::Chartable { group, csv } => commands::chartable(&group, csv, cli.json),
        Command::Fourier {
            file,
            group,
            irreps,
        } => commands::fourier_cmd(&file, group.as_deref(), irreps.as_deref(), cli.json),
        Command::Invert {
            file,
            group,
            irreps,
        } => commands::invert_cmd(&file, group.as_deref(), irreps.as_deref(), cli.json),
        Command::Plancherel {
            group,
            n,
            seed,
            file,
        } => commands::plancherel_cmd(&group, n, seed, &file, cli.json, &tol),
        Command::Ising {
            beta,
            n,
            method,
            csv,
        } => commands::ising_cmd(&beta, &n, method, csv, cli.json, &tol),
        Command::Selftest => commands::selftest_cmd(cli.json, &tol),
    };
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

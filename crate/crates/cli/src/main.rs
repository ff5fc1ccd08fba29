//! `dirac-osc`: verification suites, phase-space simulation and the
//! entropy/temperature table.

mod output;
mod simulate;
mod table;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;

#[derive(Parser)]
#[command(
    name = "dirac-osc",
    version,
    about = "Oscillator generators, gamma matrices and Gaussian phase space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check commutation tables, isomorphisms and the gamma-product
    /// correspondence.
    Verify(verify::VerifyArgs),
    /// Apply a generator or the two-mode squeeze to the vacuum and report
    /// purity, entropy and areas.
    Simulate(simulate::SimulateArgs),
    /// Entropy, purity and radius over a grid of squeeze parameters (CSV).
    Table(table::TableArgs),
}

#[derive(Args, Clone)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failure that is the caller's fault (exit 2) or a runtime failure (exit 1).
#[derive(Debug)]
enum CliError {
    Usage(String),
    Runtime(String),
}

impl From<dirac_osc::Error> for CliError {
    fn from(e: dirac_osc::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => verify::run(&args),
        Command::Simulate(args) => simulate::run(&args),
        Command::Table(args) => table::run(&args),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

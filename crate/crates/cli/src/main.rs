//! `sgi` — find subgraphs of interest in transactional multigraphs.
//!
//! Subcommands: `generate` builds a seeded synthetic benchmark, `detect`
//! runs one of the two detection approaches, `evaluate` scores predictions
//! against ground truth, and `features` dumps feature vectors as CSV.
//!
//! Exit codes: 0 on success, 1 on configuration errors (bad flags, missing
//! or invalid files), 2 on runtime failures.

mod commands;
mod config;
mod error;
mod fsio;
mod logging;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "sgi",
    version,
    about = "Subgraph-of-interest detection toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a synthetic benchmark with planted groups.
    Generate(commands::GenerateArgs),
    /// Detect subgraphs of interest from training samples.
    Detect(commands::DetectArgs),
    /// Score a prediction file against ground truth.
    Evaluate(commands::EvaluateArgs),
    /// Dump feature vectors as CSV.
    Features(commands::FeaturesArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Generate(args) => commands::generate(args),
        Command::Detect(args) => commands::detect(args),
        Command::Evaluate(args) => commands::evaluate_cmd(args),
        Command::Features(args) => commands::features(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

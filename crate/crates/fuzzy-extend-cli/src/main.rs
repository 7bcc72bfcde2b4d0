//! `fuzzy-extend`: validate fuzzy metric structures, extend fuzzy Lipschitz
//! maps from a sample subset to the whole space, and summarize run reports.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fuzzy_extend_cli::commands::{self, RunOptions};

#[derive(Parser)]
#[command(
    name = "fuzzy-extend",
    version,
    about = "McShane-Whitney extension of fuzzy Lipschitz maps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the configured space, codomain and adjunction laws
    Validate(RunArgs),
    /// Extend the sampled map to every point and verify the output
    Extend(RunArgs),
    /// Print a human-readable summary of a report file
    Report {
        /// Path to a report JSON produced by validate or extend
        report: PathBuf,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Run configuration (JSON document)
    #[arg(long)]
    config: PathBuf,
    /// Directory for the report and the extension table
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Absolute tolerance for inequality checks
    #[arg(long, env = "FUZZY_EXTEND_TOLERANCE", default_value_t = 1e-9)]
    tolerance: f64,
    /// Seed for the randomized validation grids
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl RunArgs {
    fn options(&self) -> RunOptions {
        RunOptions {
            config_path: self.config.clone(),
            out_dir: self.out.clone(),
            tolerance: self.tolerance,
            seed: self.seed,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Validate(args) => commands::cmd_validate(&args.options()),
        Command::Extend(args) => commands::cmd_extend(&args.options()),
        Command::Report { report } => commands::cmd_report(report),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

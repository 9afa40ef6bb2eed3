//! `bqlong`: biquandle verification, colorings and longitude invariants of
//! long virtual knots from the command line.
//!
//! Exit codes: 0 success or EQUAL, 1 a failed check or DIFFERENT, 2 a usage
//! or parse error.

mod commands;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;

use bqlong::harness::HarnessConfig;
use clap::{Parser, Subcommand, ValueEnum};

use commands::{parse_code, Outcome};
use source::{Context, SourceArgs};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "bqlong",
    version,
    about = "Biquandle colorings and longitude invariants of long virtual knots"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the switch, birack and biquandle axioms
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        /// Also write the operation tables to FILE
        #[arg(long, value_name = "FILE")]
        emit_table: Option<PathBuf>,
    },
    /// Count (and optionally list) the colorings of a Gauss code
    Colorings {
        /// Signed Gauss code, e.g. "U1+ U2+ O1+ O2+"
        code: String,
        #[command(flatten)]
        source: SourceArgs,
        /// Fix the color of the initial arc
        #[arg(long)]
        initial: Option<String>,
        /// Print every coloring
        #[arg(long)]
        list: bool,
    },
    /// Longitude family for a fixed initial color, or its sum at --apply
    Longitude {
        code: String,
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        initial: String,
        #[arg(long)]
        apply: Option<String>,
    },
    /// Compare the longitude invariants of two codes
    Compare {
        first: String,
        second: String,
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        initial: String,
        #[arg(long)]
        apply: Option<String>,
    },
    /// Random Reidemeister moves plus the R3 fixtures; checks invariance
    Moves {
        code: String,
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Stop inserting crossings beyond this size
        #[arg(long, default_value_t = 6)]
        max_crossings: usize,
    },
    /// The long virtual trefoil against its reverse over Wada S5
    PaperExample {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        initial: Option<String>,
        #[arg(long)]
        apply: Option<String>,
    },
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Verify { source, emit_table } => commands::verify(&source, emit_table.as_deref()),
        Command::Colorings {
            code,
            source,
            initial,
            list,
        } => {
            let code = parse_code(&code)?;
            let ctx = Context::load(&source)?;
            commands::colorings(&ctx, &code, initial.as_deref(), list)
        }
        Command::Longitude {
            code,
            source,
            initial,
            apply,
        } => {
            let code = parse_code(&code)?;
            let ctx = Context::load(&source)?;
            commands::longitude(&ctx, &code, &initial, apply.as_deref())
        }
        Command::Compare {
            first,
            second,
            source,
            initial,
            apply,
        } => {
            let (first, second) = (parse_code(&first)?, parse_code(&second)?);
            let ctx = Context::load(&source)?;
            commands::compare(&ctx, &first, &second, &initial, apply.as_deref())
        }
        Command::Moves {
            code,
            source,
            trials,
            seed,
            max_crossings,
        } => {
            let code = parse_code(&code)?;
            let ctx = Context::load(&source)?;
            let config = HarnessConfig {
                trials: trials as usize,
                seed,
                max_crossings,
                ..HarnessConfig::default()
            };
            commands::moves(&ctx, &code, &config)
        }
        Command::PaperExample {
            source,
            initial,
            apply,
        } => commands::paper_example(&source, initial.as_deref(), apply.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            match cli.format {
                Format::Text => print!("{}", outcome.text),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome.json).expect("values serialize")
                ),
            }
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

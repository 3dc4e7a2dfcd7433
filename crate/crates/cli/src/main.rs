//! `ribbonq`: exact calculator for ribbon twists, fusion decompositions,
//! braiding operators, and braid-word matrices over quantum-group module
//! categories.
//!
//! Exit codes: 0 success / all checks pass, 1 usage error, 2 computation
//! error, 3 verification failure.

mod commands;
mod report;

use clap::{Args, Parser, Subcommand};
use ribbonq_core::Error;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ribbonq",
    version,
    about = "Exact braid representations from quantum-group braiding",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// Lie type: A, B, or D
    #[arg(long = "type", value_name = "TYPE", default_value = "A")]
    lie_type: String,

    /// Rank of the root system
    #[arg(long, default_value_t = 1)]
    rank: usize,

    /// Highest weight, comma-separated fundamental-weight coordinates
    #[arg(long, value_name = "COORDS", allow_hyphen_values = true)]
    weight: Option<String>,

    /// Strand count for braid operations
    #[arg(long, default_value_t = 3)]
    strands: usize,

    /// Braid word: whitespace-separated signed generator indices
    #[arg(long, value_name = "WORD", allow_hyphen_values = true)]
    word: Option<String>,

    /// Module file to load instead of a built-in sl2 module
    #[arg(long, value_name = "FILE")]
    module_file: Option<std::path::PathBuf>,

    /// Truncation order for series expansions
    #[arg(long, default_value_t = 2)]
    order: usize,

    /// Dimension cap for fusion computations
    #[arg(long, default_value_t = 1024)]
    cap: usize,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Structured)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Twist scalar q^(<w, w + 2 rho>) of a simple module
    Twist(CommonArgs),
    /// Tensor-square fusion decomposition
    Fuse(CommonArgs),
    /// Braiding operator on the tensor square, with spectrum and certification
    Rmatrix(CommonArgs),
    /// Evaluate a braid word in the certified representation
    Braid(CommonArgs),
    /// Run the full identity verification suite for an instance
    Verify(CommonArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help/version are not usage errors
            use clap::error::ErrorKind;
            let kind = err.kind();
            let _ = err.print();
            return if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };

    let outcome = match &cli.command {
        Command::Twist(args) => commands::cmd_twist(args),
        Command::Fuse(args) => commands::cmd_fuse(args),
        Command::Rmatrix(args) => commands::cmd_rmatrix(args),
        Command::Braid(args) => commands::cmd_braid(args),
        Command::Verify(args) => commands::cmd_verify(args),
    };

    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        // configuration the user got wrong
        Error::UnsupportedCartan(_)
        | Error::Parse(_)
        | Error::GeneratorOutOfRange { .. }
        | Error::StrandMismatch { .. }
        | Error::NonDominantWeight(_)
        | Error::DimensionMismatch(_) => 1,
        // verification failures
        Error::RelationFailure(_) | Error::CertificationFailure(_) => 3,
        // everything else is a computation error
        _ => 2,
    }
}

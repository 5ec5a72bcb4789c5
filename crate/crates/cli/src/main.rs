//! `zecap`: bounds, constructions and exact searches for zero-error codes on
//! channels with memory, from the command line.
//!
//! Exit status is 0 on success, 1 when the input is rejected and 2 when a
//! verification (code validity, unique decodability) fails.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use zecap::oracle::DEFAULT_BUDGET;
use zecap::Word;

use output::Format;

#[derive(Parser)]
#[command(name = "zecap", version, about = "Zero-error codes for channels with memory")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
pub(crate) enum Command {
    /// Quasi 2-code lower bound for the one-edge graph G(u, v).
    Bound {
        #[arg(long)]
        u: Word,
        #[arg(long)]
        v: Word,
        /// Alphabet size; defaults to one more than the largest symbol.
        #[arg(long)]
        q: Option<usize>,
    },
    /// Group all one-edge graphs on X^{m+1} into interchangeability classes.
    Classify {
        #[arg(long, default_value_t = 2)]
        q: usize,
        #[arg(long)]
        m: usize,
    },
    /// Emit the quasi 2-code of word length n for G(u, v) and check it.
    Construct {
        #[arg(long)]
        u: Word,
        #[arg(long)]
        v: Word,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: Option<usize>,
        /// Write the code to this file, one word per line.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact maximum code of length n for a graph file.
    Search {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n: usize,
        /// Branch-and-bound node budget.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Check that the words of a code file are pairwise distinguishable.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        code: PathBuf,
    },
    /// Unique decodability and characteristic rate of a generator file.
    Rate {
        #[arg(long)]
        generators: PathBuf,
    },
    /// The eleven classes of binary one-edge graphs with m = 2, with bounds
    /// and known capacities.
    Table1,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match commands::run(&cli.command, cli.format) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            match outcome.failure {
                Some(reason) => {
                    eprintln!("verification failed: {reason}");
                    ExitCode::from(2)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

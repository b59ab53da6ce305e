//! `setreal`: decide additive Set-realizability of quiver representations
//! over finite fields, and build, decompose and ingest the inputs.

mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use commands::{Cli, Outcome};

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    let start = Instant::now();
    let result = commands::run(cli, argv[1..].to_vec());
    let elapsed = start.elapsed();
    match result {
        Ok(Outcome::Yes) => {
            eprintln!("elapsed {elapsed:.2?}");
            ExitCode::from(0)
        }
        Ok(Outcome::No) => {
            eprintln!("elapsed {elapsed:.2?}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

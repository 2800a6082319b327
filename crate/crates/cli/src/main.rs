//! `genent`: compute generalized entropies from files, run the axiom
//! checks and sweep family parameters.
//!
//! Exit codes: 0 success, 1 invalid input or parameters, 2 a `check` whose
//! verdict differs from the expected one.

mod args;
mod commands;
mod output;
mod range;

use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}: {}", err.name(), err);
            ExitCode::from(1)
        }
    }
}

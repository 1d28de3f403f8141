//! `composet`: command-line access to zeta and Möbius computations over
//! generalized subword orders.
//!
//! Exit status: 0 on success, 1 for usage errors, 2 for domain errors and
//! for `verify` reports with a failing line.

mod args;
mod commands;
mod input;

use std::fmt;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, OutputMode};

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(composet::Error),
}

impl From<composet::Error> for Failure {
    fn from(e: composet::Error) -> Self {
        Failure::Domain(e)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => write!(f, "usage error: {msg}"),
            Failure::Domain(e) => write!(f, "error: {e}"),
        }
    }
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
    match commands::run(&cli) {
        Ok(out) => {
            match cli.output {
                OutputMode::Text => println!("{}", out.text),
                OutputMode::Json => println!("{}", out.json),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(failure) => {
            eprintln!("{failure}");
            match failure {
                Failure::Usage(_) => ExitCode::from(1),
                Failure::Domain(_) => ExitCode::from(2),
            }
        }
    }
}

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;

use args::{Cli, Output};

/// Failure reported to the user as `{code, message}`.
#[derive(Debug, Serialize)]
pub struct Failure {
    pub code: String,
    pub message: String,
}

impl From<distclust::Error> for Failure {
    fn from(e: distclust::Error) -> Self {
        Failure {
            code: e.code().to_string(),
            message: e.to_string(),
        }
    }
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: "UsageError".into(),
            message: message.into(),
        }
    }
}

fn wants_json() -> bool {
    let args: Vec<String> = std::env::args().collect();
    args.iter().any(|a| a == "--output=json") || args.windows(2).any(|w| w[0] == "--output" && w[1] == "json")
}

fn report(failure: &Failure, output: Output) {
    match output {
        Output::Json => println!("{}", serde_json::to_string(failure).expect("failures serialize")),
        Output::Table => eprintln!("error[{}]: {}", failure.code, failure.message),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() && wants_json() => {
            report(&Failure::usage(e.to_string().trim()), Output::Json);
            return ExitCode::from(2);
        }
        Err(e) => e.exit(),
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            report(&Failure::usage(format!("cannot start {threads} threads: {e}")), cli.output);
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(text) => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            report(&failure, cli.output);
            ExitCode::FAILURE
        }
    }
}

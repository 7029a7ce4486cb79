//! `feq-lab`: tables, identity verification and p-adic experiments.
//!
//! Exit codes: 0 when every expectation is met, 1 on a mathematical mismatch,
//! 2 on a configuration or output error.

mod args;
mod config;
mod manifest;
mod output;
mod padic;
mod table;
mod verify;

use std::process::ExitCode;

use clap::Parser;
use thiserror::Error;

use args::Cli;
use config::{CommandConfig, RunConfig};

/// Caps the worker pool used by `verify`.
const THREADS_VAR: &str = "FEQ_LAB_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("output error: {0}")]
    Output(String),
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(text) = std::env::var(THREADS_VAR) {
        let n: usize = text
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::Config(format!("{THREADS_VAR} = {text:?} is not a positive integer")))?;
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| CliError::Config(e.to_string()))
}

fn run(config: RunConfig) -> Result<bool, CliError> {
    let (bytes, ok) = match &config.command {
        CommandConfig::Table { kind, n_max } => (table::run(*kind, *n_max, config.format)?, true),
        CommandConfig::Verify { suite, n_max, w_max, order, q_samples } => {
            let pool = thread_pool()?;
            pool.install(|| verify::run(*suite, *n_max, *w_max, *order, q_samples, config.format))?
        }
        CommandConfig::Padic { ctx, q, n_max, level_max } => padic::run(ctx, q, *n_max, *level_max, config.format)?,
    };
    output::write(&bytes, config.output.as_deref())?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match RunConfig::from_command(cli.command).and_then(run) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("feq-lab: {e}");
            ExitCode::from(2)
        }
    }
}

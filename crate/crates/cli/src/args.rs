use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "feq-lab", version, about = "Exact Frobenius-Euler tables, identity verification and p-adic moments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Frobenius-Euler numbers, polynomials and alternating power sums.
    Table(TableArgs),
    /// Run an identity suite over a parameter grid and compare with the
    /// expected-status manifest.
    Verify(VerifyArgs),
    /// Fermionic Riemann sums in Z/p^M and their stabilization.
    Padic(PadicArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Numbers,
    Polynomials,
    Sums,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Moment and ratio identities plus the printed symmetry statements.
    Paper,
    /// The corrected symmetry and multiplication identities.
    Corrected,
    All,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum, default_value = "all")]
    pub kind: TableKind,
    #[arg(long, default_value_t = 4, allow_negative_numbers = true)]
    pub n_max: i64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    #[arg(long, default_value_t = 4, allow_negative_numbers = true)]
    pub n_max: i64,
    /// Largest scale; the grid uses the odd values up to it.
    #[arg(long, default_value_t = 5, allow_negative_numbers = true)]
    pub w_max: i64,
    /// Series truncation order for the ratio identities.
    #[arg(short = 'T', long = "order", default_value_t = 8, allow_negative_numbers = true)]
    pub order: i64,
    /// Comma-separated rational points for extra specializations, e.g. `2,1/2`.
    #[arg(long, value_delimiter = ',', default_value = "2", allow_negative_numbers = true)]
    pub q_samples: Vec<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct PadicArgs {
    #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
    pub p: i64,
    /// Rational q with q = 1 mod p; defaults to 1 + p.
    #[arg(long, allow_negative_numbers = true)]
    pub q: Option<String>,
    /// Work modulo p^precision.
    #[arg(long, default_value_t = 4, allow_negative_numbers = true)]
    pub precision: i64,
    #[arg(long, default_value_t = 6, allow_negative_numbers = true)]
    pub n_max: i64,
    /// Largest level N computed; a moment counts as stabilized once its sums stay constant up to this level.
    #[arg(long, default_value_t = 8, allow_negative_numbers = true)]
    pub level_max: i64,
    #[command(flatten)]
    pub output: OutputArgs,
}

//! `cyclolc`: generate generalized cyclotomic sequences of period `2p^m`,
//! measure their linear complexity, and verify the predicted values.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "cyclolc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one period of a sequence.
    Gen(GenArgs),
    /// Measure and classify the linear complexity of a sequence.
    Lc(LcArgs),
    /// Sweep a parameter grid or replay the reference examples and tables.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct ParamArgs {
    /// Odd prime p.
    #[arg(long)]
    p: u64,
    /// Exponent m >= 1.
    #[arg(long)]
    m: u32,
    /// f = 2^r dividing p - 1 (give exactly one of --f and --e).
    #[arg(long)]
    f: Option<u64>,
    /// e = (p - 1) / f.
    #[arg(long)]
    e: Option<u64>,
    /// Shift b; reduced modulo d_m.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    b: i64,
    /// Odd common primitive root; the smallest valid one when omitted.
    #[arg(long)]
    g: Option<u64>,
    /// Use the modified sequence instead of the standard one.
    #[arg(long)]
    modified: bool,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Packed binary output: 8-byte little-endian length, then LSB-first bits.
    #[arg(long)]
    binary: bool,
    /// Output file (default: standard output).
    #[arg(long, value_name = "PATH")]
    out: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
struct LcArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Also count zeros of the support polynomial at p^m-th roots of unity.
    #[arg(long)]
    field_check: bool,
    /// One JSON document instead of text.
    #[arg(long)]
    json: bool,
    #[arg(long, value_name = "PATH")]
    out: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Primes to sweep (comma separated).
    #[arg(long, value_delimiter = ',')]
    p: Vec<u64>,
    /// Exponents to sweep (comma separated).
    #[arg(long, value_delimiter = ',')]
    m: Vec<u32>,
    /// Values of f to sweep (comma separated).
    #[arg(long, value_delimiter = ',')]
    f: Vec<u64>,
    /// Values of e to sweep (comma separated).
    #[arg(long, value_delimiter = ',')]
    e: Vec<u64>,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    b: i64,
    #[arg(long)]
    g: Option<u64>,
    #[arg(long)]
    modified: bool,
    /// Sweep every b in [0, d_m).
    #[arg(long)]
    all_b: bool,
    #[arg(long)]
    field_check: bool,
    #[arg(long)]
    json: bool,
    /// Replay both reference tables.
    #[arg(long)]
    paper_tables: bool,
    /// Replay the reference example listings.
    #[arg(long)]
    paper_examples: bool,
    /// Maximum number of grid analyses.
    #[arg(long, default_value_t = 10_000)]
    cap: usize,
    #[arg(long, value_name = "PATH")]
    out: Option<std::path::PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = match cli.command {
        Command::Gen(args) => commands::gen(args),
        Command::Lc(args) => commands::lc(args),
        Command::Verify(args) => commands::verify(args),
    };
    ExitCode::from(status)
}

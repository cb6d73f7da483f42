//! `qrv`: build quadratic residue codes over F_p + vF_p, enumerate their
//! weights, compute certified minimum distances, and re-derive the reference
//! tables.
//!
//! Exit codes: 0 on success, 2 for an invalid configuration (the message
//! names the violated precondition), 3 when a computation exceeds its
//! budget, 4 when a structural check fails.

mod commands;
mod table;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qrv_core::Error;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "qrv",
    version,
    about = "quadratic residue codes over F_p + vF_p"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a code: parameters, idempotent, generator matrix, cardinality
    Construct(JobArgs),
    /// Residue sets, idempotents and cardinalities of a (p, q) family
    Describe(InstanceArgs),
    /// Exact weight enumerator of a code
    Wenum(JobArgs),
    /// Certified minimum distance of a code
    Mindist(JobArgs),
    /// Structural checks for one (p, q) instance
    Verify(InstanceArgs),
    /// Recompute a reference table
    Table(TableArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CodeSel {
    Q1,
    Q2,
    Q1p,
    Q2p,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AugmentSel {
    /// all-v vector
    V,
    /// all-(1+v) vector
    #[value(name = "1v")]
    OnePlusV,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WeightSel {
    Hamming,
    Lee,
    Bachoc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategySel {
    Auto,
    Exhaustive,
    Infoset,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Args)]
pub struct JobArgs {
    #[arg(short)]
    p: u32,
    #[arg(short)]
    q: u32,
    /// Which of the four codes of the family
    #[arg(long, value_enum, default_value = "q1")]
    code: CodeSel,
    /// Extend by the column at infinity (q1/q2 only)
    #[arg(long)]
    extend: bool,
    /// Augment a small code by a constant vector (q1p/q2p, p = 2, q = 1 mod 8)
    #[arg(long, value_enum)]
    augment: Option<AugmentSel>,
    /// Work with the Gray image over F_p instead of the ring code
    #[arg(long)]
    gray: bool,
    #[arg(long, value_enum, default_value = "lee")]
    weight: WeightSel,
    #[arg(long, value_enum, default_value = "auto")]
    strategy: StrategySel,
    /// Maximum number of codewords an enumeration or search may visit
    #[arg(long, default_value_t = 1u64 << 28)]
    budget: u64,
    /// Worker threads (0 = all available parallelism)
    #[arg(long, default_value_t = 0)]
    workers: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the result here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
pub struct InstanceArgs {
    #[arg(short)]
    p: u32,
    #[arg(short)]
    q: u32,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Tier {
    #[default]
    Fast,
    Full,
}

#[derive(Args)]
pub struct TableArgs {
    /// Table number: 1 (p = 3, 5, 7) or 2 (p = 11 .. 29)
    #[arg(long)]
    which: u8,
    #[arg(long, value_enum, default_value = "fast")]
    tier: Tier,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Maps library errors onto the documented exit codes.
fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::BudgetExceeded { .. } => 3,
        Error::Internal(_) => 4,
        _ => 2,
    }
}

pub enum CmdError {
    Config(Error),
    /// A structural check failed: exit 4.
    CheckFailed(String),
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        CmdError::Config(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Construct(args) => commands::construct(&args),
        Cmd::Describe(args) => commands::describe(&args),
        Cmd::Wenum(args) => commands::wenum(&args),
        Cmd::Mindist(args) => commands::mindist(&args),
        Cmd::Verify(args) => commands::verify(&args),
        Cmd::Table(args) => table::run(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CmdError::Config(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
        Err(CmdError::CheckFailed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(4)
        }
    }
}

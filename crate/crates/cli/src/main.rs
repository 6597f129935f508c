mod commands;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use affine_schur::scalar::{QuantumParam, RatFunc};
use affine_schur::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

pub const DEFAULT_SEED: u64 = 20_240_917;

/// Exact affine Schur-Weyl computations: Drinfeld data of multisegments,
/// Schur-image dimensions and verification suites.
#[derive(Parser, Debug)]
#[command(name = "affine-schur", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print compact JSON instead of a readable summary.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Work over ℚ with v specialized to this rational number instead of ℚ(v).
    #[arg(long = "v-rational", global = true, value_name = "P/Q")]
    pub v_rational: Option<String>,
    /// Seed for the randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Args, Debug, Clone)]
pub struct Sizes {
    /// Rank of gl_n.
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// Tensor degree; inferred from the input where there is one.
    #[arg(long)]
    pub r: Option<usize>,
    /// Larger rank for the padding and e-projection comparisons.
    #[arg(long = "N")]
    pub big_n: Option<usize>,
    /// Largest t for the central generators z_t^±.
    #[arg(long, default_value_t = 2)]
    pub tmax: usize,
    /// Tensor index window `lo:hi` for the relation suites (default `-n:2n`).
    #[arg(long, allow_hyphen_values = true, value_parser = parse_window)]
    pub window: Option<(i64, i64)>,
    /// JSON file holding a list of segment centers.
    #[arg(long, value_name = "FILE")]
    pub grid: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Map a multisegment to its dominant tuple, or a dominant tuple back.
    Dmap {
        #[command(flatten)]
        sizes: Sizes,
        /// `{"multisegment": [...]}` or `{"tuple": [[...], ...]}`, inline or `@file`.
        input: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[command(flatten)]
        sizes: Sizes,
    },
    /// Dimension, weights and highest-weight data of a Schur image.
    Dims {
        #[command(flatten)]
        sizes: Sizes,
        /// `{"multisegment": [...]}`, inline or `@file`.
        input: String,
    },
    /// Enumerate compositions, partitions and multisegments.
    Enum {
        #[command(flatten)]
        sizes: Sizes,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    HeckeRelations,
    Bimodule,
    Rogawski,
    Factorization,
    Bijection,
    CentralCharacter,
    Gfunctor,
    All,
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected lo:hi")?;
    let lo: i64 = lo.trim().parse().map_err(|e| format!("bad lower bound: {e}"))?;
    let hi: i64 = hi.trim().parse().map_err(|e| format!("bad upper bound: {e}"))?;
    if lo > hi {
        return Err("lower bound exceeds upper bound".into());
    }
    Ok((lo, hi))
}

/// Process exit statuses.
pub mod exit {
    pub const OK: u8 = 0;
    pub const CHECK_FAILED: u8 = 1;
    pub const INVALID_INPUT: u8 = 2;
    pub const DOMAIN: u8 = 3;
    pub const RESOURCE: u8 = 4;
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InvalidInput(_) => exit::INVALID_INPUT,
        Error::Domain(_) => exit::DOMAIN,
        Error::Resource(_) => exit::RESOURCE,
        Error::NotEigenvector(_) | Error::NotClosed(_) => exit::CHECK_FAILED,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.v_rational {
        None => commands::run(&cli, &QuantumParam::<RatFunc>::generic(), "v"),
        Some(text) => text
            .trim()
            .parse::<BigRational>()
            .map_err(|e| Error::Parse(format!("--v-rational {text}: {e}")))
            .and_then(QuantumParam::specialized)
            .and_then(|q| commands::run(&cli, &q, text.trim())),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

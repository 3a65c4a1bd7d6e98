//! `pfsum`: run the identity suite, evaluate single series, print recursion
//! tables and probe the higher-order differential relation.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;

#[derive(Debug, Parser)]
#[command(name = "pfsum", version, about = "High-precision partial fraction summation checks")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Significant decimal digits of working precision.
    #[arg(long, global = true, env = "PFSUM_DIGITS", default_value_t = 50)]
    pub digits: u32,
    /// Target absolute residual.
    #[arg(long, global = true, default_value_t = 1e-20)]
    pub tol: f64,
    /// Hard cap on summation terms.
    #[arg(long = "n-max", global = true, default_value_t = 20_000)]
    pub n_max: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<std::path::PathBuf>,
    /// Seed for the random parameter draws of `verify`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Report wall-clock times (otherwise zero, keeping output reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run identity checks at their default parameters plus three random draws.
    Verify {
        /// Identity ids, comma separated or repeated; `all` selects the catalog.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<String>,
    },
    /// Evaluate one series.
    Compute {
        /// hurwitz-pfs, hurwitz-direct, zeta3-apery, beta, beta-h, zeta-ah,
        /// pfs-coeff or taylor-coeff.
        series: String,
        #[command(flatten)]
        params: SeriesParams,
    },
    /// Print both sides of a recursion over a range of indices.
    Table {
        /// zeta-even-recursion, zetaAH, betaH or hurwitz-recursion.
        table: String,
        /// Range `lo..hi` (inclusive) for m-indexed tables.
        #[arg(long)]
        m: Option<String>,
        /// Range `lo..hi` (inclusive) for n-indexed tables.
        #[arg(long)]
        n: Option<String>,
        #[arg(long, default_value = "3/4")]
        a: String,
    },
    /// Compare F^(L)/F with its pole expansion at sample points.
    Probe {
        #[arg(long = "L", default_value_t = 3)]
        order_l: u32,
        #[arg(long, default_value = "1")]
        a: String,
        /// Number of sample points inside |z| < |a|.
        #[arg(long, default_value_t = 8)]
        samples: usize,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SeriesParams {
    #[arg(long)]
    pub m: Option<u32>,
    /// Complex parameter, `re`, `re+imi` or fractions such as `3/4`.
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long)]
    pub b: Option<String>,
    #[arg(long = "J")]
    pub j: Option<u32>,
    #[arg(long)]
    pub s: Option<u32>,
    /// Sequence family for coefficient series: hurwitz, interleaved or odd-even.
    #[arg(long)]
    pub spec: Option<String>,
    /// Step of an interleaved family.
    #[arg(long)]
    pub step: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("pfsum: {e}");
            ExitCode::from(commands::EXIT_USAGE)
        }
    }
}

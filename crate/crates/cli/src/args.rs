use std::ops::RangeInclusive;
use std::path::PathBuf;

use circulant_core::DEFAULT_TERM_BUDGET;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "circulant",
    version,
    about = "Exact expansion of circulant determinants and permanents"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; defaults to csv for `count` and `scan`, json otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Maximum number of monomials an expansion may touch.
    #[arg(long, global = true, env = "CIRCULANT_BUDGET", default_value_t = DEFAULT_TERM_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,

    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: Option<u16>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand det(Circ(x_0, …, x_{N-1})), or det(A^d_alpha) with --d/--alpha.
    Det(Matrix),
    /// Expand the permanent of Circ(x_0, …, x_{N-1}).
    Per(Size),
    /// Tabulate d(N) and p(N).
    Count(CountArgs),
    /// Single determinant coefficient, computed without the full expansion.
    Coeff(CoeffArgs),
    /// Vanishing determinant coefficient for N not a prime power.
    Witness(Size),
    /// GT-system report for the action with order d and exponents alpha.
    Gt(Action),
    /// Minimality scans over standard or three-variable actions.
    Scan(ScanArgs),
}

#[derive(Debug, Args)]
pub struct Size {
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = true)]
pub struct Matrix {
    #[arg(long, conflicts_with_all = ["d", "alpha"])]
    pub n: Option<usize>,
    #[arg(long, requires = "alpha")]
    pub d: Option<usize>,
    #[arg(long, value_delimiter = ',', requires = "d")]
    pub alpha: Option<Vec<u32>>,
}

#[derive(Debug, Args)]
pub struct Action {
    #[arg(long)]
    pub d: usize,
    #[arg(long, value_delimiter = ',', required = true)]
    pub alpha: Vec<u32>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct CountArgs {
    #[arg(long)]
    pub n: Option<usize>,
    /// Inclusive range `A..B`.
    #[arg(long, value_parser = parse_range)]
    pub n_range: Option<RangeInclusive<usize>>,
}

#[derive(Debug, Args)]
pub struct CoeffArgs {
    #[command(flatten)]
    pub matrix: Matrix,
    #[arg(long, value_delimiter = ',', required = true)]
    pub multiset: Vec<u16>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ScanArgs {
    /// Standard actions for N = 3..=N_MAX.
    #[arg(long, value_name = "N_MAX")]
    pub theorem49: Option<usize>,
    /// Actions (0, n, m) of order d for d = 3..=D_MAX.
    #[arg(long, value_name = "D_MAX")]
    pub conjecture: Option<usize>,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let a: usize = a.trim().parse().map_err(|e| format!("bad range start {a:?}: {e}"))?;
    let b: usize = b.trim().parse().map_err(|e| format!("bad range end {b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok(a..=b)
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use iasi_core::oracle::{DEFAULT_BUDGET, DEFAULT_MAX_LABEL_SIZE, DEFAULT_UNIVERSE_MAX};

/// Construct, verify and decide uniform integer additive set-indexers.
///
/// Exit codes: 0 success / exists, 1 verified false / does not exist,
/// 2 input error, 3 search budget exhausted.
#[derive(Debug, Parser)]
#[command(name = "iasi", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    JsonLines,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a labeling against every IASI predicate.
    Verify(VerifyArgs),
    /// Build a labeling with one of the constructions.
    Construct(ConstructArgs),
    /// Decide whether a (weakly) k-uniform IASI exists.
    Decide(DecideArgs),
    /// Exhaustively search a bounded label universe.
    Search(SearchArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Edge-list file (`u v` per line, optional `p <n>` header).
    #[arg(short, long, value_name = "FILE")]
    pub graph: Option<PathBuf>,

    /// Built-in family: path:N, cycle:N, complete:N, empty:N,
    /// complete-bipartite:M,N or tree:<parents> (e.g. tree:-,0,0,1,1).
    #[arg(long, value_name = "SPEC")]
    pub family: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub source: GraphSource,

    /// Labeling file (`v: {a,b,c}` per line).
    #[arg(short, long, value_name = "FILE")]
    pub labeling: PathBuf,

    /// Exit 1 unless the labeling is a k-uniform IASI.
    #[arg(long, value_name = "K")]
    pub expect_uniform: Option<usize>,

    /// Exit 1 unless the labeling is a weakly k-uniform IASI.
    #[arg(long, value_name = "K")]
    pub expect_weakly: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructMode {
    Weakly,
    Bipartite,
    Odd,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub mode: ConstructMode,

    #[command(flatten)]
    pub source: GraphSource,

    /// Target edge label size.
    #[arg(long)]
    pub k: Option<usize>,

    /// Label length on the left side (every vertex in odd mode).
    #[arg(long)]
    pub m: Option<usize>,

    /// Label length on the right side (bipartite mode).
    #[arg(long)]
    pub n: Option<usize>,

    /// Common difference of the label progressions.
    #[arg(long)]
    pub d: Option<u64>,
}

#[derive(Debug, Args)]
pub struct DecideArgs {
    #[command(flatten)]
    pub source: GraphSource,

    #[arg(long)]
    pub k: usize,

    /// Decide weak uniformity instead.
    #[arg(long)]
    pub weakly: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchModeArg {
    Uniform,
    Weakly,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(value_enum)]
    pub mode: SearchModeArg,

    #[command(flatten)]
    pub source: GraphSource,

    #[arg(long)]
    pub k: usize,

    /// Labels are subsets of {0..=U}.
    #[arg(long, value_name = "U", default_value_t = DEFAULT_UNIVERSE_MAX)]
    pub universe: u32,

    /// Largest label size tried in uniform mode.
    #[arg(long, value_name = "S", default_value_t = DEFAULT_MAX_LABEL_SIZE)]
    pub max_size: usize,

    /// Maximum candidate checks before aborting.
    #[arg(long, value_name = "B", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,

    /// List up to N labelings instead of the first one.
    #[arg(long, value_name = "N")]
    pub all: Option<usize>,
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Parser)]
#[command(
    name = "increg",
    version,
    about = "Limit regularity of Inc-invariant chains of edge ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Prime characteristic of the coefficient field.
    #[arg(long, global = true, default_value_t = 2)]
    pub field: u32,
    /// Largest number of non-isolated vertices handed to the oracle.
    #[arg(long = "oracle-cap", global = true, default_value_t = increg::DEFAULT_ORACLE_CAP)]
    pub oracle_cap: usize,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Golden,
    Properties,
    All,
}

/// `--n` or `--from/--to`.
#[derive(Debug, Clone, Args)]
pub struct Range {
    #[arg(long, conflicts_with_all = ["from", "to"])]
    pub n: Option<usize>,
    #[arg(long, requires = "to")]
    pub from: Option<usize>,
    #[arg(long, requires = "from")]
    pub to: Option<usize>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Verb {
    /// Print the generators of I_n as edges of G_n.
    Expand {
        spec: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Decide the limit regularity and the index from which it holds.
    Classify { spec: PathBuf },
    /// Induced matching number of G_n with a witness.
    Indmatch {
        spec: PathBuf,
        #[command(flatten)]
        range: Range,
    },
    /// Regularity of I_n: exact oracle under the cap, certified bounds above it.
    Reg {
        spec: PathBuf,
        #[command(flatten)]
        range: Range,
    },
    /// Build the induced anticycle in G_{n+r} and print its trace.
    Anticycle {
        spec: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Quasi-saturation, q-invariant and the derived chain.
    Quasisat { spec: PathBuf },
    /// Compare oracle values on a range of n with the classifier verdict.
    Sweep {
        spec: PathBuf,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Run the bundled verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use double_wedge::algorithms::Algorithm;

#[derive(Parser, Debug)]
#[command(
    name = "dwedge",
    version,
    about = "Double-wedge intersections and segment stabbing"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Intersect the wedges of an instance file.
    Intersect {
        #[command(flatten)]
        io: InOut,
        #[arg(long, value_enum, default_value_t = AlgoArg::Auto)]
        algo: AlgoArg,
        /// Also write an SVG of the arrangement with the intersection filled.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Report one point in all wedges, or that there is none.
    Decide {
        #[command(flatten)]
        io: InOut,
    },
    /// Find a line meeting every `stab` segment and missing every `avoid` one.
    Stab {
        #[command(flatten)]
        io: InOut,
    },
    #[command(subcommand)]
    Generate(Generate),
    #[command(subcommand)]
    Verify(Verify),
    /// Draw the arrangement of an instance with its intersection filled.
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        /// Image width in pixels.
        #[arg(long, default_value_t = 800)]
        width: u32,
        /// Decimal digits of emitted coordinates.
        #[arg(long, default_value_t = 3)]
        precision: usize,
    },
    /// Time an algorithm on random instances; prints `n,algorithm,seconds`.
    Bench {
        #[arg(long, value_enum, default_value_t = AlgoArg::Auto)]
        algo: AlgoArg,
        /// `1k..64k` for doubling sizes, or a comma-separated list.
        #[arg(long, default_value = "100..800")]
        sizes: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct InOut {
    /// Input JSON file, `-` for standard input.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Generate {
    /// Grating with k bowties and k hourglasses.
    Grating {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Nonagon piercing family.
    Nonagon {
        #[arg(long, default_value_t = 6)]
        precision: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Stabbing instance encoding a 3SUM instance.
    #[command(name = "sas-from-3sum")]
    SasFrom3sum {
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        numbers: Vec<i64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random wedges with small integer coefficients.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        hourglasses: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Component count of the grating.
    Grating {
        #[arg(long)]
        k: usize,
    },
    /// Piercing properties of the nonagon family.
    Nonagon {
        #[arg(long, default_value_t = 6)]
        precision: u32,
    },
    /// Stabbing answers against brute-force 3SUM.
    Reduction {
        /// A single set to check; otherwise seeded random sets.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        numbers: Option<Vec<i64>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random sets.
        #[arg(long, default_value_t = 50)]
        n: usize,
    },
    /// General algorithm against the brute-force oracle on random instances.
    Oracle {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random instances.
        #[arg(long, default_value_t = 50)]
        n: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgoArg {
    Auto,
    Bowtie,
    General,
    Parameterized,
    Oracle,
}

impl AlgoArg {
    pub fn algorithm(self) -> Option<Algorithm> {
        match self {
            AlgoArg::Auto => None,
            AlgoArg::Bowtie => Some(Algorithm::Bowtie),
            AlgoArg::General => Some(Algorithm::General),
            AlgoArg::Parameterized => Some(Algorithm::Parameterized),
            AlgoArg::Oracle => Some(Algorithm::Oracle),
        }
    }

    pub fn name(self) -> &'static str {
        self.algorithm().map_or("auto", Algorithm::name)
    }
}

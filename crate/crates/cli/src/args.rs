use clap::{Args, Parser, Subcommand};

use ciqh_core::certifier::DEFAULT_SEED;

#[derive(Debug, Parser)]
#[command(name = "ciqh", version, about = "Semi-simplicity certificates for Fano complete intersections")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the decision flow for one complete intersection
    Certify {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Count lines meeting two general linear spaces
    Lines {
        #[command(flatten)]
        case: CaseArgs,
        /// Index j of the invariant l_j
        #[arg(short = 'j', long, default_value_t = 0)]
        j: u32,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Characteristic polynomial of the operator at the origin
    Charpoly {
        #[command(flatten)]
        case: CaseArgs,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Certify every Fano case in a parameter box
    Sweep {
        #[arg(long, default_value_t = 20)]
        n_max: u32,
        #[arg(long, default_value_t = 5)]
        deg_max: u32,
        #[arg(long, default_value_t = 3)]
        r_max: u32,
        #[command(flatten)]
        format: FormatArgs,
    },
    /// Randomized numeric cross-check of a certificate
    Oracle {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, default_value_t = 20)]
        samples: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        format: FormatArgs,
    },
}

#[derive(Debug, Args)]
pub struct CaseArgs {
    /// Dimension of the complete intersection
    #[arg(short = 'n', long)]
    pub n: u32,
    /// Comma-separated degrees, e.g. 3,2
    #[arg(short = 'd', long = "degrees", value_delimiter = ',', required = true, num_args = 1..)]
    pub degrees: Vec<u32>,
}

#[derive(Debug, Args)]
pub struct FormatArgs {
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long)]
    pub csv: bool,
}

use std::path::PathBuf;

use clap::{Args as ClapArgs, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "sachs-lab", version, about = "Certified {1,2}-factor, criticality and planarity checks")]
pub struct Args {
    /// Worker threads for campaigns (overrides SACHS_LAB_WORKERS).
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Write a JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

/// Where a single graph comes from. With neither flag, one graph6 line is
/// read from standard input.
#[derive(Debug, ClapArgs)]
pub struct GraphInput {
    #[arg(long, conflicts_with = "edges")]
    pub graph6: Option<String>,

    /// Edge-list file: header `n m`, then one `u v` per line.
    #[arg(long, value_name = "FILE")]
    pub edges: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Sachs,
    Matching,
}

#[derive(Debug, ClapArgs)]
pub struct ScanArgs {
    /// Largest order for the builtin enumeration.
    #[arg(long, default_value_t = 7)]
    pub n_max: usize,

    #[arg(long, default_value_t = 0)]
    pub n_min: usize,

    /// Read graphs from a graph6 file instead (`-` for standard input).
    #[arg(long, value_name = "FILE")]
    pub stream: Option<PathBuf>,

    #[arg(long)]
    pub k_max: Option<usize>,

    /// Per-graph time budget in milliseconds.
    #[arg(long, value_name = "MS")]
    pub time_budget: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find a {1,2}-factor or a deficiency certificate.
    Factor {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Decide k-criticality.
    Critical {
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum, default_value = "sachs")]
        mode: Mode,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Decide minimal k-criticality.
    Minimal {
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum, default_value = "sachs")]
        mode: Mode,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Embedding or Kuratowski subdivision.
    Planar {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Whether every deletion of k vertices leaves a planar graph.
    Kplanar {
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Critical difference and critical independence difference.
    Critdiff {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Run a degree-bound campaign.
    Campaign {
        name: String,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Search for a conjecture counterexample.
    Hunt {
        name: String,
        #[command(flatten)]
        scan: ScanArgs,
    },
    /// Re-check the built-in example graphs.
    Fixtures,
    /// Edge list to graph6.
    Encode {
        /// Edge-list file; standard input when absent.
        file: Option<PathBuf>,
    },
    /// graph6 to edge list.
    Decode {
        graph6: Option<String>,
    },
    /// List graphs meeting a hypothesis profile with a given δ - k.
    Extremal {
        #[arg(short)]
        k: usize,
        /// Required δ - k.
        #[arg(long)]
        gap: usize,
        /// Hypothesis context, e.g. `minimal+planar` or `breaking-edge`.
        #[arg(long, default_value = "minimal+planar")]
        context: String,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
    },
}

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "zq", version, about = "Zero forcing games, q-analogues and matrix certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
#[command(group(ArgGroup::new("input").required(true).args(["graph6", "edges_file", "seq"])))]
pub struct GraphInput {
    /// graph6 string, or `-` to read one from stdin
    #[arg(long)]
    pub graph6: Option<String>,
    /// Edge-list file: an `n m` header, then one `u v` pair per line
    #[arg(long)]
    pub edges_file: Option<std::path::PathBuf>,
    /// Threshold creation sequence
    #[arg(long)]
    pub seq: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact Z_q (or Z without --q) of a graph
    Compute {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        q: Option<usize>,
        /// Print Z_0, ..., Z_Q and Z
        #[arg(long, value_name = "Q", conflicts_with = "q")]
        chain: Option<usize>,
        /// Print the optimal strategy tree
        #[arg(long)]
        trace: bool,
        /// Solve even above 16 vertices
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Closed-form Z_q of a threshold graph
    Threshold {
        #[arg(long)]
        seq: String,
        /// One q; all of 0..=s when omitted
        #[arg(long)]
        q: Option<usize>,
        /// Also solve the game and compare
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Bipartite contraction of a coloured graph
    Contract {
        #[command(flatten)]
        input: GraphInput,
        /// Coloured vertices, comma separated
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        coloured: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        q: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print a certificate matrix with its inertia
    Certify {
        /// book, bipartite_prism, kneser, petersen or threshold
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Creation sequence, for `threshold`
        #[arg(long)]
        seq: Option<String>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Values of a named family, with the registry entries that apply
    Family {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, value_name = "Q", conflicts_with = "q")]
        chain: Option<usize>,
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Recompute every proven registry value small enough to solve
    Reproduce {
        #[arg(long, default_value_t = 16)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        q_max: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Compare exact values against an open formula
    Probe {
        /// bipartite_prism, multipartite or kneser_z0; the standard set when omitted
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

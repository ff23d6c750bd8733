use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const CACHE_ENV: &str = "MOCKINJ_CACHE";

#[derive(Debug, Parser)]
#[command(
    name = "mockinj",
    version,
    about = "Exact weight and character combinatorics for mock injective modules",
    arg_required_else_help = true,
    after_help = "Weights are comma-separated integers in simple-root coordinates, e.g. `--weight 1,1`.\n\
                  Parabolic subsets are comma-separated 1-based simple-root indices, e.g. `--J 1,3`.\n\
                  Central characters are index=value pairs over I, e.g. `--chi 2=1`.\n\
                  SL2 characters are weight:multiplicity pairs, e.g. `--char 2:1,0:2,-2:1`.\n\
                  Exit codes: 0 success, 1 computational failure, 2 usage error."
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// JSON file for persisted partition-count memos.
    #[arg(long, env = CACHE_ENV, global = true)]
    pub cache: Option<PathBuf>,

    /// Worker threads for order-independent sweeps.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=256), global = true)]
    pub jobs: u32,

    /// Capacity of the in-memory partition-count memo.
    #[arg(long, default_value_t = mockinj::coord_ring::DEFAULT_MEMO_CAPACITY, global = true)]
    pub memo_cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cartan matrix and positive roots of a root system.
    Rootsys {
        #[arg(long = "type")]
        cartan_type: String,
    },
    /// Dimension of one weight space of k[U_J].
    KujDim {
        #[command(flatten)]
        parabolic: ParabolicArgs,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Weight spaces of the central-character block k[U_J]_chi.
    KujFiber {
        #[command(flatten)]
        parabolic: ParabolicArgs,
        #[arg(long, default_value = "")]
        chi: String,
    },
    /// SL2 modular characters.
    #[command(subcommand)]
    Sl2(Sl2Command),
    /// Decide whether a group has proper mock injective modules.
    Classify {
        /// Identity component: a Cartan type such as `A1`, or `torus:<rank>`.
        #[arg(long)]
        g0: String,
        /// Order of the component group.
        #[arg(long)]
        pi0: u64,
        #[arg(long)]
        p: u64,
        /// The component group is cyclic.
        #[arg(long)]
        cyclic: bool,
    },
    /// Run every desk-checkable claim and print a pass/fail table.
    Reproduce(ReproduceArgs),
}

#[derive(Debug, Args)]
pub struct ParabolicArgs {
    #[arg(long = "type")]
    pub cartan_type: String,
    #[arg(long = "J", default_value = "")]
    pub j: String,
}

#[derive(Debug, Subcommand)]
pub enum Sl2Command {
    /// Character of the simple module L(lam).
    Char {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        lam: u64,
    },
    /// Composition factors of L(mu) (x) L(nu).
    Tensor {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        mu: u64,
        #[arg(long)]
        nu: u64,
    },
    /// Expand a symmetric character in simple characters.
    Decompose {
        #[arg(long)]
        p: u64,
        #[arg(long = "char", allow_hyphen_values = true)]
        character: String,
    },
    /// dim Hom_G(L(mu), I(lam) (x) M) for M given by its character.
    Hom {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        mu: u64,
        #[arg(long)]
        lam: u64,
        #[arg(long = "char", allow_hyphen_values = true)]
        character: String,
    },
    /// All mu <= max with [L(mu) (x) L(1) : L(0)] != 0 at p = 2.
    RemarkSweep {
        #[arg(long)]
        max: u64,
    },
    /// Zero-weight certificate for the socle of ind_{WT}^G k at p = 2.
    SocleWt {
        #[arg(long)]
        max: u64,
        #[arg(long, default_value_t = 2)]
        p: u64,
    },
}

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    #[arg(long)]
    pub zero_weight_max: Option<u64>,
    #[arg(long)]
    pub socle_max: Option<u64>,
    #[arg(long)]
    pub remark_max: Option<u64>,
    #[arg(long)]
    pub fiber_height: Option<u64>,
    #[arg(long)]
    pub partition_box: Option<i64>,
    #[arg(long)]
    pub random_characters: Option<usize>,
    #[arg(long)]
    pub tensor_max: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
}

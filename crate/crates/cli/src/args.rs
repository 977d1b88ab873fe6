use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "spverlinde",
    version,
    about = "Exact computations with Sp(n) Verlinde algebras and twisted K-theory"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Directory for cached results, keyed by operation, parameters and version.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Seed for randomized property checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Fusion rings V(m,n).
    Fusion {
        #[command(subcommand)]
        op: FusionOp,
    },
    /// p-adic completions at the augmentation ideal.
    Completion {
        #[command(subcommand)]
        op: CompletionOp,
    },
    /// Twisted K-theory of Y(l,1) and L HP^l.
    Ktheory {
        #[command(subcommand)]
        op: KtheoryOp,
    },
    /// Associated graded of the level-one algebra of Sp(2^r - 2) at p = 2.
    GrFiltration(GrArgs),
    /// Sweep every formula against its oracle.
    Verify {
        #[command(subcommand)]
        op: VerifyOp,
    },
}

#[derive(Args, Debug, Clone)]
pub struct MN {
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub n: u32,
}

#[derive(Subcommand, Debug)]
pub enum FusionOp {
    /// Labels and structure constants.
    Table(MN),
    /// Determinant of the handle operator.
    DetT(MN),
    /// Braun-Douglas number d(m,n) by three routes.
    Douglas(MN),
}

#[derive(Args, Debug, Clone)]
pub struct MNP {
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub prime: u64,
}

#[derive(Args, Debug, Clone)]
pub struct GroebnerArgs {
    #[command(flatten)]
    pub base: MNP,
    /// Maximum number of reduction steps.
    #[arg(long, default_value_t = spverlinde::completion::DEFAULT_BUDGET)]
    pub budget: usize,
}

#[derive(Args, Debug, Clone)]
pub struct TowerArgs {
    #[arg(long)]
    pub m: u32,
    /// Only rank one is modelled.
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    #[arg(long)]
    pub prime: u64,
    #[arg(long, default_value_t = 8)]
    pub ell_max: u32,
    #[arg(long, default_value_t = 4)]
    pub precision: u32,
}

#[derive(Subcommand, Debug)]
pub enum CompletionOp {
    /// C(delta(p,m), n).
    Rank(MNP),
    /// Local dimension by a Groebner basis over F_p.
    Groebner(GroebnerArgs),
    /// Finite stages Z[y]/(sigma^{m-1}, y^{l+1}) and their stabilization.
    Tower(TowerArgs),
}

#[derive(Args, Debug, Clone)]
pub struct MLOptP {
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub l: u32,
    /// Restrict to one prime; default is every prime dividing m.
    #[arg(long)]
    pub prime: Option<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct MLP {
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub l: u32,
    #[arg(long)]
    pub prime: u64,
}

#[derive(Args, Debug, Clone)]
pub struct PathArgs {
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub l: u32,
    #[arg(long)]
    pub prime: u64,
    /// Number of tables T_0..T_{D-1}.
    #[arg(long, default_value_t = 3)]
    pub t_cutoff: u32,
}

#[derive(Args, Debug, Clone)]
pub struct LArgs {
    #[arg(long)]
    pub l: u32,
}

#[derive(Subcommand, Debug)]
pub enum KtheoryOp {
    /// Additive structure of K_0^t Y(l,1).
    YGroup(MLOptP),
    /// The loop-product ring model and its normal forms.
    LhpRing(MLOptP),
    /// Path-table algorithm against the t-truncated ring.
    PathTable(PathArgs),
    /// String coproduct values nu(1), nu(t).
    Coproduct(MLP),
    /// Euler class and the string handle operator.
    Euler(LArgs),
}

#[derive(Args, Debug, Clone)]
pub struct GrArgs {
    #[arg(long)]
    pub r: u32,
    /// Highest filtration degree computed; default 2^r + 2.
    #[arg(long)]
    pub max_degree: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum VerifyOp {
    All {
        #[arg(long, default_value_t = 8)]
        max_m: u32,
        #[arg(long, default_value_t = 2)]
        max_n: u32,
    },
}

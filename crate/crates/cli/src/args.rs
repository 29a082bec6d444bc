use clap::{Args, Parser, Subcommand, ValueEnum};
use weylstab::{FamilyAlias, SpaceKind};

#[derive(Debug, Parser)]
#[command(
    name = "weylstab",
    version,
    about = "Exact Poincaré series and stability scans for spaces of commuting tuples in compact Lie groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Poincaré series (or certified polynomial) of one space at one rank.
    Poincare(PoincareArgs),
    /// Coefficient of q^k across a rank range, against the predicted onset.
    Scan(ScanArgs),
    /// Irreducible multiplicities in H_k of the n-fold torus power.
    Decompose(DecomposeArgs),
    /// Dimension of the Weyl-invariant part of H_k of the n-fold torus power.
    Invariants(InvariantsArgs),
    /// Irreducibles obtained by adding k boxes in distinct columns.
    Branch(BranchArgs),
    /// Poincaré series of a symmetric product.
    Symprod(SymprodArgs),
    /// Element-by-element check of the class formulas at small rank.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    /// One of: u, su, so-odd, sp, so-even, spin-odd, spin-even, glc, slc, soc-odd, soc-even, spc.
    #[arg(long, value_parser = parse_family)]
    pub family: FamilyAlias,

    /// Nilpotency class q >= 2 of a free nilpotent source group; recorded only.
    #[arg(long)]
    pub nilpotent_class: Option<usize>,
}

#[derive(Debug, Args)]
pub struct PoincareArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, value_parser = parse_space)]
    pub space: SpaceKind,
    #[arg(long)]
    pub rank: usize,
    /// Tuple length for hom, rep and hom_equiv.
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    /// Truncation degree. Without it, hom and rep are returned as certified
    /// polynomials and other spaces are truncated at 24.
    #[arg(long)]
    pub cap: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, value_parser = parse_space)]
    pub space: SpaceKind,
    /// Inclusive range `a..b`, or a single rank.
    #[arg(long, value_parser = parse_ranks)]
    pub ranks: RankRange,
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Use the improved bound r - floor(sqrt r) + 1 >= k.
    #[arg(long)]
    pub strict_bound: bool,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Single rank; mutually exclusive with --ranks.
    #[arg(long, conflicts_with = "ranks", required_unless_present = "ranks")]
    pub rank: Option<usize>,
    /// Rank range for a uniform stability check against 2k.
    #[arg(long, value_parser = parse_ranks)]
    pub ranks: Option<RankRange>,
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub rank: usize,
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct BranchArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// A partition such as `(2,1)`, or a bipartition such as `((1),(1))`.
    #[arg(long)]
    pub label: String,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct SymprodArgs {
    /// Betti numbers b0,b1,... of a connected space, e.g. `1,0,1`.
    #[arg(long)]
    pub betti: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 24)]
    pub cap: usize,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long)]
    pub rank: usize,
    #[arg(long, default_value_t = 8)]
    pub cap: usize,
    /// Also compare the direct invariant dimension in this degree.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    /// Lift every size guard.
    #[arg(long)]
    pub force: bool,
}

/// Inclusive rank range; empty when the start exceeds the end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankRange {
    pub start: usize,
    pub end: usize,
}

impl RankRange {
    pub fn ranks(&self) -> Vec<usize> {
        (self.start..=self.end).collect()
    }
}

fn parse_family(s: &str) -> Result<FamilyAlias, String> {
    s.parse().map_err(|e: weylstab::Error| e.to_string())
}

fn parse_space(s: &str) -> Result<SpaceKind, String> {
    s.parse().map_err(|e: weylstab::Error| e.to_string())
}

fn parse_ranks(s: &str) -> Result<RankRange, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad rank range '{s}'; expected a..b or a single rank"))
    };
    match s.split_once("..") {
        Some((a, b)) => Ok(RankRange {
            start: num(a)?,
            end: num(b.trim_start_matches('='))?,
        }),
        None => {
            let r = num(s)?;
            Ok(RankRange { start: r, end: r })
        }
    }
}

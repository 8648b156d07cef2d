use clap::{Args, Parser, Subcommand, ValueEnum};
use crossnest::Bound;

#[derive(Parser, Debug)]
#[command(name = "crossnest", version, about = "Exact counts of crossings and nestings in colored set partitions")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Cap on the number of objects a brute-force enumeration may visit.
    #[arg(long, default_value_t = 50_000_000, global = true)]
    pub max_work: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count r-colored partitions of [n] with bounded crossings and nestings.
    Count(CountArgs),
    /// Print the counts for n = 0..=N, comma separated.
    Series(SeriesArgs),
    /// Print the rational generating function of NCN_{j,k}(n, r).
    Gf(GfArgs),
    /// Print NCN_{j,k}(n, r) as a polynomial in r.
    Poly(PolyArgs),
    /// Map a colored partition to its vacillating tableau, or back.
    Biject(BijectArgs),
    /// Run a named check and print PASS or FAIL.
    Verify(VerifyArgs),
    /// Search for a polynomial-coefficient recurrence.
    Fit(FitArgs),
    /// List the objects of a family, one per line.
    Enumerate(EnumerateArgs),
}

/// Which statistics are bounded. Explicit `-j`/`-k` override the shortcuts.
#[derive(Args, Debug, Clone)]
pub struct BoundArgs {
    /// Noncrossing: cr < 2.
    #[arg(long, conflicts_with_all = ["nn", "ncn"])]
    pub nc: bool,
    /// Nonnesting: ne < 2.
    #[arg(long, conflicts_with = "ncn")]
    pub nn: bool,
    /// Noncrossing and nonnesting.
    #[arg(long)]
    pub ncn: bool,
    /// Require cr < J (`inf` for no bound).
    #[arg(short = 'j')]
    pub j: Option<Bound>,
    /// Require ne < K (`inf` for no bound).
    #[arg(short = 'k')]
    pub k: Option<Bound>,
}

impl BoundArgs {
    pub fn resolve(&self) -> (Bound, Bound) {
        let (j, k) = if self.nc {
            (Bound::At(2), Bound::Unbounded)
        } else if self.nn {
            (Bound::Unbounded, Bound::At(2))
        } else if self.ncn {
            (Bound::At(2), Bound::At(2))
        } else {
            (Bound::Unbounded, Bound::Unbounded)
        };
        (self.j.unwrap_or(j), self.k.unwrap_or(k))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Pick the fastest exact method for the bounds.
    Auto,
    /// Enumerate every colored partition.
    Brute,
    /// Lattice walks in the r-fold product of the first quadrant (noncrossing only).
    Lattice,
    /// Closed walks on the step multigraph (finite j, k >= 2).
    Walks,
    /// Constant term of a Laurent polynomial power (noncrossing, r = 2).
    ConstantTerm,
}

/// Optional endpoint filter: both sets must be given, and an empty set is `--min-set=`.
#[derive(Args, Debug, Clone)]
pub struct FilterArgs {
    /// Required set of block minima, comma separated.
    #[arg(long = "min-set", value_delimiter = ',', requires = "max_set")]
    pub min_set: Option<Vec<usize>>,
    /// Required set of block maxima, comma separated.
    #[arg(long = "max-set", value_delimiter = ',', requires = "min_set")]
    pub max_set: Option<Vec<usize>>,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[command(flatten)]
    pub bounds: BoundArgs,
    #[command(flatten)]
    pub filter: FilterArgs,
    /// Number of colors.
    #[arg(short = 'r', default_value_t = 1)]
    pub r: usize,
    /// Size of the ground set.
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub bounds: BoundArgs,
    #[arg(short = 'r', default_value_t = 1)]
    pub r: usize,
    /// Last index of the series.
    #[arg(short = 'N')]
    pub last: usize,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
}

#[derive(Args, Debug)]
pub struct GfArgs {
    #[arg(short = 'j')]
    pub j: usize,
    #[arg(short = 'k')]
    pub k: usize,
    #[arg(short = 'r', default_value_t = 1)]
    pub r: usize,
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    #[command(flatten)]
    pub bounds: BoundArgs,
    #[command(flatten)]
    pub filter: FilterArgs,
    #[arg(short = 'n')]
    pub n: usize,
    /// Largest n accepted.
    #[arg(long, default_value_t = crossnest::series::DEFAULT_POLY_LIMIT)]
    pub limit: usize,
}

#[derive(Args, Debug)]
pub struct BijectArgs {
    /// A colored partition such as `n=4; arcs=1-3:1,2-4:2`, or a tableau with `--inverse`.
    pub input: String,
    /// Treat the input as a vacillating tableau and print its partition.
    #[arg(long)]
    pub inverse: bool,
    /// Print the partition whose tableau is the conjugate of the input's.
    #[arg(long, conflicts_with = "inverse")]
    pub transpose: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// A criterion number, a check name, or `all`.
    pub check: String,
    /// Ground-set size for `symmetry`.
    #[arg(short = 'n')]
    pub n: Option<usize>,
    /// Number of colors for `symmetry`.
    #[arg(short = 'r')]
    pub r: Option<usize>,
    /// Largest walk length for `reflection`.
    #[arg(short = 'N')]
    pub last: Option<usize>,
    /// Also print what was checked.
    #[arg(short, long)]
    pub verbose: bool,
}

#[derive(Args, Debug)]
pub struct FitArgs {
    #[command(flatten)]
    pub bounds: BoundArgs,
    #[arg(short = 'r', default_value_t = 1)]
    pub r: usize,
    /// Number of terms a_0 .. a_{N-1} to fit.
    #[arg(short = 'N', default_value_t = 40)]
    pub terms: usize,
    /// Fit these values instead of a computed sequence.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub values: Option<Vec<String>>,
    #[arg(long, default_value_t = 2)]
    pub max_order: usize,
    #[arg(long, default_value_t = 2)]
    pub max_degree: usize,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    /// partition, matching, complete-matching, enhanced, permutation or tangled.
    #[arg(default_value = "partition")]
    pub kind: String,
    #[command(flatten)]
    pub bounds: BoundArgs,
    #[arg(short = 'n')]
    pub n: usize,
    #[arg(short = 'r', default_value_t = 1)]
    pub r: usize,
}

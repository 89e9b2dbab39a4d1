//! `matroid-kl`: compute matroid invariants, relax stressed hyperplanes and run the
//! verification suites.
//!
//! Exit codes: 0 success, 1 parse or validation error, 2 size cap exceeded,
//! 3 a verification check failed.

mod commands;
mod source;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use source::SourceArgs;

#[derive(Parser, Debug)]
#[command(
    name = "matroid-kl",
    version,
    about = "Kazhdan-Lusztig invariants and stressed-hyperplane relaxation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute invariants of one matroid.
    Compute(ComputeArgs),
    /// Relax one stressed hyperplane, or every one (paving input).
    Relax(RelaxArgs),
    /// Run a verification suite, printing one JSON line per check.
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
    /// Tableau counts.
    Tableaux {
        #[command(subcommand)]
        action: TableauxAction,
    },
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Caps {
    /// Largest ground set for the lattice recursions (P, Q, Z, gamma, characteristic).
    #[arg(long, default_value_t = 14)]
    pub max_n: usize,
    /// Largest ground set for Tutte-based and enumeration targets.
    #[arg(long, default_value_t = 20)]
    pub max_tutte_n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Tutte,
    Char,
    Beta,
    P,
    Q,
    Z,
    Gamma,
    Stressed,
    Free,
    Profile,
}

impl Target {
    pub const ALL: [Target; 10] = [
        Target::Tutte,
        Target::Char,
        Target::Beta,
        Target::P,
        Target::Q,
        Target::Z,
        Target::Gamma,
        Target::Stressed,
        Target::Free,
        Target::Profile,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Tutte => "tutte",
            Target::Char => "char",
            Target::Beta => "beta",
            Target::P => "P",
            Target::Q => "Q",
            Target::Z => "Z",
            Target::Gamma => "gamma",
            Target::Stressed => "stressed",
            Target::Free => "free",
            Target::Profile => "profile",
        }
    }

    /// Targets computed by the flat-lattice recursion.
    pub fn uses_recursion(self) -> bool {
        matches!(
            self,
            Target::Char | Target::P | Target::Q | Target::Z | Target::Gamma
        )
    }
}

fn parse_target(s: &str) -> Result<Target, String> {
    Target::ALL
        .into_iter()
        .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
        .ok_or_else(|| {
            let names: Vec<&str> = Target::ALL.iter().map(|t| t.name()).collect();
            format!("unknown target {s:?}; expected one of {}", names.join(", "))
        })
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Comma-separated subset of tutte, char, beta, P, Q, Z, gamma, stressed, free, profile.
    #[arg(long, value_delimiter = ',', value_parser = parse_target, required = true)]
    pub targets: Vec<Target>,
    /// Emit one JSON object instead of text.
    #[arg(long)]
    pub json: bool,
    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Args, Debug)]
pub struct RelaxArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Comma-separated elements of a stressed hyperplane.
    #[arg(
        long,
        value_delimiter = ',',
        conflicts_with = "all",
        required_unless_present = "all"
    )]
    pub hyperplane: Option<Vec<usize>>,
    /// Relax every stressed hyperplane of size at least the rank (input must be paving).
    #[arg(long)]
    pub all: bool,
    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Subcommand, Debug)]
pub enum VerifySuite {
    /// Binomial identities and inequalities behind gamma-positivity of sparse paving matroids.
    Appendix {
        #[arg(long, default_value_t = 30)]
        n_max: usize,
    },
    /// Every relaxation identity for each stressed hyperplane of one matroid.
    Relaxation {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        caps: Caps,
    },
    /// Gamma-positivity and Z-unimodality over a corpus.
    GammaSweep(SweepArgs),
    /// Tableau identities over every shape up to a cell count.
    Tableaux {
        #[arg(long, default_value_t = 16)]
        max_cells: usize,
    },
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Add seeded random sparse paving matroids with 4 <= n <= --n.
    #[arg(long, requires = "samples")]
    pub sparse_paving: bool,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Optionally add one named or given matroid to the corpus.
    #[command(flatten)]
    pub source: SourceArgs,
    #[command(flatten)]
    pub caps: Caps,
}

#[derive(Subcommand, Debug)]
pub enum TableauxAction {
    /// Number of legal fillings of one shape.
    Count {
        #[arg(long, value_enum)]
        kind: ShapeKind,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        /// Barred family: 1 at the top of the left column (skew), maximum at the
        /// bottom of column 0 or column i (straight).
        #[arg(long)]
        barred: bool,
        /// Also walk every filling and check the count.
        #[arg(long)]
        enumerate: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ShapeKind {
    Syt,
    Skyt,
}

fn init_threads() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var("MATROID_KL_THREADS") {
        let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
            anyhow::anyhow!("MATROID_KL_THREADS must be a positive integer, got {v:?}")
        })?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = init_threads().and_then(|()| commands::run(cli.command));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let code = commands::exit_code(&e);
            if code != 3 {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(code)
        }
    }
}

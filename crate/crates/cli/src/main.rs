mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Format;

/// Exact toolkit for 0/1-polytopes.
#[derive(Debug, Parser)]
#[command(name = "zopoly", version, about)]
struct Cli {
    /// Worker threads (0 = all cores). Results do not depend on it.
    #[arg(long, global = true, env = "ZOPOLY_THREADS")]
    threads: Option<usize>,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Kv)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a named polytope as a .poly file.
    Gen {
        #[command(subcommand)]
        family: Family,
        /// Output file (default: stdout).
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Compute facets and affine hull; writes the completed .poly file.
    Hull {
        /// Input file (default or "-": stdin).
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Oracle::Fm)]
        oracle: Oracle,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report dimension, facets, centeredness, graph and face statistics.
    Analyze {
        input: Option<PathBuf>,
    },
    /// Enumerate all full-dimensional 0/1-polytopes of dimension d up to
    /// 0/1-equivalence.
    Classify {
        d: usize,
        /// Allow the long tier (d = 4).
        #[arg(long)]
        long: bool,
        /// Also list simplicial classes with 2d vertices and compare them
        /// with the cross polytope.
        #[arg(long)]
        simplicial_2d: bool,
    },
    /// Random 0/1-matrix and polytope experiments.
    Rand {
        #[command(subcommand)]
        experiment: Experiment,
    },
    /// Build the ill-conditioned ±1-matrix of order 2^m and its
    /// huge-coefficient simplex.
    Alonvu {
        m: usize,
        /// Write the simplex with its facets to this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Allow the long tier (m ≥ 6).
        #[arg(long)]
        long: bool,
    },
    /// Re-serialize a .poly file in canonical form.
    Convert {
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum Family {
    /// The unit cube.
    Cube { d: usize },
    /// conv{e_1..e_d}, or conv{0, e_1..e_d} with --corner.
    Simplex {
        d: usize,
        #[arg(long)]
        corner: bool,
    },
    /// conv{e_i, 1 - e_i}.
    Cross { d: usize },
    /// Even-weight vectors.
    Halfcube { d: usize },
    /// Cut polytope of K_n.
    Cut { n: usize },
    /// Correlation polytope of order n.
    Cor { n: usize },
    /// Metric polytope of K_n (inequality description only).
    Met { n: usize },
    /// Member of the doubly exponential family; one 0/1 digit per free
    /// position (default: none selected).
    Fd { d: usize, selector: Option<String> },
    /// Sum of two centered polytopes read from files.
    Sum { first: PathBuf, second: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Oracle {
    /// Fourier–Motzkin elimination.
    Fm,
    /// Enumeration of spanning vertex subsets.
    Span,
    /// Both, failing on disagreement.
    Both,
}

#[derive(Debug, Args)]
struct Sampling {
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Model {
    ZeroOne,
    PlusMinusOne,
}

#[derive(Debug, Subcommand)]
enum Experiment {
    /// Monte-Carlo probability that a random d×d 0/1-matrix is singular.
    Pd {
        d: usize,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Exact number of singular d×d 0/1-matrices.
    Md {
        d: usize,
        #[arg(long)]
        long: bool,
    },
    /// Mean squared determinant.
    Detsq {
        n: usize,
        #[arg(long, value_enum, default_value_t = Model::PlusMinusOne)]
        model: Model,
        /// Enumerate all matrices instead of sampling.
        #[arg(long)]
        exhaustive: bool,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Maximal determinant of an n×n 0/1-matrix.
    Rho {
        n: usize,
        #[arg(long)]
        long: bool,
    },
    /// Rates for n random 0/1-points in dimension d.
    Polytope {
        d: usize,
        n: usize,
        #[command(flatten)]
        sampling: Sampling,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure threads: {e}");
            return ExitCode::from(1);
        }
    }
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

//! `eikonal`: solve grid files, generate benchmark grids, run benchmark
//! sweeps and compare arrival-time fields.
//!
//! Exit status: 0 on success, 1 when `compare` finds the fields outside the
//! tolerances, 2 on usage, format or solver errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use eikonal_core::bench::Family;
use eikonal_core::solvers::{SolverKind, SolverParams};
use eikonal_core::structures::UntidyQueueConfig;

use commands::{SourceArg, StartArg};

#[derive(Debug, Parser)]
#[command(
    name = "eikonal",
    version,
    about = "Sequential Eikonal solvers on N-dimensional grids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve a velocity grid file and write the arrival times.
    Solve(SolveArgs),
    /// Write one benchmark grid to a velocity grid file.
    Generate(GenerateArgs),
    /// Time every solver over a benchmark sweep and write CSV.
    Bench(BenchArgs),
    /// Print the L1 and Linf norms of the difference of two time files.
    Compare(CompareArgs),
}

/// Tuning shared by every command that runs a solver.
#[derive(Debug, Clone, Args)]
struct TuningArgs {
    /// UFMM bucket count.
    #[arg(long)]
    buckets: Option<usize>,
    /// UFMM time span covered by the buckets.
    #[arg(long)]
    trange: Option<f64>,
    /// FIM convergence threshold.
    #[arg(long)]
    epsilon: Option<f64>,
}

impl TuningArgs {
    fn apply(&self, mut params: SolverParams) -> SolverParams {
        let defaults = params.ufmm;
        params.ufmm = UntidyQueueConfig {
            bucket_count: self.buckets.unwrap_or(defaults.bucket_count),
            t_range: self.trange.unwrap_or(defaults.t_range),
        };
        if let Some(eps) = self.epsilon {
            params.fim_epsilon = eps;
        }
        params
    }
}

#[derive(Debug, Args)]
struct SolveArgs {
    /// Velocity grid file (EIKGRID).
    #[arg(short, long)]
    input: PathBuf,
    /// Arrival-time file to write (EIKTIME).
    #[arg(short, long)]
    output: PathBuf,
    #[arg(short, long, default_value = "FMM")]
    solver: SolverKind,
    /// Start cell: `center`, `corner` or comma-separated coordinates.
    /// Repeat for several start cells.
    #[arg(long = "source", default_value = "center")]
    sources: Vec<SourceArg>,
    #[command(flatten)]
    tuning: TuningArgs,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long)]
    family: Family,
    #[arg(long, default_value_t = 2)]
    ndims: usize,
    /// Cells per axis (empty, random, checkerboard).
    #[arg(long)]
    cells: Option<usize>,
    /// Barrier count.
    #[arg(long, default_value_t = 9)]
    barriers: usize,
    /// Maximum velocity (random, checkerboard).
    #[arg(long, default_value_t = 100.0)]
    fmax: f64,
    #[arg(long, default_value_t = eikonal_core::bench::DEFAULT_SEED)]
    seed: u64,
    /// Checkerboard blocks per axis.
    #[arg(long, default_value_t = eikonal_core::bench::DEFAULT_DIVISIONS)]
    divisions: usize,
    /// Resolution divisor for the full-size defaults.
    #[arg(long, default_value_t = 1.0)]
    scale: f64,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long)]
    family: Family,
    #[arg(long, default_value_t = 2)]
    ndims: usize,
    /// Divides every grid extent of the sweep.
    #[arg(long, default_value_t = 1.0)]
    scale: f64,
    #[arg(long, default_value_t = eikonal_core::bench::DEFAULT_RUNS)]
    runs: usize,
    /// Solvers to time; FMM always runs as the reference.
    #[arg(long, value_delimiter = ',')]
    solvers: Option<Vec<SolverKind>>,
    /// Replaces the family's parameter sweep.
    #[arg(long, value_delimiter = ',')]
    params: Option<Vec<f64>>,
    /// Cells per axis for random and checkerboard sweeps.
    #[arg(long)]
    cells: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    divisions: Option<usize>,
    /// Start cell, overriding the family default.
    #[arg(long)]
    start: Option<StartArg>,
    /// Summary CSV, one row per solver and parameter value.
    #[arg(short, long)]
    output: PathBuf,
    /// Optional CSV with every timed run.
    #[arg(long)]
    runs_output: Option<PathBuf>,
    #[command(flatten)]
    tuning: TuningArgs,
}

#[derive(Debug, Args)]
struct CompareArgs {
    /// First arrival-time file.
    a: PathBuf,
    /// Second arrival-time file.
    b: PathBuf,
    #[arg(long, default_value_t = 0.0)]
    tol_l1: f64,
    #[arg(long, default_value_t = 0.0)]
    tol_linf: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(a) => commands::solve(a),
        Command::Generate(a) => commands::generate(a),
        Command::Bench(a) => commands::bench(a),
        Command::Compare(a) => commands::compare(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

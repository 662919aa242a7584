use std::error::Error;
use std::fs::File;
use std::io::BufWriter;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use eikonal_core::bench::{
    empty_ladder, error_norms, gen_barriers, gen_checkerboard, gen_empty, gen_random,
    run_experiment_with, scaled, velocity_family_cells, write_runs_csv, write_summary_csv,
    BenchRecord, ExperimentSpec, Family, Scenario, StartPos,
};
use eikonal_core::grid::Grid;
use eikonal_core::io::{load_grid, load_time, save_grid, save_time};
use eikonal_core::solvers::{propagate, SolverParams, StartSet};
use eikonal_core::NormError;

use crate::{BenchArgs, CompareArgs, GenerateArgs, SolveArgs};

pub type CmdResult = Result<ExitCode, Box<dyn Error>>;

/// `center`, `corner` or `near-corner`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StartArg(pub StartPos);

impl FromStr for StartArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "center" => Ok(StartArg(StartPos::Center)),
            "corner" | "near-corner" => Ok(StartArg(StartPos::NearCorner)),
            _ => Err(format!("expected center or corner, got {s:?}")),
        }
    }
}

/// A start cell given by keyword or by coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceArg {
    Start(StartPos),
    Coords(Vec<usize>),
}

impl FromStr for SourceArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(StartArg(p)) = s.parse() {
            return Ok(SourceArg::Start(p));
        }
        s.split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map(SourceArg::Coords)
            .map_err(|_| {
                format!("expected center, corner or comma-separated coordinates, got {s:?}")
            })
    }
}

impl SourceArg {
    fn cell(&self, grid: &Grid) -> Result<usize, Box<dyn Error>> {
        Ok(match self {
            SourceArg::Start(p) => p.cell(grid),
            SourceArg::Coords(c) => grid.flat_index(c)?,
        })
    }
}

pub fn solve(args: SolveArgs) -> CmdResult {
    let mut grid = load_grid(&args.input)?;
    let cells = args
        .sources
        .iter()
        .map(|s| s.cell(&grid))
        .collect::<Result<Vec<_>, _>>()?;
    let start = StartSet::new(&grid, &cells)?;
    let params = args.tuning.apply(SolverParams::default());
    params.validate()?;
    let t0 = Instant::now();
    let stats = propagate(args.solver, &mut grid, &start, &params)?;
    let secs = t0.elapsed().as_secs_f64();
    save_time(&args.output, &grid)?;
    let reached = grid.time().iter().filter(|t| t.is_finite()).count();
    println!(
        "{}: {} cells ({reached} reached), propagation {secs:.6} s, {} evaluations",
        args.solver,
        grid.len(),
        stats.evaluations
    );
    Ok(ExitCode::SUCCESS)
}

fn generated(args: &GenerateArgs) -> Result<Scenario, Box<dyn Error>> {
    let cells = |default: usize| args.cells.unwrap_or_else(|| scaled(default, args.scale));
    Ok(match args.family {
        Family::Empty => {
            let largest = *empty_ladder(args.ndims)?
                .last()
                .expect("ladder is non-empty");
            gen_empty(args.ndims, cells(largest))?
        }
        Family::Barriers => gen_barriers(args.ndims, args.barriers, args.scale)?,
        Family::Random => gen_random(
            args.ndims,
            cells(velocity_family_cells(args.ndims)?),
            args.fmax,
            args.seed,
        )?,
        Family::Checkerboard => gen_checkerboard(
            args.ndims,
            cells(velocity_family_cells(args.ndims)?),
            args.fmax,
            args.divisions,
        )?,
    })
}

pub fn generate(args: GenerateArgs) -> CmdResult {
    let s = generated(&args)?;
    save_grid(&args.output, &s.grid)?;
    let start = s.grid.coords_of(s.sources[0])?;
    let start: Vec<String> = start.iter().map(usize::to_string).collect();
    println!(
        "{} grid {:?}, h = {}, start {}",
        args.family,
        s.grid.dims(),
        s.grid.h(),
        start.join(",")
    );
    Ok(ExitCode::SUCCESS)
}

fn print_record(r: &BenchRecord) {
    match &r.error {
        Some(e) => println!("{:>10} {:<7} error: {e}", r.param, r.solver.name()),
        None => println!(
            "{:>10} {:<7} {:>12.6} {:>10.6} {:>8.3} {:>11.3e} {:>11.3e}",
            r.param,
            r.solver.name(),
            r.mean_s,
            r.stddev_s,
            r.ratio_vs_fmm,
            r.l1_err,
            r.linf_err
        ),
    }
}

pub fn bench(args: BenchArgs) -> CmdResult {
    let mut spec = ExperimentSpec::standard(args.family, args.ndims, args.scale)?;
    spec.runs = args.runs;
    if let Some(solvers) = args.solvers {
        spec.solvers = solvers;
    }
    if let Some(params) = args.params {
        spec.params = params;
    }
    if let Some(cells) = args.cells {
        spec.cells = cells;
    }
    if let Some(seed) = args.seed {
        spec.seed = seed;
    }
    if let Some(divisions) = args.divisions {
        spec.divisions = divisions;
    }
    spec.start = args.start.map(|s| s.0);
    spec.solver_params = args.tuning.apply(spec.solver_params);
    spec.validate()?;

    println!(
        "{:>10} {:<7} {:>12} {:>10} {:>8} {:>11} {:>11}",
        "param", "solver", "mean_s", "stddev_s", "ratio", "l1_err", "linf_err"
    );
    let records = run_experiment_with(&spec, print_record)?;
    write_summary_csv(BufWriter::new(File::create(&args.output)?), &records)?;
    if let Some(path) = &args.runs_output {
        write_runs_csv(BufWriter::new(File::create(path)?), &records)?;
    }
    Ok(ExitCode::SUCCESS)
}

pub fn compare(args: CompareArgs) -> CmdResult {
    let a = load_time(&args.a)?;
    let b = load_time(&args.b)?;
    if a.dims != b.dims {
        return Err(format!("grid shapes differ: {:?} vs {:?}", a.dims, b.dims).into());
    }
    if a.h != b.h {
        return Err(format!("cell sizes differ: {} vs {}", a.h, b.h).into());
    }
    match error_norms(&a.values, &b.values, a.h, a.dims.len()) {
        Ok((l1, linf)) => {
            println!("L1 = {l1:e}\nLinf = {linf:e}");
            if l1 <= args.tol_l1 && linf <= args.tol_linf {
                Ok(ExitCode::SUCCESS)
            } else {
                println!(
                    "outside tolerance (L1 <= {:e}, Linf <= {:e})",
                    args.tol_l1, args.tol_linf
                );
                Ok(ExitCode::from(1))
            }
        }
        Err(e @ NormError::MaskMismatch(_)) => {
            println!("fields differ: {e}");
            Ok(ExitCode::from(1))
        }
        Err(e) => Err(e.into()),
    }
}

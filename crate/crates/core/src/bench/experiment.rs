//! Timed benchmark runs and CSV output.

use std::io::Write;
use std::time::Instant;

use super::generators::{
    barrier_dims, empty_ladder, gen_barriers, gen_checkerboard, gen_empty, gen_random, scaled,
    velocity_family_cells, Family, Scenario, StartPos, BARRIER_COUNTS, DEFAULT_DIVISIONS,
    FMAX_LADDER,
};
use super::norms::error_norms;
use crate::error::{BenchError, SolveError};
use crate::grid::Grid;
use crate::solvers::{propagate, SolveStats, SolverKind, SolverParams, StartSet};
use crate::structures::UntidyQueueConfig;

pub const DEFAULT_RUNS: usize = 10;
pub const DEFAULT_SEED: u64 = 0x5eed;

pub const SUMMARY_HEADER: [&str; 10] = [
    "experiment",
    "family",
    "ndims",
    "param",
    "solver",
    "run_mean_s",
    "run_stddev_s",
    "ratio_vs_fmm",
    "l1_err",
    "linf_err",
];

pub const RUNS_HEADER: [&str; 7] = [
    "experiment",
    "family",
    "ndims",
    "param",
    "solver",
    "run",
    "time_s",
];

/// One benchmark family swept over a list of parameter values.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub name: String,
    pub family: Family,
    pub ndims: usize,
    /// Swept values: cells per axis (empty), barrier count (barriers) or
    /// maximum velocity (random, checkerboard).
    pub params: Vec<f64>,
    /// Cells per axis for the random and checkerboard families.
    pub cells: usize,
    /// Resolution divisor applied to the barrier domain.
    pub scale: f64,
    pub divisions: usize,
    pub seed: u64,
    /// Overrides the family's default start cell.
    pub start: Option<StartPos>,
    pub solvers: Vec<SolverKind>,
    pub runs: usize,
    pub solver_params: SolverParams,
}

impl ExperimentSpec {
    /// The full standard sweep for `family` in `ndims` dimensions, every grid
    /// extent divided by `scale`.
    pub fn standard(family: Family, ndims: usize, scale: f64) -> Result<Self, BenchError> {
        if !(scale >= 1.0 && scale.is_finite()) {
            return Err(BenchError::Spec(format!(
                "scale must be at least 1, got {scale}"
            )));
        }
        let mut solver_params = SolverParams::default();
        let (params, cells) = match family {
            Family::Empty => {
                let mut p: Vec<f64> = empty_ladder(ndims)?
                    .iter()
                    .map(|&c| scaled(c, scale) as f64)
                    .collect();
                p.dedup();
                (p, 0)
            }
            Family::Barriers => {
                barrier_dims(ndims)?;
                (BARRIER_COUNTS.iter().map(|&b| b as f64).collect(), 0)
            }
            Family::Random | Family::Checkerboard => (
                FMAX_LADDER.to_vec(),
                scaled(velocity_family_cells(ndims)?, scale),
            ),
        };
        if family == Family::Checkerboard {
            match ndims {
                3 => {
                    solver_params.ufmm =
                        UntidyQueueConfig::new(1000, 0.01).map_err(SolveError::from)?
                }
                4 => {
                    solver_params.ufmm =
                        UntidyQueueConfig::new(20000, 0.025).map_err(SolveError::from)?
                }
                _ => {}
            }
        }
        Ok(ExperimentSpec {
            name: format!("{family}{ndims}d"),
            family,
            ndims,
            params,
            cells,
            scale,
            divisions: DEFAULT_DIVISIONS,
            seed: DEFAULT_SEED,
            start: None,
            solvers: SolverKind::ALL.to_vec(),
            runs: DEFAULT_RUNS,
            solver_params,
        })
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        if self.runs == 0 {
            return Err(BenchError::Spec("runs must be at least 1".into()));
        }
        if self.params.is_empty() {
            return Err(BenchError::Spec("no parameter values".into()));
        }
        if self.solvers.is_empty() {
            return Err(BenchError::Spec("no solvers".into()));
        }
        let integral = matches!(self.family, Family::Empty | Family::Barriers);
        if let Some(p) = self
            .params
            .iter()
            .find(|p| !p.is_finite() || *p < &0.0 || (integral && p.fract() != 0.0))
        {
            return Err(BenchError::Spec(format!(
                "invalid {} parameter {p}",
                self.family
            )));
        }
        self.solver_params.validate()?;
        Ok(())
    }

    /// Grid and start cells for one parameter value.
    pub fn scenario(&self, param: f64) -> Result<Scenario, BenchError> {
        let mut s = match self.family {
            Family::Empty => gen_empty(self.ndims, param as usize)?,
            Family::Barriers => gen_barriers(self.ndims, param as usize, self.scale)?,
            Family::Random => gen_random(self.ndims, self.cells, param, self.seed)?,
            Family::Checkerboard => {
                gen_checkerboard(self.ndims, self.cells, param, self.divisions)?
            }
        };
        if let Some(start) = self.start {
            s.sources = vec![start.cell(&s.grid)];
        }
        Ok(s)
    }
}

/// Timing and accuracy of one solver at one parameter value.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub experiment: String,
    pub family: Family,
    pub ndims: usize,
    pub param: f64,
    pub solver: SolverKind,
    pub cells: usize,
    /// Propagation time of each measured run, in seconds.
    pub run_times: Vec<f64>,
    pub mean_s: f64,
    pub stddev_s: f64,
    /// `mean_s` over FMM's `mean_s` on the same grid.
    pub ratio_vs_fmm: f64,
    /// Error norms against the FMM field.
    pub l1_err: f64,
    pub linf_err: f64,
    pub stats: SolveStats,
    /// Set when the solver failed; the numeric fields are then NaN.
    pub error: Option<String>,
}

/// Result of [`time_solver`]: per-run times, the last field and its counters.
#[derive(Debug, Clone)]
pub struct TimedRuns {
    pub run_times: Vec<f64>,
    pub grid: Grid,
    pub stats: SolveStats,
}

/// Mean and sample standard deviation (0 for a single value).
pub fn mean_stddev(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

/// One discarded warm-up run, then `runs` timed runs. Only propagation is
/// timed; resetting the grid is not.
pub fn time_solver(
    kind: SolverKind,
    scenario: &Scenario,
    params: &SolverParams,
    runs: usize,
) -> Result<TimedRuns, SolveError> {
    params.validate()?;
    let mut grid = scenario.grid.clone();
    let start = StartSet::new(&grid, &scenario.sources)?;
    grid.reset();
    propagate(kind, &mut grid, &start, params)?;
    let mut run_times = Vec::with_capacity(runs);
    let mut stats = SolveStats::default();
    for _ in 0..runs {
        grid.reset();
        let t0 = Instant::now();
        stats = propagate(kind, &mut grid, &start, params)?;
        run_times.push(t0.elapsed().as_secs_f64());
    }
    Ok(TimedRuns {
        run_times,
        grid,
        stats,
    })
}

/// Runs every solver of `spec` at every parameter value. FMM is always
/// timed as the reference. A failing solver yields a record with `error`
/// set instead of aborting the experiment.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<Vec<BenchRecord>, BenchError> {
    run_experiment_with(spec, |_| {})
}

/// [`run_experiment`] reporting each record as soon as it is complete.
pub fn run_experiment_with(
    spec: &ExperimentSpec,
    mut on_record: impl FnMut(&BenchRecord),
) -> Result<Vec<BenchRecord>, BenchError> {
    spec.validate()?;
    let mut records = Vec::new();
    for &param in &spec.params {
        let scenario = spec.scenario(param)?;
        let reference = time_solver(SolverKind::Fmm, &scenario, &spec.solver_params, spec.runs)?;
        let (fmm_mean, _) = mean_stddev(&reference.run_times);
        let h = scenario.grid.h();
        for &kind in &spec.solvers {
            let timed = if kind == SolverKind::Fmm {
                Ok(reference.clone())
            } else {
                time_solver(kind, &scenario, &spec.solver_params, spec.runs)
            };
            let mut rec = BenchRecord {
                experiment: spec.name.clone(),
                family: spec.family,
                ndims: spec.ndims,
                param,
                solver: kind,
                cells: scenario.grid.len(),
                run_times: Vec::new(),
                mean_s: f64::NAN,
                stddev_s: f64::NAN,
                ratio_vs_fmm: f64::NAN,
                l1_err: f64::NAN,
                linf_err: f64::NAN,
                stats: SolveStats::default(),
                error: None,
            };
            match timed {
                Ok(t) => {
                    let (mean, sd) = mean_stddev(&t.run_times);
                    rec.mean_s = mean;
                    rec.stddev_s = sd;
                    rec.ratio_vs_fmm = mean / fmm_mean;
                    match error_norms(t.grid.time(), reference.grid.time(), h, spec.ndims) {
                        Ok((l1, linf)) => {
                            rec.l1_err = l1;
                            rec.linf_err = linf;
                        }
                        Err(e) => rec.error = Some(e.to_string()),
                    }
                    rec.run_times = t.run_times;
                    rec.stats = t.stats;
                }
                Err(e) => rec.error = Some(e.to_string()),
            }
            on_record(&rec);
            records.push(rec);
        }
    }
    Ok(records)
}

fn num(x: f64) -> String {
    if x.is_nan() {
        String::new()
    } else {
        x.to_string()
    }
}

/// One row per record under [`SUMMARY_HEADER`]; failed records leave the
/// numeric columns empty.
pub fn write_summary_csv<W: Write>(w: W, records: &[BenchRecord]) -> std::io::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(SUMMARY_HEADER)?;
    for r in records {
        out.write_record([
            r.experiment.clone(),
            r.family.to_string(),
            r.ndims.to_string(),
            num(r.param),
            r.solver.to_string(),
            num(r.mean_s),
            num(r.stddev_s),
            num(r.ratio_vs_fmm),
            num(r.l1_err),
            num(r.linf_err),
        ])?;
    }
    out.flush()
}

/// Long format: one row per measured run, under [`RUNS_HEADER`].
pub fn write_runs_csv<W: Write>(w: W, records: &[BenchRecord]) -> std::io::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(RUNS_HEADER)?;
    for r in records {
        for (i, t) in r.run_times.iter().enumerate() {
            out.write_record([
                r.experiment.clone(),
                r.family.to_string(),
                r.ndims.to_string(),
                num(r.param),
                r.solver.to_string(),
                i.to_string(),
                num(*t),
            ])?;
        }
    }
    out.flush()
}

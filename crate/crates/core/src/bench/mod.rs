//! Benchmark harness: scenario generators, timing loop, error norms and CSV
//! output.

mod experiment;
mod generators;
mod norms;

pub use experiment::{
    mean_stddev, run_experiment, run_experiment_with, time_solver, write_runs_csv,
    write_summary_csv, BenchRecord, ExperimentSpec, TimedRuns, DEFAULT_RUNS, DEFAULT_SEED,
    RUNS_HEADER, SUMMARY_HEADER,
};
pub use generators::{
    barrier_dims, empty_ladder, gen_barriers, gen_barriers_in, gen_checkerboard, gen_empty,
    gen_random, near_corner, scaled, velocity_family_cells, Family, Scenario, StartPos,
    BARRIER_COUNTS, BARRIER_GAP_FRACTION, CORNER_FRACTION, DEFAULT_DIVISIONS, EMPTY_LADDER_2D,
    EMPTY_LADDER_3D, EMPTY_LADDER_4D, FMAX_LADDER,
};
pub use norms::{error_norms, l1_norm, linf_norm};

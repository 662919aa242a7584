//! The nine sequential Eikonal solvers.
//!
//! Every solver fills [`Grid::time`] with the times-of-arrival map from a
//! [`StartSet`]. FMM, FMMFib, SFMM, GMM, FSM, LSM, DDQM and FIM with
//! `epsilon = 0` reach the same discrete solution; UFMM (and FIM with a
//! positive epsilon) trade a bounded error for speed.

mod cell_list;
mod ddqm;
mod fim;
mod gmm;
mod marching;
mod sweeping;

use std::fmt;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::SolveError;
use crate::grid::Grid;
use crate::structures::{BinaryHeap, FibonacciHeap, UntidyQueue, UntidyQueueConfig};

pub use ddqm::{ddqm_initial_step, ddqm_propagate};
pub use fim::{fim_propagate, FIM_MIN_EPSILON};
pub use gmm::{gmm_delta_tau, gmm_propagate};
pub use marching::{fmm_propagate, sfmm_propagate};
pub use sweeping::{fsm_propagate, lsm_propagate, SweepDirs};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolverKind {
    Fmm,
    FmmFib,
    Sfmm,
    Ufmm,
    Gmm,
    Fim,
    Fsm,
    Lsm,
    Ddqm,
}

impl SolverKind {
    pub const ALL: [SolverKind; 9] = [
        SolverKind::Fmm,
        SolverKind::FmmFib,
        SolverKind::Sfmm,
        SolverKind::Ufmm,
        SolverKind::Gmm,
        SolverKind::Fim,
        SolverKind::Fsm,
        SolverKind::Lsm,
        SolverKind::Ddqm,
    ];

    /// Solvers that return the exact discrete solution (FIM with epsilon 0).
    pub const EXACT: [SolverKind; 8] = [
        SolverKind::Fmm,
        SolverKind::FmmFib,
        SolverKind::Sfmm,
        SolverKind::Gmm,
        SolverKind::Fim,
        SolverKind::Fsm,
        SolverKind::Lsm,
        SolverKind::Ddqm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SolverKind::Fmm => "FMM",
            SolverKind::FmmFib => "FMMFib",
            SolverKind::Sfmm => "SFMM",
            SolverKind::Ufmm => "UFMM",
            SolverKind::Gmm => "GMM",
            SolverKind::Fim => "FIM",
            SolverKind::Fsm => "FSM",
            SolverKind::Lsm => "LSM",
            SolverKind::Ddqm => "DDQM",
        }
    }
}

impl fmt::Display for SolverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownSolver(pub String);

impl fmt::Display for UnknownSolver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown solver {:?}", self.0)
    }
}

impl std::error::Error for UnknownSolver {}

impl FromStr for SolverKind {
    type Err = UnknownSolver;

    /// Case-insensitive solver name.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SolverKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownSolver(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverParams {
    /// FIM convergence threshold in time units.
    pub fim_epsilon: f64,
    pub ufmm: UntidyQueueConfig,
}

impl Default for SolverParams {
    fn default() -> Self {
        SolverParams {
            fim_epsilon: 0.0,
            ufmm: UntidyQueueConfig::default(),
        }
    }
}

impl SolverParams {
    pub fn validate(&self) -> Result<(), SolveError> {
        if self.fim_epsilon.is_nan() || self.fim_epsilon < 0.0 {
            return Err(SolveError::InvalidEpsilon(self.fim_epsilon));
        }
        self.ufmm.validate()?;
        Ok(())
    }
}

/// Work counters collected during one propagation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Calls to the Eikonal update.
    pub evaluations: u64,
    /// FIM only: evaluations of active-list members.
    pub list_evaluations: u64,
    /// Marching solvers: narrow-band pops (stale SFMM entries excluded).
    pub pops: u64,
    /// Pops whose key was below the previous pop's key.
    pub key_regressions: u64,
    /// Cells moved into the final set (marching and group solvers).
    pub freezes: u64,
    pub sweeps: u64,
    /// Sweeps that improved at least one value.
    pub changing_sweeps: u64,
    /// GMM groups, FIM list passes, DDQM queue swaps.
    pub iterations: u64,
}

/// Validated, duplicate-free set of start cells for a grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StartSet(Vec<usize>);

impl StartSet {
    pub fn new(grid: &Grid, cells: &[usize]) -> Result<Self, SolveError> {
        if cells.is_empty() {
            return Err(SolveError::NoSources);
        }
        let mut v = Vec::with_capacity(cells.len());
        for &c in cells {
            if c >= grid.len() {
                return Err(SolveError::SourceOutOfRange(c));
            }
            if grid.is_obstacle(c) {
                return Err(SolveError::SourceOnObstacle(c));
            }
            if !v.contains(&c) {
                v.push(c);
            }
        }
        Ok(StartSet(v))
    }

    pub fn from_coords(grid: &Grid, coords: &[Vec<usize>]) -> Result<Self, SolveError> {
        let cells = coords
            .iter()
            .map(|c| {
                grid.flat_index(c)
                    .map_err(|_| SolveError::SourceOutOfRange(usize::MAX))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(grid, &cells)
    }

    pub fn cells(&self) -> &[usize] {
        &self.0
    }
}

/// Resets the grid and runs `kind` from the start cells.
pub fn solve(
    kind: SolverKind,
    grid: &mut Grid,
    start: &[usize],
    params: &SolverParams,
) -> Result<SolveStats, SolveError> {
    params.validate()?;
    let start = StartSet::new(grid, start)?;
    grid.reset();
    propagate(kind, grid, &start, params)
}

/// Runs `kind` on a freshly reset grid (see [`Grid::reset`]).
///
/// This is the timed part of a benchmark run.
pub fn propagate(
    kind: SolverKind,
    grid: &mut Grid,
    start: &StartSet,
    params: &SolverParams,
) -> Result<SolveStats, SolveError> {
    let n = grid.len();
    let sources = start.cells();
    match kind {
        SolverKind::Fmm => fmm_propagate(grid, sources, &mut BinaryHeap::with_capacity(n)),
        SolverKind::FmmFib => fmm_propagate(grid, sources, &mut FibonacciHeap::with_capacity(n)),
        SolverKind::Sfmm => Ok(sfmm_propagate(grid, sources)),
        SolverKind::Ufmm => {
            let mut q = UntidyQueue::new(params.ufmm, n)?;
            fmm_propagate(grid, sources, &mut q)
        }
        SolverKind::Gmm => Ok(gmm_propagate(grid, sources)),
        SolverKind::Fim => Ok(fim_propagate(grid, sources, params.fim_epsilon)),
        SolverKind::Fsm => Ok(fsm_propagate(grid, sources)),
        SolverKind::Lsm => Ok(lsm_propagate(grid, sources)),
        SolverKind::Ddqm => Ok(ddqm_propagate(grid, sources)),
    }
}

#[inline]
pub(crate) fn neighbor_buf(grid: &Grid, index: usize) -> SmallVec<[usize; 8]> {
    grid.neighbors(index).collect()
}

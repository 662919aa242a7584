//! Sweeping solvers: FSM and its lock-flag refinement LSM.

use super::{neighbor_buf, SolveStats};
use crate::grid::{CellState, Grid};
use crate::update::solve_eikonal;

/// Traversal direction per axis: `1` forwards, `-1` backwards.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SweepDirs(Vec<i8>);

impl SweepDirs {
    /// All axes forwards.
    pub fn forward(ndims: usize) -> Self {
        SweepDirs(vec![1; ndims])
    }

    /// `None` unless every entry is `1` or `-1`.
    pub fn from_slice(dirs: &[i8]) -> Option<Self> {
        dirs.iter()
            .all(|&d| d == 1 || d == -1)
            .then(|| SweepDirs(dirs.to_vec()))
    }

    pub fn as_slice(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Next direction set: a binary increment over `{-1, 1}` digits with
    /// axis 0 as the least significant digit. Cycles through all `2^N`
    /// combinations.
    pub fn advance(&mut self) {
        for d in &mut self.0 {
            *d += 2;
            if *d <= 1 {
                break;
            }
            *d = -1;
        }
    }

    pub fn next_dirs(&self) -> Self {
        let mut d = self.clone();
        d.advance();
        d
    }
}

/// Visits every cell once, axis `N-1` outermost and axis 0 innermost, each
/// axis traversed in the direction given by `dirs`.
pub(crate) fn for_each_in_sweep(
    dims: &[usize],
    strides: &[usize],
    dirs: &[i8],
    mut visit: impl FnMut(usize),
) {
    let n = dims.len();
    let mut steps = vec![0usize; n];
    loop {
        let base: usize = (1..n)
            .map(|a| {
                let c = if dirs[a] > 0 {
                    steps[a]
                } else {
                    dims[a] - 1 - steps[a]
                };
                c * strides[a]
            })
            .sum();
        if dirs[0] > 0 {
            (base..base + dims[0]).for_each(&mut visit);
        } else {
            (base..base + dims[0]).rev().for_each(&mut visit);
        }
        let mut a = 1;
        loop {
            if a >= n {
                return;
            }
            steps[a] += 1;
            if steps[a] < dims[a] {
                break;
            }
            steps[a] = 0;
            a += 1;
        }
    }
}

fn set_sources(grid: &mut Grid, sources: &[usize]) {
    for &s in sources {
        grid.time_mut()[s] = 0.0;
        grid.state_mut()[s] = CellState::Frozen;
    }
}

/// Fast Sweeping: Gauss-Seidel sweeps in the `2^N` alternating directions
/// until one full sweep changes nothing.
///
/// A sweep evaluates every non-source, non-obstacle cell, so a sweep with no
/// improvement means every cell already satisfies its update.
pub fn fsm_propagate(grid: &mut Grid, sources: &[usize]) -> SolveStats {
    let mut stats = SolveStats::default();
    set_sources(grid, sources);
    let dims = grid.dims().to_vec();
    let strides = grid.strides().to_vec();
    let mut dirs = SweepDirs::forward(dims.len());
    loop {
        dirs.advance();
        stats.sweeps += 1;
        let mut changed = false;
        for_each_in_sweep(&dims, &strides, dirs.as_slice(), |i| {
            if grid.state()[i] == CellState::Frozen {
                return;
            }
            let t = solve_eikonal(grid, i);
            stats.evaluations += 1;
            if t < grid.time()[i] {
                grid.time_mut()[i] = t;
                changed = true;
            }
        });
        if !changed {
            break;
        }
        stats.changing_sweeps += 1;
    }
    for s in grid.state_mut() {
        *s = CellState::Frozen;
    }
    stats
}

/// Lock Sweeping: FSM that only evaluates unlocked cells. Unlocked cells are
/// [`CellState::Narrow`], locked ones [`CellState::Frozen`]. An improved cell
/// unlocks every neighbor whose time is larger than its new value.
pub fn lsm_propagate(grid: &mut Grid, sources: &[usize]) -> SolveStats {
    let mut stats = SolveStats::default();
    for s in grid.state_mut() {
        *s = CellState::Frozen;
    }
    set_sources(grid, sources);
    for &s in sources {
        for j in neighbor_buf(grid, s) {
            if !grid.is_obstacle(j) && grid.time()[j] > 0.0 {
                grid.state_mut()[j] = CellState::Narrow;
            }
        }
    }

    let dims = grid.dims().to_vec();
    let strides = grid.strides().to_vec();
    let mut dirs = SweepDirs::forward(dims.len());
    loop {
        dirs.advance();
        stats.sweeps += 1;
        let mut changed = false;
        for_each_in_sweep(&dims, &strides, dirs.as_slice(), |i| {
            if grid.state()[i] != CellState::Narrow {
                return;
            }
            let t = solve_eikonal(grid, i);
            stats.evaluations += 1;
            if t < grid.time()[i] {
                grid.time_mut()[i] = t;
                changed = true;
                for j in neighbor_buf(grid, i) {
                    if t < grid.time()[j] && !grid.is_obstacle(j) {
                        grid.state_mut()[j] = CellState::Narrow;
                    }
                }
            }
            grid.state_mut()[i] = CellState::Frozen;
        });
        if !changed {
            break;
        }
        stats.changing_sweeps += 1;
    }
    stats
}

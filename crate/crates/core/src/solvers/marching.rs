//! Label-setting solvers: FMM over any [`NarrowBand`] and the simplified
//! variant over a plain priority queue.

use super::{neighbor_buf, SolveStats};
use crate::error::SolveError;
use crate::grid::{CellState, Grid};
use crate::structures::{KeyedEntry, NarrowBand, PriorityQueue};
use crate::update::solve_eikonal;

/// Fast Marching over `band`. A binary heap gives FMM, a Fibonacci heap
/// FMMFib and an untidy queue UFMM.
///
/// Pops that come out below the previous key are counted in
/// [`SolveStats::key_regressions`]; only the untidy queue produces them.
pub fn fmm_propagate<Q: NarrowBand>(
    grid: &mut Grid,
    sources: &[usize],
    band: &mut Q,
) -> Result<SolveStats, SolveError> {
    let mut stats = SolveStats::default();
    for &s in sources {
        grid.time_mut()[s] = 0.0;
        grid.state_mut()[s] = CellState::Narrow;
        band.push(KeyedEntry::new(s, 0.0))?;
    }

    let mut last_key = f64::NEG_INFINITY;
    while let Some(min) = band.pop() {
        stats.pops += 1;
        if min.key < last_key {
            stats.key_regressions += 1;
        }
        last_key = min.key;
        grid.state_mut()[min.cell] = CellState::Frozen;
        stats.freezes += 1;

        for j in neighbor_buf(grid, min.cell) {
            let state = grid.state()[j];
            if state == CellState::Frozen {
                continue;
            }
            let t = solve_eikonal(grid, j);
            stats.evaluations += 1;
            if t < grid.time()[j] {
                grid.time_mut()[j] = t;
                if state == CellState::Narrow {
                    band.decrease(j, t)?;
                }
            }
            if state == CellState::Unknown {
                grid.state_mut()[j] = CellState::Narrow;
                band.push(KeyedEntry::new(j, grid.time()[j]))?;
            }
        }
    }
    Ok(stats)
}

/// Simplified FMM: every improvement is a fresh push; popped cells that are
/// already frozen are stale copies and are dropped.
pub fn sfmm_propagate(grid: &mut Grid, sources: &[usize]) -> SolveStats {
    let mut stats = SolveStats::default();
    let mut queue = PriorityQueue::with_capacity(grid.len() / 4);
    for &s in sources {
        grid.time_mut()[s] = 0.0;
        grid.state_mut()[s] = CellState::Narrow;
        queue.push(KeyedEntry::new(s, 0.0));
    }

    let mut last_key = f64::NEG_INFINITY;
    while let Some(min) = queue.pop_min() {
        if grid.state()[min.cell] == CellState::Frozen {
            continue;
        }
        stats.pops += 1;
        if min.key < last_key {
            stats.key_regressions += 1;
        }
        last_key = min.key;
        grid.state_mut()[min.cell] = CellState::Frozen;
        stats.freezes += 1;

        for j in neighbor_buf(grid, min.cell) {
            if grid.state()[j] == CellState::Frozen {
                continue;
            }
            let t = solve_eikonal(grid, j);
            stats.evaluations += 1;
            if t < grid.time()[j] {
                grid.time_mut()[j] = t;
                grid.state_mut()[j] = CellState::Narrow;
                queue.push(KeyedEntry::new(j, t));
            }
        }
    }
    stats
}

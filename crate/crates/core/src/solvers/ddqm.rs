//! Double Dynamic Queue Method.

use super::{neighbor_buf, SolveStats};
use crate::grid::{CellState, Grid};
use crate::structures::DoubleQueue;
use crate::update::solve_eikonal;

/// Initial threshold step: `1.5 h n / sum(F)` over all `n` cells.
pub fn ddqm_initial_step(grid: &Grid) -> f64 {
    let total: f64 = grid.velocity().iter().sum();
    1.5 * grid.h() * grid.len() as f64 / total
}

/// DDQM: two FIFO queues split by an adaptive time threshold. Unlocked
/// cells are [`CellState::Narrow`], locked ones [`CellState::Frozen`]; an
/// improved cell unlocks each locked neighbor with a larger time and routes
/// it by the improved cell's new value.
pub fn ddqm_propagate(grid: &mut Grid, sources: &[usize]) -> SolveStats {
    let mut stats = SolveStats::default();
    let mut queues = DoubleQueue::new(ddqm_initial_step(grid));
    for s in grid.state_mut() {
        *s = CellState::Frozen;
    }
    for &s in sources {
        grid.time_mut()[s] = 0.0;
    }
    for &s in sources {
        for j in neighbor_buf(grid, s) {
            if grid.state()[j] == CellState::Frozen && !grid.is_obstacle(j) && grid.time()[j] > 0.0
            {
                grid.state_mut()[j] = CellState::Narrow;
                queues.seed(j);
            }
        }
    }

    while !queues.is_empty() {
        while let Some(i) = queues.pop_first() {
            let t = solve_eikonal(grid, i);
            stats.evaluations += 1;
            if t < grid.time()[i] {
                grid.time_mut()[i] = t;
                for j in neighbor_buf(grid, i) {
                    if grid.state()[j] == CellState::Frozen
                        && t < grid.time()[j]
                        && !grid.is_obstacle(j)
                    {
                        grid.state_mut()[j] = CellState::Narrow;
                        queues.push(j, t);
                    }
                }
            }
            grid.state_mut()[i] = CellState::Frozen;
        }
        queues.swap_and_retune();
        stats.iterations += 1;
    }
    stats
}

//! Fast Iterative Method (sequential).

use super::cell_list::CellList;
use super::{neighbor_buf, SolveStats};
use crate::grid::{CellState, Grid};
use crate::update::solve_eikonal;

/// Smallest convergence threshold used, so `epsilon = 0` still compares
/// robustly.
pub const FIM_MIN_EPSILON: f64 = 1e-47;

/// FIM: repeatedly passes over an unsorted active list. A cell whose update
/// moves it by less than `epsilon` is retired and activates each inactive
/// neighbor its value improves; activated cells enter the list just before
/// the retiring cell. Active cells are [`CellState::Narrow`].
pub fn fim_propagate(grid: &mut Grid, sources: &[usize], epsilon: f64) -> SolveStats {
    let eps = epsilon.max(FIM_MIN_EPSILON);
    let mut stats = SolveStats::default();
    let mut is_source = vec![false; grid.len()];
    let mut active = CellList::new(grid.len());
    for &s in sources {
        grid.time_mut()[s] = 0.0;
        grid.state_mut()[s] = CellState::Frozen;
        is_source[s] = true;
    }
    for &s in sources {
        for j in neighbor_buf(grid, s) {
            if !is_source[j] && !grid.is_obstacle(j) && grid.state()[j] != CellState::Narrow {
                grid.state_mut()[j] = CellState::Narrow;
                active.push_back(j);
            }
        }
    }

    while !active.is_empty() {
        stats.iterations += 1;
        let mut cursor = active.head();
        while let Some(i) = cursor {
            cursor = active.next(i);
            let old = grid.time()[i];
            let new = solve_eikonal(grid, i).min(old);
            grid.time_mut()[i] = new;
            stats.evaluations += 1;
            stats.list_evaluations += 1;
            if !(new == old || (new - old).abs() < eps) {
                continue;
            }
            for j in neighbor_buf(grid, i) {
                if is_source[j] || grid.is_obstacle(j) || grid.state()[j] == CellState::Narrow {
                    continue;
                }
                let t = solve_eikonal(grid, j);
                stats.evaluations += 1;
                if t < grid.time()[j] {
                    grid.time_mut()[j] = t;
                    grid.state_mut()[j] = CellState::Narrow;
                    active.insert_before(i, j);
                }
            }
            active.remove(i);
            grid.state_mut()[i] = CellState::Frozen;
            stats.freezes += 1;
        }
    }
    stats
}

//! Group Marching Method.

use super::cell_list::CellList;
use super::{neighbor_buf, SolveStats};
use crate::grid::{CellState, Grid};
use crate::update::solve_eikonal;

/// Group width in time units: the time a front at the fastest speed needs
/// to cross one cell, `h / max(F)`.
pub fn gmm_delta_tau(grid: &Grid) -> f64 {
    grid.h() / grid.max_velocity()
}

/// Evaluates every non-frozen neighbor of `i`. With `admit`, unknown
/// neighbors join the narrow list.
fn update_neighbors(
    grid: &mut Grid,
    i: usize,
    narrow: &mut CellList,
    admit: bool,
    stats: &mut SolveStats,
) {
    for j in neighbor_buf(grid, i) {
        let state = grid.state()[j];
        if state == CellState::Frozen {
            continue;
        }
        let t = solve_eikonal(grid, j);
        stats.evaluations += 1;
        if t < grid.time()[j] {
            grid.time_mut()[j] = t;
        }
        if admit && state == CellState::Unknown {
            grid.state_mut()[j] = CellState::Narrow;
            narrow.push_back(j);
        }
    }
}

/// Reverse pass over the group `T <= t_m`; returns whether it was non-empty.
fn reverse_pass(grid: &mut Grid, t_m: f64, narrow: &mut CellList, stats: &mut SolveStats) -> bool {
    let mut found = false;
    let mut cursor = narrow.tail();
    while let Some(i) = cursor {
        cursor = narrow.prev(i);
        if grid.time()[i] <= t_m {
            found = true;
            update_neighbors(grid, i, narrow, false, stats);
        }
    }
    found
}

/// GMM: each iteration advances the threshold `t_m` by [`gmm_delta_tau`]
/// and treats the narrow cells with `T <= t_m` as a group. The group's
/// neighbors are updated in a reverse pass over the narrow list. A forward
/// pass then re-solves each group cell, updates its neighbors again, admits
/// unknown neighbors at the end of the list and freezes the cell. The
/// forward pass runs to the end of the list, so admitted cells already
/// below `t_m` are frozen in the same iteration.
pub fn gmm_propagate(grid: &mut Grid, sources: &[usize]) -> SolveStats {
    let mut stats = SolveStats::default();
    let delta_tau = gmm_delta_tau(grid);
    let mut narrow = CellList::new(grid.len());
    for &s in sources {
        grid.time_mut()[s] = 0.0;
        grid.state_mut()[s] = CellState::Frozen;
        stats.freezes += 1;
    }
    let mut t_m = f64::INFINITY;
    for &s in sources {
        for j in neighbor_buf(grid, s) {
            let state = grid.state()[j];
            if state == CellState::Frozen {
                continue;
            }
            let t = solve_eikonal(grid, j);
            stats.evaluations += 1;
            if t < grid.time()[j] {
                grid.time_mut()[j] = t;
            }
            t_m = t_m.min(grid.time()[j]);
            if state == CellState::Unknown {
                grid.state_mut()[j] = CellState::Narrow;
                narrow.push_back(j);
            }
        }
    }

    while !narrow.is_empty() {
        t_m += delta_tau;
        stats.iterations += 1;
        if !reverse_pass(grid, t_m, &mut narrow, &mut stats) {
            // Skip the iterations whose groups would all be empty.
            let mut min = f64::INFINITY;
            let mut cursor = narrow.head();
            while let Some(i) = cursor {
                min = min.min(grid.time()[i]);
                cursor = narrow.next(i);
            }
            t_m += ((min - t_m) / delta_tau).ceil() * delta_tau;
            t_m = t_m.max(min);
            reverse_pass(grid, t_m, &mut narrow, &mut stats);
        }

        let mut cursor = narrow.head();
        while let Some(i) = cursor {
            if grid.time()[i] > t_m {
                cursor = narrow.next(i);
                continue;
            }
            let t = solve_eikonal(grid, i);
            stats.evaluations += 1;
            if t < grid.time()[i] {
                grid.time_mut()[i] = t;
            }
            update_neighbors(grid, i, &mut narrow, true, &mut stats);
            cursor = narrow.next(i);
            narrow.remove(i);
            grid.state_mut()[i] = CellState::Frozen;
            stats.freezes += 1;
        }
    }
    stats
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::{solve, SolverKind, SolverParams};

    #[test]
    fn delta_tau_from_fastest_cell() {
        let g = Grid::with_velocity(&[3], 1.0, vec![1.0, 2.0, 0.5]).unwrap();
        assert_eq!(gmm_delta_tau(&g), 0.5);
    }

    #[test]
    fn checkerboard_matches_fmm() {
        let s = crate::bench::gen_checkerboard(2, 100, 100.0, 10).unwrap();
        let mut a = s.grid.clone();
        let mut b = s.grid.clone();
        solve(
            SolverKind::Fmm,
            &mut a,
            &s.sources,
            &SolverParams::default(),
        )
        .unwrap();
        solve(
            SolverKind::Gmm,
            &mut b,
            &s.sources,
            &SolverParams::default(),
        )
        .unwrap();
        for (x, y) in a.time().iter().zip(b.time()) {
            assert!((x - y).abs() < 1e-9, "{x} vs {y}");
        }
    }

    #[test]
    fn empty_map_matches_fmm_and_freezes_once() {
        let mut a = Grid::new(&[50, 50], 0.02).unwrap();
        let mut b = a.clone();
        let c = a.center();
        solve(SolverKind::Fmm, &mut a, &[c], &SolverParams::default()).unwrap();
        let stats = solve(SolverKind::Gmm, &mut b, &[c], &SolverParams::default()).unwrap();
        let worst = a
            .time()
            .iter()
            .zip(b.time())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        assert!(worst < 1e-9, "max diff {worst}");
        assert_eq!(stats.freezes, b.len() as u64);
    }
}

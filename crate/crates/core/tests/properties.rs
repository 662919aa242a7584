//! Solver-level properties checked on small generated grids.

use eikonal_core::bench::gen_empty;
use eikonal_core::grid::Grid;
use eikonal_core::solvers::{solve, SolverKind, SolverParams};
use eikonal_core::structures::UntidyQueueConfig;
use eikonal_core::update::solve_eikonal;
use proptest::prelude::*;

const TOL: f64 = 1e-9;

fn solved(kind: SolverKind, grid: &Grid, sources: &[usize], params: &SolverParams) -> Grid {
    let mut g = grid.clone();
    solve(kind, &mut g, sources, params).expect("solver runs");
    g
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| if x == y { 0.0 } else { (x - y).abs() })
        .fold(0.0, f64::max)
}

/// A 2D or 3D grid with speeds in [0.5, 5], roughly a fifth of the cells
/// blocked, and one or two open source cells.
fn scenario() -> impl Strategy<Value = (Grid, Vec<usize>)> {
    (proptest::collection::vec(2usize..12, 2..4), 0.05..1.0f64)
        .prop_flat_map(|(dims, h)| {
            let n: usize = dims.iter().product();
            let speeds =
                proptest::collection::vec(prop_oneof![1 => Just(0.0), 4 => 0.5..5.0f64], n);
            let picks = proptest::collection::vec(0..n, 1..3);
            (Just(dims), Just(h), speeds, picks)
        })
        .prop_map(|(dims, h, mut speeds, picks)| {
            for &p in &picks {
                if speeds[p] == 0.0 {
                    speeds[p] = 1.0;
                }
            }
            let mut sources = picks;
            sources.sort_unstable();
            sources.dedup();
            (Grid::with_velocity(&dims, h, speeds).unwrap(), sources)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_solvers_agree_with_fmm((grid, sources) in scenario()) {
        let params = SolverParams::default();
        let reference = solved(SolverKind::Fmm, &grid, &sources, &params);
        for kind in SolverKind::EXACT {
            let g = solved(kind, &grid, &sources, &params);
            let d = max_abs_diff(g.time(), reference.time());
            prop_assert!(d <= TOL, "{kind}: max diff {d}");
        }
    }

    #[test]
    fn exact_fields_are_fixed_points((grid, sources) in scenario()) {
        let params = SolverParams::default();
        for kind in SolverKind::EXACT {
            let g = solved(kind, &grid, &sources, &params);
            for i in 0..g.len() {
                if sources.contains(&i) || !g.time()[i].is_finite() {
                    continue;
                }
                let r = (solve_eikonal(&g, i) - g.time()[i]).abs();
                prop_assert!(r <= TOL, "{kind}: residual {r} at cell {i}");
            }
        }
    }

    #[test]
    fn scaling_speed_divides_times((grid, sources) in scenario(), s in 0.1..20.0f64) {
        let fast = Grid::with_velocity(
            grid.dims(),
            grid.h(),
            grid.velocity().iter().map(|f| f * s).collect(),
        )
        .unwrap();
        let params = SolverParams::default();
        for kind in SolverKind::EXACT {
            let slow = solved(kind, &grid, &sources, &params);
            let quick = solved(kind, &fast, &sources, &params);
            for (a, b) in quick.time().iter().zip(slow.time()) {
                if b.is_finite() {
                    prop_assert!((a - b / s).abs() <= TOL * (1.0 + b / s), "{kind}: {a} vs {}", b / s);
                } else {
                    prop_assert!(a.is_infinite());
                }
            }
        }
    }

    #[test]
    fn obstacles_and_unreachable_cells_stay_infinite((grid, sources) in scenario()) {
        for kind in SolverKind::ALL {
            let g = solved(kind, &grid, &sources, &SolverParams::default());
            for i in 0..g.len() {
                if grid.is_obstacle(i) {
                    prop_assert!(g.time()[i].is_infinite(), "{kind}: obstacle {i} got a time");
                } else {
                    prop_assert!(g.time()[i] >= 0.0);
                }
            }
            let reference = solved(SolverKind::Fmm, &grid, &sources, &SolverParams::default());
            for i in 0..g.len() {
                prop_assert_eq!(g.time()[i].is_finite(), reference.time()[i].is_finite());
            }
        }
    }

    #[test]
    fn ufmm_single_bucket_still_finishes((grid, sources) in scenario()) {
        let params = SolverParams {
            ufmm: UntidyQueueConfig::new(1, 1e6).unwrap(),
            ..SolverParams::default()
        };
        let reference = solved(SolverKind::Fmm, &grid, &sources, &params);
        let g = solved(SolverKind::Ufmm, &grid, &sources, &params);
        for i in 0..g.len() {
            prop_assert_eq!(g.time()[i].is_finite(), reference.time()[i].is_finite());
            prop_assert!(g.time()[i] >= reference.time()[i] - TOL);
        }
    }

    #[test]
    fn fim_list_work_is_bounded((grid, sources) in scenario()) {
        let mut g = grid.clone();
        let stats = solve(SolverKind::Fim, &mut g, &sources, &SolverParams::default()).unwrap();
        prop_assert!(stats.list_evaluations <= stats.evaluations);
        let reachable = g.time().iter().filter(|t| t.is_finite()).count() as u64;
        prop_assert!(stats.iterations <= reachable + 1);
    }
}

/// Splits a 20x20 map with a full wall on row 10 of axis 1.
fn walled() -> Grid {
    let dims = [20, 20];
    let mut v = vec![1.0; 400];
    for x in 0..20 {
        v[x + 10 * 20] = 0.0;
    }
    Grid::with_velocity(&dims, 0.05, v).unwrap()
}

#[test]
fn wall_blocks_the_far_side() {
    let grid = walled();
    let source = grid.flat_index(&[5, 3]).unwrap();
    let open = Grid::new(&[20, 20], 0.05).unwrap();
    for kind in SolverKind::ALL {
        let g = solved(kind, &grid, &[source], &SolverParams::default());
        let free = solved(kind, &open, &[source], &SolverParams::default());
        for i in 0..g.len() {
            let y = g.coord(i, 1);
            assert_eq!(g.time()[i].is_infinite(), y >= 10, "{kind} at {i}");
        }
        assert!(
            (0..g.len()).any(|i| free.time()[i] < g.time()[i]),
            "{kind}: removing the wall changed nothing"
        );
    }
}

/// Fields of `[a, b]`, `[a]` and `[b]` plus the pointwise min of the last two.
fn merged_and_min(
    kind: SolverKind,
    grid: &Grid,
    a: usize,
    b: usize,
) -> (Grid, Grid, Grid, Vec<f64>) {
    let params = SolverParams::default();
    let both = solved(kind, grid, &[a, b], &params);
    let ta = solved(kind, grid, &[a], &params);
    let tb = solved(kind, grid, &[b], &params);
    let min = ta
        .time()
        .iter()
        .zip(tb.time())
        .map(|(x, y)| x.min(*y))
        .collect();
    (both, ta, tb, min)
}

#[test]
fn second_source_matches_pointwise_min_away_from_the_meeting_line() {
    let grid = Grid::new(&[60, 40], 0.025).unwrap();
    let a = grid.flat_index(&[10, 10]).unwrap();
    let b = grid.flat_index(&[45, 30]).unwrap();
    for kind in SolverKind::EXACT {
        let (both, ta, tb, min) = merged_and_min(kind, &grid, a, b);
        for (i, &m) in min.iter().enumerate() {
            assert!(
                both.time()[i] <= m + 1e-12,
                "{kind}: cell {i} above the min"
            );
            if (ta.time()[i] - tb.time()[i]).abs() > 8.0 * grid.h() {
                let d = (both.time()[i] - m).abs();
                assert!(d <= TOL, "{kind}: cell {i} off by {d}");
            }
        }
    }
}

#[test]
fn sources_on_both_sides_of_a_wall_give_pointwise_min() {
    let grid = walled();
    let a = grid.flat_index(&[5, 3]).unwrap();
    let b = grid.flat_index(&[12, 16]).unwrap();
    for kind in SolverKind::EXACT {
        let (both, _, _, min) = merged_and_min(kind, &grid, a, b);
        assert_eq!(max_abs_diff(both.time(), &min), 0.0, "{kind}");
    }
}

#[test]
fn fmm_on_empty_map_approaches_distance() {
    for (n, bound) in [(50, 0.03), (200, 0.01)] {
        let s = gen_empty(2, n).unwrap();
        let g = solved(
            SolverKind::Fmm,
            &s.grid,
            &s.sources,
            &SolverParams::default(),
        );
        let h = g.h();
        let c = s.grid.coords_of(s.sources[0]).unwrap();
        for i in 0..g.len() {
            let dx = (g.coord(i, 0) as f64 - c[0] as f64) * h;
            let dy = (g.coord(i, 1) as f64 - c[1] as f64) * h;
            let exact = (dx * dx + dy * dy).sqrt();
            assert!(g.time()[i] >= exact - 1e-12);
            assert!(
                g.time()[i] - exact <= bound,
                "n={n}: {} vs {exact}",
                g.time()[i]
            );
        }
    }
}

#[test]
fn fim_work_on_empty_maps() {
    for (ndims, cells) in [(2, 100), (3, 22), (4, 10)] {
        let s = gen_empty(ndims, cells).unwrap();
        let mut g = s.grid.clone();
        let stats = solve(
            SolverKind::Fim,
            &mut g,
            &s.sources,
            &SolverParams::default(),
        )
        .unwrap();
        let n = g.len() as u64;
        assert!(
            stats.list_evaluations <= 4 * n,
            "{ndims}D: {} list evaluations for {n} cells",
            stats.list_evaluations
        );
        if ndims == 2 {
            assert!(
                stats.evaluations <= 4 * n,
                "{} evaluations for {n} cells",
                stats.evaluations
            );
        }
    }
}

//! Python module `eikonal`: grids, solvers, benchmark generators, error
//! norms and grid files.

use std::collections::HashMap;

use eikonal_core::bench::{self, Scenario};
use eikonal_core::grid::Grid;
use eikonal_core::solvers::{self, SolverKind, SolverParams, StartSet};
use eikonal_core::structures::UntidyQueueConfig;
use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn format_err(e: eikonal_core::FormatError) -> PyErr {
    match e {
        eikonal_core::FormatError::Io(io) => PyIOError::new_err(io.to_string()),
        other => value_err(other),
    }
}

/// Velocity grid with its latest arrival-time field.
#[pyclass(name = "Grid", module = "eikonal")]
pub struct PyGrid {
    inner: Grid,
}

#[pymethods]
impl PyGrid {
    /// `velocity` defaults to 1 everywhere; cells with velocity 0 are
    /// obstacles.
    #[new]
    #[pyo3(signature = (dims, h, velocity = None))]
    fn new(dims: Vec<usize>, h: f64, velocity: Option<Vec<f64>>) -> PyResult<Self> {
        let inner = match velocity {
            Some(v) => Grid::with_velocity(&dims, h, v),
            None => Grid::new(&dims, h),
        }
        .map_err(value_err)?;
        Ok(PyGrid { inner })
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        let inner = eikonal_core::io::load_grid(path).map_err(format_err)?;
        Ok(PyGrid { inner })
    }

    fn save(&self, path: &str) -> PyResult<()> {
        eikonal_core::io::save_grid(path, &self.inner).map_err(format_err)
    }

    fn save_time(&self, path: &str) -> PyResult<()> {
        eikonal_core::io::save_time(path, &self.inner).map_err(format_err)
    }

    #[getter]
    fn dims(&self) -> Vec<usize> {
        self.inner.dims().to_vec()
    }

    #[getter]
    fn h(&self) -> f64 {
        self.inner.h()
    }

    #[getter]
    fn ndims(&self) -> usize {
        self.inner.ndims()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    /// Velocity per cell in flat order (axis 0 fastest).
    fn velocity(&self) -> Vec<f64> {
        self.inner.velocity().to_vec()
    }

    /// Arrival time per cell in flat order; unreached cells are `inf`.
    fn time(&self) -> Vec<f64> {
        self.inner.time().to_vec()
    }

    fn time_at(&self, coords: Vec<usize>) -> PyResult<f64> {
        let i = self.inner.flat_index(&coords).map_err(value_err)?;
        Ok(self.inner.time()[i])
    }

    fn flat_index(&self, coords: Vec<usize>) -> PyResult<usize> {
        self.inner.flat_index(&coords).map_err(value_err)
    }

    fn coords_of(&self, index: usize) -> PyResult<Vec<usize>> {
        self.inner.coords_of(index).map_err(value_err)
    }

    fn center(&self) -> Vec<usize> {
        self.inner
            .coords_of(self.inner.center())
            .expect("center is in range")
    }

    fn is_obstacle(&self, coords: Vec<usize>) -> PyResult<bool> {
        let i = self.inner.flat_index(&coords).map_err(value_err)?;
        Ok(self.inner.is_obstacle(i))
    }

    fn __repr__(&self) -> String {
        format!("Grid(dims={:?}, h={})", self.inner.dims(), self.inner.h())
    }
}

/// Names of all solvers accepted by [`solve`].
#[pyfunction]
fn solver_names() -> Vec<&'static str> {
    SolverKind::ALL.iter().map(|k| k.name()).collect()
}

/// Solves `grid` in place from the start cells (coordinate lists; the
/// center when omitted) and returns the work counters.
#[pyfunction]
#[pyo3(signature = (grid, solver = "FMM", sources = None, buckets = None, trange = None, epsilon = None))]
fn solve(
    grid: &mut PyGrid,
    solver: &str,
    sources: Option<Vec<Vec<usize>>>,
    buckets: Option<usize>,
    trange: Option<f64>,
    epsilon: Option<f64>,
) -> PyResult<HashMap<&'static str, u64>> {
    let kind: SolverKind = solver.parse().map_err(value_err)?;
    let g = &mut grid.inner;
    let start = match sources {
        Some(coords) => StartSet::from_coords(g, &coords),
        None => StartSet::new(g, &[g.center()]),
    }
    .map_err(value_err)?;
    let defaults = UntidyQueueConfig::default();
    let params = SolverParams {
        fim_epsilon: epsilon.unwrap_or(0.0),
        ufmm: UntidyQueueConfig {
            bucket_count: buckets.unwrap_or(defaults.bucket_count),
            t_range: trange.unwrap_or(defaults.t_range),
        },
    };
    params.validate().map_err(value_err)?;
    let s = solvers::propagate(kind, g, &start, &params).map_err(value_err)?;
    Ok(HashMap::from([
        ("evaluations", s.evaluations),
        ("list_evaluations", s.list_evaluations),
        ("pops", s.pops),
        ("key_regressions", s.key_regressions),
        ("freezes", s.freezes),
        ("sweeps", s.sweeps),
        ("changing_sweeps", s.changing_sweeps),
        ("iterations", s.iterations),
    ]))
}

fn scenario(s: Scenario) -> (PyGrid, Vec<Vec<usize>>) {
    let sources = s
        .sources
        .iter()
        .map(|&i| s.grid.coords_of(i).expect("source is in range"))
        .collect();
    (PyGrid { inner: s.grid }, sources)
}

/// Unit hypercube with velocity 1; returns `(grid, sources)`.
#[pyfunction]
fn gen_empty(ndims: usize, cells: usize) -> PyResult<(PyGrid, Vec<Vec<usize>>)> {
    bench::gen_empty(ndims, cells)
        .map(scenario)
        .map_err(value_err)
}

#[pyfunction]
#[pyo3(signature = (ndims, barrier_count, scale = 1.0))]
fn gen_barriers(
    ndims: usize,
    barrier_count: usize,
    scale: f64,
) -> PyResult<(PyGrid, Vec<Vec<usize>>)> {
    bench::gen_barriers(ndims, barrier_count, scale)
        .map(scenario)
        .map_err(value_err)
}

#[pyfunction]
fn gen_random(
    ndims: usize,
    cells: usize,
    fmax: f64,
    seed: u64,
) -> PyResult<(PyGrid, Vec<Vec<usize>>)> {
    bench::gen_random(ndims, cells, fmax, seed)
        .map(scenario)
        .map_err(value_err)
}

#[pyfunction]
#[pyo3(signature = (ndims, cells, fmax, divisions = bench::DEFAULT_DIVISIONS))]
fn gen_checkerboard(
    ndims: usize,
    cells: usize,
    fmax: f64,
    divisions: usize,
) -> PyResult<(PyGrid, Vec<Vec<usize>>)> {
    bench::gen_checkerboard(ndims, cells, fmax, divisions)
        .map(scenario)
        .map_err(value_err)
}

/// `(L1, Linf)` of `a - b` over cells finite in both fields.
#[pyfunction]
fn error_norms(a: Vec<f64>, b: Vec<f64>, h: f64, ndims: usize) -> PyResult<(f64, f64)> {
    bench::error_norms(&a, &b, h, ndims).map_err(value_err)
}

/// Reads an arrival-time file as `(dims, h, values)`.
#[pyfunction]
fn load_time(path: &str) -> PyResult<(Vec<usize>, f64, Vec<f64>)> {
    let f = eikonal_core::io::load_time(path).map_err(format_err)?;
    Ok((f.dims, f.h, f.values))
}

#[pymodule]
pub fn eikonal(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGrid>()?;
    m.add_function(wrap_pyfunction!(solver_names, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(gen_empty, m)?)?;
    m.add_function(wrap_pyfunction!(gen_barriers, m)?)?;
    m.add_function(wrap_pyfunction!(gen_random, m)?)?;
    m.add_function(wrap_pyfunction!(gen_checkerboard, m)?)?;
    m.add_function(wrap_pyfunction!(error_norms, m)?)?;
    m.add_function(wrap_pyfunction!(load_time, m)?)?;
    Ok(())
}

//! Sequential Fast Methods for the Eikonal equation `|grad T| F = 1` on
//! N-dimensional Cartesian grids of cubic cells.
//!
//! The crate provides the grid and the first-order upwind update, the
//! narrow-band containers (binary heap, Fibonacci heap, untidy bucket queue,
//! double FIFO queue), nine solvers and a benchmark harness with scenario
//! generators and error norms.

pub mod bench;
pub mod error;
pub mod grid;
pub mod io;
pub mod solvers;
pub mod structures;
pub mod update;

pub use error::{BenchError, FormatError, GridError, NormError, QueueError, SolveError};
pub use grid::{CellState, Grid};
pub use solvers::{propagate, solve, SolveStats, SolverKind, SolverParams, StartSet};
pub use update::solve_eikonal;

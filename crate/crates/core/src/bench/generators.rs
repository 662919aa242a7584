//! Scenario generators for the four benchmark families.
//!
//! All generators are pure functions of their arguments. The random family
//! draws velocities from xoshiro256++ seeded through SplitMix64, so a seed
//! reproduces the same grid on every platform.

use std::fmt;
use std::str::FromStr;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::error::{BenchError, GridError};
use crate::grid::{Grid, OBSTACLE_VELOCITY};

/// Cells per axis of the empty-map ladders in 2D, 3D and 4D.
pub const EMPTY_LADDER_2D: [usize; 11] =
    [50, 100, 200, 400, 800, 1000, 1500, 2000, 2500, 3000, 4000];
pub const EMPTY_LADDER_3D: [usize; 11] = [14, 22, 34, 54, 86, 100, 131, 159, 184, 208, 252];
pub const EMPTY_LADDER_4D: [usize; 11] = [7, 10, 14, 20, 28, 32, 39, 45, 50, 55, 63];

/// Barrier counts swept by the barrier family.
pub const BARRIER_COUNTS: [usize; 10] = [0, 1, 2, 3, 4, 5, 6, 7, 8, 9];

/// Maximum velocities swept by the random and checkerboard families.
pub const FMAX_LADDER: [f64; 10] = [10.0, 20.0, 30.0, 40.0, 50.0, 60.0, 70.0, 80.0, 90.0, 100.0];

pub const DEFAULT_DIVISIONS: usize = 10;

/// Barrier gap width as a fraction of the axis it opens on.
pub const BARRIER_GAP_FRACTION: f64 = 0.1;

/// Near-corner start position as a fraction of each axis.
pub const CORNER_FRACTION: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Empty,
    Barriers,
    Random,
    Checkerboard,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Empty,
        Family::Barriers,
        Family::Random,
        Family::Checkerboard,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Empty => "empty",
            Family::Barriers => "barriers",
            Family::Random => "random",
            Family::Checkerboard => "checkerboard",
        }
    }

    /// Default start position of the family.
    pub fn default_start(self) -> StartPos {
        match self {
            Family::Barriers => StartPos::NearCorner,
            _ => StartPos::Center,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| BenchError::Spec(format!("unknown family {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StartPos {
    /// Cell `dims / 2` on every axis.
    Center,
    /// Cell at 5% of every axis.
    NearCorner,
}

impl StartPos {
    pub fn cell(self, grid: &Grid) -> usize {
        match self {
            StartPos::Center => grid.center(),
            StartPos::NearCorner => near_corner(grid),
        }
    }
}

/// A grid together with its start cells.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub grid: Grid,
    pub sources: Vec<usize>,
}

impl Scenario {
    fn with_start(grid: Grid, start: StartPos) -> Self {
        let sources = vec![start.cell(&grid)];
        Scenario { grid, sources }
    }
}

pub fn near_corner(grid: &Grid) -> usize {
    let coords: Vec<usize> = grid
        .dims()
        .iter()
        .map(|&d| ((d as f64 * CORNER_FRACTION) as usize).min(d - 1))
        .collect();
    grid.flat_index(&coords)
        .expect("corner coordinates are in range")
}

/// Standard ladder of cells per axis for the empty map.
pub fn empty_ladder(ndims: usize) -> Result<&'static [usize], BenchError> {
    match ndims {
        2 => Ok(&EMPTY_LADDER_2D),
        3 => Ok(&EMPTY_LADDER_3D),
        4 => Ok(&EMPTY_LADDER_4D),
        _ => Err(BenchError::Spec(format!(
            "no empty-map ladder for {ndims} dimensions"
        ))),
    }
}

/// Cells per axis of the random and checkerboard families.
pub fn velocity_family_cells(ndims: usize) -> Result<usize, BenchError> {
    match ndims {
        2 => Ok(2000),
        3 => Ok(159),
        4 => Ok(45),
        _ => Err(BenchError::Spec(format!(
            "no velocity-family size for {ndims} dimensions"
        ))),
    }
}

/// Full-resolution extents of the barrier domain (`[0,1]^(N-1) x [0,2]`).
pub fn barrier_dims(ndims: usize) -> Result<Vec<usize>, BenchError> {
    match ndims {
        2 => Ok(vec![1000, 2000]),
        3 => Ok(vec![100, 100, 200]),
        _ => Err(BenchError::Spec(format!(
            "barriers need 2 or 3 dimensions, got {ndims}"
        ))),
    }
}

/// `cells / scale`, rounded, at least 1.
pub fn scaled(cells: usize, scale: f64) -> usize {
    ((cells as f64 / scale).round() as usize).max(1)
}

fn cube(ndims: usize, cells: usize) -> Result<(Vec<usize>, f64), BenchError> {
    if ndims == 0 || cells == 0 {
        return Err(GridError::NoDimensions.into());
    }
    Ok((vec![cells; ndims], 1.0 / cells as f64))
}

/// Unit hypercube with `F = 1`, started at the center.
pub fn gen_empty(ndims: usize, cells: usize) -> Result<Scenario, BenchError> {
    let (dims, h) = cube(ndims, cells)?;
    Ok(Scenario::with_start(Grid::new(&dims, h)?, StartPos::Center))
}

/// Barrier domain at the given resolution divisor.
pub fn gen_barriers(
    ndims: usize,
    barrier_count: usize,
    scale: f64,
) -> Result<Scenario, BenchError> {
    let dims: Vec<usize> = barrier_dims(ndims)?
        .into_iter()
        .map(|d| scaled(d, scale))
        .collect();
    gen_barriers_in(&dims, barrier_count)
}

/// Alternating barriers on explicit extents.
///
/// Barriers are one-cell slabs of `F = 0` perpendicular to the last axis,
/// placed at `round((k + 1) L / (count + 1))` along it. Each spans every
/// other axis except for a gap of `max(1, round(0.1 W))` cells on axis 0,
/// on the high side for even `k` and the low side for odd `k`. `h` is one
/// over the axis-0 extent; the start is the near-corner cell.
pub fn gen_barriers_in(dims: &[usize], barrier_count: usize) -> Result<Scenario, BenchError> {
    if dims.len() < 2 {
        return Err(BenchError::Spec(
            "barriers need at least 2 dimensions".into(),
        ));
    }
    let mut grid = Grid::new(dims, 1.0 / dims[0] as f64)?;
    let long = dims.len() - 1;
    let length = dims[long];
    let width = dims[0];
    if barrier_count >= length {
        return Err(BenchError::Spec(format!(
            "{barrier_count} barriers do not fit along {length} cells"
        )));
    }
    let gap = ((width as f64 * BARRIER_GAP_FRACTION).round() as usize).max(1);
    if gap >= width && barrier_count > 0 {
        return Err(BenchError::Spec(format!(
            "axis 0 with {width} cells is too narrow for a barrier gap"
        )));
    }
    let stations: Vec<usize> = (0..barrier_count)
        .map(|k| (((k + 1) * length) as f64 / (barrier_count + 1) as f64).round() as usize)
        .collect();
    let strides = grid.strides().to_vec();
    let mut velocity = grid.velocity().to_vec();
    for (i, v) in velocity.iter_mut().enumerate() {
        let along = (i / strides[long]) % length;
        if let Some(k) = stations.iter().position(|&s| s == along) {
            let x = i % width;
            let blocked = if k % 2 == 0 {
                x < width - gap
            } else {
                x >= gap
            };
            if blocked {
                *v = OBSTACLE_VELOCITY;
            }
        }
    }
    grid = Grid::with_velocity(dims, grid.h(), velocity)?;
    Ok(Scenario::with_start(grid, StartPos::NearCorner))
}

/// Unit hypercube with `F` uniform on `[1, fmax]`, started at the center.
///
/// Cells are filled in flat order with `F = 1 + (fmax - 1) u`, where `u` is
/// the top 53 bits of successive xoshiro256++ outputs scaled to `[0, 1)`;
/// the generator state comes from SplitMix64 applied to `seed`.
pub fn gen_random(
    ndims: usize,
    cells: usize,
    fmax: f64,
    seed: u64,
) -> Result<Scenario, BenchError> {
    if !(fmax >= 1.0 && fmax.is_finite()) {
        return Err(BenchError::Spec(format!(
            "fmax must be at least 1, got {fmax}"
        )));
    }
    let (dims, h) = cube(ndims, cells)?;
    let n: usize = dims.iter().product();
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let velocity = (0..n)
        .map(|_| {
            let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
            1.0 + (fmax - 1.0) * u
        })
        .collect();
    Ok(Scenario::with_start(
        Grid::with_velocity(&dims, h, velocity)?,
        StartPos::Center,
    ))
}

/// Unit hypercube split into `divisions` blocks per axis; blocks with an
/// even coordinate sum have `F = 1`, odd ones `F = fmax`. Started at the
/// center.
pub fn gen_checkerboard(
    ndims: usize,
    cells: usize,
    fmax: f64,
    divisions: usize,
) -> Result<Scenario, BenchError> {
    if !(fmax > 0.0 && fmax.is_finite()) {
        return Err(BenchError::Spec(format!(
            "fmax must be positive, got {fmax}"
        )));
    }
    if divisions == 0 || divisions > cells {
        return Err(BenchError::Spec(format!(
            "divisions must be in 1..={cells}, got {divisions}"
        )));
    }
    let (dims, h) = cube(ndims, cells)?;
    let n: usize = dims.iter().product();
    let velocity = (0..n)
        .map(|i| {
            let mut rest = i;
            let mut parity = 0;
            for _ in 0..ndims {
                let c = rest % cells;
                rest /= cells;
                parity += c * divisions / cells;
            }
            if parity % 2 == 0 {
                1.0
            } else {
                fmax
            }
        })
        .collect();
    Ok(Scenario::with_start(
        Grid::with_velocity(&dims, h, velocity)?,
        StartPos::Center,
    ))
}

//! N-dimensional Cartesian grid with flat row-major storage (axis 0 fastest).

use crate::error::GridError;

/// Velocities at or below this value mark obstacle cells.
pub const OBSTACLE_VELOCITY: f64 = 0.0;

/// The three mutually exclusive cell sets used by the marching solvers.
///
/// Sweep and queue based solvers reuse `Narrow` as "unlocked" and `Frozen`
/// as "locked".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellState {
    Unknown,
    Narrow,
    Frozen,
}

/// Row-major flat index of `coords` in a grid of shape `dims`.
pub fn flat_index(coords: &[usize], dims: &[usize]) -> Result<usize, GridError> {
    if coords.len() != dims.len() {
        return Err(GridError::DimensionMismatch {
            expected: dims.len(),
            got: coords.len(),
        });
    }
    let mut index = 0;
    let mut stride = 1;
    for (axis, (&c, &d)) in coords.iter().zip(dims).enumerate() {
        if c >= d {
            return Err(GridError::CoordOutOfRange {
                axis,
                coord: c,
                extent: d,
            });
        }
        index += c * stride;
        stride *= d;
    }
    Ok(index)
}

/// Inverse of [`flat_index`].
pub fn coords_of(index: usize, dims: &[usize]) -> Result<Vec<usize>, GridError> {
    let len: usize = dims.iter().product();
    if index >= len {
        return Err(GridError::IndexOutOfRange { index, len });
    }
    let mut rest = index;
    Ok(dims
        .iter()
        .map(|&d| {
            let c = rest % d;
            rest /= d;
            c
        })
        .collect())
}

/// Cartesian grid of cubic cells holding velocity, arrival time and cell state.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    dims: Vec<usize>,
    strides: Vec<usize>,
    h: f64,
    velocity: Vec<f64>,
    time: Vec<f64>,
    state: Vec<CellState>,
}

impl Grid {
    /// Grid with unit velocity everywhere.
    pub fn new(dims: &[usize], h: f64) -> Result<Self, GridError> {
        let len = checked_len(dims)?;
        Self::with_velocity(dims, h, vec![1.0; len])
    }

    pub fn with_velocity(dims: &[usize], h: f64, velocity: Vec<f64>) -> Result<Self, GridError> {
        let len = checked_len(dims)?;
        if !(h > 0.0 && h.is_finite()) {
            return Err(GridError::InvalidSpacing(h));
        }
        if velocity.len() != len {
            return Err(GridError::LengthMismatch {
                expected: len,
                got: velocity.len(),
            });
        }
        if let Some(&bad) = velocity.iter().find(|v| !(v.is_finite() && **v >= 0.0)) {
            return Err(GridError::InvalidVelocity(bad));
        }
        let mut strides = Vec::with_capacity(dims.len());
        let mut s = 1;
        for &d in dims {
            strides.push(s);
            s *= d;
        }
        let mut grid = Grid {
            dims: dims.to_vec(),
            strides,
            h,
            velocity,
            time: vec![f64::INFINITY; len],
            state: vec![CellState::Unknown; len],
        };
        grid.reset();
        Ok(grid)
    }

    /// Clears arrival times to +inf; obstacles become `Frozen`, all else `Unknown`.
    pub fn reset(&mut self) {
        self.time.fill(f64::INFINITY);
        for (s, &f) in self.state.iter_mut().zip(&self.velocity) {
            *s = if f <= OBSTACLE_VELOCITY {
                CellState::Frozen
            } else {
                CellState::Unknown
            };
        }
    }

    #[inline]
    pub fn ndims(&self) -> usize {
        self.dims.len()
    }

    #[inline]
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    #[inline]
    pub fn strides(&self) -> &[usize] {
        &self.strides
    }

    #[inline]
    pub fn h(&self) -> f64 {
        self.h
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.velocity.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.velocity.is_empty()
    }

    #[inline]
    pub fn velocity(&self) -> &[f64] {
        &self.velocity
    }

    #[inline]
    pub fn time(&self) -> &[f64] {
        &self.time
    }

    #[inline]
    pub fn time_mut(&mut self) -> &mut [f64] {
        &mut self.time
    }

    pub fn into_time(self) -> Vec<f64> {
        self.time
    }

    #[inline]
    pub fn state(&self) -> &[CellState] {
        &self.state
    }

    #[inline]
    pub fn state_mut(&mut self) -> &mut [CellState] {
        &mut self.state
    }

    #[inline]
    pub fn is_obstacle(&self, index: usize) -> bool {
        self.velocity[index] <= OBSTACLE_VELOCITY
    }

    pub fn max_velocity(&self) -> f64 {
        self.velocity.iter().copied().fold(0.0, f64::max)
    }

    pub fn flat_index(&self, coords: &[usize]) -> Result<usize, GridError> {
        flat_index(coords, &self.dims)
    }

    pub fn coords_of(&self, index: usize) -> Result<Vec<usize>, GridError> {
        coords_of(index, &self.dims)
    }

    /// Coordinate of `index` along `axis`.
    #[inline]
    pub fn coord(&self, index: usize, axis: usize) -> usize {
        (index / self.strides[axis]) % self.dims[axis]
    }

    /// Von Neumann neighbors in the order axis 0 minus, axis 0 plus, axis 1 minus, ...
    #[inline]
    pub fn neighbors(&self, index: usize) -> Neighbors<'_> {
        debug_assert!(index < self.len());
        Neighbors {
            grid: self,
            index,
            axis: 0,
            plus: false,
        }
    }

    /// Minimum arrival time among the (one or two) neighbors of `index` along `axis`.
    #[inline]
    pub fn min_t_dim(&self, index: usize, axis: usize) -> f64 {
        let stride = self.strides[axis];
        let c = (index / stride) % self.dims[axis];
        let mut t = f64::INFINITY;
        if c > 0 {
            t = self.time[index - stride];
        }
        if c + 1 < self.dims[axis] {
            t = t.min(self.time[index + stride]);
        }
        t
    }

    /// Center cell: `dims[d] / 2` on every axis.
    pub fn center(&self) -> usize {
        let coords: Vec<usize> = self.dims.iter().map(|d| d / 2).collect();
        flat_index(&coords, &self.dims).expect("center is in range")
    }
}

fn checked_len(dims: &[usize]) -> Result<usize, GridError> {
    if dims.is_empty() {
        return Err(GridError::NoDimensions);
    }
    if let Some(axis) = dims.iter().position(|&d| d == 0) {
        return Err(GridError::EmptyAxis(axis));
    }
    dims.iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .ok_or(GridError::TooLarge)
}

/// Iterator over the in-bounds Von Neumann neighbors of a cell.
pub struct Neighbors<'a> {
    grid: &'a Grid,
    index: usize,
    axis: usize,
    plus: bool,
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        let ndims = self.grid.dims.len();
        while self.axis < ndims {
            let stride = self.grid.strides[self.axis];
            let c = (self.index / stride) % self.grid.dims[self.axis];
            if !self.plus {
                self.plus = true;
                if c > 0 {
                    return Some(self.index - stride);
                }
            } else {
                self.plus = false;
                self.axis += 1;
                if c + 1 < self.grid.dims[self.axis - 1] {
                    return Some(self.index + stride);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn flat_index_examples() {
        assert_eq!(flat_index(&[0, 0], &[50, 50]).unwrap(), 0);
        assert_eq!(flat_index(&[3, 2], &[5, 4]).unwrap(), 13);
        assert_eq!(flat_index(&[1, 1, 1], &[4, 4, 4]).unwrap(), 21);
    }

    #[test]
    fn coords_of_examples() {
        assert_eq!(coords_of(0, &[50, 50]).unwrap(), vec![0, 0]);
        assert_eq!(coords_of(13, &[5, 4]).unwrap(), vec![3, 2]);
        assert_eq!(coords_of(21, &[4, 4, 4]).unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn out_of_range_errors() {
        assert!(matches!(
            flat_index(&[5, 0], &[5, 4]),
            Err(GridError::CoordOutOfRange { axis: 0, .. })
        ));
        assert!(flat_index(&[1], &[5, 4]).is_err());
        assert!(matches!(
            coords_of(20, &[5, 4]),
            Err(GridError::IndexOutOfRange { index: 20, len: 20 })
        ));
    }

    #[test]
    fn round_trip_exhaustive_small() {
        for dims in [vec![7], vec![3, 5], vec![2, 3, 4], vec![3, 2, 2, 3]] {
            let len: usize = dims.iter().product();
            for i in 0..len {
                let c = coords_of(i, &dims).unwrap();
                assert_eq!(flat_index(&c, &dims).unwrap(), i);
            }
        }
    }

    #[test]
    fn neighbor_examples() {
        let g = Grid::new(&[3, 3], 1.0).unwrap();
        assert_eq!(g.neighbors(4).collect::<Vec<_>>(), vec![3, 5, 1, 7]);

        let g = Grid::new(&[50, 50], 1.0).unwrap();
        let n: Vec<_> = g.neighbors(0).collect();
        assert_eq!(
            n,
            vec![
                g.flat_index(&[1, 0]).unwrap(),
                g.flat_index(&[0, 1]).unwrap()
            ]
        );

        let g = Grid::new(&[4, 4, 4, 4], 1.0).unwrap();
        let interior = g.flat_index(&[1, 2, 1, 2]).unwrap();
        assert_eq!(g.neighbors(interior).count(), 8);
    }

    #[test]
    fn neighbors_symmetric_and_counted() {
        let g = Grid::new(&[4, 3, 5], 1.0).unwrap();
        for i in 0..g.len() {
            let c = g.coords_of(i).unwrap();
            let lost: usize = c
                .iter()
                .zip(g.dims())
                .map(|(&x, &d)| (x == 0) as usize + (x + 1 == d) as usize)
                .sum();
            let ns: Vec<_> = g.neighbors(i).collect();
            assert_eq!(ns.len(), 6 - lost);
            for j in ns {
                assert!(g.neighbors(j).any(|k| k == i));
            }
        }
    }

    #[test]
    fn single_cell_axis_has_no_neighbors_on_it() {
        let g = Grid::new(&[1, 3], 1.0).unwrap();
        assert_eq!(g.neighbors(1).collect::<Vec<_>>(), vec![0, 2]);
        let g = Grid::new(&[1], 1.0).unwrap();
        assert_eq!(g.neighbors(0).count(), 0);
    }

    #[test]
    fn min_t_dim_cases() {
        let mut g = Grid::new(&[3, 3], 1.0).unwrap();
        g.time_mut()[3] = 2.0;
        g.time_mut()[5] = 3.0;
        assert_eq!(g.min_t_dim(4, 0), 2.0);
        assert_eq!(g.min_t_dim(4, 1), f64::INFINITY);
        g.time_mut()[1] = 1.5;
        // (0,0) has a single axis-1 neighbor: index 3
        g.time_mut()[3] = 1.5;
        assert_eq!(g.min_t_dim(0, 1), 1.5);
        assert_eq!(g.min_t_dim(0, 0), 1.5);
    }

    #[test]
    fn obstacles_start_frozen() {
        let g = Grid::with_velocity(&[3], 1.0, vec![1.0, 0.0, 2.0]).unwrap();
        assert_eq!(
            g.state(),
            &[CellState::Unknown, CellState::Frozen, CellState::Unknown]
        );
        assert!(g.time().iter().all(|t| t.is_infinite()));
    }

    #[test]
    fn construction_errors() {
        assert!(Grid::new(&[], 1.0).is_err());
        assert!(Grid::new(&[3, 0], 1.0).is_err());
        assert!(Grid::new(&[3], 0.0).is_err());
        assert!(Grid::with_velocity(&[2], 1.0, vec![1.0]).is_err());
        assert!(Grid::with_velocity(&[2], 1.0, vec![1.0, -1.0]).is_err());
        assert!(Grid::with_velocity(&[2], 1.0, vec![1.0, f64::NAN]).is_err());
    }

    proptest! {
        #[test]
        fn prop_round_trip(dims in proptest::collection::vec(1usize..7, 1..5), seed in any::<u64>()) {
            let len: usize = dims.iter().product();
            let i = (seed % len as u64) as usize;
            let c = coords_of(i, &dims).unwrap();
            prop_assert_eq!(flat_index(&c, &dims).unwrap(), i);
        }
    }
}

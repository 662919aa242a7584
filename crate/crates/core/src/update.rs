//! First-order upwind Eikonal update for a single cell.
//!
//! Parents are included bottom-up: the one-sided update is solved first and
//! the next-smallest axis minimum is added while it is still below the
//! current solution.

use smallvec::SmallVec;

use crate::grid::Grid;

/// Coefficients of `a T^2 + b T + c = 0` for a solve with `a` parents.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticCoeffs {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl QuadraticCoeffs {
    /// Coefficients for the given parent times, cell spacing `h` and velocity `f`.
    pub fn from_parents(parents: &[f64], h: f64, f: f64) -> Self {
        let mut sum = 0.0;
        let mut sum_sq = 0.0;
        for &p in parents {
            sum += p;
            sum_sq += p * p;
        }
        Self::from_sums(parents.len(), sum, sum_sq, h, f)
    }

    #[inline]
    fn from_sums(count: usize, sum: f64, sum_sq: f64, h: f64, f: f64) -> Self {
        QuadraticCoeffs {
            a: count as f64,
            b: -2.0 * sum,
            c: sum_sq - (h * h) / (f * f),
        }
    }

    #[inline]
    pub fn discriminant(&self) -> f64 {
        self.b * self.b - 4.0 * self.a * self.c
    }

    /// Larger root, or +inf when the discriminant is negative.
    #[inline]
    pub fn larger_root(&self) -> f64 {
        let q = self.discriminant();
        if q < 0.0 {
            f64::INFINITY
        } else {
            (-self.b + q.sqrt()) / (2.0 * self.a)
        }
    }
}

/// Solves using the `dim_count` smallest of the ascending `sorted_parents`.
pub fn solve_n_dims(sorted_parents: &[f64], dim_count: usize, h: f64, f: f64) -> f64 {
    debug_assert!(dim_count >= 1 && dim_count <= sorted_parents.len());
    if dim_count == 1 {
        return sorted_parents[0] + h / f;
    }
    QuadraticCoeffs::from_parents(&sorted_parents[..dim_count], h, f).larger_root()
}

/// Bottom-up causal solve over ascending parent times.
///
/// Returns +inf for an empty parent list.
pub fn solve_sorted(sorted_parents: &[f64], h: f64, f: f64) -> f64 {
    let count = sorted_parents.len();
    if count == 0 {
        return f64::INFINITY;
    }
    // Running sums reproduce `solve_n_dims` bit for bit: same summation order.
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    let mut t = f64::INFINITY;
    for dim in 1..=count {
        let p = sorted_parents[dim - 1];
        sum += p;
        sum_sq += p * p;
        t = if dim == 1 {
            p + h / f
        } else {
            QuadraticCoeffs::from_sums(dim, sum, sum_sq, h, f).larger_root()
        };
        if dim == count || t < sorted_parents[dim] {
            break;
        }
    }
    t
}

/// Candidate arrival time of `index` from the current field.
///
/// Axes whose minimum neighbor time is infinite or not strictly below the
/// cell's current time are not used as parents.
#[inline]
pub fn solve_eikonal(grid: &Grid, index: usize) -> f64 {
    let current = grid.time()[index];
    let mut parents: SmallVec<[f64; 8]> = SmallVec::new();
    for axis in 0..grid.ndims() {
        let t = grid.min_t_dim(index, axis);
        if t.is_finite() && t < current {
            insert_sorted(&mut parents, t);
        }
    }
    solve_sorted(&parents, grid.h(), grid.velocity()[index])
}

/// Stable insertion: equal values keep arrival order.
#[inline]
fn insert_sorted(values: &mut SmallVec<[f64; 8]>, t: f64) {
    let pos = values.iter().rposition(|&v| v <= t).map_or(0, |p| p + 1);
    values.insert(pos, t);
}

//! Integral-form error norms.
//!
//! `L1 = h^N sum |T_i|` approximates the integral of `|T|` over the domain;
//! `Linf = max |T_i|`. Cells that are `+inf` (obstacles, unreachable cells)
//! are left out.

use crate::error::NormError;

pub fn l1_norm(field: &[f64], h: f64, ndims: usize) -> f64 {
    let sum: f64 = field
        .iter()
        .filter(|t| t.is_finite())
        .map(|t| t.abs())
        .sum();
    h.powi(ndims as i32) * sum
}

pub fn linf_norm(field: &[f64]) -> f64 {
    field
        .iter()
        .filter(|t| t.is_finite())
        .fold(0.0, |m, t| m.max(t.abs()))
}

/// `(L1, Linf)` of `field - reference`. Both fields must be infinite at the
/// same cells.
pub fn error_norms(
    field: &[f64],
    reference: &[f64],
    h: f64,
    ndims: usize,
) -> Result<(f64, f64), NormError> {
    if field.len() != reference.len() {
        return Err(NormError::ShapeMismatch(field.len(), reference.len()));
    }
    let mut diff = Vec::with_capacity(field.len());
    for (i, (&a, &b)) in field.iter().zip(reference).enumerate() {
        match (a.is_finite(), b.is_finite()) {
            (true, true) => diff.push(a - b),
            (false, false) => {}
            _ => return Err(NormError::MaskMismatch(i)),
        }
    }
    Ok((l1_norm(&diff, h, ndims), linf_norm(&diff)))
}

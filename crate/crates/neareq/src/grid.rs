//! Evenly spaced strategy grids with exact endpoints.

use crate::error::{Error, Result};

/// `steps + 1` points from `lo` to `hi` inclusive. Endpoints are exact;
/// interior points are `lo + (hi - lo) * j / steps`.
pub fn linear(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    assert!(steps >= 1, "a grid needs at least two points");
    let span = hi - lo;
    (0..=steps)
        .map(|j| {
            if j == steps {
                hi
            } else {
                lo + span * j as f64 / steps as f64
            }
        })
        .collect()
}

/// Grid over `[lo, hi]` with the given step. The step must divide the
/// interval length (to 1e-9 relative), otherwise the grid would miss
/// the upper endpoint.
pub fn from_step(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    let length = hi - lo;
    if !step.is_finite() || step <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "grid_step",
            value: step,
        });
    }
    let steps = (length / step).round();
    if steps < 1.0 || (steps * step - length).abs() > 1e-9 * length.max(1.0) {
        return Err(Error::StepDoesNotDivide { step, length });
    }
    Ok(linear(lo, hi, steps as usize))
}

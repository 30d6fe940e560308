//! Mixed strategies over real intervals.

use crate::error::{Error, Result};

/// A mixed strategy over a real interval, represented by its CDF and
/// quantile (inverse CDF).
///
/// For a proper continuous distribution on support `[lo, hi]` the CDF is
/// nondecreasing with `cdf(lo) = 0`, `cdf(hi) = 1`, and
/// `cdf(quantile(u))` recovers `u` to 1e-9. Degenerate point masses are
/// admitted as the pure-strategy special case (their CDF steps at the
/// atom, so the round trip does not apply).
pub trait StrategyDistribution {
    /// Closed support interval `(lo, hi)`.
    fn support(&self) -> (f64, f64);

    /// `Pr[strategy <= s]`. Total on all of `f64` (clamped outside the
    /// support).
    fn cdf(&self, s: f64) -> f64;

    /// Inverse CDF; callers guarantee `0 <= u <= 1`.
    fn quantile(&self, u: f64) -> f64;
}

/// Degenerate distribution placing all mass on one strategy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointMass(pub f64);

impl StrategyDistribution for PointMass {
    fn support(&self) -> (f64, f64) {
        (self.0, self.0)
    }

    fn cdf(&self, s: f64) -> f64 {
        if s < self.0 {
            0.0
        } else {
            1.0
        }
    }

    fn quantile(&self, _u: f64) -> f64 {
        self.0
    }
}

/// Inverse-transform sampling: map `u ∈ [0, 1]` to a strategy via the
/// distribution's quantile. Errors when `u` is outside `[0, 1]`.
pub fn inverse_transform_sample(dist: &dyn StrategyDistribution, u: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&u) {
        return Err(Error::ProbabilityOutOfRange { value: u });
    }
    let s = dist.quantile(u);
    debug_assert!(
        s >= dist.support().0 && s <= dist.support().1,
        "quantile left the support"
    );
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_mass_is_a_step() {
        let d = PointMass(2.5);
        assert_eq!(d.cdf(2.4999), 0.0);
        assert_eq!(d.cdf(2.5), 1.0);
        assert_eq!(d.quantile(0.0), 2.5);
        assert_eq!(d.quantile(1.0), 2.5);
    }

    #[test]
    fn sample_rejects_bad_probability() {
        let d = PointMass(0.0);
        assert!(inverse_transform_sample(&d, -0.1).is_err());
        assert!(inverse_transform_sample(&d, 1.1).is_err());
        assert!(inverse_transform_sample(&d, f64::NAN).is_err());
    }
}

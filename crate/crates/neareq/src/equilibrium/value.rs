//! Utilities that are either finite or negative infinity.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

/// A utility value: a finite real, or the distinguished element `NegInf`.
///
/// `NegInf` models outcomes like a disconnected network where a node's
/// cost diverges. It compares below every finite value, absorbs finite
/// addition, and produces `+inf` gains when a deviation escapes it (see
/// [`ExtendedValue::gain_over`]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedValue {
    NegInf,
    Finite(f64),
}

impl ExtendedValue {
    pub fn finite(value: f64) -> Self {
        debug_assert!(value.is_finite(), "finite utility expected, got {value}");
        ExtendedValue::Finite(value)
    }

    pub fn is_neg_inf(self) -> bool {
        matches!(self, ExtendedValue::NegInf)
    }

    /// Collapse to `f64`, mapping `NegInf` to `f64::NEG_INFINITY`.
    pub fn as_f64(self) -> f64 {
        match self {
            ExtendedValue::NegInf => f64::NEG_INFINITY,
            ExtendedValue::Finite(v) => v,
        }
    }

    /// Gain of `self` relative to `baseline`.
    ///
    /// finite − finite is the plain difference; escaping `NegInf` counts
    /// as `+inf` (it beats any finite ε), falling into it as `-inf`, and
    /// `NegInf` relative to `NegInf` is no improvement (0).
    pub fn gain_over(self, baseline: ExtendedValue) -> f64 {
        use ExtendedValue::*;
        match (self, baseline) {
            (Finite(a), Finite(b)) => a - b,
            (Finite(_), NegInf) => f64::INFINITY,
            (NegInf, Finite(_)) => f64::NEG_INFINITY,
            (NegInf, NegInf) => 0.0,
        }
    }
}

impl PartialOrd for ExtendedValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        use ExtendedValue::*;
        match (self, other) {
            (NegInf, NegInf) => Some(Ordering::Equal),
            (NegInf, Finite(_)) => Some(Ordering::Less),
            (Finite(_), NegInf) => Some(Ordering::Greater),
            (Finite(a), Finite(b)) => a.partial_cmp(b),
        }
    }
}

impl Add<f64> for ExtendedValue {
    type Output = ExtendedValue;

    fn add(self, rhs: f64) -> ExtendedValue {
        match self {
            ExtendedValue::NegInf => ExtendedValue::NegInf,
            ExtendedValue::Finite(v) => ExtendedValue::finite(v + rhs),
        }
    }
}

impl fmt::Display for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedValue::NegInf => write!(f, "-inf"),
            ExtendedValue::Finite(v) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::ExtendedValue::{Finite, NegInf};

    #[test]
    fn neg_inf_below_every_finite_value() {
        assert!(NegInf < Finite(-1e300));
        assert!(NegInf < Finite(0.0));
        assert!(Finite(-1.0) > NegInf);
        assert_eq!(NegInf.partial_cmp(&NegInf), Some(std::cmp::Ordering::Equal));
    }

    #[test]
    fn neg_inf_absorbs_addition() {
        assert!((NegInf + 5.0).is_neg_inf());
        assert_eq!(Finite(2.0) + 3.0, Finite(5.0));
    }

    #[test]
    fn gain_arithmetic() {
        assert_eq!(Finite(4.0).gain_over(Finite(1.5)), 2.5);
        assert_eq!(Finite(-3.0).gain_over(NegInf), f64::INFINITY);
        assert_eq!(NegInf.gain_over(Finite(0.0)), f64::NEG_INFINITY);
        assert_eq!(NegInf.gain_over(NegInf), 0.0);
    }
}

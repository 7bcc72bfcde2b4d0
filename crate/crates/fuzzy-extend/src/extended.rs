//! Values in `[0, +∞]` with saturating arithmetic.
//!
//! Distances produced by the right-adjoint of a bounded monotone function are
//! allowed to be `+∞`, so every quantity that flows through the extension
//! pipeline is an [`ExtendedNonNegative`] rather than a bare `f64`. The type
//! rules out NaN and negative values at construction, which makes the order
//! total and lets shortest-path relaxation treat `+∞` as an absorbing element.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExtendedError {
    /// The value was negative or NaN.
    #[error("expected a value in [0, +inf], got {0}")]
    OutOfDomain(f64),
    /// `0 * (+∞)` has no consistent value in this setting and is never needed.
    #[error("indeterminate product 0 * +inf")]
    IndeterminateProduct,
}

/// A non-negative real number or `+∞`, totally ordered, with saturating `+`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtendedNonNegative(f64);

impl ExtendedNonNegative {
    pub const ZERO: ExtendedNonNegative = ExtendedNonNegative(0.0);
    pub const INFINITY: ExtendedNonNegative = ExtendedNonNegative(f64::INFINITY);

    /// Wraps a finite non-negative value or `+∞`; rejects NaN and negatives.
    pub fn new(value: f64) -> Result<Self, ExtendedError> {
        if value.is_nan() || value < 0.0 {
            Err(ExtendedError::OutOfDomain(value))
        } else {
            Ok(ExtendedNonNegative(value))
        }
    }

    /// The raw `f64`, `f64::INFINITY` for the infinite value.
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_infinite(self) -> bool {
        self.0.is_infinite()
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    /// Finite payload, or `None` for `+∞`.
    pub fn finite(self) -> Option<f64> {
        self.is_finite().then_some(self.0)
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Multiplication that refuses to form `0 * (+∞)`.
    pub fn try_mul(self, other: Self) -> Result<Self, ExtendedError> {
        let zero_times_inf = (self.0 == 0.0 && other.0.is_infinite())
            || (other.0 == 0.0 && self.0.is_infinite());
        if zero_times_inf {
            return Err(ExtendedError::IndeterminateProduct);
        }
        Ok(ExtendedNonNegative(self.0 * other.0))
    }
}

impl Add for ExtendedNonNegative {
    type Output = ExtendedNonNegative;

    // IEEE addition already saturates: finite + inf = inf.
    fn add(self, rhs: Self) -> Self {
        ExtendedNonNegative(self.0 + rhs.0)
    }
}

impl Eq for ExtendedNonNegative {}

impl PartialOrd for ExtendedNonNegative {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedNonNegative {
    fn cmp(&self, other: &Self) -> Ordering {
        // NaN is excluded by construction, so the order is total.
        self.0.partial_cmp(&other.0).expect("NaN in ExtendedNonNegative")
    }
}

impl fmt::Display for ExtendedNonNegative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_infinite() {
            write!(f, "+inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl From<ExtendedNonNegative> for f64 {
    fn from(x: ExtendedNonNegative) -> f64 {
        x.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_negative_and_nan() {
        assert!(ExtendedNonNegative::new(-1e-12).is_err());
        assert!(ExtendedNonNegative::new(f64::NAN).is_err());
        assert!(ExtendedNonNegative::new(0.0).is_ok());
        assert!(ExtendedNonNegative::new(f64::INFINITY).is_ok());
    }

    #[test]
    fn addition_saturates_at_infinity() {
        let x = ExtendedNonNegative::new(3.5).unwrap();
        assert_eq!(x + ExtendedNonNegative::INFINITY, ExtendedNonNegative::INFINITY);
        assert_eq!(
            ExtendedNonNegative::INFINITY + ExtendedNonNegative::INFINITY,
            ExtendedNonNegative::INFINITY
        );
        assert_eq!((x + x).value(), 7.0);
    }

    #[test]
    fn infinity_is_the_maximum() {
        let big = ExtendedNonNegative::new(f64::MAX).unwrap();
        assert!(big < ExtendedNonNegative::INFINITY);
        assert!(ExtendedNonNegative::ZERO < big);
        assert_eq!(
            ExtendedNonNegative::INFINITY.max(big),
            ExtendedNonNegative::INFINITY
        );
    }

    #[test]
    fn zero_times_infinity_is_refused() {
        let err = ExtendedNonNegative::ZERO
            .try_mul(ExtendedNonNegative::INFINITY)
            .unwrap_err();
        assert_eq!(err, ExtendedError::IndeterminateProduct);
        let ok = ExtendedNonNegative::new(2.0)
            .unwrap()
            .try_mul(ExtendedNonNegative::INFINITY)
            .unwrap();
        assert!(ok.is_infinite());
    }
}

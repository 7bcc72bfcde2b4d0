//! Continuous triangular norms on the unit interval.
//!
//! A t-norm is the conjunction used in the triangle axiom of a fuzzy metric;
//! the three presets here (minimum, product, Łukasiewicz) cover everything the
//! extension pipeline needs. [`TNorm::dominates`] compares two t-norms
//! pointwise on a sample grid, which is how the stationary exponential preset
//! justifies using the product norm where Łukasiewicz would suffice.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TNormError {
    #[error("t-norm argument {0} lies outside [0, 1]")]
    OutOfUnitInterval(f64),
    #[error("unknown t-norm tag {0:?} (expected \"min\", \"prod\" or \"luk\")")]
    UnknownTag(String),
}

/// One of the three preset continuous t-norms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TNorm {
    #[serde(rename = "min")]
    Minimum,
    #[serde(rename = "prod")]
    Product,
    #[serde(rename = "luk")]
    Lukasiewicz,
}

impl TNorm {
    /// Applies the t-norm to `a, b ∈ [0, 1]`.
    pub fn apply(self, a: f64, b: f64) -> Result<f64, TNormError> {
        check_unit(a)?;
        check_unit(b)?;
        Ok(match self {
            TNorm::Minimum => a.min(b),
            TNorm::Product => a * b,
            TNorm::Lukasiewicz => (a + b - 1.0).max(0.0),
        })
    }

    /// True when `self >= other` holds pointwise on every pair of the grid.
    ///
    /// Comparison allows 1e-12 of float noise, so a `false` is a genuine
    /// counterexample while a `true` certifies dominance on the samples only.
    pub fn dominates(self, other: TNorm, grid: &[(f64, f64)]) -> Result<bool, TNormError> {
        const FLOAT_NOISE: f64 = 1e-12;
        for &(a, b) in grid {
            if self.apply(a, b)? < other.apply(a, b)? - FLOAT_NOISE {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// CLI tag for this t-norm.
    pub fn tag(self) -> &'static str {
        match self {
            TNorm::Minimum => "min",
            TNorm::Product => "prod",
            TNorm::Lukasiewicz => "luk",
        }
    }
}

impl std::str::FromStr for TNorm {
    type Err = TNormError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "min" => Ok(TNorm::Minimum),
            "prod" => Ok(TNorm::Product),
            "luk" => Ok(TNorm::Lukasiewicz),
            other => Err(TNormError::UnknownTag(other.to_owned())),
        }
    }
}

fn check_unit(x: f64) -> Result<(), TNormError> {
    if x.is_nan() || !(0.0..=1.0).contains(&x) {
        Err(TNormError::OutOfUnitInterval(x))
    } else {
        Ok(())
    }
}

/// Uniform `n x n` grid of pairs covering `[0, 1]^2`, endpoints included.
pub fn unit_square_grid(n: usize) -> Vec<(f64, f64)> {
    assert!(n >= 2, "grid needs at least two points per axis");
    let step = 1.0 / (n - 1) as f64;
    let axis: Vec<f64> = (0..n).map(|i| (i as f64 * step).min(1.0)).collect();
    let mut grid = Vec::with_capacity(n * n);
    for &a in &axis {
        for &b in &axis {
            grid.push((a, b));
        }
    }
    grid
}

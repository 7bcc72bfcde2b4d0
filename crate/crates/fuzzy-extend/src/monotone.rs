//! Increasing functions on `[0, +∞]` and their right adjoints.
//!
//! A bounded increasing function `phi` has no inverse, but it always has a
//! right adjoint
//!
//! ```text
//! adj(y) = sup { x in [0, +∞] : phi(x) <= y }      (sup ∅ = 0)
//! ```
//!
//! which is the largest "preimage from below" and the correct substitute for
//! `phi⁻¹` when converting membership defects back into distances. The two
//! adjunction laws
//!
//! ```text
//! x <= adj(phi(x))           always
//! phi(adj(y)) <= y           when phi is left-continuous with phi(0) = 0
//! ```
//!
//! are what the extension operators rely on, so [`MonotoneFunction::check_galois`]
//! makes them executable.
//!
//! The preset adjoints are computed at float resolution: a bit-level bisection
//! finds the largest representable `x` whose *evaluated* image stays `<= y`, so
//! both laws hold exactly for the computed function, not just for its ideal
//! counterpart. The only exception is `y = 0`, where the ideal zero-set
//! supremum is returned so that strictly increasing presets give `adj(0) = 0`
//! instead of a stray subnormal.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::extended::ExtendedNonNegative;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MonotoneError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("breakpoints must be finite, non-negative and non-decreasing: {0}")]
    InvalidBreakpoints(String),
    #[error("input {0} lies outside [0, +inf)")]
    NegativeInput(f64),
    #[error("bisection stalled after {iterations} iterations, bracket [{lower}, {upper}]")]
    BisectionDiverged {
        lower: f64,
        upper: f64,
        iterations: u32,
    },
}

/// An increasing map `[0, +∞] -> [0, +∞]` in one of four preset shapes.
///
/// Every representation is left-continuous by construction: piecewise-linear
/// jumps are stored as two pairs sharing an abscissa and evaluation returns
/// the lower (left) value at the jump point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MonotoneFunction {
    /// `x -> min(x, cap) / scale`
    Clamp { scale: f64, cap: f64 },
    /// `x -> slope * x`, unbounded
    Linear { slope: f64 },
    /// Linear interpolation through `(x, y)` pairs, constant outside their
    /// span; a repeated `x` encodes a jump with left-value semantics.
    PiecewiseLinear { breakpoints: Vec<(f64, f64)> },
    /// `x -> x / (x + 1)`, saturating at 1
    RationalSaturating,
}

impl MonotoneFunction {
    pub fn clamp(scale: f64, cap: f64) -> Result<Self, MonotoneError> {
        let f = MonotoneFunction::Clamp { scale, cap };
        f.validate()?;
        Ok(f)
    }

    pub fn linear(slope: f64) -> Result<Self, MonotoneError> {
        let f = MonotoneFunction::Linear { slope };
        f.validate()?;
        Ok(f)
    }

    pub fn piecewise_linear(breakpoints: Vec<(f64, f64)>) -> Result<Self, MonotoneError> {
        let f = MonotoneFunction::PiecewiseLinear { breakpoints };
        f.validate()?;
        Ok(f)
    }

    pub fn rational_saturating() -> Self {
        MonotoneFunction::RationalSaturating
    }

    /// Checks the representation invariants; call after deserializing.
    pub fn validate(&self) -> Result<(), MonotoneError> {
        match self {
            MonotoneFunction::Clamp { scale, cap } => {
                if !(scale.is_finite() && *scale > 0.0) {
                    return Err(MonotoneError::InvalidParameter(format!(
                        "clamp scale must be positive, got {scale}"
                    )));
                }
                if !(cap.is_finite() && *cap > 0.0) {
                    return Err(MonotoneError::InvalidParameter(format!(
                        "clamp cap must be positive, got {cap}"
                    )));
                }
            }
            MonotoneFunction::Linear { slope } => {
                if !(slope.is_finite() && *slope > 0.0) {
                    return Err(MonotoneError::InvalidParameter(format!(
                        "linear slope must be positive, got {slope}"
                    )));
                }
            }
            MonotoneFunction::PiecewiseLinear { breakpoints } => {
                validate_breakpoints(breakpoints)?;
            }
            MonotoneFunction::RationalSaturating => {}
        }
        Ok(())
    }

    /// `phi(+∞)`, the supremum of the function over its domain.
    pub fn sup_value(&self) -> ExtendedNonNegative {
        let raw = match self {
            MonotoneFunction::Clamp { scale, cap } => cap / scale,
            MonotoneFunction::Linear { .. } => f64::INFINITY,
            MonotoneFunction::PiecewiseLinear { breakpoints } => {
                breakpoints.last().expect("validated non-empty").1
            }
            MonotoneFunction::RationalSaturating => 1.0,
        };
        ExtendedNonNegative::new(raw).expect("sup of a validated function")
    }

    /// Value of the function at `x`; `eval(+∞) = sup_value`.
    pub fn eval(&self, x: ExtendedNonNegative) -> ExtendedNonNegative {
        ExtendedNonNegative::new(self.eval_raw(x.value())).expect("monotone image")
    }

    /// Same as [`eval`](Self::eval) for a finite argument, rejecting negatives.
    pub fn eval_finite(&self, x: f64) -> Result<f64, MonotoneError> {
        if x.is_nan() || x < 0.0 {
            return Err(MonotoneError::NegativeInput(x));
        }
        Ok(self.eval_raw(x))
    }

    fn eval_raw(&self, x: f64) -> f64 {
        if x.is_infinite() {
            return self.sup_value().value();
        }
        match self {
            MonotoneFunction::Clamp { scale, cap } => x.min(*cap) / scale,
            MonotoneFunction::Linear { slope } => slope * x,
            MonotoneFunction::PiecewiseLinear { breakpoints } => eval_pwl(breakpoints, x),
            MonotoneFunction::RationalSaturating => x / (x + 1.0),
        }
    }

    /// All preset shapes store jumps with left-value semantics, so this holds
    /// by construction; it is exposed because the second adjunction law is
    /// only claimed for left-continuous functions.
    pub fn is_left_continuous(&self) -> bool {
        true
    }

    /// The right adjoint `adj(y) = sup { x : phi(x) <= y }`.
    ///
    /// Returns `+∞` for `y >= sup_value` (the defining set is the whole
    /// domain) and the ideal zero-set supremum for `y = 0`; every other value
    /// is the largest representable `x` whose evaluated image is `<= y`.
    pub fn right_adjoint(&self, y: ExtendedNonNegative) -> ExtendedNonNegative {
        if y.is_infinite() {
            return ExtendedNonNegative::INFINITY;
        }
        let sup = self.sup_value();
        if sup.is_finite() && y.value() >= sup.value() {
            return ExtendedNonNegative::INFINITY;
        }
        let y = y.value();
        if y == 0.0 {
            return ExtendedNonNegative::new(self.zero_set_sup()).expect("zero-set sup");
        }
        let candidate = match self {
            MonotoneFunction::Clamp { cap, .. } => {
                float_sup_below(|x| self.eval_raw(x), 0.0, *cap, y)
            }
            MonotoneFunction::Linear { slope } => {
                let hi = expand_upper(|x| self.eval_raw(x), (2.0 * y / slope).max(1.0), y);
                float_sup_below(|x| self.eval_raw(x), 0.0, hi, y)
            }
            MonotoneFunction::RationalSaturating => {
                let hi = expand_upper(|x| self.eval_raw(x), 1.0, y);
                float_sup_below(|x| self.eval_raw(x), 0.0, hi, y)
            }
            MonotoneFunction::PiecewiseLinear { breakpoints } => adjoint_pwl(breakpoints, y),
        };
        // absorb 1-ulp wobbles of the evaluator around the boundary
        let refined = walk_sup(|x| self.eval_raw(x), candidate, y);
        ExtendedNonNegative::new(refined).expect("adjoint value")
    }

    /// Largest `x` with `phi(x) = 0` in the ideal representation, or 0 when
    /// the zero set is empty or `{0}`.
    fn zero_set_sup(&self) -> f64 {
        match self {
            MonotoneFunction::Clamp { .. }
            | MonotoneFunction::Linear { .. }
            | MonotoneFunction::RationalSaturating => 0.0,
            MonotoneFunction::PiecewiseLinear { breakpoints } => {
                let mut sup = 0.0;
                for &(x, v) in breakpoints {
                    if v == 0.0 {
                        sup = x;
                    } else {
                        break;
                    }
                }
                sup
            }
        }
    }

    /// The left-continuous envelope `env(x) = sup { phi(y) : y < x }`.
    ///
    /// Preset shapes are already left-continuous away from the origin, so the
    /// only correction is `env(0) = 0` (supremum of the empty set); a
    /// piecewise-linear function with a positive value at 0 gains a jump there.
    pub fn left_continuous_envelope(&self) -> MonotoneFunction {
        match self {
            MonotoneFunction::PiecewiseLinear { breakpoints } => {
                let at_zero = eval_pwl(breakpoints, 0.0);
                if at_zero == 0.0 {
                    return self.clone();
                }
                let mut pts: Vec<(f64, f64)> = vec![(0.0, 0.0)];
                if breakpoints[0].0 > 0.0 {
                    // constant left extension becomes a flat plateau after the jump
                    pts.push((0.0, breakpoints[0].1));
                    pts.extend_from_slice(breakpoints);
                } else if breakpoints.len() > 1 && breakpoints[1].0 == 0.0 {
                    // existing jump at 0: its lower value is replaced by 0
                    pts.extend_from_slice(&breakpoints[1..]);
                } else {
                    pts.extend_from_slice(breakpoints);
                }
                MonotoneFunction::piecewise_linear(pts).expect("envelope of a valid function")
            }
            // continuous presets with phi(0) = 0 are their own envelope
            _ => self.clone(),
        }
    }

    /// Checks both adjunction laws on a grid.
    ///
    /// The expansion law `x <= adj(phi(x))` must hold exactly; the contraction
    /// law `phi(adj(y)) <= y` is checked within `tolerance` and only when the
    /// function is left-continuous with `phi(0) = 0`.
    pub fn check_galois(&self, grid: &[ExtendedNonNegative], tolerance: f64) -> GaloisReport {
        let contraction_applicable =
            self.is_left_continuous() && self.eval(ExtendedNonNegative::ZERO).value() == 0.0;
        let mut checks = Vec::with_capacity(grid.len());
        let mut pass = true;
        let mut worst = 0.0_f64;
        for &p in grid {
            let image = self.eval(p);
            let back = self.right_adjoint(image);
            let expansion_violation = if p <= back {
                0.0
            } else {
                p.value() - back.value()
            };
            let expansion_holds = expansion_violation == 0.0;

            let (contraction_holds, contraction_violation) = if contraction_applicable {
                let round = self.eval(self.right_adjoint(p));
                let violation = if round <= p {
                    0.0
                } else {
                    round.value() - p.value()
                };
                (Some(violation <= tolerance), violation)
            } else {
                (None, 0.0)
            };

            pass &= expansion_holds && contraction_holds.unwrap_or(true);
            worst = worst.max(expansion_violation).max(contraction_violation);
            checks.push(GaloisCheck {
                point: p,
                expansion_holds,
                expansion_violation,
                contraction_holds,
                contraction_violation,
            });
        }
        GaloisReport {
            contraction_applicable,
            pass,
            worst_violation: worst,
            checks,
        }
    }
}

/// Verdict for one grid point of [`MonotoneFunction::check_galois`].
#[derive(Debug, Clone)]
pub struct GaloisCheck {
    pub point: ExtendedNonNegative,
    /// `x <= adj(phi(x))`
    pub expansion_holds: bool,
    pub expansion_violation: f64,
    /// `phi(adj(y)) <= y` within tolerance; `None` when the law does not apply.
    pub contraction_holds: Option<bool>,
    pub contraction_violation: f64,
}

#[derive(Debug, Clone)]
pub struct GaloisReport {
    /// Whether the contraction law applies (left-continuous, `phi(0) = 0`).
    pub contraction_applicable: bool,
    pub pass: bool,
    pub worst_violation: f64,
    pub checks: Vec<GaloisCheck>,
}

/// Settings for [`bisect_right_adjoint`].
#[derive(Debug, Clone)]
pub struct BisectOptions {
    pub tolerance: f64,
    pub max_iterations: u32,
    pub initial_upper: f64,
}

impl Default for BisectOptions {
    fn default() -> Self {
        BisectOptions {
            tolerance: 1e-10,
            max_iterations: 200,
            initial_upper: 1.0,
        }
    }
}

/// Right adjoint of an arbitrary non-decreasing evaluator by bisection.
///
/// The bracket `[0, upper]` is grown by doubling until `phi(upper) > y`;
/// `+∞` is returned when `y >= sup_value` or the bracket escapes the finite
/// range. The result is the lower bracket end, so `phi(result) <= y`.
pub fn bisect_right_adjoint(
    phi: impl Fn(f64) -> f64,
    sup_value: ExtendedNonNegative,
    y: ExtendedNonNegative,
    options: &BisectOptions,
) -> Result<ExtendedNonNegative, MonotoneError> {
    if y.is_infinite() {
        return Ok(ExtendedNonNegative::INFINITY);
    }
    if sup_value.is_finite() && y.value() >= sup_value.value() {
        return Ok(ExtendedNonNegative::INFINITY);
    }
    let y = y.value();
    let mut lo = 0.0_f64;
    let mut hi = options.initial_upper.max(f64::MIN_POSITIVE);
    while phi(hi) <= y {
        lo = hi;
        hi *= 2.0;
        if hi >= 1e308 {
            return Ok(ExtendedNonNegative::INFINITY);
        }
    }
    let mut iterations = 0;
    while hi - lo > options.tolerance {
        if iterations >= options.max_iterations {
            return Err(MonotoneError::BisectionDiverged {
                lower: lo,
                upper: hi,
                iterations,
            });
        }
        let mid = 0.5 * (lo + hi);
        if phi(mid) <= y {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    Ok(ExtendedNonNegative::new(lo).expect("bisection keeps lo >= 0"))
}

/// Left-continuous envelope of an arbitrary evaluator, sampled on a grid.
///
/// The result is the left-continuous step function whose value at `x` is the
/// supremum of `phi` over the sample points strictly below `x`; it agrees with
/// the ideal envelope at every grid point.
pub fn envelope_from_samples(
    phi: impl Fn(f64) -> f64,
    grid: &[f64],
) -> Result<MonotoneFunction, MonotoneError> {
    if grid.is_empty() {
        return Err(MonotoneError::InvalidParameter(
            "envelope grid must be non-empty".into(),
        ));
    }
    let mut xs: Vec<f64> = grid.to_vec();
    if xs.iter().any(|x| !x.is_finite() || *x < 0.0) {
        return Err(MonotoneError::InvalidParameter(
            "envelope grid points must be finite and non-negative".into(),
        ));
    }
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    xs.dedup();

    let mut pts: Vec<(f64, f64)> = vec![(xs[0], 0.0)];
    let mut level = 0.0_f64;
    for &x in &xs {
        let value = phi(x);
        if !value.is_finite() || value < 0.0 {
            return Err(MonotoneError::InvalidParameter(format!(
                "sampled value {value} at {x} is not a finite non-negative real"
            )));
        }
        if value > level {
            // the new supremum applies strictly after x
            if pts.last().expect("non-empty").0 < x {
                pts.push((x, level));
            }
            pts.push((x, value));
            level = value;
        }
    }
    MonotoneFunction::piecewise_linear(pts)
}

/// `n` log-spaced points covering `[lo, hi]`, endpoints included.
pub fn log_space(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi > lo && n >= 2, "need 0 < lo < hi and n >= 2");
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| {
            let t = i as f64 / (n - 1) as f64;
            (a + t * (b - a)).exp().clamp(lo, hi)
        })
        .collect()
}

fn validate_breakpoints(breakpoints: &[(f64, f64)]) -> Result<(), MonotoneError> {
    if breakpoints.is_empty() {
        return Err(MonotoneError::InvalidBreakpoints("no breakpoints".into()));
    }
    for &(x, y) in breakpoints {
        if !x.is_finite() || x < 0.0 || !y.is_finite() || y < 0.0 {
            return Err(MonotoneError::InvalidBreakpoints(format!(
                "pair ({x}, {y}) is not finite non-negative"
            )));
        }
    }
    for w in breakpoints.windows(2) {
        let ((x0, y0), (x1, y1)) = (w[0], w[1]);
        if x1 < x0 || y1 < y0 {
            return Err(MonotoneError::InvalidBreakpoints(format!(
                "({x0}, {y0}) -> ({x1}, {y1}) decreases"
            )));
        }
        if x1 == x0 && y1 == y0 {
            return Err(MonotoneError::InvalidBreakpoints(format!(
                "duplicate pair ({x0}, {y0})"
            )));
        }
    }
    for w in breakpoints.windows(3) {
        if w[0].0 == w[2].0 {
            return Err(MonotoneError::InvalidBreakpoints(format!(
                "three pairs share x = {}",
                w[0].0
            )));
        }
    }
    Ok(())
}

fn eval_pwl(breakpoints: &[(f64, f64)], x: f64) -> f64 {
    if x <= breakpoints[0].0 {
        return breakpoints[0].1;
    }
    for i in 1..breakpoints.len() {
        let (x1, y1) = breakpoints[i];
        if x > x1 {
            continue;
        }
        if x == x1 {
            // first pair at this abscissa: the left value at a jump
            return y1;
        }
        let (x0, y0) = breakpoints[i - 1];
        let frac = (x - x0) / (x1 - x0);
        let y = y0 + (y1 - y0) * frac;
        // clamp into the segment's range so the evaluator stays monotone
        return y.max(y0).min(y1);
    }
    breakpoints.last().expect("non-empty").1
}

/// Exact float supremum of `{ x : phi(x) <= y }` for a piecewise-linear shape.
fn adjoint_pwl(breakpoints: &[(f64, f64)], y: f64) -> f64 {
    // callers guarantee 0 < y < sup, so a crossing index exists
    let mut crossing = None;
    for (i, &(_, v)) in breakpoints.iter().enumerate().rev() {
        if v <= y {
            crossing = Some(i);
            break;
        }
    }
    let Some(j) = crossing else {
        return 0.0; // y below every value: the set is empty
    };
    let (x0, _) = breakpoints[j];
    let (x1, _) = breakpoints[j + 1];
    if x1 == x0 {
        return x0; // jump: the left value is attained at x0, above it the image exceeds y
    }
    float_sup_below(|x| eval_pwl(breakpoints, x), x0, x1, y)
}

/// Doubles `start` until `phi` exceeds `y`; callers guarantee `y < sup phi`.
fn expand_upper(phi: impl Fn(f64) -> f64, start: f64, y: f64) -> f64 {
    let mut hi = start.max(f64::MIN_POSITIVE);
    while hi.is_finite() && phi(hi) <= y {
        hi *= 2.0;
    }
    hi
}

/// Largest representable `x` in `[lo, hi]` with `phi(x) <= y`, assuming
/// `phi(lo) <= y < phi(hi)` and `phi` monotone; bisection runs on the bit
/// representation so the answer is exact at float resolution.
fn float_sup_below(phi: impl Fn(f64) -> f64, lo: f64, hi: f64, y: f64) -> f64 {
    debug_assert!(lo >= 0.0 && hi > lo);
    let mut lo_bits = lo.to_bits();
    let mut hi_bits = hi.to_bits();
    while hi_bits - lo_bits > 1 {
        let mid_bits = lo_bits + (hi_bits - lo_bits) / 2;
        let mid = f64::from_bits(mid_bits);
        if phi(mid) <= y {
            lo_bits = mid_bits;
        } else {
            hi_bits = mid_bits;
        }
    }
    f64::from_bits(lo_bits)
}

/// Nudges `x` to a nearby float that keeps `phi(x) <= y`, stepping over
/// isolated 1-ulp non-monotonicities of the evaluator.
fn walk_sup(phi: impl Fn(f64) -> f64, mut x: f64, y: f64) -> f64 {
    let mut guard = 0;
    while phi(x) > y && x > 0.0 && guard < 64 {
        x = next_down_nonneg(x);
        guard += 1;
    }
    let mut advances = 0;
    'walk: while advances < 64 {
        for k in 1..=4u64 {
            let cand = f64::from_bits(x.to_bits() + k);
            if cand.is_finite() && phi(cand) <= y {
                x = cand;
                advances += 1;
                continue 'walk;
            }
        }
        break;
    }
    x
}

fn next_down_nonneg(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    f64::from_bits(x.to_bits() - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ext(x: f64) -> ExtendedNonNegative {
        ExtendedNonNegative::new(x).unwrap()
    }

    #[test]
    fn clamp_eval_matches_the_truncated_ramp() {
        let phi = MonotoneFunction::clamp(2.0, 1.0).unwrap();
        assert_eq!(phi.eval_finite(0.6).unwrap(), 0.3);
        assert_eq!(phi.eval_finite(5.0).unwrap(), 0.5);
        assert_eq!(phi.eval_finite(0.0).unwrap(), 0.0);
        assert_eq!(phi.eval(ExtendedNonNegative::INFINITY).value(), 0.5);
        assert!(phi.eval_finite(-0.1).is_err());
    }

    #[test]
    fn metric_generating_presets_vanish_only_at_zero() {
        for phi in [
            MonotoneFunction::clamp(2.0, 1.0).unwrap(),
            MonotoneFunction::linear(3.0).unwrap(),
            MonotoneFunction::rational_saturating(),
        ] {
            assert_eq!(phi.eval_finite(0.0).unwrap(), 0.0);
            assert!(phi.eval_finite(1e-6).unwrap() > 0.0);
        }
    }

    #[test]
    fn clamp_adjoint_is_the_doubling_map_below_one_half() {
        let phi = MonotoneFunction::clamp(2.0, 1.0).unwrap();
        assert_eq!(phi.right_adjoint(ext(0.3)).value(), 0.6);
        assert!(phi.right_adjoint(ext(0.5)).is_infinite());
        assert!(phi.right_adjoint(ext(10.0)).is_infinite());
        assert_eq!(phi.right_adjoint(ext(0.0)).value(), 0.0);
        assert!(phi.right_adjoint(ExtendedNonNegative::INFINITY).is_infinite());
    }

    #[test]
    fn rational_adjoint_matches_the_analytic_inverse() {
        let phi = MonotoneFunction::rational_saturating();
        assert_eq!(phi.right_adjoint(ext(0.5)).value(), 1.0);
        assert!(phi.right_adjoint(ext(1.0)).is_infinite());
        let y = 0.25;
        let adj = phi.right_adjoint(ext(y)).value();
        assert!((adj - y / (1.0 - y)).abs() < 1e-12);
    }

    #[test]
    fn strictly_increasing_adjoint_at_zero_is_zero() {
        for phi in [
            MonotoneFunction::linear(0.7).unwrap(),
            MonotoneFunction::rational_saturating(),
            MonotoneFunction::piecewise_linear(vec![(0.0, 0.0), (2.0, 1.0)]).unwrap(),
        ] {
            assert_eq!(phi.right_adjoint(ExtendedNonNegative::ZERO).value(), 0.0);
        }
    }

    #[test]
    fn pwl_zero_plateau_adjoint_at_zero() {
        let phi =
            MonotoneFunction::piecewise_linear(vec![(0.0, 0.0), (1.0, 0.0), (2.0, 1.0)]).unwrap();
        assert_eq!(phi.right_adjoint(ExtendedNonNegative::ZERO).value(), 1.0);
    }

    #[test]
    fn pwl_eval_with_jump_returns_the_left_value() {
        let step =
            MonotoneFunction::piecewise_linear(vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0)]).unwrap();
        assert_eq!(step.eval_finite(1.0).unwrap(), 0.0);
        assert_eq!(step.eval_finite(1.5).unwrap(), 1.0);
        assert_eq!(step.eval_finite(0.5).unwrap(), 0.0);
        assert_eq!(step.sup_value().value(), 1.0);
    }

    #[test]
    fn pwl_adjoint_handles_jumps_and_plateaus() {
        let step =
            MonotoneFunction::piecewise_linear(vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (3.0, 2.0)])
                .unwrap();
        // between the jump values the sup is pinned at the jump abscissa
        assert_eq!(step.right_adjoint(ext(0.5)).value(), 1.0);
        // above the sup the whole domain qualifies
        assert!(step.right_adjoint(ext(2.0)).is_infinite());
        // below every value the set is empty
        let lifted =
            MonotoneFunction::piecewise_linear(vec![(0.0, 0.5), (1.0, 2.0)]).unwrap();
        assert_eq!(lifted.right_adjoint(ext(0.25)).value(), 0.0);
    }

    #[test]
    fn envelope_of_continuous_presets_is_identity() {
        let phi = MonotoneFunction::clamp(2.0, 1.0).unwrap();
        let env = phi.left_continuous_envelope();
        for x in [0.0, 0.1, 0.6, 1.0, 2.5, 10.0] {
            assert_eq!(env.eval_finite(x).unwrap(), phi.eval_finite(x).unwrap());
        }
    }

    #[test]
    fn envelope_of_a_left_continuous_step_is_itself() {
        let step =
            MonotoneFunction::piecewise_linear(vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0)]).unwrap();
        let env = step.left_continuous_envelope();
        assert_eq!(env.eval_finite(1.0).unwrap(), 0.0);
        assert_eq!(env.eval_finite(1.5).unwrap(), 1.0);
    }

    #[test]
    fn envelope_clears_a_positive_value_at_zero() {
        let lifted = MonotoneFunction::piecewise_linear(vec![(0.0, 0.1), (1.0, 0.5)]).unwrap();
        let env = lifted.left_continuous_envelope();
        assert_eq!(env.eval_finite(0.0).unwrap(), 0.0);
        assert_eq!(env.eval_finite(0.5).unwrap(), lifted.eval_finite(0.5).unwrap());
        // idempotence
        let env2 = env.left_continuous_envelope();
        for x in [0.0, 0.25, 0.5, 1.0, 2.0] {
            assert_eq!(env2.eval_finite(x).unwrap(), env.eval_finite(x).unwrap());
        }
    }

    #[test]
    fn sampled_envelope_turns_a_right_continuous_step_left_continuous() {
        let right_step = |x: f64| if x < 1.0 { 0.0 } else { 1.0 };
        let grid: Vec<f64> = (0..=200).map(|i| i as f64 / 100.0).collect();
        let env = envelope_from_samples(right_step, &grid).unwrap();
        assert_eq!(env.eval_finite(1.0).unwrap(), 0.0); // left value wins
        assert_eq!(env.eval_finite(1.5).unwrap(), 1.0);
    }

    #[test]
    fn galois_report_on_the_running_example() {
        let phi = MonotoneFunction::clamp(2.0, 1.0).unwrap();
        // x = 3: phi(3) = 0.5, adj(0.5) = +inf >= 3
        let r = phi.check_galois(&[ext(3.0)], 1e-9);
        assert!(r.pass && r.contraction_applicable);
        // y = 0.3: phi(adj(0.3)) = phi(0.6) = 0.3 <= 0.3
        let r = phi.check_galois(&[ext(0.3)], 1e-9);
        assert!(r.pass);
        assert_eq!(r.worst_violation, 0.0);
        // x = 0 is the domain minimum
        let r = phi.check_galois(&[ExtendedNonNegative::ZERO], 1e-9);
        assert!(r.pass);
    }

    #[test]
    fn galois_laws_hold_on_log_grids_for_all_presets() {
        let presets = [
            MonotoneFunction::clamp(2.0, 1.0).unwrap(),
            MonotoneFunction::clamp(3.0, 2.5).unwrap(),
            MonotoneFunction::linear(1.0).unwrap(),
            MonotoneFunction::linear(0.37).unwrap(),
            MonotoneFunction::rational_saturating(),
            MonotoneFunction::piecewise_linear(vec![
                (0.0, 0.0),
                (0.5, 0.2),
                (1.0, 0.2),
                (1.0, 0.7),
                (4.0, 1.1),
            ])
            .unwrap(),
        ];
        let mut grid: Vec<ExtendedNonNegative> = log_space(1e-6, 1e6, 1000)
            .into_iter()
            .map(ext)
            .collect();
        grid.push(ExtendedNonNegative::ZERO);
        grid.push(ExtendedNonNegative::INFINITY);
        for phi in presets {
            let report = phi.check_galois(&grid, 1e-9);
            assert!(report.pass, "galois failed for {phi:?}: {report:?}");
        }
    }

    #[test]
    fn adjoint_is_monotone_on_grids() {
        for phi in [
            MonotoneFunction::clamp(2.0, 1.0).unwrap(),
            MonotoneFunction::rational_saturating(),
            MonotoneFunction::piecewise_linear(vec![(0.0, 0.0), (1.0, 0.4), (2.0, 0.4), (5.0, 3.0)])
                .unwrap(),
        ] {
            let mut prev = ExtendedNonNegative::ZERO;
            for y in log_space(1e-8, 1e2, 500) {
                let adj = phi.right_adjoint(ext(y));
                assert!(adj >= prev, "adjoint decreased at y = {y} for {phi:?}");
                prev = adj;
            }
        }
    }

    #[test]
    fn adjoint_is_infinite_at_and_above_the_sup() {
        let phi = MonotoneFunction::piecewise_linear(vec![(0.0, 0.0), (2.0, 0.8)]).unwrap();
        assert!(phi.right_adjoint(ext(0.8)).is_infinite());
        assert!(phi.right_adjoint(ext(5.0)).is_infinite());
        assert!(phi.right_adjoint(ext(0.79)).is_finite());
    }

    #[test]
    fn bisection_matches_closed_forms() {
        let opts = BisectOptions::default();
        let clamp = MonotoneFunction::clamp(2.0, 1.0).unwrap();
        let b = bisect_right_adjoint(
            |x| clamp.eval_finite(x).unwrap(),
            clamp.sup_value(),
            ext(0.3),
            &opts,
        )
        .unwrap();
        assert!((b.value() - 0.6).abs() < 1e-9);
        let b = bisect_right_adjoint(
            |x| clamp.eval_finite(x).unwrap(),
            clamp.sup_value(),
            ext(0.5),
            &opts,
        )
        .unwrap();
        assert!(b.is_infinite());
        let rational = MonotoneFunction::rational_saturating();
        let b = bisect_right_adjoint(
            |x| rational.eval_finite(x).unwrap(),
            rational.sup_value(),
            ext(0.5),
            &opts,
        )
        .unwrap();
        assert!((b.value() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn breakpoint_validation_rejects_bad_shapes() {
        assert!(MonotoneFunction::piecewise_linear(vec![]).is_err());
        assert!(MonotoneFunction::piecewise_linear(vec![(0.0, 0.0), (1.0, -0.5)]).is_err());
        assert!(MonotoneFunction::piecewise_linear(vec![(1.0, 0.0), (0.5, 0.1)]).is_err());
        assert!(MonotoneFunction::piecewise_linear(vec![(0.0, 0.5), (1.0, 0.2)]).is_err());
        assert!(MonotoneFunction::piecewise_linear(vec![
            (1.0, 0.0),
            (1.0, 0.5),
            (1.0, 0.9)
        ])
        .is_err());
        assert!(MonotoneFunction::clamp(0.0, 1.0).is_err());
        assert!(MonotoneFunction::linear(-1.0).is_err());
    }

    #[test]
    fn serde_tagged_round_trip() {
        let phi = MonotoneFunction::clamp(2.0, 1.0).unwrap();
        let json = serde_json::to_string(&phi).unwrap();
        assert!(json.contains("\"kind\":\"clamp\""));
        let back: MonotoneFunction = serde_json::from_str(&json).unwrap();
        assert_eq!(back, phi);
        let pwl: MonotoneFunction =
            serde_json::from_str(r#"{"kind":"piecewise-linear","breakpoints":[[0,0],[1,0.5]]}"#)
                .unwrap();
        pwl.validate().unwrap();
        assert_eq!(pwl.eval_finite(1.0).unwrap(), 0.5);
    }
}

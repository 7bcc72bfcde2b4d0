//! Euclidean fuzzy metrics and finite fuzzy metric spaces.
//!
//! A Euclidean fuzzy metric on the reals has the form
//!
//! ```text
//! M(x, y, t) = 1 - phi(|x - y|) * g(t)
//! ```
//!
//! with `phi` increasing and `g` positive. For it to stay inside `(0, 1]`,
//! three structural conditions must hold: `phi` vanishes exactly at 0, `phi`
//! is bounded, and `g` never exceeds the reciprocal of `sup phi`.
//! [`EuclideanFuzzyMetric::validate_structure`] checks all three with
//! witnesses.
//!
//! Finite spaces are either backed by a classical metric matrix plus a preset
//! transform (the truncated ramp `1 - min(d, k)/h(t)` or the stationary
//! `exp(-d)`), by a Euclidean fuzzy metric over real coordinates, or by a raw
//! stationary membership matrix — the last mostly so that
//! [`FiniteFuzzyMetricSpace::validate_axioms`] has something to refute.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::monotone::{log_space, MonotoneError, MonotoneFunction};
use crate::tnorm::{TNorm, TNormError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FuzzyMetricError {
    #[error("time parameter must be positive, got {0}")]
    NonPositiveTime(f64),
    #[error("coordinate {0} is not a finite real")]
    NonFiniteCoordinate(f64),
    #[error("membership 1 - phi(|x-y|) g(t) = {value} is negative at x={x}, y={y}, t={t}")]
    InvalidMetric { x: f64, y: f64, t: f64, value: f64 },
    #[error("matrix is empty")]
    EmptyMatrix,
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry ({i},{j}) = {value} is not a finite non-negative real")]
    BadEntry { i: usize, j: usize, value: f64 },
    #[error("diagonal entry ({i},{i}) = {value} is not zero")]
    NonzeroDiagonal { i: usize, value: f64 },
    #[error("matrix is not symmetric at ({i},{j}): {dij} vs {dji}")]
    NotSymmetric { i: usize, j: usize, dij: f64, dji: f64 },
    #[error("triangle inequality fails: d({i},{k}) = {dik} > d({i},{j}) + d({j},{k}) = {sum}")]
    TriangleViolation {
        i: usize,
        j: usize,
        k: usize,
        dik: f64,
        sum: f64,
    },
    #[error("parameter must be positive and finite, got {0}")]
    NonPositiveParameter(f64),
    #[error("truncation level {k} exceeds the infimum {inf} of the scale function")]
    ScaleBelowTruncation { k: f64, inf: f64 },
    #[error("point index {index} out of range for a space with {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error(transparent)]
    Monotone(#[from] MonotoneError),
    #[error(transparent)]
    TNorm(#[from] TNormError),
}

/// An increasing continuous scale `h` on `(0, +∞)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ScaleFn {
    /// `h(t) = offset + rate * t`
    Affine { offset: f64, rate: f64 },
    /// `h(t) = offset + exp(t)`
    Exponential { offset: f64 },
}

impl ScaleFn {
    pub fn validate(&self) -> Result<(), FuzzyMetricError> {
        match self {
            ScaleFn::Affine { offset, rate } => {
                if !offset.is_finite() || *offset < 0.0 {
                    return Err(FuzzyMetricError::NonPositiveParameter(*offset));
                }
                if !rate.is_finite() || *rate <= 0.0 {
                    return Err(FuzzyMetricError::NonPositiveParameter(*rate));
                }
            }
            ScaleFn::Exponential { offset } => {
                if !offset.is_finite() || *offset < 0.0 {
                    return Err(FuzzyMetricError::NonPositiveParameter(*offset));
                }
            }
        }
        Ok(())
    }

    pub fn eval(&self, t: f64) -> Result<f64, FuzzyMetricError> {
        check_time(t)?;
        Ok(match self {
            ScaleFn::Affine { offset, rate } => offset + rate * t,
            ScaleFn::Exponential { offset } => offset + t.exp(),
        })
    }

    /// Infimum of `h` over `t > 0`, used for the truncation precondition.
    pub fn lower_limit(&self) -> f64 {
        match self {
            ScaleFn::Affine { offset, .. } => *offset,
            ScaleFn::Exponential { offset } => offset + 1.0,
        }
    }
}

/// The positive weight `g(t)` multiplying the shape function.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TimeScaling {
    Constant { value: f64 },
    /// `g(t) = 1 / h(t)` for an increasing scale `h`
    Reciprocal { h: ScaleFn },
}

impl TimeScaling {
    pub fn constant(value: f64) -> Result<Self, FuzzyMetricError> {
        let g = TimeScaling::Constant { value };
        g.validate()?;
        Ok(g)
    }

    pub fn reciprocal(h: ScaleFn) -> Result<Self, FuzzyMetricError> {
        let g = TimeScaling::Reciprocal { h };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<(), FuzzyMetricError> {
        match self {
            TimeScaling::Constant { value } => {
                if !value.is_finite() || *value <= 0.0 {
                    return Err(FuzzyMetricError::NonPositiveParameter(*value));
                }
                Ok(())
            }
            TimeScaling::Reciprocal { h } => h.validate(),
        }
    }

    pub fn eval(&self, t: f64) -> Result<f64, FuzzyMetricError> {
        check_time(t)?;
        match self {
            TimeScaling::Constant { value } => Ok(*value),
            TimeScaling::Reciprocal { h } => Ok(1.0 / h.eval(t)?),
        }
    }

    /// True when `g` does not depend on `t`.
    pub fn is_constant(&self) -> bool {
        matches!(self, TimeScaling::Constant { .. })
    }
}

/// A fuzzy metric on the reals of the form `1 - phi(|x-y|) g(t)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EuclideanFuzzyMetric {
    pub phi: MonotoneFunction,
    pub g: TimeScaling,
    pub tnorm: TNorm,
}

impl EuclideanFuzzyMetric {
    pub fn new(
        phi: MonotoneFunction,
        g: TimeScaling,
        tnorm: TNorm,
    ) -> Result<Self, FuzzyMetricError> {
        phi.validate()?;
        g.validate()?;
        Ok(EuclideanFuzzyMetric { phi, g, tnorm })
    }

    /// Membership `1 - phi(|x-y|) g(t)`.
    ///
    /// A negative raw value is reported as [`FuzzyMetricError::InvalidMetric`]
    /// rather than clamped: it means the `(phi, g)` pair does not generate a
    /// fuzzy metric at this triple.
    pub fn eval(&self, x: f64, y: f64, t: f64) -> Result<f64, FuzzyMetricError> {
        let value = 1.0 - self.dissimilarity(x, y, t)?;
        if value < 0.0 {
            return Err(FuzzyMetricError::InvalidMetric { x, y, t, value });
        }
        Ok(value)
    }

    /// The defect `1 - M(x, y, t) = phi(|x-y|) g(t)`, without the range check;
    /// this is the quantity the Lipschitz inequalities compare.
    pub fn dissimilarity(&self, x: f64, y: f64, t: f64) -> Result<f64, FuzzyMetricError> {
        for v in [x, y] {
            if !v.is_finite() {
                return Err(FuzzyMetricError::NonFiniteCoordinate(v));
            }
        }
        let distance = (x - y).abs();
        Ok(self.phi.eval_finite(distance)? * self.g.eval(t)?)
    }

    /// Checks the three structural conditions a generating pair must satisfy.
    pub fn validate_structure(&self, xy_grid: &[(f64, f64)], t_grid: &[f64]) -> StructureReport {
        let sup = self.phi.sup_value();

        // (1) phi vanishes exactly at 0 and nowhere else
        let mut vanishing = Verdict::ok();
        let at_zero = self.phi.eval_finite(0.0).expect("0 is in the domain");
        if at_zero != 0.0 {
            vanishing = Verdict::fail(format!("phi(0) = {at_zero} instead of 0"));
        } else {
            for &(x, y) in xy_grid {
                let d = (x - y).abs();
                if d > 0.0 {
                    let v = self.phi.eval_finite(d).expect("non-negative distance");
                    if v <= 0.0 {
                        vanishing =
                            Verdict::fail(format!("phi({d}) = {v} for the pair ({x}, {y})"));
                        break;
                    }
                }
            }
        }

        // (2) phi is bounded
        let bounded = if sup.is_finite() {
            Verdict::ok()
        } else {
            Verdict::fail("sup phi = +inf".to_string())
        };

        // (3) g stays below 1 / sup phi, i.e. g(t) * sup phi <= 1
        let mut scaling = Verdict::ok();
        if sup.is_finite() {
            for &t in t_grid {
                match self.g.eval(t) {
                    Ok(g) => {
                        let product = g * sup.value();
                        if product > 1.0 + 1e-12 {
                            scaling =
                                Verdict::fail(format!("g({t}) * sup phi = {product} exceeds 1"));
                            break;
                        }
                    }
                    Err(e) => {
                        scaling = Verdict::fail(format!("g({t}) failed: {e}"));
                        break;
                    }
                }
            }
        } else {
            scaling = Verdict::fail("bound 1 / sup phi is zero since sup phi = +inf".to_string());
        }

        let pass = vanishing.ok && bounded.ok && scaling.ok;
        StructureReport {
            vanishes_only_at_zero: vanishing,
            bounded,
            scaling_within_bound: scaling,
            pass,
        }
    }
}

/// One named check with an optional human-readable witness.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub ok: bool,
    pub witness: Option<String>,
}

impl Verdict {
    fn ok() -> Self {
        Verdict {
            ok: true,
            witness: None,
        }
    }

    fn fail(witness: String) -> Self {
        Verdict {
            ok: false,
            witness: Some(witness),
        }
    }
}

/// Result of [`EuclideanFuzzyMetric::validate_structure`]; the three fields
/// are the three structural conditions in module order.
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub vanishes_only_at_zero: Verdict,
    pub bounded: Verdict,
    pub scaling_within_bound: Verdict,
    pub pass: bool,
}

impl StructureReport {
    pub fn failed_items(&self) -> Vec<&'static str> {
        let mut items = Vec::new();
        if !self.vanishes_only_at_zero.ok {
            items.push("phi-vanishes-only-at-zero");
        }
        if !self.bounded.ok {
            items.push("phi-bounded");
        }
        if !self.scaling_within_bound.ok {
            items.push("g-within-reciprocal-sup");
        }
        items
    }
}

/// A validated classical metric on a finite index set.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricMatrix {
    rows: Vec<Vec<f64>>,
}

impl MetricMatrix {
    /// Validates shape, symmetry, zero diagonal and the triangle inequality
    /// (the last within 1e-9 to absorb float noise in computed distances).
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self, FuzzyMetricError> {
        const TRIANGLE_TOLERANCE: f64 = 1e-9;
        let n = rows.len();
        if n == 0 {
            return Err(FuzzyMetricError::EmptyMatrix);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(FuzzyMetricError::NotSquare {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if !v.is_finite() || v < 0.0 {
                    return Err(FuzzyMetricError::BadEntry { i, j, value: v });
                }
            }
            if rows[i][i] != 0.0 {
                return Err(FuzzyMetricError::NonzeroDiagonal {
                    i,
                    value: rows[i][i],
                });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if rows[i][j] != rows[j][i] {
                    return Err(FuzzyMetricError::NotSymmetric {
                        i,
                        j,
                        dij: rows[i][j],
                        dji: rows[j][i],
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let sum = rows[i][j] + rows[j][k];
                    if rows[i][k] > sum + TRIANGLE_TOLERANCE {
                        return Err(FuzzyMetricError::TriangleViolation {
                            i,
                            j,
                            k,
                            dik: rows[i][k],
                            sum,
                        });
                    }
                }
            }
        }
        Ok(MetricMatrix { rows })
    }

    /// Pairwise Euclidean distances of planar points.
    pub fn from_euclidean_points(points: &[(f64, f64)]) -> Result<Self, FuzzyMetricError> {
        let n = points.len();
        let mut rows = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let (dx, dy) = (points[i].0 - points[j].0, points[i].1 - points[j].1);
                let d = dx.hypot(dy);
                rows[i][j] = d;
                rows[j][i] = d;
            }
        }
        MetricMatrix::new(rows)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }
}

#[derive(Debug, Clone)]
enum MembershipRule {
    /// `M(i, j, t) = 1 - min(d(i,j), k) / h(t)`
    TruncatedRamp { d: MetricMatrix, k: f64, h: ScaleFn },
    /// `M(i, j, t) = exp(-d(i,j))`, independent of `t`
    NegativeExponential { d: MetricMatrix },
    /// `M(i, j, t) = efm(coords[i], coords[j], t)`
    Euclidean {
        coords: Vec<f64>,
        efm: EuclideanFuzzyMetric,
    },
    /// Raw stationary membership values; nothing is assumed about them.
    Stationary { rows: Vec<Vec<f64>> },
}

/// A finite point set together with a membership rule and a t-norm.
#[derive(Debug, Clone)]
pub struct FiniteFuzzyMetricSpace {
    rule: MembershipRule,
    tnorm: TNorm,
}

impl FiniteFuzzyMetricSpace {
    /// The truncated-ramp preset over a classical metric, with the Łukasiewicz
    /// t-norm. Requires `h` to stay above the truncation level `k` so the
    /// membership is positive; since `h` is increasing this reduces to
    /// `inf h >= k`.
    pub fn truncated_ramp(d: MetricMatrix, k: f64, h: ScaleFn) -> Result<Self, FuzzyMetricError> {
        if !k.is_finite() || k <= 0.0 {
            return Err(FuzzyMetricError::NonPositiveParameter(k));
        }
        h.validate()?;
        if h.lower_limit() < k {
            return Err(FuzzyMetricError::ScaleBelowTruncation {
                k,
                inf: h.lower_limit(),
            });
        }
        Ok(FiniteFuzzyMetricSpace {
            rule: MembershipRule::TruncatedRamp { d, k, h },
            tnorm: TNorm::Lukasiewicz,
        })
    }

    /// The stationary `exp(-d)` preset with the product t-norm.
    pub fn negative_exponential(d: MetricMatrix) -> Self {
        FiniteFuzzyMetricSpace {
            rule: MembershipRule::NegativeExponential { d },
            tnorm: TNorm::Product,
        }
    }

    /// Points on the real line measured by a Euclidean fuzzy metric.
    pub fn euclidean(
        coords: Vec<f64>,
        efm: EuclideanFuzzyMetric,
    ) -> Result<Self, FuzzyMetricError> {
        if coords.is_empty() {
            return Err(FuzzyMetricError::EmptyMatrix);
        }
        for &c in &coords {
            if !c.is_finite() {
                return Err(FuzzyMetricError::NonFiniteCoordinate(c));
            }
        }
        let tnorm = efm.tnorm;
        Ok(FiniteFuzzyMetricSpace {
            rule: MembershipRule::Euclidean { coords, efm },
            tnorm,
        })
    }

    /// Wraps raw stationary membership values. Only the shape is checked;
    /// whether the values satisfy the fuzzy metric axioms is exactly what
    /// [`validate_axioms`](Self::validate_axioms) decides.
    pub fn from_membership_matrix(
        rows: Vec<Vec<f64>>,
        tnorm: TNorm,
    ) -> Result<Self, FuzzyMetricError> {
        let n = rows.len();
        if n == 0 {
            return Err(FuzzyMetricError::EmptyMatrix);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(FuzzyMetricError::NotSquare {
                    row: i,
                    len: row.len(),
                    expected: n,
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if !v.is_finite() {
                    return Err(FuzzyMetricError::BadEntry { i, j, value: v });
                }
            }
        }
        Ok(FiniteFuzzyMetricSpace {
            rule: MembershipRule::Stationary { rows },
            tnorm,
        })
    }

    pub fn len(&self) -> usize {
        match &self.rule {
            MembershipRule::TruncatedRamp { d, .. } => d.len(),
            MembershipRule::NegativeExponential { d } => d.len(),
            MembershipRule::Euclidean { coords, .. } => coords.len(),
            MembershipRule::Stationary { rows } => rows.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn tnorm(&self) -> TNorm {
        self.tnorm
    }

    /// Membership `M(i, j, t)`.
    pub fn membership(&self, i: usize, j: usize, t: f64) -> Result<f64, FuzzyMetricError> {
        let n = self.len();
        for index in [i, j] {
            if index >= n {
                return Err(FuzzyMetricError::IndexOutOfRange { index, len: n });
            }
        }
        check_time(t)?;
        match &self.rule {
            MembershipRule::TruncatedRamp { d, k, h } => {
                Ok(1.0 - d.distance(i, j).min(*k) / h.eval(t)?)
            }
            MembershipRule::NegativeExponential { d } => Ok((-d.distance(i, j)).exp()),
            MembershipRule::Euclidean { coords, efm } => efm.eval(coords[i], coords[j], t),
            MembershipRule::Stationary { rows } => Ok(rows[i][j]),
        }
    }

    /// True when the membership provably ignores `t`.
    pub fn is_stationary(&self) -> bool {
        match &self.rule {
            MembershipRule::TruncatedRamp { .. } => false,
            MembershipRule::NegativeExponential { .. } => true,
            MembershipRule::Euclidean { efm, .. } => efm.g.is_constant(),
            MembershipRule::Stationary { .. } => true,
        }
    }

    /// For a stationary space, the classical pre-metric `(i, j) -> 1 - M(i, j)`;
    /// for the `exp(-d)` preset this is `1 - exp(-d)`, a genuine metric.
    pub fn derived_stationary_metric(&self) -> Option<Vec<Vec<f64>>> {
        if !self.is_stationary() {
            return None;
        }
        let n = self.len();
        let t_ref = 1.0;
        let mut rows = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                rows[i][j] = 1.0 - self.membership(i, j, t_ref).ok()?;
            }
        }
        Some(rows)
    }

    /// Checks positivity, identity of indiscernibles, symmetry, the t-norm
    /// triangle inequality `M(i, k, t+s) >= T(M(i, j, t), M(j, k, s))` and
    /// monotonicity in `t`, all on the supplied grids.
    pub fn validate_axioms(
        &self,
        t_grid: &[f64],
        s_grid: &[f64],
        tolerance: f64,
    ) -> SpaceAxiomReport {
        let n = self.len();
        let mut positivity = Verdict::ok();
        let mut identity = Verdict::ok();
        let mut symmetry = Verdict::ok();
        let mut triangle = Verdict::ok();
        let mut monotone = Verdict::ok();

        let value = |i: usize, j: usize, t: f64| self.membership(i, j, t);

        'positivity: for &t in t_grid {
            for i in 0..n {
                for j in 0..n {
                    match value(i, j, t) {
                        Ok(m) if m > 0.0 && m <= 1.0 => {}
                        Ok(m) => {
                            positivity =
                                Verdict::fail(format!("M({i},{j},{t}) = {m} is outside (0, 1]"));
                            break 'positivity;
                        }
                        Err(e) => {
                            positivity = Verdict::fail(format!("M({i},{j},{t}): {e}"));
                            break 'positivity;
                        }
                    }
                }
            }
        }

        'identity: for &t in t_grid {
            for i in 0..n {
                match value(i, i, t) {
                    Ok(m) if (m - 1.0).abs() <= tolerance => {}
                    Ok(m) => {
                        identity = Verdict::fail(format!("M({i},{i},{t}) = {m} differs from 1"));
                        break 'identity;
                    }
                    Err(e) => {
                        identity = Verdict::fail(format!("M({i},{i},{t}): {e}"));
                        break 'identity;
                    }
                }
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    if let Ok(m) = value(i, j, t) {
                        if m >= 1.0 {
                            identity =
                                Verdict::fail(format!("M({i},{j},{t}) = {m} for distinct points"));
                            break 'identity;
                        }
                    }
                }
            }
        }

        'symmetry: for &t in t_grid {
            for i in 0..n {
                for j in (i + 1)..n {
                    match (value(i, j, t), value(j, i, t)) {
                        (Ok(mij), Ok(mji)) if (mij - mji).abs() <= tolerance => {}
                        (Ok(mij), Ok(mji)) => {
                            symmetry = Verdict::fail(format!(
                                "M({i},{j},{t}) = {mij} but M({j},{i},{t}) = {mji}"
                            ));
                            break 'symmetry;
                        }
                        _ => {
                            symmetry = Verdict::fail(format!("evaluation failed at ({i},{j},{t})"));
                            break 'symmetry;
                        }
                    }
                }
            }
        }

        'triangle: for &t in t_grid {
            for &s in s_grid {
                for i in 0..n {
                    for j in 0..n {
                        for k in 0..n {
                            let (Ok(lhs), Ok(a), Ok(b)) =
                                (value(i, k, t + s), value(i, j, t), value(j, k, s))
                            else {
                                triangle = Verdict::fail(format!(
                                    "evaluation failed on triple ({i},{j},{k}) at (t,s)=({t},{s})"
                                ));
                                break 'triangle;
                            };
                            // out-of-range memberships already fail positivity;
                            // clamp so the t-norm itself stays well defined
                            let rhs = self
                                .tnorm
                                .apply(a.clamp(0.0, 1.0), b.clamp(0.0, 1.0))
                                .expect("clamped arguments");
                            if lhs < rhs - tolerance {
                                triangle = Verdict::fail(format!(
                                    "M({i},{k},{}) = {lhs} < {rhs} = T(M({i},{j},{t}), M({j},{k},{s}))",
                                    t + s
                                ));
                                break 'triangle;
                            }
                        }
                    }
                }
            }
        }

        let mut ts: Vec<f64> = t_grid.to_vec();
        ts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        'monotone: for i in 0..n {
            for j in 0..n {
                let mut prev = f64::NEG_INFINITY;
                for &t in &ts {
                    match value(i, j, t) {
                        Ok(m) => {
                            if m < prev - tolerance {
                                monotone = Verdict::fail(format!(
                                    "M({i},{j},t) decreases from {prev} to {m} at t = {t}"
                                ));
                                break 'monotone;
                            }
                            prev = m;
                        }
                        Err(_) => break,
                    }
                }
            }
        }

        let pass = positivity.ok && identity.ok && symmetry.ok && triangle.ok && monotone.ok;
        SpaceAxiomReport {
            positivity,
            identity,
            symmetry,
            triangle,
            monotone_in_t: monotone,
            pass,
        }
    }
}

/// Result of [`FiniteFuzzyMetricSpace::validate_axioms`].
#[derive(Debug, Clone)]
pub struct SpaceAxiomReport {
    pub positivity: Verdict,
    pub identity: Verdict,
    pub symmetry: Verdict,
    pub triangle: Verdict,
    pub monotone_in_t: Verdict,
    pub pass: bool,
}

impl SpaceAxiomReport {
    pub fn failed_items(&self) -> Vec<&'static str> {
        let mut items = Vec::new();
        if !self.positivity.ok {
            items.push("positivity");
        }
        if !self.identity.ok {
            items.push("identity");
        }
        if !self.symmetry.ok {
            items.push("symmetry");
        }
        if !self.triangle.ok {
            items.push("triangle");
        }
        if !self.monotone_in_t.ok {
            items.push("monotone-in-t");
        }
        items
    }
}

/// 20 log-spaced time samples spanning `[1e-3, 1e3]`.
pub fn default_t_grid() -> Vec<f64> {
    log_space(1e-3, 1e3, 20)
}

fn check_time(t: f64) -> Result<(), FuzzyMetricError> {
    if !t.is_finite() || t <= 0.0 {
        Err(FuzzyMetricError::NonPositiveTime(t))
    } else {
        Ok(())
    }
}

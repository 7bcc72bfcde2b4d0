//! Extension of fuzzy Lipschitz maps from a subset to the whole space.
//!
//! A map `f` from a subset `S` of a fuzzy metric space into a Euclidean fuzzy
//! metric target is *fuzzy Lipschitz* with dilation `K(t)` when
//!
//! ```text
//! 1 - N(f(x,t), f(y,t), t) <= K(t) * (1 - M(x,y,t))        for x, y in S.
//! ```
//!
//! Pushing the defect through the right adjoint of the target's shape
//! function turns it into an honest distance bound,
//!
//! ```text
//! |f(x,t) - f(y,t)| <= rho_t(x,y) := adj( K(t)/g(t) * (1 - M(x,y,t)) ),
//! ```
//!
//! so the classical extremal extensions apply: the McShane supremum
//! `sup_s { f(s,t) - rho_t(x,s) }` and the Whitney infimum
//! `inf_s { f(s,t) + rho_t(x,s) }`. Provided `K(t)/g(t) * (1 - M) < sup phi`
//! on the whole space, every extended value again satisfies the Lipschitz
//! inequality above — and [`verify_fuzzy_lipschitz`] re-checks that claim on
//! the produced output instead of trusting it.
//!
//! [`chain_pseudometric`] materialises the associated chain distance: the
//! infimum over finite chains of summed `rho_t` edge costs. Since edge costs
//! are non-negative, dropping a repeated vertex from a chain never increases
//! its cost, so the infimum over arbitrary chains is attained by a simple
//! path and a dense all-pairs shortest-path sweep computes it exactly; the
//! brute-force enumeration oracle in the acceptance suite backs this
//! reduction.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::extended::ExtendedNonNegative;
use crate::fuzzy_metric::{
    EuclideanFuzzyMetric, FiniteFuzzyMetricSpace, FuzzyMetricError, MetricMatrix,
};

/// Reported dilation for a constant sample map; the estimate itself is 0 but
/// the Lipschitz framework needs a positive constant.
pub const DEGENERATE_DILATION_FLOOR: f64 = 1e-12;

/// Relative headroom applied by [`estimate_dilation_function`] so that the
/// certified inequality survives float rounding in later stages.
pub const DILATION_SAFETY_FACTOR: f64 = 1.0 + 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExtensionError {
    #[error(
        "map is not fuzzy Lipschitz at t={t}: M({i},{j},t) = 1 but the image defect is {numerator}"
    )]
    NonLipschitz {
        i: usize,
        j: usize,
        t: f64,
        numerator: f64,
    },
    #[error("extension undefined at point {query}: every sample lies at infinite distance")]
    Undefined { query: usize },
    #[error("hypothesis violated: {detail}")]
    HypothesisViolated { detail: String },
    #[error("t = {0} is not on the working grid")]
    TNotOnGrid(f64),
    #[error("alpha must lie in [0, 1], got {0}")]
    AlphaOutOfRange(f64),
    #[error("invalid sampled map: {0}")]
    InvalidSample(String),
    #[error("invalid dilation: {0}")]
    InvalidDilation(String),
    #[error("dilation estimation needs at least two sample points, got {0}")]
    NeedTwoSamples(usize),
    #[error("verification needs extended values for all {expected} points")]
    QueriesMustCoverSpace { expected: usize },
    #[error(transparent)]
    Metric(#[from] FuzzyMetricError),
}

/// Values `f(s, t)` of a map on a subset `S` across a time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledMap {
    subset: Vec<usize>,
    t_grid: Vec<f64>,
    values: Vec<Vec<f64>>,
    stationary: bool,
}

impl SampledMap {
    /// `values[p][ti]` is the value at subset point `subset[p]` and time
    /// `t_grid[ti]`.
    pub fn new(
        subset: Vec<usize>,
        t_grid: Vec<f64>,
        values: Vec<Vec<f64>>,
    ) -> Result<Self, ExtensionError> {
        Self::build(subset, t_grid, values, false)
    }

    /// A map that ignores `t`: one value per subset point, replicated across
    /// the grid.
    pub fn stationary(
        subset: Vec<usize>,
        t_grid: Vec<f64>,
        per_point: Vec<f64>,
    ) -> Result<Self, ExtensionError> {
        if per_point.len() != subset.len() {
            return Err(ExtensionError::InvalidSample(format!(
                "{} values for {} subset points",
                per_point.len(),
                subset.len()
            )));
        }
        let width = t_grid.len();
        let values = per_point.into_iter().map(|v| vec![v; width]).collect();
        Self::build(subset, t_grid, values, true)
    }

    fn build(
        subset: Vec<usize>,
        t_grid: Vec<f64>,
        values: Vec<Vec<f64>>,
        stationary: bool,
    ) -> Result<Self, ExtensionError> {
        if subset.is_empty() {
            return Err(ExtensionError::InvalidSample("empty subset".into()));
        }
        let mut seen = subset.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != subset.len() {
            return Err(ExtensionError::InvalidSample(
                "subset contains duplicate indices".into(),
            ));
        }
        if t_grid.is_empty() {
            return Err(ExtensionError::InvalidSample("empty t grid".into()));
        }
        if t_grid.iter().any(|&t| !t.is_finite() || t <= 0.0) {
            return Err(ExtensionError::InvalidSample(
                "t grid entries must be positive and finite".into(),
            ));
        }
        if values.len() != subset.len() {
            return Err(ExtensionError::InvalidSample(format!(
                "{} value rows for {} subset points",
                values.len(),
                subset.len()
            )));
        }
        for (p, row) in values.iter().enumerate() {
            if row.len() != t_grid.len() {
                return Err(ExtensionError::InvalidSample(format!(
                    "row {p} has {} values for {} grid points",
                    row.len(),
                    t_grid.len()
                )));
            }
            if row.iter().any(|v| !v.is_finite()) {
                return Err(ExtensionError::InvalidSample(format!(
                    "row {p} contains a non-finite value"
                )));
            }
        }
        Ok(SampledMap {
            subset,
            t_grid,
            values,
            stationary,
        })
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn t_grid(&self) -> &[f64] {
        &self.t_grid
    }

    pub fn is_stationary(&self) -> bool {
        self.stationary
    }

    /// Value at subset position `p` (not point index) and grid index `ti`.
    pub fn value(&self, p: usize, ti: usize) -> f64 {
        self.values[p][ti]
    }

    /// Position of a point index within the subset, if sampled.
    pub fn position_of(&self, point: usize) -> Option<usize> {
        self.subset.iter().position(|&s| s == point)
    }

    pub fn t_index(&self, t: f64) -> Result<usize, ExtensionError> {
        find_t(&self.t_grid, t).ok_or(ExtensionError::TNotOnGrid(t))
    }
}

/// The dilation `K(t)` of a fuzzy Lipschitz map.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DilationFunction {
    Constant { value: f64 },
    /// `K(t) = base + rate * t`
    Affine { base: f64, rate: f64 },
    Tabulated { t_grid: Vec<f64>, values: Vec<f64> },
}

impl DilationFunction {
    pub fn constant(value: f64) -> Result<Self, ExtensionError> {
        let k = DilationFunction::Constant { value };
        k.validate()?;
        Ok(k)
    }

    pub fn tabulated(t_grid: Vec<f64>, values: Vec<f64>) -> Result<Self, ExtensionError> {
        let k = DilationFunction::Tabulated { t_grid, values };
        k.validate()?;
        Ok(k)
    }

    pub fn validate(&self) -> Result<(), ExtensionError> {
        match self {
            DilationFunction::Constant { value } => {
                if !value.is_finite() || *value < 0.0 {
                    return Err(ExtensionError::InvalidDilation(format!(
                        "constant {value} is not a finite non-negative real"
                    )));
                }
            }
            DilationFunction::Affine { base, rate } => {
                for v in [base, rate] {
                    if !v.is_finite() || *v < 0.0 {
                        return Err(ExtensionError::InvalidDilation(format!(
                            "affine parameter {v} is not a finite non-negative real"
                        )));
                    }
                }
            }
            DilationFunction::Tabulated { t_grid, values } => {
                if t_grid.is_empty() || t_grid.len() != values.len() {
                    return Err(ExtensionError::InvalidDilation(format!(
                        "{} values tabulated on {} grid points",
                        values.len(),
                        t_grid.len()
                    )));
                }
                if t_grid.iter().any(|t| !t.is_finite() || *t <= 0.0) {
                    return Err(ExtensionError::InvalidDilation(
                        "tabulation grid entries must be positive".into(),
                    ));
                }
                if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
                    return Err(ExtensionError::InvalidDilation(
                        "tabulated dilations must be finite and non-negative".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn eval(&self, t: f64) -> Result<f64, ExtensionError> {
        match self {
            DilationFunction::Constant { value } => Ok(*value),
            DilationFunction::Affine { base, rate } => Ok(base + rate * t),
            DilationFunction::Tabulated { t_grid, values } => find_t(t_grid, t)
                .map(|i| values[i])
                .ok_or(ExtensionError::TNotOnGrid(t)),
        }
    }
}

/// The blending weight `alpha(t)` between the two extremal extensions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum AlphaFn {
    Constant { value: f64 },
    Tabulated { t_grid: Vec<f64>, values: Vec<f64> },
}

impl AlphaFn {
    pub fn constant(value: f64) -> Result<Self, ExtensionError> {
        if !(0.0..=1.0).contains(&value) || value.is_nan() {
            return Err(ExtensionError::AlphaOutOfRange(value));
        }
        Ok(AlphaFn::Constant { value })
    }

    pub fn eval(&self, t: f64) -> Result<f64, ExtensionError> {
        let alpha = match self {
            AlphaFn::Constant { value } => *value,
            AlphaFn::Tabulated { t_grid, values } => find_t(t_grid, t)
                .map(|i| values[i])
                .ok_or(ExtensionError::TNotOnGrid(t))?,
        };
        if !(0.0..=1.0).contains(&alpha) || alpha.is_nan() {
            return Err(ExtensionError::AlphaOutOfRange(alpha));
        }
        Ok(alpha)
    }
}

/// Outcome of [`estimate_dilation`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DilationEstimate {
    pub dilation: f64,
    /// Set when the defect ratio was identically zero (constant map) and the
    /// reported dilation is the positive floor rather than the true infimum 0.
    pub degenerate: bool,
}

/// Smallest constant `K` with `1 - N(f(x),f(y),t) <= K (1 - M(x,y,t))` over
/// sample pairs, as the maximum of the defect ratios.
///
/// A pair at membership 1 with distinct images has no finite ratio and makes
/// the map non-Lipschitz; a constant map yields the flagged floor.
pub fn estimate_dilation(
    space: &FiniteFuzzyMetricSpace,
    codomain: &EuclideanFuzzyMetric,
    f: &SampledMap,
    t: f64,
) -> Result<DilationEstimate, ExtensionError> {
    let s = f.subset();
    if s.len() < 2 {
        return Err(ExtensionError::NeedTwoSamples(s.len()));
    }
    let ti = f.t_index(t)?;
    let mut best: f64 = 0.0;
    for a in 0..s.len() {
        for b in (a + 1)..s.len() {
            let numerator = codomain.dissimilarity(f.value(a, ti), f.value(b, ti), t)?;
            let denominator = 1.0 - space.membership(s[a], s[b], t)?;
            if denominator <= 0.0 {
                if numerator > 0.0 {
                    return Err(ExtensionError::NonLipschitz {
                        i: s[a],
                        j: s[b],
                        t,
                        numerator,
                    });
                }
                continue; // indistinguishable points with equal images constrain nothing
            }
            best = best.max(numerator / denominator);
        }
    }
    if best > 0.0 {
        Ok(DilationEstimate {
            dilation: best,
            degenerate: false,
        })
    } else {
        Ok(DilationEstimate {
            dilation: DEGENERATE_DILATION_FLOOR,
            degenerate: true,
        })
    }
}

/// Estimates the dilation on every grid time and tabulates it, inflated by
/// [`DILATION_SAFETY_FACTOR`] so downstream float arithmetic cannot undercut
/// the certified bound.
pub fn estimate_dilation_function(
    space: &FiniteFuzzyMetricSpace,
    codomain: &EuclideanFuzzyMetric,
    f: &SampledMap,
) -> Result<(DilationFunction, Vec<DilationEstimate>), ExtensionError> {
    let mut estimates = Vec::with_capacity(f.t_grid().len());
    let mut values = Vec::with_capacity(f.t_grid().len());
    for &t in f.t_grid() {
        let est = estimate_dilation(space, codomain, f, t)?;
        values.push(est.dilation * DILATION_SAFETY_FACTOR);
        estimates.push(est);
    }
    let k = DilationFunction::tabulated(f.t_grid().to_vec(), values)?;
    Ok((k, estimates))
}

/// Verdict of the boundedness hypothesis `K(t)/g(t) * (1 - M) < sup phi`.
#[derive(Debug, Clone)]
pub struct HypothesisReport {
    pub pass: bool,
    /// `sup phi` of the codomain.
    pub bound: ExtendedNonNegative,
    /// Pair attaining the largest left-hand side, with its value.
    pub worst: Option<(usize, usize, f64)>,
    pub t: f64,
}

impl HypothesisReport {
    /// Amount by which the worst pair overshoots the bound; negative margins
    /// mean the hypothesis holds with room to spare.
    pub fn excess(&self) -> Option<f64> {
        match (self.worst, self.bound.finite()) {
            (Some((_, _, v)), Some(b)) => Some(v - b),
            (Some(_), None) => Some(f64::NEG_INFINITY),
            (None, _) => None,
        }
    }
}

/// Checks the extension hypothesis over every pair of the full space.
pub fn check_hypothesis(
    space: &FiniteFuzzyMetricSpace,
    codomain: &EuclideanFuzzyMetric,
    k: &DilationFunction,
    t: f64,
) -> Result<HypothesisReport, ExtensionError> {
    let bound = codomain.phi.sup_value();
    let ratio = k.eval(t)? / codomain.g.eval(t)?;
    let n = space.len();
    let mut worst: Option<(usize, usize, f64)> = None;
    for i in 0..n {
        for j in (i + 1)..n {
            let value = ratio * (1.0 - space.membership(i, j, t)?);
            if worst.is_none_or(|(_, _, w)| value > w) {
                worst = Some((i, j, value));
            }
        }
    }
    let pass = match worst {
        None => true, // no pairs: vacuously strict
        Some((_, _, v)) => {
            ExtendedNonNegative::new(v.max(0.0)).expect("non-negative product") < bound
        }
    };
    Ok(HypothesisReport {
        pass,
        bound,
        worst,
        t,
    })
}

/// The adjoint distance `rho_t(i, j) = adj( K(t)/g(t) * (1 - M(i,j,t)) )`;
/// `+∞` exactly when the hypothesis fails for the pair.
pub fn rho(
    space: &FiniteFuzzyMetricSpace,
    codomain: &EuclideanFuzzyMetric,
    k: &DilationFunction,
    t: f64,
    i: usize,
    j: usize,
) -> Result<ExtendedNonNegative, ExtensionError> {
    let ratio = k.eval(t)? / codomain.g.eval(t)?;
    let defect = 1.0 - space.membership(i, j, t)?;
    let arg = ExtendedNonNegative::new((ratio * defect).max(0.0)).expect("non-negative argument");
    Ok(codomain.phi.right_adjoint(arg))
}

/// All-pairs `rho_t`, symmetric by construction.
pub fn rho_matrix(
    space: &FiniteFuzzyMetricSpace,
    codomain: &EuclideanFuzzyMetric,
    k: &DilationFunction,
    t: f64,
) -> Result<Vec<Vec<ExtendedNonNegative>>, ExtensionError> {
    let n = space.len();
    let mut rows = vec![vec![ExtendedNonNegative::ZERO; n]; n];
    for i in 0..n {
        rows[i][i] = rho(space, codomain, k, t, i, i)?;
        for j in (i + 1)..n {
            let value = rho(space, codomain, k, t, i, j)?;
            rows[i][j] = value;
            rows[j][i] = value;
        }
    }
    Ok(rows)
}

/// Shortest chain costs over a complete graph with symmetric non-negative
/// edge weights (read from the upper triangle), `+∞` aware.
///
/// Costs accumulate edge by edge from the lower-indexed endpoint, so each
/// entry is the exact float minimum over left-to-right summed simple chains —
/// bit-for-bit what exhaustive enumeration produces. One dense sweep per
/// source keeps the whole matrix cubic in the point count.
pub fn shortest_chain_distances(
    weights: &[Vec<ExtendedNonNegative>],
) -> Vec<Vec<ExtendedNonNegative>> {
    let n = weights.len();
    let w = |i: usize, j: usize| {
        if i <= j {
            weights[i][j]
        } else {
            weights[j][i]
        }
    };
    let mut result = vec![vec![ExtendedNonNegative::ZERO; n]; n];
    for source in 0..n {
        let mut dist = vec![ExtendedNonNegative::INFINITY; n];
        let mut settled = vec![false; n];
        dist[source] = ExtendedNonNegative::ZERO;
        for _ in 0..n {
            let mut next: Option<usize> = None;
            for v in 0..n {
                if !settled[v] && next.is_none_or(|u| dist[v] < dist[u]) {
                    next = Some(v);
                }
            }
            let Some(u) = next else { break };
            settled[u] = true;
            if dist[u].is_infinite() {
                break;
            }
            for v in 0..n {
                if v == u || settled[v] {
                    continue;
                }
                let candidate = dist[u] + w(u, v);
                if candidate < dist[v] {
                    dist[v] = candidate;
                }
            }
        }
        for target in (source + 1)..n {
            result[source][target] = dist[target];
            result[target][source] = dist[target];
        }
    }
    for (i, row) in result.iter_mut().enumerate() {
        row[i] = ExtendedNonNegative::ZERO;
    }
    result
}

/// The chain pseudometric `d_t`: shortest chains under `rho_t` edge costs.
///
/// Zero diagonal and symmetry hold by construction; the triangle inequality
/// holds because sub-chains of optimal chains are optimal.
pub fn chain_pseudometric(
    space: &FiniteFuzzyMetricSpace,
    codomain: &EuclideanFuzzyMetric,
    k: &DilationFunction,
    t: f64,
) -> Result<Vec<Vec<ExtendedNonNegative>>, ExtensionError> {
    let weights = rho_matrix(space, codomain, k, t)?;
    Ok(shortest_chain_distances(&weights))
}

/// The McShane (largest minorant) extension value at one query point:
/// `sup_s { f(s, t) - rho(query, s) }`. Samples at infinite distance
/// contribute `-∞` and are skipped; if every sample does, the extension is
/// undefined there.
pub fn mcshane_extend(
    f: &SampledMap,
    rho: impl Fn(usize, usize) -> ExtendedNonNegative,
    query: usize,
    t: f64,
) -> Result<f64, ExtensionError> {
    let ti = f.t_index(t)?;
    let mut best: Option<f64> = None;
    for (p, &s) in f.subset().iter().enumerate() {
        let distance = rho(query, s);
        if distance.is_infinite() {
            continue;
        }
        let term = f.value(p, ti) - distance.value();
        best = Some(best.map_or(term, |b: f64| b.max(term)));
    }
    best.ok_or(ExtensionError::Undefined { query })
}

/// The Whitney (smallest majorant) extension value at one query point:
/// `inf_s { f(s, t) + rho(query, s) }`.
pub fn whitney_extend(
    f: &SampledMap,
    rho: impl Fn(usize, usize) -> ExtendedNonNegative,
    query: usize,
    t: f64,
) -> Result<f64, ExtensionError> {
    let ti = f.t_index(t)?;
    let mut best: Option<f64> = None;
    for (p, &s) in f.subset().iter().enumerate() {
        let distance = rho(query, s);
        if distance.is_infinite() {
            continue;
        }
        let term = f.value(p, ti) + distance.value();
        best = Some(best.map_or(term, |b: f64| b.min(term)));
    }
    best.ok_or(ExtensionError::Undefined { query })
}

/// Convex combination `alpha * mcshane + (1 - alpha) * whitney`.
pub fn blend(alpha: f64, mcshane: f64, whitney: f64) -> Result<f64, ExtensionError> {
    if !(0.0..=1.0).contains(&alpha) || alpha.is_nan() {
        return Err(ExtensionError::AlphaOutOfRange(alpha));
    }
    Ok(alpha * mcshane + (1.0 - alpha) * whitney)
}

/// One extended value triple.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtensionRow {
    pub point: usize,
    pub t: f64,
    pub mcshane: f64,
    pub whitney: f64,
    pub blended: f64,
}

/// Extension output over a batch of query points and the full time grid.
#[derive(Debug, Clone)]
pub struct ExtensionResult {
    pub queries: Vec<usize>,
    pub t_grid: Vec<f64>,
    /// Query-major, time-minor.
    pub rows: Vec<ExtensionRow>,
    /// Conjunction of the per-`t` hypothesis verdicts.
    pub hypothesis_pass: bool,
    /// Worst hypothesis overshoot observed, with its pair and time.
    pub worst_hypothesis: Option<(usize, usize, f64, f64)>,
    /// Number of `(query, sample, t)` distances that came out `+∞`.
    pub infinite_rho_count: usize,
}

impl ExtensionResult {
    pub fn row(&self, query_pos: usize, t_index: usize) -> &ExtensionRow {
        &self.rows[query_pos * self.t_grid.len() + t_index]
    }
}

/// Runs the full pipeline over the query batch: hypothesis check, adjoint
/// distances against the sample set, both extremal extensions and the blend.
pub fn extend_map(
    space: &FiniteFuzzyMetricSpace,
    codomain: &EuclideanFuzzyMetric,
    f: &SampledMap,
    k: &DilationFunction,
    alpha: &AlphaFn,
    queries: &[usize],
) -> Result<ExtensionResult, ExtensionError> {
    let n = space.len();
    for &q in queries {
        if q >= n {
            return Err(ExtensionError::Metric(FuzzyMetricError::IndexOutOfRange {
                index: q,
                len: n,
            }));
        }
    }
    let mut rows = Vec::with_capacity(queries.len() * f.t_grid().len());
    let mut hypothesis_pass = true;
    let mut worst_hypothesis: Option<(usize, usize, f64, f64)> = None;
    let mut infinite_rho_count = 0usize;

    for &t in f.t_grid() {
        let report = check_hypothesis(space, codomain, k, t)?;
        hypothesis_pass &= report.pass;
        if let Some((i, j, v)) = report.worst {
            if worst_hypothesis.is_none_or(|(_, _, w, _)| v > w) {
                worst_hypothesis = Some((i, j, v, t));
            }
        }
    }

    for &q in queries {
        for &t in f.t_grid() {
            // distances from this query to every sample point
            let mut distances = Vec::with_capacity(f.subset().len());
            for &s in f.subset() {
                let d = rho(space, codomain, k, t, q, s)?;
                if d.is_infinite() {
                    infinite_rho_count += 1;
                }
                distances.push((s, d));
            }
            let accessor = |_query: usize, s: usize| {
                distances
                    .iter()
                    .find(|(point, _)| *point == s)
                    .map(|(_, d)| *d)
                    .expect("sample point")
            };
            let mcshane = mcshane_extend(f, accessor, q, t)?;
            let whitney = whitney_extend(f, accessor, q, t)?;
            let blended = blend(alpha.eval(t)?, mcshane, whitney)?;
            rows.push(ExtensionRow {
                point: q,
                t,
                mcshane,
                whitney,
                blended,
            });
        }
    }

    Ok(ExtensionResult {
        queries: queries.to_vec(),
        t_grid: f.t_grid().to_vec(),
        rows,
        hypothesis_pass,
        worst_hypothesis,
        infinite_rho_count,
    })
}

/// Result of [`verify_fuzzy_lipschitz`].
#[derive(Debug, Clone)]
pub struct LipschitzReport {
    pub pass: bool,
    /// Largest observed `lhs - rhs` over pairs, times and both variants.
    pub worst_slack: f64,
    /// `(i, j, t, variant)` attaining the worst slack.
    pub witness: Option<(usize, usize, f64, ExtensionVariant)>,
    /// Largest defect ratio achieved by the extended map, when defined.
    pub achieved_dilation: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionVariant {
    McShane,
    Whitney,
}

impl std::fmt::Display for ExtensionVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtensionVariant::McShane => write!(f, "mcshane"),
            ExtensionVariant::Whitney => write!(f, "whitney"),
        }
    }
}

/// Re-checks the Lipschitz inequality
/// `1 - N(fhat(x,t), fhat(y,t), t) <= K(t) (1 - M(x,y,t))` on the produced
/// extension, for both variants, over every pair and grid time.
///
/// The extension must cover the whole space, one row block per point.
pub fn verify_fuzzy_lipschitz(
    space: &FiniteFuzzyMetricSpace,
    codomain: &EuclideanFuzzyMetric,
    ext: &ExtensionResult,
    k: &DilationFunction,
    tolerance: f64,
) -> Result<LipschitzReport, ExtensionError> {
    let n = space.len();
    let mut covered = ext.queries.clone();
    covered.sort_unstable();
    covered.dedup();
    if covered.len() != n || covered.iter().enumerate().any(|(i, &q)| i != q) {
        return Err(ExtensionError::QueriesMustCoverSpace { expected: n });
    }
    let position: Vec<usize> = {
        let mut pos = vec![0usize; n];
        for (p, &q) in ext.queries.iter().enumerate() {
            pos[q] = p;
        }
        pos
    };

    let mut worst_slack = f64::NEG_INFINITY;
    let mut witness = None;
    let mut achieved: Option<f64> = None;
    for (ti, &t) in ext.t_grid.iter().enumerate() {
        let kt = k.eval(t)?;
        for i in 0..n {
            for j in (i + 1)..n {
                let allowed = kt * (1.0 - space.membership(i, j, t)?);
                for variant in [ExtensionVariant::McShane, ExtensionVariant::Whitney] {
                    let (fi, fj) = {
                        let ri = ext.row(position[i], ti);
                        let rj = ext.row(position[j], ti);
                        match variant {
                            ExtensionVariant::McShane => (ri.mcshane, rj.mcshane),
                            ExtensionVariant::Whitney => (ri.whitney, rj.whitney),
                        }
                    };
                    let defect = codomain.dissimilarity(fi, fj, t)?;
                    let slack = defect - allowed;
                    if slack > worst_slack {
                        worst_slack = slack;
                        witness = Some((i, j, t, variant));
                    }
                }
                // achieved dilation uses the raw defect ratio
                let denominator = 1.0 - space.membership(i, j, t)?;
                if denominator > 0.0 {
                    let ri = ext.row(position[i], ti);
                    let rj = ext.row(position[j], ti);
                    for (fi, fj) in [(ri.mcshane, rj.mcshane), (ri.whitney, rj.whitney)] {
                        let ratio = codomain.dissimilarity(fi, fj, t)? / denominator;
                        achieved = Some(achieved.map_or(ratio, |a| a.max(ratio)));
                    }
                }
            }
        }
    }
    if worst_slack == f64::NEG_INFINITY {
        worst_slack = 0.0; // single-point space: nothing to compare
    }
    Ok(LipschitzReport {
        pass: worst_slack <= tolerance,
        worst_slack,
        witness,
        achieved_dilation: achieved,
    })
}

/// Closed-form extremal extensions over a truncated-ramp space into the
/// half-scale truncated target: moduli `2 q(t) min(d(s, x), k)`.
///
/// Requires `q(t) * min(d(s, x), k) < 1/2` for every sample `s`; at 1/2 the
/// adjoint jumps to `+∞` and the closed form no longer applies.
pub fn truncated_ramp_closed_form(
    d: &MetricMatrix,
    k: f64,
    q: &DilationFunction,
    f: &SampledMap,
    query: usize,
    t: f64,
) -> Result<(f64, f64), ExtensionError> {
    let ti = f.t_index(t)?;
    let qt = q.eval(t)?;
    let mut upper: Option<f64> = None;
    let mut lower: Option<f64> = None;
    for (p, &s) in f.subset().iter().enumerate() {
        let truncated = d.distance(s, query).min(k);
        let arg = qt * truncated;
        if arg >= 0.5 {
            return Err(ExtensionError::HypothesisViolated {
                detail: format!(
                    "q({t}) * min(d({s},{query}), k) = {arg} reaches 1/2 where the adjoint is infinite"
                ),
            });
        }
        let modulus = 2.0 * arg;
        let value = f.value(p, ti);
        lower = Some(lower.map_or(value - modulus, |b: f64| b.max(value - modulus)));
        upper = Some(upper.map_or(value + modulus, |b: f64| b.min(value + modulus)));
    }
    Ok((
        lower.expect("non-empty subset"),
        upper.expect("non-empty subset"),
    ))
}

/// Closed-form extremal extensions over the stationary `exp(-d)` space into
/// the half-scale truncated target: moduli `2 K(t) (1 - exp(-d(s, x)))`.
///
/// Requires `0 < K(t) < 1/2`, which keeps every adjoint argument strictly
/// below the jump to `+∞`.
pub fn exponential_closed_form(
    d: &MetricMatrix,
    k: &DilationFunction,
    f: &SampledMap,
    query: usize,
    t: f64,
) -> Result<(f64, f64), ExtensionError> {
    let ti = f.t_index(t)?;
    let kt = k.eval(t)?;
    if !(kt > 0.0 && kt < 0.5) {
        return Err(ExtensionError::HypothesisViolated {
            detail: format!("K({t}) = {kt} is outside (0, 1/2)"),
        });
    }
    let mut upper: Option<f64> = None;
    let mut lower: Option<f64> = None;
    for (p, &s) in f.subset().iter().enumerate() {
        let modulus = 2.0 * kt * (1.0 - (-d.distance(s, query)).exp());
        let value = f.value(p, ti);
        lower = Some(lower.map_or(value - modulus, |b: f64| b.max(value - modulus)));
        upper = Some(upper.map_or(value + modulus, |b: f64| b.min(value + modulus)));
    }
    Ok((
        lower.expect("non-empty subset"),
        upper.expect("non-empty subset"),
    ))
}

fn find_t(grid: &[f64], t: f64) -> Option<usize> {
    grid.iter().position(|&g| g == t)
}

//! Run configuration: a single JSON document naming the space, the codomain,
//! the sampled map and the pipeline options, plus the CSV ingestion it needs.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use fuzzy_extend::{
    default_t_grid, AlphaFn, DilationFunction, EuclideanFuzzyMetric, FiniteFuzzyMetricSpace,
    MetricMatrix, MonotoneFunction, SampledMap, ScaleFn, TNorm, TimeScaling,
};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub space: SpaceSpec,
    pub codomain: CodomainSpec,
    pub sample: SampleSpec,
    #[serde(default)]
    pub dilation: DilationSpec,
    #[serde(default)]
    pub alpha: AlphaSpec,
    #[serde(default)]
    pub query: QuerySpec,
    #[serde(default)]
    pub output: OutputSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "preset", rename_all = "kebab-case")]
pub enum SpaceSpec {
    /// `M = 1 - min(d, k) / h(t)` over a metric matrix, Łukasiewicz t-norm.
    TruncatedRamp {
        matrix: PathBuf,
        k: f64,
        h: ScaleFn,
    },
    /// Stationary `M = exp(-d)` over a metric matrix, product t-norm.
    Exponential { matrix: PathBuf },
    /// Real coordinates measured by a Euclidean fuzzy metric.
    Euclidean {
        coords: Vec<f64>,
        phi: MonotoneFunction,
        g: TimeScaling,
        tnorm: TNorm,
    },
    /// Raw stationary membership matrix; validation decides its fate.
    Membership { matrix: PathBuf, tnorm: TNorm },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodomainSpec {
    pub phi: MonotoneFunction,
    pub g: TimeScaling,
    pub tnorm: TNorm,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleSpec {
    /// Point indices of the sample subset `S`.
    pub indices: Vec<usize>,
    /// CSV with header `point,t,value`, or `point,value` for stationary maps.
    pub values: PathBuf,
    /// Working time grid; 20 log-spaced points in `[1e-3, 1e3]` when omitted.
    #[serde(default)]
    pub t_grid: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DilationSpec {
    Keyword(DilationKeyword),
    Given(DilationFunction),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DilationKeyword {
    Estimate,
}

impl Default for DilationSpec {
    fn default() -> Self {
        DilationSpec::Keyword(DilationKeyword::Estimate)
    }
}

impl DilationSpec {
    pub fn is_estimate(&self) -> bool {
        matches!(self, DilationSpec::Keyword(DilationKeyword::Estimate))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlphaSpec {
    Constant(f64),
    Tabulated { t_grid: Vec<f64>, values: Vec<f64> },
}

impl Default for AlphaSpec {
    fn default() -> Self {
        AlphaSpec::Constant(0.5)
    }
}

impl AlphaSpec {
    pub fn to_alpha(&self) -> Result<AlphaFn, CliError> {
        match self {
            AlphaSpec::Constant(v) => {
                AlphaFn::constant(*v).map_err(|e| CliError::Config(e.to_string()))
            }
            AlphaSpec::Tabulated { t_grid, values } => {
                if t_grid.len() != values.len() || t_grid.is_empty() {
                    return Err(CliError::Config(
                        "alpha tabulation needs matching non-empty grids".into(),
                    ));
                }
                if values.iter().any(|v| !(0.0..=1.0).contains(v)) {
                    return Err(CliError::Config(
                        "tabulated alpha values must lie in [0, 1]".into(),
                    ));
                }
                Ok(AlphaFn::Tabulated {
                    t_grid: t_grid.clone(),
                    values: values.clone(),
                })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum QuerySpec {
    Keyword(QueryKeyword),
    Indices { indices: Vec<usize> },
    /// Extra real coordinates, only meaningful for Euclidean spaces: they are
    /// appended to the point set and queried.
    Coords { coords: Vec<f64> },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QueryKeyword {
    All,
}

impl Default for QuerySpec {
    fn default() -> Self {
        QuerySpec::Keyword(QueryKeyword::All)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputSpec {
    #[serde(default = "default_extension_csv")]
    pub extension_csv: String,
    #[serde(default = "default_report_json")]
    pub report_json: String,
}

impl Default for OutputSpec {
    fn default() -> Self {
        OutputSpec {
            extension_csv: default_extension_csv(),
            report_json: default_report_json(),
        }
    }
}

fn default_extension_csv() -> String {
    "extension.csv".into()
}

fn default_report_json() -> String {
    "report.json".into()
}

impl RunConfig {
    /// Parses the config file and resolves its relative paths against the
    /// config's own directory.
    pub fn load(path: &Path) -> Result<RunConfig, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            detail: e.to_string(),
        })?;
        let mut config: RunConfig = serde_json::from_str(&text).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            detail: format!("invalid config JSON: {e}"),
        })?;
        let base = path.parent().unwrap_or_else(|| Path::new("."));
        config.resolve_paths(base);
        Ok(config)
    }

    fn resolve_paths(&mut self, base: &Path) {
        let resolve = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        };
        match &mut self.space {
            SpaceSpec::TruncatedRamp { matrix, .. }
            | SpaceSpec::Exponential { matrix }
            | SpaceSpec::Membership { matrix, .. } => resolve(matrix),
            SpaceSpec::Euclidean { .. } => {}
        }
        resolve(&mut self.sample.values);
    }

    pub fn t_grid(&self) -> Vec<f64> {
        self.sample.t_grid.clone().unwrap_or_else(default_t_grid)
    }
}

/// Everything the commands operate on, assembled from a [`RunConfig`].
pub struct Model {
    pub space: FiniteFuzzyMetricSpace,
    pub codomain: EuclideanFuzzyMetric,
    pub sample: SampledMap,
    pub alpha: AlphaFn,
    /// Indices whose extension lands in the output table.
    pub queries: Vec<usize>,
}

impl Model {
    pub fn build(config: &RunConfig) -> Result<Model, CliError> {
        let t_grid = config.t_grid();

        let (space, query_offset) = build_space(&config.space, &config.query)?;
        let n = space.len();

        let codomain = EuclideanFuzzyMetric::new(
            config.codomain.phi.clone(),
            config.codomain.g.clone(),
            config.codomain.tnorm,
        )
        .map_err(|e| CliError::Config(format!("codomain: {e}")))?;

        for &s in &config.sample.indices {
            if s >= n {
                return Err(CliError::Config(format!(
                    "sample index {s} out of range for a space with {n} points"
                )));
            }
        }
        let sample = load_values(
            &config.sample.values,
            &config.sample.indices,
            &t_grid,
        )?;

        let queries = match (&config.query, query_offset) {
            (QuerySpec::Keyword(QueryKeyword::All), _) => (0..n).collect(),
            (QuerySpec::Indices { indices }, _) => {
                for &q in indices {
                    if q >= n {
                        return Err(CliError::Config(format!(
                            "query index {q} out of range for a space with {n} points"
                        )));
                    }
                }
                indices.clone()
            }
            (QuerySpec::Coords { .. }, Some(offset)) => (offset..n).collect(),
            (QuerySpec::Coords { .. }, None) => {
                return Err(CliError::Config(
                    "coordinate queries require a euclidean space".into(),
                ))
            }
        };

        let alpha = config.alpha.to_alpha()?;

        Ok(Model {
            space,
            codomain,
            sample,
            alpha,
            queries,
        })
    }
}

/// Builds the space; for Euclidean spaces with coordinate queries the extra
/// coordinates are appended and their starting offset returned.
fn build_space(
    spec: &SpaceSpec,
    query: &QuerySpec,
) -> Result<(FiniteFuzzyMetricSpace, Option<usize>), CliError> {
    match spec {
        SpaceSpec::TruncatedRamp { matrix, k, h } => {
            let d = MetricMatrix::new(read_matrix_csv(matrix)?)
                .map_err(|e| CliError::Config(format!("space matrix: {e}")))?;
            let space = FiniteFuzzyMetricSpace::truncated_ramp(d, *k, h.clone())
                .map_err(|e| CliError::Config(format!("space: {e}")))?;
            Ok((space, None))
        }
        SpaceSpec::Exponential { matrix } => {
            let d = MetricMatrix::new(read_matrix_csv(matrix)?)
                .map_err(|e| CliError::Config(format!("space matrix: {e}")))?;
            Ok((FiniteFuzzyMetricSpace::negative_exponential(d), None))
        }
        SpaceSpec::Euclidean {
            coords,
            phi,
            g,
            tnorm,
        } => {
            let efm = EuclideanFuzzyMetric::new(phi.clone(), g.clone(), *tnorm)
                .map_err(|e| CliError::Config(format!("space metric: {e}")))?;
            let mut all = coords.clone();
            let offset = if let QuerySpec::Coords { coords: extra } = query {
                let offset = all.len();
                all.extend_from_slice(extra);
                Some(offset)
            } else {
                None
            };
            let space = FiniteFuzzyMetricSpace::euclidean(all, efm)
                .map_err(|e| CliError::Config(format!("space: {e}")))?;
            Ok((space, offset))
        }
        SpaceSpec::Membership { matrix, tnorm } => {
            let rows = read_matrix_csv(matrix)?;
            let space = FiniteFuzzyMetricSpace::from_membership_matrix(rows, *tnorm)
                .map_err(|e| CliError::Config(format!("space: {e}")))?;
            Ok((space, None))
        }
    }
}

/// Reads a square numeric CSV; a non-numeric first row is treated as a header.
pub fn read_matrix_csv(path: &Path) -> Result<Vec<Vec<f64>>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::Io {
            path: path.display().to_string(),
            detail: e.to_string(),
        })?;
    let mut rows = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::Io {
            path: path.display().to_string(),
            detail: format!("line {}: {e}", line + 1),
        })?;
        let parsed: Result<Vec<f64>, _> = record.iter().map(|s| s.parse::<f64>()).collect();
        match parsed {
            Ok(row) => rows.push(row),
            Err(e) => {
                if line == 0 {
                    continue; // header row
                }
                return Err(CliError::Io {
                    path: path.display().to_string(),
                    detail: format!("line {}: {e}", line + 1),
                });
            }
        }
    }
    if rows.is_empty() {
        return Err(CliError::Io {
            path: path.display().to_string(),
            detail: "no numeric rows".into(),
        });
    }
    Ok(rows)
}

/// Reads sampled values. Header `point,t,value` demands one row per
/// `(index, grid time)` pair; header `point,value` marks a stationary map.
pub fn load_values(
    path: &Path,
    indices: &[usize],
    t_grid: &[f64],
) -> Result<SampledMap, CliError> {
    let io_err = |detail: String| CliError::Io {
        path: path.display().to_string(),
        detail,
    };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| io_err(e.to_string()))?;
    let headers = reader
        .headers()
        .map_err(|e| io_err(e.to_string()))?
        .clone();
    let columns: Vec<String> = headers.iter().map(|h| h.to_ascii_lowercase()).collect();

    let position =
        |point: usize| -> Option<usize> { indices.iter().position(|&s| s == point) };

    match columns.as_slice() {
        [p, t, v] if p == "point" && t == "t" && v == "value" => {
            let mut values = vec![vec![f64::NAN; t_grid.len()]; indices.len()];
            for (line, record) in reader.records().enumerate() {
                let record = record.map_err(|e| io_err(format!("line {}: {e}", line + 2)))?;
                let parse = |i: usize| -> Result<f64, CliError> {
                    record
                        .get(i)
                        .ok_or_else(|| io_err(format!("line {}: missing field", line + 2)))?
                        .parse::<f64>()
                        .map_err(|e| io_err(format!("line {}: {e}", line + 2)))
                };
                let point = parse(0)? as usize;
                let t = parse(1)?;
                let value = parse(2)?;
                let Some(p) = position(point) else {
                    continue; // rows for unsampled points are ignored
                };
                let Some(ti) = t_grid.iter().position(|&g| g == t) else {
                    return Err(io_err(format!(
                        "line {}: t = {t} is not on the working grid",
                        line + 2
                    )));
                };
                values[p][ti] = value;
            }
            for (p, row) in values.iter().enumerate() {
                if let Some(ti) = row.iter().position(|v| v.is_nan()) {
                    return Err(io_err(format!(
                        "no value for point {} at t = {}",
                        indices[p], t_grid[ti]
                    )));
                }
            }
            SampledMap::new(indices.to_vec(), t_grid.to_vec(), values)
                .map_err(|e| CliError::Config(e.to_string()))
        }
        [p, v] if p == "point" && v == "value" => {
            let mut per_point = vec![f64::NAN; indices.len()];
            for (line, record) in reader.records().enumerate() {
                let record = record.map_err(|e| io_err(format!("line {}: {e}", line + 2)))?;
                let point: usize = record
                    .get(0)
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| io_err(format!("line {}: bad point index", line + 2)))?;
                let value: f64 = record
                    .get(1)
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| io_err(format!("line {}: bad value", line + 2)))?;
                if let Some(p) = position(point) {
                    per_point[p] = value;
                }
            }
            for (p, v) in per_point.iter().enumerate() {
                if v.is_nan() {
                    return Err(io_err(format!("no value for point {}", indices[p])));
                }
            }
            SampledMap::stationary(indices.to_vec(), t_grid.to_vec(), per_point)
                .map_err(|e| CliError::Config(e.to_string()))
        }
        other => Err(io_err(format!(
            "expected header \"point,t,value\" or \"point,value\", got {other:?}"
        ))),
    }
}

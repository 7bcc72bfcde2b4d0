//! The run report: a self-contained JSON record of one pipeline invocation,
//! embedding the config it was produced from, plus its human-readable summary.

use serde::{Deserialize, Serialize};

use fuzzy_extend::{GaloisReport, SpaceAxiomReport, StructureReport};

use crate::config::RunConfig;

/// Formats a float with 17 significant digits, enough to round-trip `f64`.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub config: RunConfig,
    pub tolerance: f64,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validation: Option<ValidationSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dilation: Option<DilationSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis: Option<HypothesisSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extension: Option<ExtensionSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lipschitz: Option<LipschitzSection>,
    pub timing_seconds: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NamedVerdict {
    pub name: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValidationSection {
    pub structure: Vec<NamedVerdict>,
    pub axioms: Vec<NamedVerdict>,
    pub galois: GaloisSection,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GaloisSection {
    pub pass: bool,
    pub contraction_applicable: bool,
    pub worst_violation: f64,
    pub grid_points: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DilationSection {
    /// "estimate" or "given".
    pub mode: String,
    pub per_t: Vec<DilationAtT>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DilationAtT {
    pub t: f64,
    pub value: f64,
    pub degenerate: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HypothesisSection {
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub worst: Option<HypothesisWorst>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HypothesisWorst {
    pub i: usize,
    pub j: usize,
    pub t: f64,
    pub value: f64,
    pub excess: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExtensionSection {
    pub rows: Vec<ReportRow>,
    pub infinite_rho_count: usize,
    pub undefined_points: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportRow {
    pub point: usize,
    pub t: f64,
    pub f_m: f64,
    pub f_w: f64,
    pub f_alpha: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LipschitzSection {
    pub pass: bool,
    pub worst_slack: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub achieved_dilation: Option<f64>,
}

pub fn structure_verdicts(report: &StructureReport) -> Vec<NamedVerdict> {
    let item = |name: &str, v: &fuzzy_extend::Verdict| NamedVerdict {
        name: name.to_string(),
        ok: v.ok,
        witness: v.witness.clone(),
    };
    vec![
        item("phi-vanishes-only-at-zero", &report.vanishes_only_at_zero),
        item("phi-bounded", &report.bounded),
        item("g-within-reciprocal-sup", &report.scaling_within_bound),
    ]
}

pub fn axiom_verdicts(report: &SpaceAxiomReport) -> Vec<NamedVerdict> {
    let item = |name: &str, v: &fuzzy_extend::Verdict| NamedVerdict {
        name: name.to_string(),
        ok: v.ok,
        witness: v.witness.clone(),
    };
    vec![
        item("positivity", &report.positivity),
        item("identity", &report.identity),
        item("symmetry", &report.symmetry),
        item("triangle", &report.triangle),
        item("monotone-in-t", &report.monotone_in_t),
    ]
}

pub fn galois_section(report: &GaloisReport) -> GaloisSection {
    GaloisSection {
        pass: report.pass,
        contraction_applicable: report.contraction_applicable,
        worst_violation: report.worst_violation,
        grid_points: report.checks.len(),
    }
}

impl RunReport {
    /// Human-readable summary: one PASS/FAIL line per section with witnesses
    /// and worst slacks.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        let flag = |ok: bool| if ok { "PASS" } else { "FAIL" };

        line(format!("command: {}", self.command));
        if let Some(v) = &self.validation {
            line(format!("validation: {}", flag(v.pass)));
            for item in v.structure.iter().chain(v.axioms.iter()) {
                match &item.witness {
                    Some(w) => line(format!("  {}: {} ({w})", item.name, flag(item.ok))),
                    None => line(format!("  {}: {}", item.name, flag(item.ok))),
                }
            }
            line(format!(
                "  galois-laws: {} (worst violation {} over {} grid points)",
                flag(v.galois.pass),
                format_float(v.galois.worst_violation),
                v.galois.grid_points
            ));
        }
        if let Some(d) = &self.dilation {
            let worst = d
                .per_t
                .iter()
                .map(|e| e.value)
                .fold(f64::NEG_INFINITY, f64::max);
            line(format!(
                "dilation: mode {} (max K(t) = {})",
                d.mode,
                format_float(worst)
            ));
        }
        if let Some(h) = &self.hypothesis {
            match &h.worst {
                Some(w) => line(format!(
                    "hypothesis: {} (worst pair ({}, {}) at t = {}, excess {})",
                    flag(h.pass),
                    w.i,
                    w.j,
                    format_float(w.t),
                    format_float(w.excess)
                )),
                None => line(format!("hypothesis: {} (no pairs)", flag(h.pass))),
            }
        }
        if let Some(e) = &self.extension {
            line(format!(
                "extension: {} rows, {} infinite distances, {} undefined points",
                e.rows.len(),
                e.infinite_rho_count,
                e.undefined_points.len()
            ));
        }
        if let Some(l) = &self.lipschitz {
            let witness = l.witness.as_deref().unwrap_or("none");
            line(format!(
                "lipschitz: {} (worst slack {}, witness {witness})",
                flag(l.pass),
                format_float(l.worst_slack)
            ));
        }
        line(format!("timing: {:.3}s", self.timing_seconds));
        out
    }
}

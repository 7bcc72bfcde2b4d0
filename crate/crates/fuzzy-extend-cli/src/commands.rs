//! The three subcommands: validate, extend, report.

use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fuzzy_extend::{
    check_hypothesis, estimate_dilation_function, extend_map, log_space, verify_fuzzy_lipschitz,
    DilationFunction, ExtendedNonNegative, ExtensionError,
};

use crate::config::{DilationSpec, Model, RunConfig};
use crate::error::CliError;
use crate::report::{
    axiom_verdicts, format_float, galois_section, structure_verdicts, DilationAtT,
    DilationSection, ExtensionSection, HypothesisSection, HypothesisWorst, LipschitzSection,
    ReportRow, RunReport, ValidationSection,
};

pub struct RunOptions {
    pub config_path: PathBuf,
    pub out_dir: PathBuf,
    pub tolerance: f64,
    pub seed: u64,
}

pub fn cmd_validate(options: &RunOptions) -> Result<(), CliError> {
    let started = Instant::now();
    let config = RunConfig::load(&options.config_path)?;
    let model = Model::build(&config)?;

    let validation = run_validation(&config, &model, options);
    let pass = validation.pass;
    let mut report = RunReport {
        command: "validate".into(),
        config,
        tolerance: options.tolerance,
        seed: options.seed,
        validation: Some(validation),
        dilation: None,
        hypothesis: None,
        extension: None,
        lipschitz: None,
        timing_seconds: 0.0,
    };
    report.timing_seconds = started.elapsed().as_secs_f64();
    write_report(&report, options)?;
    print!("{}", report.summary());

    if pass {
        Ok(())
    } else {
        let failed: Vec<String> = report
            .validation
            .iter()
            .flat_map(|v| v.structure.iter().chain(v.axioms.iter()))
            .filter(|item| !item.ok)
            .map(|item| item.name.clone())
            .chain(
                report
                    .validation
                    .iter()
                    .filter(|v| !v.galois.pass)
                    .map(|_| "galois-laws".to_string()),
            )
            .collect();
        Err(CliError::Validation(failed.join(", ")))
    }
}

pub fn cmd_extend(options: &RunOptions) -> Result<(), CliError> {
    let started = Instant::now();
    let config = RunConfig::load(&options.config_path)?;
    let model = Model::build(&config)?;
    let t_grid = model.sample.t_grid().to_vec();

    let mut report = RunReport {
        command: "extend".into(),
        config: config.clone(),
        tolerance: options.tolerance,
        seed: options.seed,
        validation: None,
        dilation: None,
        hypothesis: None,
        extension: None,
        lipschitz: None,
        timing_seconds: 0.0,
    };
    // helper that persists whatever has been collected before bailing out
    macro_rules! finish {
        ($err:expr) => {{
            report.timing_seconds = started.elapsed().as_secs_f64();
            write_report(&report, options)?;
            print!("{}", report.summary());
            return Err($err);
        }};
    }

    let validation = run_validation(&config, &model, options);
    let validation_pass = validation.pass;
    report.validation = Some(validation);
    if !validation_pass {
        let failed: Vec<String> = report
            .validation
            .iter()
            .flat_map(|v| v.structure.iter().chain(v.axioms.iter()))
            .filter(|item| !item.ok)
            .map(|item| item.name.clone())
            .collect();
        finish!(CliError::Validation(failed.join(", ")));
    }

    // dilation: estimated from the samples or taken from the config
    let (dilation, per_t) = match &config.dilation {
        DilationSpec::Keyword(_) => {
            match estimate_dilation_function(&model.space, &model.codomain, &model.sample) {
                Ok((k, estimates)) => {
                    let per_t = t_grid
                        .iter()
                        .zip(estimates.iter())
                        .map(|(&t, e)| DilationAtT {
                            t,
                            value: k.eval(t).expect("tabulated on the grid"),
                            degenerate: e.degenerate,
                        })
                        .collect();
                    (k, per_t)
                }
                Err(e @ ExtensionError::NonLipschitz { .. }) => {
                    finish!(CliError::Hypothesis(e.to_string()))
                }
                Err(e) => finish!(CliError::Config(e.to_string())),
            }
        }
        DilationSpec::Given(k) => {
            if let Err(e) = k.validate() {
                finish!(CliError::Config(e.to_string()));
            }
            let per_t: Result<Vec<DilationAtT>, ExtensionError> = t_grid
                .iter()
                .map(|&t| {
                    Ok(DilationAtT {
                        t,
                        value: k.eval(t)?,
                        degenerate: false,
                    })
                })
                .collect();
            match per_t {
                Ok(per_t) => (k.clone(), per_t),
                Err(e) => finish!(CliError::Config(e.to_string())),
            }
        }
    };
    report.dilation = Some(DilationSection {
        mode: if config.dilation.is_estimate() {
            "estimate".into()
        } else {
            "given".into()
        },
        per_t,
    });

    // the boundedness hypothesis over the full space, all grid times
    let hypothesis = match hypothesis_section(&model, &dilation, &t_grid) {
        Ok(section) => section,
        Err(e) => finish!(CliError::Config(e.to_string())),
    };
    let hypothesis_pass = hypothesis.pass;
    let worst = hypothesis.worst.clone();
    report.hypothesis = Some(hypothesis);
    if !hypothesis_pass {
        let detail = worst
            .map(|w| {
                format!(
                    "pair ({}, {}) at t = {} exceeds the bound by {}",
                    w.i,
                    w.j,
                    format_float(w.t),
                    format_float(w.excess)
                )
            })
            .unwrap_or_else(|| "bound exceeded".into());
        finish!(CliError::Hypothesis(detail));
    }

    // extend over the whole space so the output can be verified end to end
    let all_points: Vec<usize> = (0..model.space.len()).collect();
    let ext = match extend_map(
        &model.space,
        &model.codomain,
        &model.sample,
        &dilation,
        &model.alpha,
        &all_points,
    ) {
        Ok(ext) => ext,
        Err(e @ ExtensionError::Undefined { .. }) => {
            finish!(CliError::Hypothesis(e.to_string()))
        }
        Err(e) => finish!(CliError::Config(e.to_string())),
    };

    let rows: Vec<ReportRow> = model
        .queries
        .iter()
        .flat_map(|&q| {
            t_grid.iter().enumerate().map(move |(ti, &t)| (q, ti, t))
        })
        .map(|(q, ti, t)| {
            let row = ext.row(q, ti);
            ReportRow {
                point: q,
                t,
                f_m: row.mcshane,
                f_w: row.whitney,
                f_alpha: row.blended,
            }
        })
        .collect();
    report.extension = Some(ExtensionSection {
        rows: rows.clone(),
        infinite_rho_count: ext.infinite_rho_count,
        undefined_points: Vec::new(),
    });

    // the produced extension must itself be fuzzy Lipschitz
    let lipschitz = match verify_fuzzy_lipschitz(
        &model.space,
        &model.codomain,
        &ext,
        &dilation,
        options.tolerance,
    ) {
        Ok(r) => r,
        Err(e) => finish!(CliError::Config(e.to_string())),
    };
    let lipschitz_pass = lipschitz.pass;
    report.lipschitz = Some(LipschitzSection {
        pass: lipschitz.pass,
        worst_slack: lipschitz.worst_slack,
        witness: lipschitz
            .witness
            .map(|(i, j, t, v)| format!("pair ({i}, {j}) at t = {t} for the {v} extension")),
        achieved_dilation: lipschitz.achieved_dilation,
    });

    write_extension_csv(&rows, options, &report)?;
    report.timing_seconds = started.elapsed().as_secs_f64();
    write_report(&report, options)?;
    print!("{}", report.summary());

    if lipschitz_pass {
        Ok(())
    } else {
        Err(CliError::Validation(
            "the extension failed its fuzzy Lipschitz verification".into(),
        ))
    }
}

pub fn cmd_report(path: &Path) -> Result<(), CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        detail: e.to_string(),
    })?;
    let report: RunReport = serde_json::from_str(&text).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        detail: format!("corrupt report: {e}"),
    })?;
    print!("{}", report.summary());
    Ok(())
}

fn run_validation(config: &RunConfig, model: &Model, options: &RunOptions) -> ValidationSection {
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let t_grid = config.t_grid();

    // random coordinate pairs for the vanishing condition
    let xy_grid: Vec<(f64, f64)> = (0..200)
        .map(|_| (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)))
        .collect();
    let structure = model.codomain.validate_structure(&xy_grid, &t_grid);

    let axioms = model
        .space
        .validate_axioms(&t_grid, &t_grid, options.tolerance);

    let mut galois_grid: Vec<ExtendedNonNegative> = log_space(1e-6, 1e6, 200)
        .into_iter()
        .map(|x| ExtendedNonNegative::new(x).expect("positive grid"))
        .collect();
    galois_grid.push(ExtendedNonNegative::ZERO);
    galois_grid.push(ExtendedNonNegative::INFINITY);
    for _ in 0..100 {
        let x: f64 = rng.gen_range(0.0..10.0);
        galois_grid.push(ExtendedNonNegative::new(x).expect("non-negative sample"));
    }
    let galois = model.codomain.phi.check_galois(&galois_grid, options.tolerance);

    let pass = structure.pass && axioms.pass && galois.pass;
    ValidationSection {
        structure: structure_verdicts(&structure),
        axioms: axiom_verdicts(&axioms),
        galois: galois_section(&galois),
        pass,
    }
}

fn hypothesis_section(
    model: &Model,
    dilation: &DilationFunction,
    t_grid: &[f64],
) -> Result<HypothesisSection, ExtensionError> {
    let mut pass = true;
    let mut bound = None;
    let mut worst: Option<HypothesisWorst> = None;
    for &t in t_grid {
        let r = check_hypothesis(&model.space, &model.codomain, dilation, t)?;
        pass &= r.pass;
        bound = r.bound.finite().or(bound);
        if let (Some((i, j, value)), Some(excess)) = (r.worst, r.excess()) {
            if worst.as_ref().is_none_or(|w| value > w.value) {
                worst = Some(HypothesisWorst {
                    i,
                    j,
                    t,
                    value,
                    excess,
                });
            }
        }
    }
    Ok(HypothesisSection { pass, bound, worst })
}

fn write_report(report: &RunReport, options: &RunOptions) -> Result<(), CliError> {
    std::fs::create_dir_all(&options.out_dir).map_err(|e| CliError::Io {
        path: options.out_dir.display().to_string(),
        detail: e.to_string(),
    })?;
    let path = options.out_dir.join(&report.config.output.report_json);
    let json = serde_json::to_string_pretty(report).expect("report serializes");
    std::fs::write(&path, json).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        detail: e.to_string(),
    })
}

fn write_extension_csv(
    rows: &[ReportRow],
    options: &RunOptions,
    report: &RunReport,
) -> Result<(), CliError> {
    std::fs::create_dir_all(&options.out_dir).map_err(|e| CliError::Io {
        path: options.out_dir.display().to_string(),
        detail: e.to_string(),
    })?;
    let path = options.out_dir.join(&report.config.output.extension_csv);
    let mut text = String::from("point,t,f_M,f_W,f_alpha\n");
    for row in rows {
        text.push_str(&format!(
            "{},{},{},{},{}\n",
            row.point,
            format_float(row.t),
            format_float(row.f_m),
            format_float(row.f_w),
            format_float(row.f_alpha)
        ));
    }
    std::fs::write(&path, text).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        detail: e.to_string(),
    })
}

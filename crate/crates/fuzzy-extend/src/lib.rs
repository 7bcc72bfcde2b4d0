//! McShane-Whitney extension of fuzzy Lipschitz maps.
//!
//! A fuzzy metric `M(x, y, t)` grades how close `x` and `y` are at scale `t`.
//! This crate extends real-valued maps that are Lipschitz with respect to such
//! a structure from a subset `S` of a finite space to the whole space, using
//! the two classical extremal formulas (the McShane supremum and the Whitney
//! infimum) driven by the right adjoint of the codomain's shape function.
//!
//! The moving parts, bottom to top:
//!
//! - [`tnorm`]: the conjunction used in the fuzzy triangle axiom;
//! - [`extended`]: saturating `[0, +∞]` arithmetic for distances;
//! - [`monotone`]: shape functions `phi`, their right adjoints and envelopes;
//! - [`fuzzy_metric`]: Euclidean fuzzy metrics, finite spaces, validators;
//! - [`extension`]: dilation estimation, the chain pseudometric, the
//!   McShane/Whitney operators and the Lipschitz verification of the output.
//!
//! ```
//! use fuzzy_extend::{ExtendedNonNegative, MonotoneFunction};
//!
//! // the shape function of the standard Euclidean target: min(x, 1) / 2
//! let phi = MonotoneFunction::clamp(2.0, 1.0)?;
//! let y = ExtendedNonNegative::new(0.3)?;
//! // its right adjoint doubles below 1/2 and is +infinity from 1/2 on
//! assert_eq!(phi.right_adjoint(y).value(), 0.6);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

#![allow(clippy::needless_range_loop)]

pub mod extended;
pub mod extension;
pub mod fuzzy_metric;
pub mod monotone;
pub mod tnorm;

pub use extended::{ExtendedError, ExtendedNonNegative};
pub use extension::{
    blend, chain_pseudometric, check_hypothesis, estimate_dilation, estimate_dilation_function,
    exponential_closed_form, extend_map, mcshane_extend, rho, rho_matrix,
    shortest_chain_distances, truncated_ramp_closed_form, verify_fuzzy_lipschitz, whitney_extend,
    AlphaFn, DilationEstimate, DilationFunction, ExtensionError, ExtensionResult, ExtensionRow,
    ExtensionVariant, HypothesisReport, LipschitzReport, SampledMap,
};
pub use fuzzy_metric::{
    default_t_grid, EuclideanFuzzyMetric, FiniteFuzzyMetricSpace, FuzzyMetricError, MetricMatrix,
    ScaleFn, SpaceAxiomReport, StructureReport, TimeScaling, Verdict,
};
pub use monotone::{
    bisect_right_adjoint, envelope_from_samples, log_space, BisectOptions, GaloisReport,
    MonotoneError, MonotoneFunction,
};
pub use tnorm::{unit_square_grid, TNorm, TNormError};

#[cfg(doctest)]
mod book;

//! Property tests for the structural invariants: adjunction laws, envelope
//! idempotence, metric symmetry, pseudometric axioms and the behaviour of the
//! extremal extensions on randomized instances.
#![allow(clippy::needless_range_loop)]

use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fuzzy_extend::{
    bisect_right_adjoint, chain_pseudometric, estimate_dilation_function, extend_map, log_space,
    rho_matrix, shortest_chain_distances, AlphaFn, BisectOptions, DilationFunction,
    EuclideanFuzzyMetric, ExtendedNonNegative, FiniteFuzzyMetricSpace, MetricMatrix,
    MonotoneFunction, SampledMap, ScaleFn, TNorm, TimeScaling,
};

fn ext(x: f64) -> ExtendedNonNegative {
    ExtendedNonNegative::new(x).unwrap()
}

/// The target `(R, 1 - min(|x-y|, 1)/2, Łukasiewicz)`.
fn half_truncated_target() -> EuclideanFuzzyMetric {
    EuclideanFuzzyMetric::new(
        MonotoneFunction::clamp(2.0, 1.0).unwrap(),
        TimeScaling::constant(1.0).unwrap(),
        TNorm::Lukasiewicz,
    )
    .unwrap()
}

/// Piecewise-linear shapes built from positive increments, with optional
/// jumps, always starting at (0, 0).
fn pwl_strategy() -> impl Strategy<Value = MonotoneFunction> {
    prop::collection::vec(
        (0.01f64..2.0, 0.0f64..1.0, prop::option::of(0.05f64..0.5)),
        1..6,
    )
    .prop_map(|steps| {
        let mut points = vec![(0.0, 0.0)];
        let (mut x, mut y) = (0.0f64, 0.0f64);
        for (dx, dy, jump) in steps {
            x += dx;
            y += dy;
            points.push((x, y));
            if let Some(j) = jump {
                points.push((x, y + j));
                y += j;
            }
        }
        MonotoneFunction::piecewise_linear(points).unwrap()
    })
}

proptest! {
    #[test]
    fn pwl_eval_is_monotone(phi in pwl_strategy(), a in 0.0f64..20.0, b in 0.0f64..20.0) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        prop_assert!(phi.eval_finite(lo).unwrap() <= phi.eval_finite(hi).unwrap());
    }

    #[test]
    fn pwl_expansion_law_is_exact(phi in pwl_strategy(), x in 0.0f64..20.0) {
        let image = phi.eval(ext(x));
        let back = phi.right_adjoint(image);
        prop_assert!(ext(x) <= back, "x = {x}, adj(phi(x)) = {back:?}");
    }

    #[test]
    fn pwl_contraction_law_is_exact(phi in pwl_strategy(), y in 0.0f64..5.0) {
        // generated shapes satisfy phi(0) = 0 and are left-continuous
        let round = phi.eval(phi.right_adjoint(ext(y)));
        prop_assert!(round <= ext(y), "y = {y}, phi(adj(y)) = {round:?}");
    }

    #[test]
    fn adjoint_is_monotone_everywhere(phi in pwl_strategy(), a in 0.0f64..3.0, b in 0.0f64..3.0) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        prop_assert!(phi.right_adjoint(ext(lo)) <= phi.right_adjoint(ext(hi)));
    }

    #[test]
    fn envelope_is_idempotent(phi in pwl_strategy(), x in 0.0f64..20.0) {
        let env = phi.left_continuous_envelope();
        let env2 = env.left_continuous_envelope();
        prop_assert_eq!(env.eval_finite(x).unwrap(), env2.eval_finite(x).unwrap());
    }

    #[test]
    fn tnorm_basic_laws(a in 0.0f64..=1.0, b in 0.0f64..=1.0) {
        for t in [TNorm::Minimum, TNorm::Product, TNorm::Lukasiewicz] {
            let ab = t.apply(a, b).unwrap();
            prop_assert!((0.0..=1.0).contains(&ab));
            prop_assert_eq!(ab, t.apply(b, a).unwrap());
            prop_assert!((t.apply(a, 1.0).unwrap() - a).abs() < 1e-12);
        }
    }

    #[test]
    fn membership_is_symmetric(x in -50.0f64..50.0, y in -50.0f64..50.0, t in 0.01f64..100.0) {
        let efm = half_truncated_target();
        prop_assert_eq!(efm.eval(x, y, t).unwrap(), efm.eval(y, x, t).unwrap());
    }

    #[test]
    fn membership_is_translation_invariant_on_dyadics(
        xi in -(1i64 << 22)..(1i64 << 22),
        yi in -(1i64 << 22)..(1i64 << 22),
        ci in -(1i64 << 22)..(1i64 << 22),
    ) {
        // dyadic inputs make every sum exact, so invariance holds bitwise
        let scale = (2.0f64).powi(-20);
        let (x, y, c) = (xi as f64 * scale, yi as f64 * scale, ci as f64 * scale);
        let efm = half_truncated_target();
        prop_assert_eq!(
            efm.eval(x + c, y + c, 1.0).unwrap(),
            efm.eval(x, y, 1.0).unwrap()
        );
    }
}

#[test]
fn bisection_tracks_the_analytic_adjoints() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let clamp = MonotoneFunction::clamp(2.0, 1.0).unwrap();
    let rational = MonotoneFunction::rational_saturating();
    let options = BisectOptions::default();
    for _ in 0..1000 {
        let y: f64 = rng.gen_range(0.0..0.499);
        let by_bisection = bisect_right_adjoint(
            |x| clamp.eval_finite(x).unwrap(),
            clamp.sup_value(),
            ext(y),
            &options,
        )
        .unwrap();
        assert!((by_bisection.value() - 2.0 * y).abs() < 1e-8);
        assert!((by_bisection.value() - clamp.right_adjoint(ext(y)).value()).abs() < 1e-8);

        let y: f64 = rng.gen_range(0.0..0.99);
        let by_bisection = bisect_right_adjoint(
            |x| rational.eval_finite(x).unwrap(),
            rational.sup_value(),
            ext(y),
            &options,
        )
        .unwrap();
        assert!((by_bisection.value() - y / (1.0 - y)).abs() < 1e-8);
        assert!((by_bisection.value() - rational.right_adjoint(ext(y)).value()).abs() < 1e-8);
    }
}

#[test]
fn galois_laws_hold_for_every_preset_on_the_long_grid() {
    let mut grid: Vec<ExtendedNonNegative> =
        log_space(1e-6, 1e6, 1000).into_iter().map(ext).collect();
    grid.push(ExtendedNonNegative::ZERO);
    grid.push(ExtendedNonNegative::INFINITY);
    for phi in [
        MonotoneFunction::clamp(2.0, 1.0).unwrap(),
        MonotoneFunction::linear(1.0).unwrap(),
        MonotoneFunction::rational_saturating(),
        MonotoneFunction::piecewise_linear(vec![(0.0, 0.0), (0.7, 0.3), (1.5, 0.3), (2.0, 1.9)])
            .unwrap(),
    ] {
        let report = phi.check_galois(&grid, 1e-9);
        assert!(report.pass, "{phi:?}: {report:?}");
    }
}

// ---------------------------------------------------------------------------
// randomized instances
// ---------------------------------------------------------------------------

fn random_points(rng: &mut ChaCha8Rng, n: usize) -> Vec<(f64, f64)> {
    (0..n)
        .map(|_| (rng.gen_range(0.0..3.0), rng.gen_range(0.0..3.0)))
        .collect()
}

fn random_metric(rng: &mut ChaCha8Rng, n: usize) -> MetricMatrix {
    MetricMatrix::from_euclidean_points(&random_points(rng, n)).unwrap()
}

enum Preset {
    Ramp,
    Exponential,
}

fn random_space(rng: &mut ChaCha8Rng, n: usize, preset: &Preset) -> FiniteFuzzyMetricSpace {
    let d = random_metric(rng, n);
    match preset {
        Preset::Ramp => {
            let k = rng.gen_range(0.5..2.0);
            let h = ScaleFn::Affine {
                offset: k + rng.gen_range(0.0..1.0),
                rate: rng.gen_range(0.1..1.0),
            };
            FiniteFuzzyMetricSpace::truncated_ramp(d, k, h).unwrap()
        }
        Preset::Exponential => FiniteFuzzyMetricSpace::negative_exponential(d),
    }
}

/// Samples `f` on a random subset with values small enough that the estimated
/// dilation stays below 1/2 (rescaling if needed, which is exact because all
/// image gaps stay below the truncation knee).
fn random_lipschitz_sample(
    rng: &mut ChaCha8Rng,
    space: &FiniteFuzzyMetricSpace,
    codomain: &EuclideanFuzzyMetric,
    t_grid: &[f64],
) -> SampledMap {
    let n = space.len();
    let subset_len = rng.gen_range(2..=n.saturating_sub(1).max(2));
    let mut indices: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        indices.swap(i, j);
    }
    indices.truncate(subset_len);
    indices.sort_unstable();

    let mut values: Vec<Vec<f64>> = (0..subset_len)
        .map(|_| t_grid.iter().map(|_| rng.gen_range(-0.5..0.5)).collect())
        .collect();
    let f = SampledMap::new(indices.clone(), t_grid.to_vec(), values.clone()).unwrap();
    let (_, estimates) = estimate_dilation_function(space, codomain, &f).unwrap();
    let worst = estimates
        .iter()
        .map(|e| e.dilation)
        .fold(f64::NEG_INFINITY, f64::max);
    if worst >= 0.45 {
        let shrink = 0.44 / worst;
        for row in &mut values {
            for v in row.iter_mut() {
                *v *= shrink;
            }
        }
    }
    SampledMap::new(indices, t_grid.to_vec(), values).unwrap()
}

/// Exhaustive minimum over simple chains, left-to-right summation.
fn oracle_chain_distance(
    weights: &[Vec<ExtendedNonNegative>],
    start: usize,
    target: usize,
) -> ExtendedNonNegative {
    let n = weights.len();
    let weight = |a: usize, b: usize| {
        if a <= b {
            weights[a][b]
        } else {
            weights[b][a]
        }
    };
    fn search(
        current: usize,
        target: usize,
        used: &mut Vec<bool>,
        acc: ExtendedNonNegative,
        n: usize,
        weight: &dyn Fn(usize, usize) -> ExtendedNonNegative,
        best: &mut ExtendedNonNegative,
    ) {
        let direct = acc + weight(current, target);
        if direct < *best {
            *best = direct;
        }
        for v in 0..n {
            if v == target || used[v] {
                continue;
            }
            used[v] = true;
            search(v, target, used, acc + weight(current, v), n, weight, best);
            used[v] = false;
        }
    }
    let mut used = vec![false; n];
    used[start] = true;
    let mut best = ExtendedNonNegative::INFINITY;
    search(
        start,
        target,
        &mut used,
        ExtendedNonNegative::ZERO,
        n,
        &weight,
        &mut best,
    );
    best
}

#[test]
fn chain_distances_match_the_enumeration_oracle_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let target = half_truncated_target();
    for trial in 0..20 {
        let n = rng.gen_range(2..=7);
        let preset = if trial % 2 == 0 {
            Preset::Ramp
        } else {
            Preset::Exponential
        };
        let space = random_space(&mut rng, n, &preset);
        // large dilations push some adjoint arguments past the jump to +inf
        let k = DilationFunction::constant(rng.gen_range(0.3..3.0)).unwrap();
        let t = rng.gen_range(0.1..10.0);
        let weights = rho_matrix(&space, &target, &k, t).unwrap();
        let distances = shortest_chain_distances(&weights);
        for i in 0..n {
            assert_eq!(distances[i][i], ExtendedNonNegative::ZERO);
            for j in (i + 1)..n {
                let expected = oracle_chain_distance(&weights, i, j);
                assert_eq!(
                    distances[i][j], expected,
                    "trial {trial}: mismatch at ({i}, {j})"
                );
                assert_eq!(distances[j][i], distances[i][j]);
                // the one-edge chain is always a candidate
                assert!(distances[i][j] <= weights[i][j]);
            }
        }
    }
}

#[test]
fn chain_pseudometric_satisfies_the_axioms() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    let target = half_truncated_target();
    for trial in 0..12 {
        let n = rng.gen_range(3..=10);
        let preset = if trial % 2 == 0 {
            Preset::Ramp
        } else {
            Preset::Exponential
        };
        let space = random_space(&mut rng, n, &preset);
        let k = DilationFunction::constant(rng.gen_range(0.1..0.45)).unwrap();
        let t = rng.gen_range(0.1..10.0);
        let d = chain_pseudometric(&space, &target, &k, t).unwrap();
        for i in 0..n {
            assert_eq!(d[i][i], ExtendedNonNegative::ZERO);
            for j in 0..n {
                assert_eq!(d[i][j], d[j][i]);
                for m in 0..n {
                    let via = d[i][m] + d[m][j];
                    assert!(
                        d[i][j].value() <= via.value() + 1e-9,
                        "triangle fails: d({i},{j}) = {} > {} = d({i},{m}) + d({m},{j})",
                        d[i][j],
                        via
                    );
                }
            }
        }
    }
}

#[test]
fn extensions_are_lipschitz_sandwiched_and_exact_on_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    let target = half_truncated_target();
    let alphas = [0.0, 0.25, 0.5, 0.75, 1.0];
    for trial in 0..15 {
        let n = rng.gen_range(3..=8);
        let preset = if trial % 2 == 0 {
            Preset::Ramp
        } else {
            Preset::Exponential
        };
        let space = random_space(&mut rng, n, &preset);
        let t_grid = vec![0.5, 1.0, 3.0];
        let f = random_lipschitz_sample(&mut rng, &space, &target, &t_grid);
        let (k, _) = estimate_dilation_function(&space, &target, &f).unwrap();
        let queries: Vec<usize> = (0..n).collect();
        let alpha = AlphaFn::constant(0.5).unwrap();
        let ext_result = extend_map(&space, &target, &f, &k, &alpha, &queries).unwrap();
        assert!(ext_result.hypothesis_pass, "trial {trial}");

        for (ti, &t) in t_grid.iter().enumerate() {
            let rho = rho_matrix(&space, &target, &k, t).unwrap();

            // the sample inequality: image gaps within the adjoint distance
            for (pa, &a) in f.subset().iter().enumerate() {
                for (pb, &b) in f.subset().iter().enumerate().skip(pa + 1) {
                    let gap = (f.value(pa, ti) - f.value(pb, ti)).abs();
                    assert!(
                        gap <= rho[a][b].value() + 1e-9,
                        "trial {trial}: sample gap {gap} exceeds rho = {}",
                        rho[a][b]
                    );
                }
            }

            // both extensions are 1-Lipschitz for the adjoint distance
            for i in 0..n {
                for j in (i + 1)..n {
                    if rho[i][j].is_infinite() {
                        continue;
                    }
                    let ri = ext_result.row(i, ti);
                    let rj = ext_result.row(j, ti);
                    assert!((ri.mcshane - rj.mcshane).abs() <= rho[i][j].value() + 1e-9);
                    assert!((ri.whitney - rj.whitney).abs() <= rho[i][j].value() + 1e-9);
                }
            }

            for i in 0..n {
                let row = ext_result.row(i, ti);
                // sandwich, with blends monotone in alpha
                assert!(row.mcshane <= row.whitney + 1e-12);
                let mut prev = f64::INFINITY;
                for &a in &alphas {
                    let blended = fuzzy_extend::blend(a, row.mcshane, row.whitney).unwrap();
                    assert!(blended <= prev + 1e-12);
                    assert!(row.mcshane - 1e-12 <= blended && blended <= row.whitney + 1e-12);
                    prev = blended;
                }
            }

            // exact restriction to the samples
            for (p, &s) in f.subset().iter().enumerate() {
                let row = ext_result.row(s, ti);
                assert_eq!(row.mcshane, f.value(p, ti), "trial {trial}");
                assert_eq!(row.whitney, f.value(p, ti), "trial {trial}");
            }
        }
    }
}

#[test]
fn stationary_spaces_are_constant_across_the_grid() {
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    let space = random_space(&mut rng, 6, &Preset::Exponential);
    let reference: Vec<Vec<f64>> = (0..6)
        .map(|i| {
            (0..6)
                .map(|j| space.membership(i, j, 1.0).unwrap())
                .collect()
        })
        .collect();
    for t in log_space(1e-3, 1e3, 20) {
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(space.membership(i, j, t).unwrap(), reference[i][j]);
            }
        }
    }
}

use lct::bases::*;
use lct::engine::*;
use lct::kernels::dk_matrix_element;
use lct::symplectic::{compose, GroupElement};
use lct::{Complex64, LctError};
use nalgebra::DMatrix;
use proptest::prelude::*;
use std::f64::consts::PI;

fn el(a: f64, b: f64, c: f64, d: f64) -> GroupElement {
    GroupElement::new(a, b, c, d).unwrap()
}

fn gaussian(grid: &Grid) -> SampledFunction {
    SampledFunction::from_fn(grid, |x| Complex64::new((-x * x / 2.0).exp(), 0.0))
}

#[test]
fn fourier_maps_gaussian_to_itself_up_to_phase() {
    let g = Grid::line(256, 10.0);
    let f = gaussian(&g);
    let out = apply_classic(&GroupElement::fourier(), &f).unwrap();
    let want = f.scale(Complex64::from_polar(1.0, -PI / 4.0));
    assert!(out.distance(&want) / want.norm() < 1e-12);
}

#[test]
fn eighth_power_of_fourier_is_identity() {
    let g = Grid::line(256, 10.0);
    let f = SampledFunction::from_fn(&g, |x| Complex64::new(hermite_function(2, x), 0.1 * hermite_function(5, x)));
    let mut cur = f.clone();
    for _ in 0..8 {
        cur = apply_classic(&GroupElement::fourier(), &cur).unwrap();
    }
    assert!(cur.distance(&f) / f.norm() < 1e-10);
}

#[test]
fn delta_branch_rescales() {
    let g = Grid::line(256, 10.0);
    let f = gaussian(&g);
    let m = el(2.0, 0.0, 0.0, 0.5);
    let out = apply_classic(&m, &f).unwrap();
    // f(x/2)/√2
    for (x, v) in g.nodes.iter().zip(&out.values) {
        let want = (-x * x / 8.0).exp() / 2f64.sqrt();
        assert!((v - want).norm() < 1e-12, "{x}: {v}");
    }
}

#[test]
fn radial_transform_preserves_norm() {
    let l = DiscreteLabel::plus(0.75).unwrap();
    let g = Grid::radial(512, 16.0);
    let f = SampledFunction::try_from_fn(&g, |r| phi0_discrete(&l, 1, r)).unwrap();
    let out = apply_radial(&l, &el(1.0, 1.0, 0.0, 1.0), &f).unwrap();
    assert!((out.norm() - f.norm()).abs() < 1e-12, "{} {}", out.norm(), f.norm());
}

#[test]
fn continuous_transform_preserves_norm() {
    for (eps, s) in [(Epsilon::Zero, 0.7), (Epsilon::Half, 0.6)] {
        let l = ContinuousLabel::new(eps, s).unwrap();
        let g = Grid::radial(384, 16.0);
        let f = TwoComponentSampled::try_from_fn(&g, |r| phi0_continuous(&l, eps.value() + 1.0, r)).unwrap();
        let out = apply_cont_radial(&l, &el(2.0, 1.0, 1.0, 1.0), &f).unwrap();
        assert!((out.norm() - f.norm()).abs() < 1e-6, "{eps:?}: {} {}", out.norm(), f.norm());
    }
}

/// Transforming a finite combination of `⁰Φ_n` on a grid and projecting back
/// gives the same coefficients as the truncated matrix action.
#[test]
fn commuting_diagram_at_sixteen_terms() {
    let l = DiscreteLabel::plus(1.0).unwrap();
    let m = el(1.2, 0.5, -0.3, (1.0 - 0.15) / 1.2);
    let coeffs = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.5), Complex64::new(-0.3, 0.2), Complex64::new(0.1, 0.0)];
    let n = 16;
    let image = apply_discrete(&l, &m, &coeffs, n).unwrap();
    assert!(image.tail_mass < 1e-3, "{}", image.tail_mass);
    let g = Grid::radial(640, 16.0);
    let f = SampledFunction::try_from_fn(&g, |r| {
        let mut v = Complex64::new(0.0, 0.0);
        for (j, c) in coeffs.iter().enumerate() {
            v += c * phi0_discrete(&l, j, r)?;
        }
        Ok(v)
    })
    .unwrap();
    let out = apply_radial(&l, &m, &f).unwrap();
    for (j, want) in image.coeffs.iter().enumerate() {
        let basis = SampledFunction::try_from_fn(&g, |r| phi0_discrete(&l, j, r)).unwrap();
        let got = basis.inner(&out);
        assert!((got - want).norm() < 1e-9, "{j}: {got} vs {want}");
    }
}

#[test]
fn composition_sign_over_several_probes() {
    let m1 = el(0.6, 0.9, -0.7, (1.0 - 0.63) / 0.6);
    let m2 = el(-0.8, 0.7, -0.6, (1.0 - 0.42) / -0.8);
    let ms = [m1, m2, compose(&m1, &m2)];
    let n = resolving_nodes(&ms, 10.0, GridKind::Line, 256, 2048);
    let g = Grid::line(n, 10.0);
    let probes = [
        gaussian(&g),
        SampledFunction::from_fn(&g, |x| Complex64::new(-(x - 1.0) * (x - 1.0) / 2.0, 0.3 * x).exp()),
        SampledFunction::from_fn(&g, |x| Complex64::new(hermite_function(3, x), 0.0)),
        SampledFunction::from_fn(&g, |x| Complex64::new(-x * x, 0.2 * x * x).exp()),
        SampledFunction::from_fn(&g, |x| Complex64::new(hermite_function(1, x), hermite_function(4, x))),
    ];
    let mut signs = Vec::new();
    for p in &probes {
        let o = composition_sign(&m1, &m2, apply_classic, p, 1e-6).unwrap();
        assert!(o.residual < 1e-8, "{o:?}");
        signs.push(o.sign);
    }
    // the sign belongs to the pair, not the probe
    assert!(signs.iter().all(|s| *s == signs[0]));
    assert_ne!(signs[0], CompositionSign::Undetermined);
}

#[test]
fn fourier_squared_is_parity_with_plus_sign() {
    let g = Grid::line(256, 10.0);
    let f = SampledFunction::from_fn(&g, |x| Complex64::new(-(x - 1.0) * (x - 1.0) / 2.0, 0.0).exp());
    let o = composition_sign(&GroupElement::fourier(), &GroupElement::fourier(), apply_classic, &f, 1e-8).unwrap();
    assert_eq!(o.sign, CompositionSign::Plus);
}

#[test]
fn wrong_action_is_undetermined() {
    let g = Grid::line(128, 8.0);
    let f = gaussian(&g);
    // multiplying by i at every step breaks the law by a phase that is not ±1
    let twisted = |m: &GroupElement, f: &SampledFunction| Ok(apply_classic(m, f)?.scale(Complex64::i()));
    let err = composition_sign(&GroupElement::fourier(), &el(1.0, 1.0, 0.0, 1.0), twisted, &f, 1e-6).unwrap_err();
    assert!(matches!(err, LctError::Undetermined { .. }));
}

/// The two-component kernels compose like the group, for both ε.
#[test]
fn continuous_kernels_compose() {
    let m1 = el(1.0, 0.8, 0.0, 1.0);
    let m2 = el(0.9, 0.7, -0.3, (1.0 - 0.21) / 0.9);
    let g = Grid::radial(384, 16.0);
    let w2: Vec<f64> = g.weights.iter().chain(&g.weights).copied().collect();
    for (eps, s) in [(Epsilon::Zero, 0.7), (Epsilon::Half, 0.6)] {
        let l = ContinuousLabel::new(eps, s).unwrap();
        let op = |m: &GroupElement| cont_radial_matrix(&l, m, &g).unwrap().operator(&w2);
        let ms: Vec<f64> = (-3..3).map(|j| j as f64 + eps.value()).collect();
        let q = continuous_probes(&l, &g, &ms).unwrap();
        let chained = op(&m1) * (op(&m2) * &q);
        let direct = op(&compose(&m1, &m2)) * &q;
        let norm = |x: &DMatrix<Complex64>| {
            (0..x.nrows()).map(|i| (0..x.ncols()).map(|j| x[(i, j)].norm_sqr() * w2[i]).sum::<f64>()).sum::<f64>().sqrt()
        };
        let plus = norm(&(&chained - &direct)) / norm(&direct);
        assert!(plus < 1e-6, "{eps:?}: {plus}");
    }
}

#[test]
fn b_limit_converges_monotonically() {
    let pts: Vec<f64> = (0..=10).map(|i| -2.0 + 0.4 * i as f64).collect();
    let f = |x: f64| Complex64::new((-x * x / 2.0).exp(), 0.0);
    let st = b_limit_study(LimitFamily::Classic, &el(2.0, 0.0, 0.0, 0.5), &f, &[0.1, 0.01], &pts, 8.0).unwrap();
    assert!(st.monotone, "{:?}", st.deviations);
    assert!(st.deviations[1] < 0.2 * st.deviations[0]);
    assert!(matches!(
        b_limit_study(LimitFamily::Classic, &el(1.0, 1.0, 0.0, 1.0), &f, &[0.1], &pts, 8.0),
        Err(LctError::UnsupportedCombination(_))
    ));
}

#[test]
fn mellin_oracle_refuses_unrotatable_elements() {
    let l = DiscreteLabel::plus(0.75).unwrap();
    // ad = 1/2 lies in (0, 1)
    let r = mellin_oracle(&l, &el(1.0, -1.0, 0.5, 0.5), 0.1, 0.2, &MellinOptions::default());
    assert!(matches!(r, Err(LctError::NonConvergence { .. })));
}

#[test]
fn mellin_oracle_matches_closed_form() {
    let l = DiscreteLabel::plus(0.75).unwrap();
    let m = el(2.0, 1.0, 1.0, 1.0);
    let opts = MellinOptions { nodes: 320, ..MellinOptions::default() };
    let est = mellin_oracle(&l, &m, 0.3, -0.5, &opts).unwrap();
    let want = lct::kernels::dk_hyperbolic_element(&l, &m, 0.3, -0.5).unwrap();
    assert!((est.value - want).norm() < 1e-5, "{} vs {want}", est.value);
}

#[test]
fn probe_defect_is_small_and_full_defect_is_not() {
    let g = Grid::line(256, 12.0);
    let m = el(1.0, 1.0, 0.0, 1.0);
    let u = classic_matrix(&m, &g).unwrap().operator(&g.weights);
    let probe = probe_subspace_defect(&u, &g.weights, &hermite_probes(&g, 12)).unwrap();
    assert!(probe < 1e-12, "{probe}");
    let full = unitarity_defect(&u, &g.weights).unwrap();
    assert!(full > 0.5, "{full}");
}

#[test]
fn discrete_image_matches_matrix_elements() {
    let l = DiscreteLabel::plus(0.5).unwrap();
    let m = el(2.0, 1.0, 1.0, 1.0);
    let img = apply_discrete(&l, &m, &[Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)], 6).unwrap();
    for (n, v) in img.coeffs.iter().enumerate() {
        assert_eq!(*v, dk_matrix_element(&l, &m, l.m(n), l.m(1)).unwrap());
    }
    assert!(matches!(apply_discrete(&l, &m, &[], 0), Err(LctError::InvalidIndex(_))));
}

#[test]
fn report_json_round_trip() {
    let r = TransformReport {
        unitarity_defect: Some(0.25),
        composition_sign: CompositionSign::Minus,
        notes: vec!["x".into()],
        ..TransformReport::default()
    };
    let text = serde_json::to_string(&r).unwrap();
    assert!(text.contains("\"schemaVersion\":1") && text.contains("\"compositionSign\":\"minus\""), "{text}");
    let back: TransformReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, r);
}

#[test]
fn results_do_not_depend_on_thread_count() {
    // the pool is process-wide; compare a parallel build with a serial one
    let g = Grid::line(64, 6.0);
    let m = el(1.0, 0.7, -0.2, (1.0 - 0.14) / 1.0);
    let k = classic_matrix(&m, &g).unwrap();
    let f = gaussian(&g);
    let par = k.apply(&g.weights, &f.values);
    for (i, v) in par.iter().enumerate() {
        let mut acc = lct::quad::Compensated::new();
        for j in 0..g.len() {
            acc.add(k.get(i, j) * (f.values[j] * g.weights[j]));
        }
        assert_eq!(*v, acc.value());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn classic_transform_is_unitary_on_gaussians(t in 0.3f64..2.8, shift in -1.5f64..1.5, chirp in -0.3f64..0.3) {
        // rotations keep a Gaussian of unit width inside the window; small b needs
        // a finer grid
        let m = el(t.cos(), t.sin(), -t.sin(), t.cos());
        let g = Grid::line(resolving_nodes(&[m], 12.0, GridKind::Line, 256, 2048), 12.0);
        let f = SampledFunction::from_fn(&g, |x| Complex64::new(-(x - shift) * (x - shift) / 2.0, chirp * x * x).exp());
        let out = apply_classic(&m, &f).unwrap();
        prop_assert!((out.norm() - f.norm()).abs() < 1e-9 * f.norm());
    }

    #[test]
    fn interpolation_reproduces_polynomials(c0 in -1.0f64..1.0, c3 in -1.0f64..1.0, x in -5.0f64..5.0) {
        let g = Grid::line(96, 6.0);
        let p = |x: f64| Complex64::new(c0 + c3 * x * x * x, 0.0);
        let v: Vec<Complex64> = g.nodes.iter().map(|&t| p(t)).collect();
        prop_assert!((g.interpolate(&v, x) - p(x)).norm() < 1e-10);
    }
}

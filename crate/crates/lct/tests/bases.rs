use lct::bases::*;
use lct::quad::composite;
use lct::Complex64;
use std::f64::consts::PI;

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * b.norm().max(1e-300)
}

// reference values from mpmath at 40 digits
#[test]
fn discrete_oracles() {
    let v = phi0_discrete(&DiscreteLabel::plus(0.75).unwrap(), 3, 1.3).unwrap();
    assert!(close(v, Complex64::new(-5.7431023864664255e-1, 0.0), 1e-13), "{v}");
    let v = phi0_discrete(&DiscreteLabel::plus(2.0).unwrap(), 5, 2.1).unwrap();
    assert!(close(v, Complex64::new(4.3164140626033174e-1, 0.0), 1e-13), "{v}");

    let v = phi_plus_discrete(&DiscreteLabel::plus(1.5).unwrap(), 2.0, 1.7).unwrap();
    assert!((v - Complex64::new(0.0, -8.6612562027970076e-1)).norm() < 1e-14, "{v}");
    let v = phi_plus_discrete(&DiscreteLabel::plus(0.25).unwrap(), 3.0, 0.4).unwrap();
    assert!(close(v, Complex64::new(2.0443847059349455e-1, 2.0443847059349455e-1), 1e-13), "{v}");

    let l = DiscreteLabel::plus(1.0).unwrap();
    let v = phi1_discrete(&l, 0.3, 1.2).unwrap();
    assert!(close(v, Complex64::new(-3.6226050667761239e-2, 8.0227541755865514e-1), 1e-13), "{v}");
    let v = phi1_discrete(&DiscreteLabel::plus(0.75).unwrap(), -1.1, 2.5).unwrap();
    assert!(close(v, Complex64::new(4.1679172664708969e-1, 6.6214737704004941e-1), 1e-13), "{v}");
    let v = phi1_discrete(&DiscreteLabel::plus(0.5).unwrap(), 0.0, 3.0).unwrap();
    assert!(close(v, Complex64::new(-3.9258279394251982e-1, -3.9258279394251982e-1), 1e-13), "{v}");
}

#[test]
fn continuous_oracles() {
    let l = ContinuousLabel::new(Epsilon::Zero, 0.5).unwrap();
    let v = phi0_continuous(&l, 0.0, 1.0).unwrap();
    assert!(close(v[0], Complex64::new(5.6456033897321224e-1, 0.0), 1e-12), "{v:?}");
    assert!(close(v[1], v[0], 1e-14));
    let l = ContinuousLabel::new(Epsilon::Half, 0.7).unwrap();
    let v = phi0_continuous(&l, 1.5, 0.8).unwrap();
    assert!(close(v[0], Complex64::new(5.1226725077512663e-1, 0.0), 1e-12), "{v:?}");
    assert!(close(v[1], Complex64::new(2.549104903390885e-1, 0.0), 1e-12), "{v:?}");
    let l = ContinuousLabel::new(Epsilon::Zero, 0.3).unwrap();
    let v = phi0_continuous(&l, -2.0, 1.7).unwrap();
    assert!(close(v[0], Complex64::new(5.240162354488559e-3, 0.0), 1e-11), "{v:?}");
    assert!(close(v[1], Complex64::new(3.8814696485431712e-1, 0.0), 1e-12), "{v:?}");
}

#[test]
fn spec_examples() {
    let l = DiscreteLabel::plus(0.5).unwrap();
    for r in [0.3, 1.0, 2.7] {
        let v = phi0_discrete(&l, 0, r).unwrap();
        assert!((v.re - 2f64.sqrt() * r.sqrt() * (-r * r / 2.0).exp()).abs() < 1e-15);
        let p = phi_plus_discrete(&l, 1.0, r).unwrap();
        let j0 = lct::specfun::bessel_j(Complex64::new(0.0, 0.0), r).unwrap().re;
        assert!((p - Complex64::new(0.0, r.sqrt() * j0)).norm() < 1e-15);
    }
    // |¹Φ^{1/2}_0(r)| = |e^{iπ/4} Γ(½)/(Γ(1)√π)| |₁F₁(½; 1; −ir²)| √r = √r |₁F₁|
    for r in [0.5, 1.5] {
        let f = lct::specfun::hyp1f1(Complex64::new(0.5, 0.0), Complex64::new(1.0, 0.0), Complex64::new(0.0, -r * r)).unwrap();
        let v = phi1_discrete(&l, 0.0, r).unwrap();
        assert!((v.norm() - r.sqrt() * f.norm()).abs() < 1e-14);
    }
    // ρ ↔ r symmetry
    let l = DiscreteLabel::plus(1.25).unwrap();
    let a = phi_plus_discrete(&l, 0.7, 2.3).unwrap();
    let b = phi_plus_discrete(&l, 2.3, 0.7).unwrap();
    assert!((a - b).norm() < 1e-15);
}

#[test]
fn oscillator_gram_is_identity() {
    let (r, w) = composite(0.0, 12.0, 16, 32);
    for k in [0.5, 1.0, 1.5, 0.75] {
        let l = DiscreteLabel::plus(k).unwrap();
        let rows: Vec<Vec<Complex64>> = (0..8).map(|n| r.iter().map(|&x| phi0_discrete(&l, n, x).unwrap()).collect()).collect();
        for i in 0..8 {
            for j in 0..8 {
                let g: Complex64 = (0..r.len()).map(|q| rows[i][q].conj() * rows[j][q] * w[q]).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                // k = ½ has a √r endpoint, which GL only resolves to ~1e-7
                assert!((g - want).norm() < 1e-6, "k={k} ({i},{j}) {g}");
            }
        }
    }
}

#[test]
fn whittaker_and_kummer_forms_agree() {
    for &(k, mu, r) in &[(1.0, 0.3, 1.2), (0.5, -0.8, 0.6), (1.5, 1.7, 2.2), (0.75, 0.0, 3.1), (2.0, -2.5, 0.3)] {
        let l = DiscreteLabel::plus(k).unwrap();
        let a = phi1_discrete(&l, mu, r).unwrap();
        let b = phi1_discrete_whittaker(&l, mu, r).unwrap();
        assert!(close(a, b, 1e-9), "{k} {mu} {r}: {a} {b}");
    }
}

fn uniform(r0: f64, h: f64, n: usize) -> Vec<f64> {
    (0..n).map(|j| r0 + j as f64 * h).collect()
}

fn rel_residual(lhs: &[Complex64], rhs: &[Complex64], lo: usize, hi: usize) -> f64 {
    let num: f64 = (lo..hi).map(|j| (lhs[j] - rhs[j]).norm_sqr()).sum();
    let den: f64 = (lo..hi).map(|j| rhs[j].norm_sqr()).sum();
    (num / den).sqrt()
}

#[test]
fn eigenvalue_equations_by_finite_differences() {
    let (r0, h, n) = (0.5, 1e-3, 3001);
    let rs = uniform(r0, h, n);

    let l = DiscreteLabel::plus(1.25).unwrap();
    let g = l.gamma_coefficient();
    let f: Vec<_> = rs.iter().map(|&r| phi0_discrete(&l, 2, r).unwrap()).collect();
    let jf = fd::apply(BasisTag::J0, g, r0, h, &f);
    let mf: Vec<_> = f.iter().map(|v| v * l.m(2)).collect();
    assert!(rel_residual(&jf, &mf, 1, n - 1) < 1e-4);

    let f: Vec<_> = rs.iter().map(|&r| phi1_discrete(&l, 0.6, r).unwrap()).collect();
    let jf = fd::apply(BasisTag::J1, g, r0, h, &f);
    let mf: Vec<_> = f.iter().map(|v| v * 0.6).collect();
    assert!(rel_residual(&jf, &mf, 1, n - 1) < 1e-4);

    let f: Vec<_> = rs.iter().map(|&r| phi2_discrete(-0.4, r).unwrap()).collect();
    let jf = fd::apply(BasisTag::J2, g, r0, h, &f);
    let mf: Vec<_> = f.iter().map(|v| v * -0.4).collect();
    assert!(rel_residual(&jf, &mf, 1, n - 1) < 1e-4);

    let f: Vec<_> = rs.iter().map(|&r| phi_plus_discrete(&l, 1.3, r).unwrap()).collect();
    let jf = fd::apply(BasisTag::JPlus, g, r0, h, &f);
    // J₊ = ½(−∂² + γ/r²) has eigenvalue ρ²/2 on ⁺Φ_ρ
    let mf: Vec<_> = f.iter().map(|v| v * (0.5 * 1.3 * 1.3)).collect();
    assert!(rel_residual(&jf, &mf, 1, n - 1) < 1e-4);

    // continuous series: diag(J₀, −J₀) has eigenvalue m on the pair
    for (eps, s, m) in [(Epsilon::Zero, 0.5, 1.0), (Epsilon::Half, 0.7, -0.5)] {
        let cl = ContinuousLabel::new(eps, s).unwrap();
        let g = cl.gamma_coefficient();
        let pair: Vec<_> = rs.iter().map(|&r| phi0_continuous(&cl, m, r).unwrap()).collect();
        for (comp, sgn) in [(0usize, 1.0), (1, -1.0)] {
            let f: Vec<_> = pair.iter().map(|p| p[comp]).collect();
            let jf: Vec<_> = fd::apply(BasisTag::J0, g, r0, h, &f).iter().map(|v| v * sgn).collect();
            let mf: Vec<_> = f.iter().map(|v| v * m).collect();
            assert!(rel_residual(&jf, &mf, 1, n - 1) < 1e-3, "eps={eps:?} comp={comp}");
        }
    }
}

#[test]
fn casimir_by_nested_differences() {
    let (r0, h, n) = (0.6, 2e-3, 2001);
    let rs = uniform(r0, h, n);
    let l = DiscreteLabel::plus(1.5).unwrap();
    let f: Vec<_> = rs.iter().map(|&r| phi0_discrete(&l, 1, r).unwrap()).collect();
    let cf = fd::casimir(l.gamma_coefficient(), r0, h, &f);
    let want: Vec<_> = f.iter().map(|v| v * (l.k * (1.0 - l.k))).collect();
    assert!(rel_residual(&cf, &want, 2, n - 2) < 1e-3);

    let cl = ContinuousLabel::new(Epsilon::Zero, 0.4).unwrap();
    let kc = cl.k();
    let kappa = (kc * (1.0 - kc)).re;
    let f: Vec<_> = rs.iter().map(|&r| phi0_continuous(&cl, 1.0, r).unwrap()[0]).collect();
    let cf = fd::casimir(cl.gamma_coefficient(), r0, h, &f);
    let want: Vec<_> = f.iter().map(|v| v * kappa).collect();
    assert!(rel_residual(&cf, &want, 2, n - 2) < 1e-3);
}

#[test]
fn continuous_oscillator_functions_are_orthonormal() {
    // two-component inner product: sum over σ of ∫ dr
    let (r, w) = composite(0.0, 9.0, 48, 24);
    for (eps, s) in [(Epsilon::Half, 0.7), (Epsilon::Zero, 0.5)] {
        let cl = ContinuousLabel::new(eps, s).unwrap();
        let ms: Vec<f64> = (-2..=2).map(|j| j as f64 + cl.eps.value()).collect();
        let vals: Vec<Vec<[Complex64; 2]>> = ms.iter().map(|&m| r.iter().map(|&x| phi0_continuous(&cl, m, x).unwrap()).collect()).collect();
        for i in 0..ms.len() {
            for j in 0..ms.len() {
                let g: Complex64 = (0..r.len())
                    .map(|q| (vals[i][q][0].conj() * vals[j][q][0] + vals[i][q][1].conj() * vals[j][q][1]) * w[q])
                    .sum();
                let want = if i == j { 1.0 } else { 0.0 };
                // the 1/√r-type endpoint of W limits Gauss-Legendre accuracy
                assert!((g - want).norm() < 2e-3, "eps={eps:?} ({},{}) {g}", ms[i], ms[j]);
            }
        }
    }
}

#[test]
fn mellin_smoke() {
    // ∫ ²Φ_μ* ²Φ_μ′ over [e^{−L}, e^{L}] grows like L on the diagonal and
    // stays bounded off it
    let ip = |l: f64, mu: f64, mup: f64| -> f64 {
        let (r, w) = composite(-l, l, 200, 16);
        r.iter()
            .zip(&w)
            .map(|(&u, &wu)| {
                let x = u.exp();
                phi2_discrete(mu, x).unwrap().conj() * phi2_discrete(mup, x).unwrap() * x * wu
            })
            .sum::<Complex64>()
            .norm()
    };
    let ratio = |l: f64| ip(l, 0.3, 0.3) / ip(l, 0.3, 1.3);
    assert!(ratio(4.0) < ratio(8.0) && ratio(8.0) < ratio(16.0));
    assert!(ratio(16.0) > 10.0);
    let t = phi2_continuous(1, 0.4, 1.7).unwrap();
    let u = phi2_continuous(-1, 0.4, 1.7).unwrap();
    assert!((t[0].conj() * u[0] + t[1].conj() * u[1]).norm() < 1e-16);
    assert!((t[0].norm() - 1.0 / (2.0 * PI * 1.7).sqrt()).abs() < 1e-15);
}

//! `D±_k` kernels: elliptic matrix, radial and Hankel kernels, Mellin and
//! repulsive-oscillator matrix elements.

use super::{c, ln_alpha, sign, KernelValue};
use crate::bases::{phi0_discrete, DiscreteLabel, SeriesSign};
use crate::error::{LctError, Result};
use crate::specfun::{bessel_j, hyp1f1, hyp2f1, ln_gamma, ln_gamma_real};
use crate::symplectic::{cayley_conjugate_reposc, elliptic_factor, reflection_conjugate, GroupElement};
use crate::EPS_B;
use num_complex::Complex64;
use std::f64::consts::PI;

/// `D⁻_k` is `D⁺_k` composed with `M ↦ RMR`, `R = diag(1, −1)`.
fn plus_matrix(label: &DiscreteLabel, m: &GroupElement) -> GroupElement {
    match label.sign {
        SeriesSign::Plus => *m,
        SeriesSign::Minus => reflection_conjugate(m),
    }
}

fn check_b(m: &GroupElement) -> Result<()> {
    if m.has_degenerate_b() {
        return Err(LctError::DegenerateB { b: m.b });
    }
    Ok(())
}

/// Radial kernel `⁻D^k(ρ, ρ′) = e^{−iπk sign b}/|b| √(ρρ′) exp(i(dρ² + aρ′²)/2b) J_{2k−1}(ρρ′/|b|)`.
///
/// For `b < 0` this is the continuation through the lower half plane, which
/// keeps `C_{M⁻¹}(ρ, ρ′) = C_M(ρ′, ρ)*`. `D⁻_k` labels evaluate the `D⁺_k`
/// kernel at `reflection_conjugate(M)`.
///
/// ```
/// use lct::bases::DiscreteLabel;
/// use lct::kernels::radial_kernel;
/// use lct::symplectic::GroupElement;
/// let v = radial_kernel(&DiscreteLabel::plus(0.5).unwrap(), &GroupElement::fourier(), 1.0, 1.0)
///     .unwrap().regular().unwrap();
/// assert!(v.re.abs() < 1e-16 && (v.im + 0.765_197_686_557_966_6).abs() < 1e-15);
/// ```
pub fn radial_kernel(label: &DiscreteLabel, m: &GroupElement, rho: f64, rhop: f64) -> Result<KernelValue> {
    let m = plus_matrix(label, m);
    check_b(&m)?;
    let k = label.k;
    let b = m.b;
    let x = rho * rhop / b.abs();
    let j = bessel_j(c(2.0 * k - 1.0), x)?;
    let phase = -PI * k * sign(b) + (m.d * rho * rho + m.a * rhop * rhop) / (2.0 * b);
    Ok(KernelValue::Regular(Complex64::from_polar((rho * rhop).sqrt() / b.abs(), phase) * j))
}

/// The same kernel in confluent form,
/// `2(ρρ′)^{2k−½}/((2ib)^{2k} Γ(2k)) exp(i(dρ² − 2ρρ′ + aρ′²)/2b) ₁F₁(2k−½; 4k−1; 2iρρ′/b)`,
/// principal `(2ib)^{2k}`. At `k = ¼` the ₁F₁ is read as its limit `(1 + e^z)/2`.
pub fn radial_kernel_1f1(label: &DiscreteLabel, m: &GroupElement, rho: f64, rhop: f64) -> Result<KernelValue> {
    let m = plus_matrix(label, m);
    check_b(&m)?;
    let k = label.k;
    let b = m.b;
    let p = rho * rhop;
    let z = Complex64::new(0.0, 2.0 * p / b);
    let f = if (4.0 * k - 1.0).abs() < 1e-14 {
        (1.0 + z.exp()) * 0.5
    } else {
        hyp1f1(c(2.0 * k - 0.5), c(4.0 * k - 1.0), z)?
    };
    let ln_pre = 2f64.ln() + (2.0 * k - 0.5) * p.ln() - ln_gamma_real(2.0 * k) - 2.0 * k * Complex64::new(0.0, 2.0 * b).ln();
    let phase = Complex64::new(0.0, (m.d * rho * rho - 2.0 * p + m.a * rhop * rhop) / (2.0 * b));
    Ok(KernelValue::Regular((ln_pre + phase).exp() * f))
}

/// `b = 0` limit of the radial kernel:
/// `e^{−iπk(1 − sign a)} e^{icρ²/2a}/√|a| · δ(ρ′ − ρ/|a|)`.
pub fn radial_kernel_b0(label: &DiscreteLabel, m: &GroupElement, rho: f64) -> Result<KernelValue> {
    let m = plus_matrix(label, m);
    if !m.has_degenerate_b() {
        return Err(LctError::UnsupportedCombination(format!("b = {} is not degenerate; use radial_kernel", m.b)));
    }
    let a = m.a;
    if a.abs() < EPS_B {
        return Err(LctError::DegenerateA { a });
    }
    let phase = -PI * label.k * (1.0 - sign(a)) + m.c * rho * rho / (2.0 * a);
    Ok(KernelValue::DeltaLine { amplitude: Complex64::from_polar(a.abs().powf(-0.5), phase), support: rho / a.abs() })
}

/// Hankel-basis kernel `⁺D^k(M) = ⁻D^k(((d, −c), (−b, a)))`. When the
/// transformed `b` (that is `−c`) vanishes the delta-line form is returned.
pub fn jplus_kernel(label: &DiscreteLabel, m: &GroupElement, rho: f64, rhop: f64) -> Result<KernelValue> {
    let t = GroupElement { a: m.d, b: -m.c, c: -m.b, d: m.a };
    if t.has_degenerate_b() {
        return radial_kernel_b0(label, &t, rho);
    }
    radial_kernel(label, &t, rho, rhop)
}

/// `n` from `m = k + n` (D⁺ convention), checking `n ∈ Z≥0`.
fn index_n(k: f64, m: f64) -> Result<usize> {
    let n = m - k;
    if n < -1e-9 || (n - n.round()).abs() > 1e-9 {
        return Err(LctError::InvalidIndex(format!("m = {m} is not k + n with n >= 0 for k = {k}")));
    }
    Ok(n.round() as usize)
}

/// Rows, columns and matrix on the `D⁺` side.
fn plus_indices(label: &DiscreteLabel, m: &GroupElement, mrow: f64, mcol: f64) -> Result<(GroupElement, usize, usize)> {
    let (mr, mc) = match label.sign {
        SeriesSign::Plus => (mrow, mcol),
        SeriesSign::Minus => (-mrow, -mcol),
    };
    Ok((plus_matrix(label, m), index_n(label.k, mr)?, index_n(label.k, mc)?))
}

fn ln_prefactor_0d(k: f64, n: usize, np: usize) -> f64 {
    // 2^{2k} Γ(m + m′) / √(Γ(k+m)Γ(1−k+m)Γ(k+m′)Γ(1−k+m′)), m = k + n
    let (nf, npf) = (n as f64, np as f64);
    2.0 * k * 2f64.ln() + ln_gamma_real(2.0 * k + nf + npf)
        - 0.5 * (ln_gamma_real(2.0 * k + nf) + ln_gamma_real(1.0 + nf) + ln_gamma_real(2.0 * k + npf) + ln_gamma_real(1.0 + npf))
}

/// Elliptic-basis matrix element `⁰D^k_{m,m′}(M) = (⁰Φ_m, C_M ⁰Φ_{m′})`.
///
/// Evaluated as the terminating sum
/// `Σ_j (k−m)_j (k−m′)_j / ((1−m−m′)_j j!) (s+2)^j w^{n−j} w̄^{n′−j}`,
/// `w = (d−a) − i(b+c)`, `s = a²+b²+c²+d²`, which is the Gauss series of the
/// closed form with the `(s−2)^{-j}` of its argument absorbed by `|w|² = s−2`.
/// Unlike the literal form ([`dk_matrix_element_2f1`]) it is regular on the
/// rotation subgroup, where it reduces to `δ_{mm′} e^{imφ}`. The factor
/// `[(a+d) + i(b−c)]^{−m−m′}` uses the branch that is continuous over the
/// group, which is what makes non-integer k a representation of the cover.
///
/// `D⁻_k` rows and columns are `m = −(k + n)`.
pub fn dk_matrix_element(label: &DiscreteLabel, m: &GroupElement, mrow: f64, mcol: f64) -> Result<Complex64> {
    let (g, n, np) = plus_indices(label, m, mrow, mcol)?;
    let k = label.k;
    let w = Complex64::new(g.d - g.a, -(g.b + g.c));
    let s2 = g.frobenius_sq() + 2.0;
    let lower = 1.0 - 2.0 * k - (n + np) as f64;
    let mut term = c(1.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..=n.min(np) {
        if j > 0 {
            let jf = (j - 1) as f64;
            term *= (jf - n as f64) * (jf - np as f64) / ((lower + jf) * (jf + 1.0)) * s2;
        }
        sum += term * w.powi((n - j) as i32) * w.conj().powi((np - j) as i32);
    }
    if np % 2 == 1 {
        sum = -sum;
    }
    let total_m = 2.0 * k + (n + np) as f64;
    Ok((ln_prefactor_0d(k, n, np) - total_m * ln_alpha(&g)).exp() * sum)
}

/// The same element through the printed Gauss function with argument
/// `(s+2)/(s−2)`; undefined on the rotation subgroup (`s = 2`), where it
/// returns [`LctError::EllipticDegenerate`].
pub fn dk_matrix_element_2f1(label: &DiscreteLabel, m: &GroupElement, mrow: f64, mcol: f64) -> Result<Complex64> {
    let (g, n, np) = plus_indices(label, m, mrow, mcol)?;
    let k = label.k;
    let s = g.frobenius_sq();
    if (s - 2.0).abs() < 1e-8 {
        return Err(LctError::EllipticDegenerate);
    }
    let (mr, mc) = (k + n as f64, k + np as f64);
    let w = Complex64::new(g.d - g.a, -(g.b + g.c));
    let f = hyp2f1(c(k - mr), c(k - mc), c(1.0 - mr - mc), c((s + 2.0) / (s - 2.0)))?;
    let powers = w.powi(n as i32) * (-w.conj()).powi(np as i32);
    Ok((ln_prefactor_0d(k, n, np) - (mr + mc) * ln_alpha(&g)).exp() * powers * f)
}

/// `⁰D^k(exp(φJ₀)) = δ_{mm′} e^{imφ}`.
pub fn elliptic_diagonal_element(phi: f64, mrow: f64, mcol: f64) -> Complex64 {
    if mrow == mcol {
        Complex64::from_polar(1.0, mrow * phi)
    } else {
        c(0.0)
    }
}

/// Closed-form action on an oscillator function:
/// `C_M ⁰Φ_m(r) = e^{imα} exp(ir²(ac+bd)/2(a²+b²)) (a²+b²)^{−¼} ⁰Φ_m(r/√(a²+b²))`
/// with `α` from [`elliptic_factor`] (`e^{iα} = (a−ib)/(a+ib)` on the cover).
pub fn transformed_phi0(label: &DiscreteLabel, m: &GroupElement, n: usize, r: f64) -> Result<Complex64> {
    let g = plus_matrix(label, m);
    let f = elliptic_factor(&g);
    let rho2 = g.a * g.a + g.b * g.b;
    let mm = label.k + n as f64;
    let phase = mm * f.alpha + r * r * (g.a * g.c + g.b * g.d) / (2.0 * rho2);
    Ok(Complex64::from_polar(rho2.powf(-0.25), phase) * phi0_discrete(label, n, r / rho2.sqrt())?)
}

/// `b^{−2k}` continued to `b < 0` through arg b = −π.
fn ln_b_power(b: f64, k: f64) -> Complex64 {
    if b > 0.0 {
        c(-2.0 * k * b.ln())
    } else {
        Complex64::new(-2.0 * k * (-b).ln(), 2.0 * PI * k)
    }
}

fn check_mellin(m: &GroupElement) -> Result<()> {
    check_b(m)?;
    if m.a.abs() < EPS_B {
        return Err(LctError::DegenerateA { a: m.a });
    }
    if m.d.abs() < EPS_B {
        return Err(LctError::DegenerateD { d: m.d });
    }
    let z = 1.0 / (m.a * m.d);
    if z >= 1.0 - 1e-8 {
        return Err(LctError::BranchCutProximity { z });
    }
    Ok(())
}

/// Scaling-basis (Mellin) matrix element `²D^k_{μ,μ′}(M)`:
/// `e^{−iπk} 2^{i(μ′−μ)} Γ(k−iμ)Γ(k+iμ′)/(2πΓ(2k)) b^{−2k} (−id/b)^{−k+iμ} (−ia/b)^{−k−iμ′} ₂F₁(k−iμ, k+iμ′; 2k; 1/ad)`.
///
/// Powers of `−id/b`, `−ia/b` are principal; `b^{−2k}` is continued with
/// arg b = −π for b < 0. Needs `a, b, d ≠ 0` and `1/ad` off `[1, ∞)`.
/// Rows and columns are Mellin functions `r^{−½+2iμ}/√π`.
pub fn dk_hyperbolic_element(label: &DiscreteLabel, m: &GroupElement, mu: f64, mup: f64) -> Result<Complex64> {
    let g = plus_matrix(label, m);
    check_mellin(&g)?;
    let k = label.k;
    let kc = c(k);
    let i = Complex64::i();
    let (a, b, d) = (g.a, g.b, g.d);
    let ln = -i * PI * k + i * (mup - mu) * 2f64.ln() + ln_gamma(kc - i * mu)? + ln_gamma(kc + i * mup)?
        - (2.0 * PI).ln()
        - ln_gamma_real(2.0 * k)
        + ln_b_power(b, k)
        + (-kc + i * mu) * Complex64::new(0.0, -d / b).ln()
        + (-kc - i * mup) * Complex64::new(0.0, -a / b).ln();
    let f = hyp2f1(kc - i * mu, kc + i * mup, c(2.0 * k), c(1.0 / (a * d)))?;
    Ok(ln.exp() * f)
}

/// Closed-form image of a Mellin function, `(C_M ²Φ_μ)(r)`:
/// `e^{−iπk}/(2^{k−iμ}√π) Γ(k+iμ)/Γ(2k) r^{2k−½} e^{idr²/2b} / (b^{2k} (−ia/b)^{k+iμ}) ₁F₁(k+iμ; 2k; −ir²/2ab)`,
/// with the same sheets as [`dk_hyperbolic_element`].
pub fn mellin_action(label: &DiscreteLabel, m: &GroupElement, mu: f64, r: f64) -> Result<Complex64> {
    let g = plus_matrix(label, m);
    check_b(&g)?;
    if g.a.abs() < EPS_B {
        return Err(LctError::DegenerateA { a: g.a });
    }
    let k = label.k;
    let kc = c(k);
    let i = Complex64::i();
    let (a, b, d) = (g.a, g.b, g.d);
    let ln = -i * PI * k - (kc - i * mu) * 2f64.ln() - 0.5 * PI.ln() + ln_gamma(kc + i * mu)? - ln_gamma_real(2.0 * k)
        + (2.0 * k - 0.5) * r.ln()
        + i * d * r * r / (2.0 * b)
        + ln_b_power(b, k)
        - (kc + i * mu) * Complex64::new(0.0, -a / b).ln();
    let f = hyp1f1(kc + i * mu, c(2.0 * k), Complex64::new(0.0, -r * r / (2.0 * a * b)))?;
    Ok(ln.exp() * f)
}

/// Repulsive-oscillator matrix element `¹D^k(M) = ²D^k(P⁻¹MP)`,
/// `P = ((1, −1), (1, 1))/√2`. For `D⁻_k`, where `J₁` changes sign, the
/// labels are negated along with the reflection.
pub fn reposc_element(label: &DiscreteLabel, m: &GroupElement, mu: f64, mup: f64) -> Result<Complex64> {
    let plus = DiscreteLabel { k: label.k, sign: SeriesSign::Plus };
    let (g, mu, mup) = match label.sign {
        SeriesSign::Plus => (*m, mu, mup),
        SeriesSign::Minus => (reflection_conjugate(m), -mu, -mup),
    };
    dk_hyperbolic_element(&plus, &cayley_conjugate_reposc(&g), mu, mup)
}

//! `C^ε_s` kernels. Functions carry two components σ = ±1; kernels are 2×2
//! blocks indexed by (σ, σ′).

use super::{c, sign, KernelValue};
use crate::bases::{phi0_continuous, ContinuousLabel, Epsilon};
use crate::error::{LctError, Result};
use crate::specfun::{hankel_pair_imaginary, hyp1f1, hyp2f1, ln_gamma, macdonald_imaginary_order};
use crate::symplectic::{elliptic_factor, GroupElement};
use crate::EPS_B;
use num_complex::Complex64;
use std::f64::consts::PI;

fn check_sign(s: i8) -> Result<f64> {
    match s {
        1 => Ok(1.0),
        -1 => Ok(-1.0),
        _ => Err(LctError::InvalidIndex(format!("component sign must be +1 or -1, got {s}"))),
    }
}

/// `i^{2ε}`-type factor: `z^{2ε}` for ε ∈ {0, ½}.
fn pow_2eps(eps: Epsilon, z: Complex64) -> Complex64 {
    match eps {
        Epsilon::Zero => c(1.0),
        Epsilon::Half => z,
    }
}

/// The ζ-dependent factor `H^{ε,k}_{σ,σ′}(ζ)` of the radial kernel.
///
/// * σ = σ′ = +1: `iπ(e^{−πs} H¹_{2is}(ζ) − h e^{πs} H²_{2is}(ζ))` for ζ > 0
///   and `h` times the value at |ζ| for ζ < 0.
/// * σ = σ′ = −1: `H₋₋ = h H₊₊`.
/// * σ ≠ σ′: `4g (i sign ζ)^{2ε} K_{2is}(|ζ|)`, the same for both orders.
pub fn h_function(label: &ContinuousLabel, sigma: i8, sigmap: i8, zeta: f64) -> Result<Complex64> {
    let (sg, sp) = (check_sign(sigma)?, check_sign(sigmap)?);
    if zeta == 0.0 || !zeta.is_finite() {
        return Err(LctError::InvalidIndex(format!("zeta must be finite and non-zero, got {zeta}")));
    }
    let s = label.s;
    let x = zeta.abs();
    if sg == sp {
        let (h1, h2) = hankel_pair_imaginary(s, x)?;
        let hp = Complex64::i() * PI * ((-PI * s).exp() * h1 - label.h() * (PI * s).exp() * h2);
        let hp = if zeta > 0.0 { hp } else { label.h() * hp };
        Ok(if sg > 0.0 { hp } else { label.h() * hp })
    } else {
        let kv = match macdonald_imaginary_order(s, x) {
            Ok(v) => v,
            Err(LctError::Underflow { .. }) => 0.0,
            Err(e) => return Err(e),
        };
        Ok(4.0 * label.g() * pow_2eps(label.eps, Complex64::new(0.0, sign(zeta))) * kv)
    }
}

/// Radial kernel entry `G_{σσ′}(r, r′) H^{ε,k}_{σσ′}(−rr′/b)` with
/// `G = √(rr′)/(2π|b|) exp(i(dσr² + aσ′r′²)/2b)`.
///
/// The cross blocks σ ≠ σ′ are what mix the two hyperbolic patches.
pub fn cont_radial_kernel(label: &ContinuousLabel, m: &GroupElement, sigma: i8, r: f64, sigmap: i8, rp: f64) -> Result<KernelValue> {
    let (sg, sp) = (check_sign(sigma)?, check_sign(sigmap)?);
    if m.has_degenerate_b() {
        return Err(LctError::DegenerateB { b: m.b });
    }
    let b = m.b;
    let g = Complex64::from_polar((r * rp).sqrt() / (2.0 * PI * b.abs()), (m.d * sg * r * r + m.a * sp * rp * rp) / (2.0 * b));
    Ok(KernelValue::Regular(g * h_function(label, sigma, sigmap, -r * rp / b)?))
}

/// All four blocks `[[C₊₊, C₊₋], [C₋₊, C₋₋]]` of [`cont_radial_kernel`] at
/// one `(r, r′)`, sharing the two H evaluations (`H₋₋ = hH₊₊`, `H₋₊ = H₊₋`).
pub fn cont_radial_block(label: &ContinuousLabel, m: &GroupElement, r: f64, rp: f64) -> Result<[[Complex64; 2]; 2]> {
    if m.has_degenerate_b() {
        return Err(LctError::DegenerateB { b: m.b });
    }
    let b = m.b;
    let zeta = -r * rp / b;
    let same = h_function(label, 1, 1, zeta)?;
    let cross = h_function(label, 1, -1, zeta)?;
    let amp = (r * rp).sqrt() / (2.0 * PI * b.abs());
    let (u, v) = (m.d * r * r / (2.0 * b), m.a * rp * rp / (2.0 * b));
    let g = |sg: f64, sp: f64| Complex64::from_polar(amp, sg * u + sp * v);
    Ok([[g(1.0, 1.0) * same, g(1.0, -1.0) * cross], [g(-1.0, 1.0) * cross, g(-1.0, -1.0) * (label.h() * same)]])
}

/// `b = 0` limit: `(sign a)^{2ε}/√|a| · exp(iσcr²/2a) δ(r′ − r/|a|)` within the
/// same component.
pub fn cont_radial_kernel_b0(label: &ContinuousLabel, m: &GroupElement, sigma: i8, r: f64) -> Result<KernelValue> {
    let sg = check_sign(sigma)?;
    if !m.has_degenerate_b() {
        return Err(LctError::UnsupportedCombination(format!("b = {} is not degenerate; use cont_radial_kernel", m.b)));
    }
    let a = m.a;
    if a.abs() < EPS_B {
        return Err(LctError::DegenerateA { a });
    }
    let amp = pow_2eps(label.eps, c(sign(a))) * Complex64::from_polar(a.abs().powf(-0.5), sg * m.c * r * r / (2.0 * a));
    Ok(KernelValue::DeltaLine { amplitude: amp, support: r / a.abs() })
}

/// The radial kernel in confluent form, with signed positions ρ = σr,
/// ρ′ = σ′r′:
///
/// `(−sign b)^{2ε} η^{2ε} g/(π|b|) exp(i(dσρ² − 2ηρρ′ + aσ′ρ′²)/2b) √|ρρ′|
///  {Γ(1−2k) |ρρ′/2b|^{2k−1} ₁F₁(2k−½; 4k−1; 2iηρρ′/b) + χ [k ↔ 1−k]}`,
///
/// `η = 1, χ = h` on the diagonal blocks and `η = i, χ = 1` off them; the
/// `σ = σ′ = −1` block carries an extra factor `h`.
/// Singular at s = 0 (the two halves cancel there), so `|s| < 1e-6` is
/// refused with [`LctError::SmallS`].
pub fn cont_radial_kernel_rho(label: &ContinuousLabel, m: &GroupElement, rho: f64, rhop: f64) -> Result<KernelValue> {
    if m.has_degenerate_b() {
        return Err(LctError::DegenerateB { b: m.b });
    }
    if label.s.abs() < 1e-6 {
        return Err(LctError::SmallS { s: label.s });
    }
    if rho == 0.0 || rhop == 0.0 {
        return Err(LctError::InvalidIndex("rho and rho' must be non-zero".into()));
    }
    let (a, b, d) = (m.a, m.b, m.d);
    let (sg, sp) = (sign(rho), sign(rhop));
    let (eta, chi) = if sg == sp { (c(1.0), label.h()) } else { (Complex64::i(), 1.0) };
    let k = label.k();
    let p = rho * rhop;
    let z = 2.0 * Complex64::i() * eta * p / b;
    let half = |kk: Complex64| -> Result<Complex64> {
        let ln = ln_gamma(1.0 - 2.0 * kk)? + (2.0 * kk - 1.0) * (p / (2.0 * b)).abs().ln();
        Ok(ln.exp() * hyp1f1(2.0 * kk - 0.5, 4.0 * kk - 1.0, z)?)
    };
    let bracket = half(k)? + chi * half(1.0 - k)?;
    let mut pre = pow_2eps(label.eps, -sign(b) * eta) * label.g() / (PI * b.abs());
    if sg < 0.0 && sp < 0.0 {
        pre *= label.h();
    }
    let ex = (Complex64::i() * (d * sg * rho * rho - 2.0 * eta * p + a * sp * rhop * rhop) / (2.0 * b)).exp();
    Ok(KernelValue::Regular(pre * ex * p.abs().sqrt() * bracket))
}

/// `G(m) = Γ(k+m)Γ(1−k+m) = |Γ(½+m+is)|²`, positive for real m.
fn ln_gm(k: Complex64, m: f64) -> Result<f64> {
    Ok(2.0 * ln_gamma(k + m)?.re)
}

fn ln_factorial(n: usize) -> f64 {
    crate::specfun::ln_gamma_real(n as f64 + 1.0)
}

/// Elliptic-basis matrix element `⁰C^{ε,k}_{m,m′}(M)`, `m − ε, m′ − ε ∈ Z`.
///
/// With `α = ((a+d) + i(b−c))/2`, `β = ((a−d) + i(b+c))/2` and `z = −|β|²`:
///
/// * m ≥ m′: `(−1)^{m−m′} √(G(m)/G(m′)) β^{m−m′} α^{−(m+m′)} ₂F₁(k−m′, 1−k−m′; 1+m−m′; z)/(m−m′)!`
/// * m ≤ m′: `√(G(m′)/G(m)) β̄^{m′−m} α^{−(m+m′)} ₂F₁(k−m, 1−k−m; 1+m′−m; z)/(m′−m)!`
///
/// where `G(m) = Γ(k+m)Γ(1−k+m)`. This is regular everywhere; on the
/// rotation subgroup β = 0 and it reduces to `δ_{mm′} e^{imφ}`.
pub fn cont_elliptic_element(label: &ContinuousLabel, m: &GroupElement, mrow: f64, mcol: f64) -> Result<Complex64> {
    label.check_m(mrow)?;
    label.check_m(mcol)?;
    let k = label.k();
    let alpha = Complex64::new(m.a + m.d, m.b - m.c) * 0.5;
    let beta = Complex64::new(m.a - m.d, m.b + m.c) * 0.5;
    let z = c(-beta.norm_sqr());
    let total = (mrow + mcol).round() as i32;
    let diff = (mrow - mcol).round() as i64;
    let one = c(1.0);
    let alpha_pow = alpha.powi(-total);
    if diff >= 0 {
        let n = diff as usize;
        let sgn = if n % 2 == 0 { 1.0 } else { -1.0 };
        let ratio = (0.5 * (ln_gm(k, mrow)? - ln_gm(k, mcol)?) - ln_factorial(n)).exp();
        let f = hyp2f1(k - mcol, one - k - mcol, c(1.0 + n as f64), z)?;
        Ok(sgn * ratio * beta.powi(n as i32) * alpha_pow * f)
    } else {
        let n = (-diff) as usize;
        let ratio = (0.5 * (ln_gm(k, mcol)? - ln_gm(k, mrow)?) - ln_factorial(n)).exp();
        let f = hyp2f1(k - mrow, one - k - mrow, c(1.0 + n as f64), z)?;
        Ok(ratio * beta.conj().powi(n as i32) * alpha_pow * f)
    }
}

/// Closed-form action on a continuous oscillator function, component σ:
/// `e^{imα} exp(iσr²(ac+bd)/2(a²+b²)) (a²+b²)^{−¼} ⁰Φ_{m,σ}(r/√(a²+b²))`.
pub fn transformed_phi0_continuous(label: &ContinuousLabel, m: &GroupElement, mrow: f64, sigma: i8, r: f64) -> Result<Complex64> {
    let sg = check_sign(sigma)?;
    let f = elliptic_factor(m);
    let rho2 = m.a * m.a + m.b * m.b;
    let phase = mrow * f.alpha + sg * r * r * (m.a * m.c + m.b * m.d) / (2.0 * rho2);
    let phi = phi0_continuous(label, mrow, r / rho2.sqrt())?;
    let comp = if sg > 0.0 { phi[0] } else { phi[1] };
    Ok(Complex64::from_polar(rho2.powf(-0.25), phase) * comp)
}

/// Scaling-basis matrix element `²C^{ε,k}_{τμ,τ′μ′}(M)` between the
/// two-component Mellin functions `(1, τ) r^{−½+2iμ}/√(2π)`:
///
/// `(−sign b)^{2ε} g/(2π) · 2^{i(μ′−μ)}/(2π) · [(α_k + hττ′/α_k + i^{2ε}(τ′β_k + τ/β_k)) T_k
///   + (hα_{1−k} + ττ′/α_{1−k} + i^{2ε}(τ′β_{1−k} + τ/β_{1−k})) T_{1−k}]`
///
/// with `T_k = Γ(1−2k)Γ(k−iμ)Γ(k+iμ′) ₂F₁(k−iμ, k+iμ′; 2k; 1/ad) / (|a|^{k+iμ′} |b|^{i(μ−μ′)} |d|^{k−iμ})`,
/// `α_k = exp(iπ/2 [(k+iμ′) sgn(ab) + (k−iμ) sgn(bd)])` and
/// `β_k = exp(iπ/2 [−(k+iμ′) sgn(ab) + (k−iμ) sgn(bd)])`.
pub fn cont_hyperbolic_element(
    label: &ContinuousLabel,
    m: &GroupElement,
    tau: i8,
    mu: f64,
    taup: i8,
    mup: f64,
) -> Result<Complex64> {
    let (t, tp) = (check_sign(tau)?, check_sign(taup)?);
    if m.has_degenerate_b() {
        return Err(LctError::DegenerateB { b: m.b });
    }
    if m.a.abs() < EPS_B {
        return Err(LctError::DegenerateA { a: m.a });
    }
    if m.d.abs() < EPS_B {
        return Err(LctError::DegenerateD { d: m.d });
    }
    let zarg = 1.0 / (m.a * m.d);
    if zarg >= 1.0 - 1e-8 {
        return Err(LctError::BranchCutProximity { z: zarg });
    }
    if label.s.abs() < 1e-6 {
        return Err(LctError::SmallS { s: label.s });
    }
    let (a, b, d) = (m.a, m.b, m.d);
    let i = Complex64::i();
    let sab = sign(a * b);
    let sbd = sign(b * d);
    let tk = |kk: Complex64| -> Result<Complex64> {
        let ln = ln_gamma(1.0 - 2.0 * kk)? + ln_gamma(kk - i * mu)? + ln_gamma(kk + i * mup)?
            - (kk + i * mup) * a.abs().ln()
            - i * (mu - mup) * b.abs().ln()
            - (kk - i * mu) * d.abs().ln();
        Ok(ln.exp() * hyp2f1(kk - i * mu, kk + i * mup, 2.0 * kk, c(zarg))?)
    };
    let alpha = |kk: Complex64| (i * PI / 2.0 * ((kk + i * mup) * sab + (kk - i * mu) * sbd)).exp();
    let beta = |kk: Complex64| (i * PI / 2.0 * (-(kk + i * mup) * sab + (kk - i * mu) * sbd)).exp();
    let ie = pow_2eps(label.eps, i);
    let h = label.h();
    let k = label.k();
    let k1 = 1.0 - k;
    let (ak, bk, a1, b1) = (alpha(k), beta(k), alpha(k1), beta(k1));
    let first = (ak + h * t * tp / ak + ie * (tp * bk + t / bk)) * tk(k)?;
    let second = (h * a1 + t * tp / a1 + ie * (tp * b1 + t / b1)) * tk(k1)?;
    let pre = pow_2eps(label.eps, c(-sign(b))) * label.g() / (2.0 * PI) * (i * (mup - mu) * 2f64.ln()).exp() / (2.0 * PI);
    Ok(pre * (first + second))
}

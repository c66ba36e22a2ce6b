//! Eigenfunctions of the five generators, sampled in the radial position
//! representation `L²(R⁺, dr)` (two components for the continuous series).
//!
//! The generators act as
//!
//! * `J₀ = ¼(−∂² + γ/r² + r²)`, `J₁ = ¼(−∂² + γ/r² − r²)`,
//! * `J₂ = −(i/2)(r∂ + ½)`, `J₊ = ½(−∂² + γ/r²)`, `J₋ = ½r²`,
//!
//! with Casimir `J₁² + J₂² − J₀² = k(1 − k)`, so `γ = (2k − 1)² − ¼`. The
//! continuous series uses the 2×2 forms `diag(J, −J)` for `J₀, J₁, J±` and
//! `diag(J₂, J₂)`.

use crate::error::{LctError, Result};
use crate::specfun::{bessel_j, hyp1f1, laguerre, ln_gamma, ln_gamma_real, whittaker_m, whittaker_w};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// `D⁺_k` (spectrum of `J₀` bounded below by `k`) or `D⁻_k` (bounded above by
/// `−k`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SeriesSign {
    Plus,
    Minus,
}

/// Discrete-series label.
///
/// `D⁻_k` shares the functions of `D⁺_k`; only the group action changes
/// (through [`crate::symplectic::reflection_conjugate`]), and the `J₀`
/// eigenvalue of `⁰Φ_n` becomes `−(k + n)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscreteLabel {
    pub k: f64,
    pub sign: SeriesSign,
}

impl DiscreteLabel {
    pub fn new(k: f64, sign: SeriesSign) -> Result<Self> {
        if !(k > 0.0 && k.is_finite()) {
            return Err(LctError::InvalidLabel(format!("Bargmann index must be > 0, got {k}")));
        }
        Ok(DiscreteLabel { k, sign })
    }

    pub fn plus(k: f64) -> Result<Self> {
        Self::new(k, SeriesSign::Plus)
    }

    /// `J₀` eigenvalue of the n-th elliptic basis function.
    pub fn m(&self, n: usize) -> f64 {
        match self.sign {
            SeriesSign::Plus => self.k + n as f64,
            SeriesSign::Minus => -(self.k + n as f64),
        }
    }

    /// Coefficient of `1/r²` in the generators.
    pub fn gamma_coefficient(&self) -> f64 {
        (2.0 * self.k - 1.0).powi(2) - 0.25
    }
}

/// `ε = 0` (vector) or `ε = ½` (spinor) continuous series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Epsilon {
    Zero,
    Half,
}

impl Epsilon {
    pub fn value(self) -> f64 {
        match self {
            Epsilon::Zero => 0.0,
            Epsilon::Half => 0.5,
        }
    }

    pub fn from_f64(e: f64) -> Result<Self> {
        if e == 0.0 {
            Ok(Epsilon::Zero)
        } else if e == 0.5 {
            Ok(Epsilon::Half)
        } else {
            Err(LctError::InvalidLabel(format!("epsilon must be 0 or 0.5, got {e}")))
        }
    }
}

/// Continuous-series label `C^ε_s`, `k = ½ + is`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContinuousLabel {
    pub eps: Epsilon,
    pub s: f64,
}

impl ContinuousLabel {
    /// `s ≥ 0` for ε = 0 and `s > 0` for ε = ½.
    pub fn new(eps: Epsilon, s: f64) -> Result<Self> {
        let ok = s.is_finite() && (s > 0.0 || (s == 0.0 && eps == Epsilon::Zero));
        if !ok {
            return Err(LctError::InvalidLabel(format!("continuous series needs s >= 0 (s > 0 for eps = 1/2), got {s}")));
        }
        Ok(ContinuousLabel { eps, s })
    }

    pub fn k(&self) -> Complex64 {
        Complex64::new(0.5, self.s)
    }

    /// `g₀ = cosh πs`, `g_½ = sinh πs`.
    pub fn g(&self) -> f64 {
        match self.eps {
            Epsilon::Zero => (PI * self.s).cosh(),
            Epsilon::Half => (PI * self.s).sinh(),
        }
    }

    /// `h₀ = 1`, `h_½ = −1`.
    pub fn h(&self) -> f64 {
        match self.eps {
            Epsilon::Zero => 1.0,
            Epsilon::Half => -1.0,
        }
    }

    /// `γ = −4s² − ¼ < −¼`.
    pub fn gamma_coefficient(&self) -> f64 {
        -4.0 * self.s * self.s - 0.25
    }

    /// `(m − ε)` must be an integer.
    pub fn check_m(&self, m: f64) -> Result<()> {
        let d = m - self.eps.value();
        if (d - d.round()).abs() > 1e-12 {
            return Err(LctError::InvalidIndex(format!("m - eps must be an integer, got m = {m}")));
        }
        Ok(())
    }
}

/// Which generator is diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasisTag {
    /// Elliptic: harmonic oscillator.
    J0,
    /// Hyperbolic: repulsive oscillator.
    J1,
    /// Hyperbolic: scaling (Mellin).
    J2,
    /// Parabolic: free motion (Hankel).
    JPlus,
    /// Parabolic: radial position.
    JMinus,
}

/// An eigenvalue of one generator, with a component sign (σ or τ) where the
/// representation has two components.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenLabel {
    pub basis: BasisTag,
    pub eigenvalue: f64,
    pub component: Option<i8>,
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn check_r(r: f64) -> Result<()> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(LctError::InvalidIndex(format!("radius must be > 0, got {r}")));
    }
    Ok(())
}

/// Oscillator function `⁰Φ^k_{k+n}(r) = √(2 n!/Γ(2k+n)) r^{2k−½} e^{−r²/2} L_n^{(2k−1)}(r²)`,
/// unit normalized on `(0, ∞)`.
///
/// ```
/// use lct::bases::{phi0_discrete, DiscreteLabel};
/// let v = phi0_discrete(&DiscreteLabel::plus(0.5).unwrap(), 0, 1.0).unwrap();
/// assert!((v.re - 2f64.sqrt() * (-0.5f64).exp()).abs() < 1e-15);
/// ```
pub fn phi0_discrete(label: &DiscreteLabel, n: usize, r: f64) -> Result<Complex64> {
    check_r(r)?;
    let k = label.k;
    let ln_norm = 0.5 * (2f64.ln() + ln_gamma_real(n as f64 + 1.0) - ln_gamma_real(2.0 * k + n as f64));
    let ln_val = ln_norm + (2.0 * k - 0.5) * r.ln() - 0.5 * r * r;
    Ok(c(ln_val.exp() * laguerre(n, 2.0 * k - 1.0, r * r)))
}

/// Hankel-basis function `⁺Φ^k_ρ(r) = e^{iπk} √(ρr) J_{2k−1}(ρr)`.
pub fn phi_plus_discrete(label: &DiscreteLabel, rho: f64, r: f64) -> Result<Complex64> {
    check_r(r)?;
    check_r(rho)?;
    let k = label.k;
    let j = bessel_j(c(2.0 * k - 1.0), rho * r)?;
    Ok(Complex64::from_polar(1.0, PI * k) * (rho * r).sqrt() * j)
}

fn phi1_prefactor(k: f64, mu: f64) -> Result<Complex64> {
    let kc = c(k);
    let imu = Complex64::new(0.0, mu);
    // e^{iπ(k − iμ)/2} 2^{iμ} Γ(k + iμ) / (Γ(2k) √π)
    let ln = Complex64::i() * PI * 0.5 * (kc - imu) + imu * 2f64.ln() + ln_gamma(kc + imu)?
        - ln_gamma_real(2.0 * k)
        - 0.5 * PI.ln();
    Ok(ln.exp())
}

/// Repulsive-oscillator function `¹Φ^k_μ(r)`, `J₁` eigenvalue μ:
/// `e^{iπ(k−iμ)/2} 2^{iμ} Γ(k+iμ)/(Γ(2k)√π) r^{2k−½} e^{ir²/2} ₁F₁(k−iμ; 2k; −ir²)`.
///
/// The phase constant makes the family δ(μ − μ′)-normalized and ties it to
/// the Mellin basis by `¹Φ_μ = C_P ²Φ_μ` with `P² = F`.
pub fn phi1_discrete(label: &DiscreteLabel, mu: f64, r: f64) -> Result<Complex64> {
    check_r(r)?;
    let k = label.k;
    let pre = phi1_prefactor(k, mu)?;
    let f = hyp1f1(Complex64::new(k, -mu), c(2.0 * k), Complex64::new(0.0, -r * r))?;
    let ph = Complex64::from_polar(1.0, 0.5 * r * r);
    Ok(pre * r.powf(2.0 * k - 0.5) * ph * f)
}

/// The same function through Whittaker's `M_{iμ,k−½}(−ir²)/√r`; kept as an
/// independent form for cross-checks.
pub fn phi1_discrete_whittaker(label: &DiscreteLabel, mu: f64, r: f64) -> Result<Complex64> {
    check_r(r)?;
    let k = label.k;
    // principal (−ir²)^{k} contributes e^{−iπk/2}, so the constant is
    // e^{iπ(2k − iμ)/2} against the e^{iπ(k − iμ)/2} of the ₁F₁ form
    let pre = phi1_prefactor(k, mu)? * Complex64::from_polar(1.0, 0.5 * PI * k);
    let m = whittaker_m(Complex64::new(0.0, mu), c(k - 0.5), Complex64::new(0.0, -r * r))?;
    Ok(pre * m / r.sqrt())
}

/// Mellin function `²Φ_μ(r) = r^{−½+2iμ}/√π`, `J₂` eigenvalue μ, normalized
/// to δ(μ − μ′). Independent of k.
pub fn phi2_discrete(mu: f64, r: f64) -> Result<Complex64> {
    check_r(r)?;
    Ok(Complex64::from_polar(1.0, 2.0 * mu * r.ln()) / (PI * r).sqrt())
}

/// Continuous-series oscillator function `⁰Φ^{ε,k}_m(r)` as `[σ = +1, σ = −1]`:
/// `g/(π√r) · ((−1)^{m−ε} √(2Γ(k−m)Γ(1−k−m)) W_{m,k−½}(r²), √(2Γ(k+m)Γ(1−k+m)) W_{−m,k−½}(r²))`.
///
/// The σ = +1 component is a `J₀` eigenfunction with eigenvalue m and the
/// σ = −1 one with eigenvalue −m, so the pair is an eigenvector of
/// `diag(J₀, −J₀)`. Square roots are principal.
pub fn phi0_continuous(label: &ContinuousLabel, m: f64, r: f64) -> Result<[Complex64; 2]> {
    check_r(r)?;
    label.check_m(m)?;
    let k = label.k();
    let one = c(1.0);
    let mu = k - 0.5;
    let sign = if ((m - label.eps.value()).round() as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let pre = label.g() / (PI * r.sqrt());
    let amp_p = (2.0 * gamma_product(k - m, one - k - m)?).sqrt();
    let amp_m = (2.0 * gamma_product(k + m, one - k + m)?).sqrt();
    let wp = whittaker_w(c(m), mu, r * r)?;
    let wm = whittaker_w(c(-m), mu, r * r)?;
    Ok([pre * sign * amp_p * wp, pre * amp_m * wm])
}

fn gamma_product(a: Complex64, b: Complex64) -> Result<Complex64> {
    Ok((ln_gamma(a)? + ln_gamma(b)?).exp())
}

/// Two-component Mellin function `²Φ_{τ,μ}(r) = (1, τ) r^{−½+2iμ}/√(2π)`.
pub fn phi2_continuous(tau: i8, mu: f64, r: f64) -> Result<[Complex64; 2]> {
    check_r(r)?;
    if tau != 1 && tau != -1 {
        return Err(LctError::InvalidIndex(format!("tau must be +1 or -1, got {tau}")));
    }
    let v = Complex64::from_polar(1.0, 2.0 * mu * r.ln()) / (2.0 * PI * r).sqrt();
    Ok([v, v * tau as f64])
}

/// Finite-difference generators on a uniform grid `r_j = r₀ + j h`, second
/// order. Outputs are defined on the interior `1..n−1`; the end points are
/// set to zero.
pub mod fd {
    use super::BasisTag;
    use num_complex::Complex64;

    fn derivs(f: &[Complex64], h: f64, j: usize) -> (Complex64, Complex64) {
        let d1 = (f[j + 1] - f[j - 1]) / (2.0 * h);
        let d2 = (f[j + 1] - 2.0 * f[j] + f[j - 1]) / (h * h);
        (d1, d2)
    }

    /// One generator with centrifugal coefficient γ applied to samples `f`.
    pub fn apply(tag: BasisTag, gamma: f64, r0: f64, h: f64, f: &[Complex64]) -> Vec<Complex64> {
        let n = f.len();
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for j in 1..n.saturating_sub(1) {
            let r = r0 + j as f64 * h;
            let (d1, d2) = derivs(f, h, j);
            let cent = gamma / (r * r) * f[j];
            out[j] = match tag {
                BasisTag::J0 => 0.25 * (-d2 + cent + r * r * f[j]),
                BasisTag::J1 => 0.25 * (-d2 + cent - r * r * f[j]),
                BasisTag::J2 => Complex64::new(0.0, -0.5) * (r * d1 + 0.5 * f[j]),
                BasisTag::JPlus => 0.5 * (-d2 + cent),
                BasisTag::JMinus => 0.5 * r * r * f[j],
            };
        }
        out
    }

    /// `(J₁² + J₂² − J₀²) f` by nested application; valid on `2..n−2`.
    pub fn casimir(gamma: f64, r0: f64, h: f64, f: &[Complex64]) -> Vec<Complex64> {
        let twice = |tag| apply(tag, gamma, r0, h, &apply(tag, gamma, r0, h, f));
        let a = twice(BasisTag::J1);
        let b = twice(BasisTag::J2);
        let c = twice(BasisTag::J0);
        a.iter().zip(&b).zip(&c).map(|((x, y), z)| x + y - z).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert!(DiscreteLabel::plus(0.0).is_err());
        assert!(ContinuousLabel::new(Epsilon::Half, 0.0).is_err());
        let l = ContinuousLabel::new(Epsilon::Half, 0.5).unwrap();
        assert!((l.g() - (0.5 * PI).sinh()).abs() < 1e-15);
        assert_eq!(l.h(), -1.0);
        assert!(l.check_m(1.5).is_ok() && l.check_m(1.0).is_err());
        assert_eq!(DiscreteLabel::new(1.0, SeriesSign::Minus).unwrap().m(2), -3.0);
    }

    #[test]
    fn mellin_values() {
        assert!((phi2_discrete(0.0, 1.0).unwrap().re - 1.0 / PI.sqrt()).abs() < 1e-16);
        let v = phi2_continuous(-1, 0.0, 1.0).unwrap();
        assert!((v[0].re - 1.0 / (2.0 * PI).sqrt()).abs() < 1e-16);
        assert_eq!(v[1], -v[0]);
    }

    #[test]
    fn plus_example() {
        let v = phi_plus_discrete(&DiscreteLabel::plus(0.5).unwrap(), 1.0, 2.0).unwrap();
        let j0 = bessel_j(c(0.0), 2.0).unwrap().re;
        assert!((v - Complex64::new(0.0, 2f64.sqrt() * j0)).norm() < 1e-15);
    }
}

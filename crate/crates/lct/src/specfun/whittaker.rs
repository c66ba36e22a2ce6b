use super::gamma::{is_nonpositive_integer, ln_gamma, rgamma};
use super::hyper::hyp1f1;
use crate::error::{LctError, Result};
use num_complex::Complex64;

/// Whittaker M_{κ,μ}(z) = e^{−z/2} z^{μ+½} ₁F₁(μ−κ+½; 1+2μ; z), principal
/// branch of z^{μ+½}.
pub fn whittaker_m(kappa: Complex64, mu: Complex64, z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(1.0 + 2.0 * mu) {
        return Err(LctError::ParameterPole("Whittaker M with 2mu a negative integer"));
    }
    let f = hyp1f1(mu - kappa + 0.5, 1.0 + 2.0 * mu, z)?;
    Ok((-z * 0.5 + (mu + 0.5) * z.ln()).exp() * f)
}

/// Whittaker W_{κ,μ}(z) for real z > 0.
///
/// Computed as e^{−z/2} z^{μ+½} U(½+μ−κ, 1+2μ, z) with Tricomi's U from its
/// Laplace integral, which has no cancellation and no trouble at integer 2μ.
/// The two-term M-combination is available separately as
/// [`whittaker_w_mcombination`] for cross-checks at small z.
///
/// ```
/// use lct::specfun::whittaker_w;
/// use num_complex::Complex64 as C;
/// // W_{0,1/2}(z) = e^{-z/2}
/// let w = whittaker_w(C::new(0.0, 0.0), C::new(0.5, 0.0), 2.0).unwrap();
/// assert!((w.re - (-1.0f64).exp()).abs() < 1e-14);
/// ```
pub fn whittaker_w(kappa: Complex64, mu: Complex64, z: f64) -> Result<Complex64> {
    if z <= 0.0 || !z.is_finite() {
        return Err(LctError::InvalidIndex(format!("Whittaker W needs z > 0, got {z}")));
    }
    let a = mu - kappa + 0.5;
    let b = 1.0 + 2.0 * mu;
    let u = tricomi_u(a, b, z)?;
    Ok((-z * 0.5 + (mu + 0.5) * z.ln()).exp() * u)
}

/// W_{κ,μ}(z) = Γ(−2μ)/Γ(½−μ−κ) M_{κ,μ}(z) + Γ(2μ)/Γ(½+μ−κ) M_{κ,−μ}(z).
///
/// Ill-conditioned as 2μ approaches an integer; refused with
/// [`LctError::DegenerateMu`] when `|Im μ| < 1e-6` and 2μ is within 1e-6 of
/// an integer.
pub fn whittaker_w_mcombination(kappa: Complex64, mu: Complex64, z: f64) -> Result<Complex64> {
    let two_mu = 2.0 * mu;
    if two_mu.im.abs() < 1e-6 && (two_mu.re - two_mu.re.round()).abs() < 1e-6 {
        return Err(LctError::DegenerateMu { re: mu.re, im: mu.im });
    }
    let zc = Complex64::new(z, 0.0);
    let t1 = (ln_gamma(-two_mu)?).exp() * rgamma(0.5 - mu - kappa) * whittaker_m(kappa, mu, zc)?;
    let t2 = (ln_gamma(two_mu)?).exp() * rgamma(0.5 + mu - kappa) * whittaker_m(kappa, -mu, zc)?;
    Ok(t1 + t2)
}

/// Tricomi's U(a, b, x) for x > 0.
///
/// For Re a ≥ 1 the integral (1/Γ(a)) ∫₀^∞ e^{−xt} t^{a−1} (1+t)^{b−a−1} dt
/// is taken with the trapezoid rule in v = ln t, which converges
/// exponentially because the integrand is analytic in |Im v| < π/2 and
/// decays at both ends. Smaller Re a is reached by the recurrence
/// U(a−1) = −(b−2a−x) U(a) − a(a−b+1) U(a+1), run downward.
pub(crate) fn tricomi_u(a: Complex64, b: Complex64, x: f64) -> Result<Complex64> {
    if a.re >= 1.0 {
        return u_integral(a, b, x);
    }
    let shift = (1.0 - a.re).ceil() as usize;
    let top = a + shift as f64;
    let mut u_hi = u_integral(top + 1.0, b, x)?;
    let mut u = u_integral(top, b, x)?;
    let mut ak = top;
    for _ in 0..shift {
        let u_lo = -(b - 2.0 * ak - x) * u - ak * (ak - b + 1.0) * u_hi;
        u_hi = u;
        u = u_lo;
        ak -= 1.0;
    }
    Ok(u)
}

fn u_integral(a: Complex64, b: Complex64, x: f64) -> Result<Complex64> {
    let ar = a.re;
    let p = b - a - 1.0;
    let h = 0.05;
    // lower end: integrand ~ e^{Re(a) v}, measured from its peak near ln(a/x)
    let v_min = (ar / x).ln().min(0.0) - 44.0 / ar;
    // upper end: e^{-x e^v} kills everything once x e^v exceeds ~45 plus growth
    let growth = (a.re - 1.0).abs() + p.re.abs() + 2.0;
    let v_max = ((50.0 + growth * 4.0) / x).ln().max(1.0) + 1.0;
    let n = ((v_max - v_min) / h).ceil() as usize;
    let lg = ln_gamma(a)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..=n {
        let v = v_min + j as f64 * h;
        let t = v.exp();
        let ln1p = t.ln_1p();
        let e = -x * t + a * v + p * ln1p - lg;
        acc += e.exp();
    }
    let val = acc * h;
    if !val.is_finite() {
        return Err(LctError::NonConvergence { what: "Tricomi U integral", terms: n });
    }
    Ok(val)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn m_closed_form() {
        // M_{0,1/2}(z) = 2 sinh(z/2)
        let z = c(1.3, 0.4);
        let m = whittaker_m(c(0.0, 0.0), c(0.5, 0.0), z).unwrap();
        assert!((m - 2.0 * (z * 0.5).sinh()).norm() < 1e-14);
    }

    #[test]
    fn two_forms_agree() {
        for &(kap, s, z) in &[(0.0, 0.5, 1.0), (1.0, 0.3, 0.7), (-2.0, 0.8, 1.9), (0.5, 1.2, 0.2)] {
            let mu = c(0.0, s);
            let a = whittaker_w(c(kap, 0.0), mu, z).unwrap();
            let b = whittaker_w_mcombination(c(kap, 0.0), mu, z).unwrap();
            assert!((a - b).norm() < 1e-12 * b.norm(), "{kap} {s} {z}: {a} {b}");
        }
    }

    #[test]
    fn degenerate_mu_refused() {
        assert!(whittaker_w_mcombination(c(0.0, 0.0), c(0.5, 0.0), 1.0).is_err());
    }
}

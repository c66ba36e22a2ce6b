use super::dd::Cdd;
use super::gamma::{is_nonpositive_integer, ln_gamma};
use crate::error::{LctError, Result};
use crate::quad::Compensated;
use num_complex::Complex64;
use std::f64::consts::PI;

const MAX_TERMS: usize = 1000;
const SERIES_RADIUS: f64 = 30.0;
const SERIES_LIMIT: f64 = 60.0;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Kummer's confluent hypergeometric function ₁F₁(a; b; z).
///
/// * terminating polynomial when `a` is a non-positive integer;
/// * `Re z < 0` is mapped through Kummer's transformation
///   ₁F₁(a;b;z) = e^z ₁F₁(b−a;b;−z);
/// * the power series is summed in double-double arithmetic for |z| ≤ 30,
///   so the e^{|z|}-sized cancellation along the imaginary axis costs nothing
///   visible in double precision;
/// * beyond that the two-sided asymptotic expansion is used when its
///   smallest term is below 1e-15 of the result, falling back to the
///   double-double series up to |z| = 60.
///
/// ```
/// use lct::specfun::hyp1f1;
/// use num_complex::Complex64 as C;
/// let v = hyp1f1(C::new(1.0, 0.0), C::new(1.0, 0.0), C::new(1.0, 1.0)).unwrap();
/// assert!((v - C::new(1.0, 1.0).exp()).norm() < 1e-14);
/// ```
pub fn hyp1f1(a: Complex64, b: Complex64, z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(b) {
        return Err(LctError::ParameterPole("1F1 lower parameter is a non-positive integer"));
    }
    if z == c(0.0) {
        return Ok(c(1.0));
    }
    if is_nonpositive_integer(a) {
        return series_1f1(a, b, z, (-a.re).round() as usize + 1);
    }
    if z.re < 0.0 {
        return Ok(z.exp() * hyp1f1(b - a, b, -z)?);
    }
    let r = z.norm();
    if r <= SERIES_RADIUS {
        return series_1f1(a, b, z, MAX_TERMS);
    }
    if let Some(v) = asymptotic_1f1(a, b, z) {
        return Ok(v);
    }
    if r <= SERIES_LIMIT {
        return series_1f1(a, b, z, MAX_TERMS);
    }
    Err(LctError::NonConvergence { what: "1F1 asymptotic expansion", terms: MAX_TERMS })
}

fn series_1f1(a: Complex64, b: Complex64, z: Complex64, cap: usize) -> Result<Complex64> {
    let a = Cdd::from_c64(a);
    let b = Cdd::from_c64(b);
    let z = Cdd::from_c64(z);
    let mut term = Cdd::ONE;
    let mut sum = Cdd::ONE;
    let mut n = Cdd::ZERO;
    let one = Cdd::ONE;
    let mut small = 0;
    for j in 0..cap {
        let num = (a + n) * z;
        let den = (b + n) * (n + one);
        term = term * num / den;
        sum = sum + term;
        n = n + one;
        if term.norm_inf() == 0.0 {
            return Ok(sum.to_c64());
        }
        if term.norm_inf() <= 1e-17 * sum.norm_inf() && (j as f64) > z.re.hi.hypot(z.im.hi) {
            small += 1;
            if small >= 2 {
                return Ok(sum.to_c64());
            }
        } else {
            small = 0;
        }
    }
    if cap < MAX_TERMS {
        // terminating polynomial, all terms taken
        return Ok(sum.to_c64());
    }
    Err(LctError::NonConvergence { what: "1F1 series", terms: cap })
}

/// Asymptotic expansion for large |z|, `Re z ≥ 0`. Returns `None` when the
/// optimally truncated expansion cannot deliver ~1e-15 relative accuracy.
fn asymptotic_1f1(a: Complex64, b: Complex64, z: Complex64) -> Option<Complex64> {
    let lnz = z.ln();
    let lgb = ln_gamma(b).ok()?;
    let i = Complex64::i();
    let sign = if z.im >= 0.0 { 1.0 } else { -1.0 };
    // algebraic part: e^{±iπa} z^{-a} / Γ(b-a) Σ (a)_s (a-b+1)_s / s! (-z)^{-s}
    let (s1, e1) = if is_nonpositive_integer(b - a) {
        (c(0.0), 0.0)
    } else {
        let pref = (lgb - ln_gamma(b - a).ok()? + sign * i * PI * a - a * lnz).exp();
        let (s, e) = asymptotic_sum(a, a - b + 1.0, -z)?;
        (pref * s, pref.norm() * e)
    };
    // exponential part: e^z z^{a-b} / Γ(a) Σ (b-a)_s (1-a)_s / s! z^{-s}
    let pref = (lgb - ln_gamma(a).ok()? + z + (a - b) * lnz).exp();
    let (s, e) = asymptotic_sum(b - a, 1.0 - a, z)?;
    let total = s1 + pref * s;
    let err = e1 + pref.norm() * e;
    if err <= 1e-15 * total.norm() && total.is_finite() {
        Some(total)
    } else {
        None
    }
}

/// Σ (p)_s (q)_s / s! w^{-s}, stopped at the smallest term. Returns the sum
/// and the magnitude of the first omitted term.
fn asymptotic_sum(p: Complex64, q: Complex64, w: Complex64) -> Option<(Complex64, f64)> {
    let winv = w.inv();
    let mut term = c(1.0);
    let mut sum = c(1.0);
    let mut last = 1.0f64;
    for s in 0..200 {
        let sf = s as f64;
        let next = term * (p + sf) * (q + sf) / (sf + 1.0) * winv;
        let mag = next.norm();
        if mag == 0.0 {
            return Some((sum, 0.0));
        }
        if mag > last {
            return Some((sum, last));
        }
        sum += next;
        term = next;
        last = mag;
        if mag < 1e-18 * sum.norm() {
            return Some((sum, mag));
        }
    }
    Some((sum, last))
}

/// Gauss hypergeometric function ₂F₁(a, b; c; z).
///
/// Supported: |z| ≤ 0.75 by direct series; `Re z < ½` through Pfaff's
/// transformation z → z/(z−1); other |z| < 1 points by direct series (slow
/// near the unit circle); terminating series everywhere. Points on the cut
/// z ∈ [1, ∞) are rejected with [`LctError::OnBranchCut`].
///
/// ```
/// use lct::specfun::hyp2f1;
/// use num_complex::Complex64 as C;
/// let one = C::new(1.0, 0.0);
/// let v = hyp2f1(one, one, C::new(2.0, 0.0), C::new(0.5, 0.0)).unwrap();
/// assert!((v.re - 2.0 * 2f64.ln()).abs() < 1e-15);
/// ```
pub fn hyp2f1(a: Complex64, b: Complex64, cc: Complex64, z: Complex64) -> Result<Complex64> {
    let term_a = is_nonpositive_integer(a);
    let term_b = is_nonpositive_integer(b);
    if term_a || term_b {
        let na = if term_a { (-a.re).round() as usize } else { usize::MAX };
        let nb = if term_b { (-b.re).round() as usize } else { usize::MAX };
        let n = na.min(nb);
        if is_nonpositive_integer(cc) && ((-cc.re).round() as usize) < n {
            return Err(LctError::ParameterPole("2F1 lower parameter hits a pole before termination"));
        }
        return series_2f1(a, b, cc, z, n + 1, true);
    }
    if is_nonpositive_integer(cc) {
        return Err(LctError::ParameterPole("2F1 lower parameter is a non-positive integer"));
    }
    if z == c(0.0) {
        return Ok(c(1.0));
    }
    if z.im == 0.0 && z.re >= 1.0 - 1e-14 {
        return Err(LctError::OnBranchCut { z: z.re });
    }
    if z.norm() <= 0.75 {
        return series_2f1(a, b, cc, z, 6000, false);
    }
    if z.re < 0.5 {
        // Pfaff: (1-z)^{-a} 2F1(a, c-b; c; z/(z-1))
        let w = z / (z - 1.0);
        if w.norm() < z.norm() || z.norm() >= 1.0 {
            let pre = (-a * (1.0 - z).ln()).exp();
            return Ok(pre * series_2f1(a, cc - b, cc, w, 6000, false)?);
        }
    }
    if z.norm() < 1.0 {
        return series_2f1(a, b, cc, z, 6000, false);
    }
    Err(LctError::NonConvergence { what: "2F1 outside the supported region", terms: 0 })
}

fn series_2f1(a: Complex64, b: Complex64, cc: Complex64, z: Complex64, cap: usize, terminating: bool) -> Result<Complex64> {
    let mut acc = Compensated::new();
    let mut term = c(1.0);
    acc.add(term);
    let mut small = 0;
    for j in 0..cap.saturating_sub(1) {
        let jf = j as f64;
        term *= (a + jf) * (b + jf) / ((cc + jf) * (jf + 1.0)) * z;
        acc.add(term);
        if terminating {
            continue;
        }
        if term.norm() <= 1e-17 * acc.value().norm() {
            small += 1;
            if small >= 3 {
                return Ok(acc.value());
            }
        } else {
            small = 0;
        }
    }
    if terminating {
        return Ok(acc.value());
    }
    Err(LctError::NonConvergence { what: "2F1 series", terms: cap })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminating_examples() {
        let v = hyp1f1(c(-1.0), c(2.0), c(3.0)).unwrap();
        assert!((v - c(-0.5)).norm() < 1e-15);
        // 1 + (-2)(3)/1 z + (-2)(-1)(3)(4)/(1·2·1·2) z^2 at z = 2
        let v = hyp2f1(c(-2.0), c(3.0), c(1.0), c(2.0)).unwrap();
        assert!((v - c(1.0 - 12.0 + 24.0)).norm() < 1e-13);
    }

    #[test]
    fn branch_cut_rejected() {
        assert!(matches!(hyp2f1(c(0.5), c(0.5), c(1.5), c(1.5)), Err(LctError::OnBranchCut { .. })));
    }

    #[test]
    fn pfaff_region() {
        // 2F1(1,1;2;z) = -ln(1-z)/z at z = -3
        let z = -3.0;
        let v = hyp2f1(c(1.0), c(1.0), c(2.0), c(z)).unwrap();
        assert!((v.re - (-(1.0f64 - z).ln() / z)).abs() < 1e-14);
    }
}

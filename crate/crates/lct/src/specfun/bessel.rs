use super::dd::Cdd;
use super::gamma::{is_nonpositive_integer, rgamma};
use crate::error::{LctError, Result};
use crate::quad::gauss_legendre;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Below this |z| the ascending series (double-double) is used.
const SERIES_RADIUS: f64 = 25.0;
/// Ascending series are still trusted up to here when the asymptotic
/// expansion cannot reach full accuracy.
const SERIES_LIMIT: f64 = 50.0;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Which Hankel function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HankelKind {
    First,
    Second,
}

/// Side of the negative real axis approached when the argument is negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Above,
    Below,
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// J_ν(z) from the ascending series in double-double arithmetic, principal
/// branch of (z/2)^ν.
fn series_j(nu: Complex64, z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(nu + 1.0) {
        return Err(LctError::ParameterPole("negative integer Bessel order in the series"));
    }
    let q = Cdd::from_c64(-z * z * 0.25);
    let nu_dd = Cdd::from_c64(nu);
    let one = Cdd::ONE;
    let mut k = Cdd::ZERO;
    let mut term = Cdd::ONE;
    let mut sum = Cdd::ONE;
    let mut biggest = 1.0f64;
    let zn = z.norm();
    for j in 0..2000 {
        k = k + one;
        term = term * q / (k * (nu_dd + k));
        sum = sum + term;
        let t = term.norm_inf();
        biggest = biggest.max(t);
        if t <= 1e-17 * sum.norm_inf() && (j as f64) > zn {
            // loss of precision is biggest/|sum| times ~1e-32
            if biggest * 1e-30 > sum.norm_inf() {
                return Err(LctError::NonConvergence { what: "Bessel series (cancellation)", terms: j });
            }
            return Ok(sum.to_c64() * rgamma(nu + 1.0) * (nu * (z * 0.5).ln()).exp());
        }
    }
    Err(LctError::NonConvergence { what: "Bessel series", terms: 2000 })
}

/// Y₀(z) from its ascending series (double-double).
fn series_y0(z: Complex64) -> Result<Complex64> {
    let q = Cdd::from_c64(-z * z * 0.25);
    let one = Cdd::ONE;
    let mut k = Cdd::ZERO;
    let mut term = Cdd::ONE; // (−z²/4)^k / (k!)²
    let mut harmonic = Cdd::ZERO;
    let mut sum = Cdd::ZERO;
    let zn = z.norm();
    for j in 0..2000 {
        k = k + one;
        term = term * q / (k * k);
        harmonic = harmonic + one / k;
        let t = term * harmonic;
        sum = sum - t;
        if t.norm_inf() <= 1e-17 * sum.norm_inf().max(1e-300) && (j as f64) > zn {
            let j0 = series_j(c(0.0), z)?;
            let log_part = ((z * 0.5).ln() + EULER_GAMMA) * j0;
            return Ok((log_part + sum.to_c64()) * (2.0 / PI));
        }
    }
    Err(LctError::NonConvergence { what: "Y0 series", terms: 2000 })
}

/// Hankel asymptotic expansion, scaled: returns A with H^{(1)} = A e^{iz}
/// (or H^{(2)} = A e^{-iz}). `None` if the smallest term is not below 1e-16.
fn hankel_asymptotic(kind: HankelKind, nu: Complex64, z: Complex64) -> Option<Complex64> {
    let mu = nu * nu * 4.0;
    let rot = match kind {
        HankelKind::First => Complex64::i(),
        HankelKind::Second => -Complex64::i(),
    };
    let mut term = c(1.0);
    let mut sum = c(1.0);
    let mut last = f64::INFINITY;
    let mut converged = false;
    for k in 1..200 {
        let kf = k as f64;
        let next = term * (mu - (2.0 * kf - 1.0).powi(2)) / (z * (8.0 * kf)) * rot;
        let mag = next.norm();
        if mag > last {
            break;
        }
        sum += next;
        term = next;
        last = mag;
        if mag < 1e-17 * sum.norm() {
            converged = true;
            break;
        }
    }
    if !converged && last > 1e-16 * sum.norm() {
        return None;
    }
    let phase = (-rot * (nu * (PI / 2.0) + PI / 4.0)).exp();
    Some((2.0 / (PI * z)).sqrt() * phase * sum)
}

/// J_ν(x) for real x ≥ 0 and complex order with `Re ν > −1` or ν purely
/// imaginary.
///
/// ```
/// use lct::specfun::bessel_j;
/// use num_complex::Complex64 as C;
/// let j0 = bessel_j(C::new(0.0, 0.0), 1.0).unwrap();
/// assert!((j0.re - 0.765_197_686_557_966_6).abs() < 1e-15);
/// ```
pub fn bessel_j(nu: Complex64, x: f64) -> Result<Complex64> {
    if x < 0.0 || !x.is_finite() {
        return Err(LctError::InvalidIndex(format!("Bessel argument must be >= 0, got {x}")));
    }
    if x == 0.0 {
        return if nu == c(0.0) {
            Ok(c(1.0))
        } else if nu.re > 0.0 {
            Ok(c(0.0))
        } else {
            Err(LctError::ParameterPole("J_nu(0) is unbounded for Re nu <= 0"))
        };
    }
    let (a, b) = bessel_j_split(nu, c(x))?;
    let e = Complex64::new(x.cos(), x.sin());
    Ok(a * e + b * e.conj())
}

/// J_ν(z) split as `A e^{iz} + B e^{-iz}` so callers can fold the
/// exponentials into other factors without overflow. `Re z > 0`.
pub(crate) fn bessel_j_split(nu: Complex64, z: Complex64) -> Result<(Complex64, Complex64)> {
    let r = z.norm();
    let e = (-Complex64::i() * z).exp();
    if r <= SERIES_RADIUS {
        return Ok((series_j(nu, z)? * e, c(0.0)));
    }
    if let (Some(h1), Some(h2)) = (
        hankel_asymptotic(HankelKind::First, nu, z),
        hankel_asymptotic(HankelKind::Second, nu, z),
    ) {
        return Ok((h1 * 0.5, h2 * 0.5));
    }
    if r <= SERIES_LIMIT && z.im.abs() < 1.0 {
        return Ok((series_j(nu, z)? * e, c(0.0)));
    }
    Err(LctError::NonConvergence { what: "Bessel J (no accurate branch)", terms: 0 })
}

/// Scaled Hankel function: H^{(1)}_ν(z) = A e^{iz}, H^{(2)}_ν(z) = A e^{-iz},
/// `Re z > 0`. ν = 0 uses J₀ ± iY₀; other orders must be non-integer.
pub(crate) fn hankel_split(kind: HankelKind, nu: Complex64, z: Complex64) -> Result<Complex64> {
    let r = z.norm();
    let sgn = if kind == HankelKind::First { 1.0 } else { -1.0 };
    let unscale = (-sgn * Complex64::i() * z).exp();
    if r > SERIES_RADIUS {
        if let Some(a) = hankel_asymptotic(kind, nu, z) {
            return Ok(a);
        }
        if r > SERIES_LIMIT {
            return Err(LctError::NonConvergence { what: "Hankel (no accurate branch)", terms: 0 });
        }
    }
    if nu == c(0.0) {
        let j0 = series_j(c(0.0), z)?;
        let y0 = series_y0(z)?;
        return Ok((j0 + sgn * Complex64::i() * y0) * unscale);
    }
    let jp = series_j(nu, z)?;
    let jm = series_j(-nu, z)?;
    let i = Complex64::i();
    let sin = (nu * PI).sin();
    let h = match kind {
        HankelKind::First => (jm - (-i * PI * nu).exp() * jp) / (i * sin),
        HankelKind::Second => (jm - (i * PI * nu).exp() * jp) / (-i * sin),
    };
    Ok(h * unscale)
}

/// H^{(1,2)}_{2is}(x) for real `x ≠ 0`.
///
/// For `x > 0` the value is the ordinary Hankel function (the side flag is
/// irrelevant). For `x < 0` the argument is |x|e^{+iπ} (`Above`) or
/// |x|e^{−iπ} (`Below`), reached by analytic continuation.
/// `0 < |s| < 1e-6` is refused with [`LctError::SmallS`]; `s = 0` exactly
/// gives J₀ ± iY₀.
pub fn hankel_imaginary_order(kind: HankelKind, s: f64, x: f64, side: Side) -> Result<Complex64> {
    if s != 0.0 && s.abs() < 1e-6 {
        return Err(LctError::SmallS { s });
    }
    if x == 0.0 || !x.is_finite() {
        return Err(LctError::InvalidIndex(format!("Hankel argument must be finite and non-zero, got {x}")));
    }
    let nu = Complex64::new(0.0, 2.0 * s);
    let ax = x.abs();
    let eix = Complex64::new(ax.cos(), ax.sin());
    let h1 = |z: f64| -> Result<Complex64> { Ok(hankel_split(HankelKind::First, nu, c(z))? * eix) };
    let h2 = |z: f64| -> Result<Complex64> { Ok(hankel_split(HankelKind::Second, nu, c(z))? * eix.conj()) };
    if x > 0.0 {
        return match kind {
            HankelKind::First => h1(ax),
            HankelKind::Second => h2(ax),
        };
    }
    let i = Complex64::i();
    let e_m = (-i * PI * nu).exp();
    let e_p = (i * PI * nu).exp();
    let cos2 = (nu * PI).cos() * 2.0;
    match (kind, side) {
        (HankelKind::First, Side::Above) => Ok(-e_m * h2(ax)?),
        (HankelKind::Second, Side::Below) => Ok(-e_p * h1(ax)?),
        (HankelKind::First, Side::Below) => Ok(cos2 * h1(ax)? + e_m * h2(ax)?),
        (HankelKind::Second, Side::Above) => Ok(cos2 * h2(ax)? + e_p * h1(ax)?),
    }
}

/// `(H¹_{2is}(x), H²_{2is}(x))` for `x > 0` with one series evaluation:
/// at real x, `J_{−2is}(x) = conj(J_{2is}(x))`, so both Hankel functions
/// follow from a single J. Same accuracy rules as
/// [`hankel_imaginary_order`].
pub(crate) fn hankel_pair_imaginary(s: f64, x: f64) -> Result<(Complex64, Complex64)> {
    if s != 0.0 && s.abs() < 1e-6 {
        return Err(LctError::SmallS { s });
    }
    let nu = Complex64::new(0.0, 2.0 * s);
    let z = c(x);
    let eix = Complex64::new(x.cos(), x.sin());
    if x > SERIES_RADIUS {
        if let (Some(a1), Some(a2)) = (hankel_asymptotic(HankelKind::First, nu, z), hankel_asymptotic(HankelKind::Second, nu, z)) {
            return Ok((a1 * eix, a2 * eix.conj()));
        }
        if x > SERIES_LIMIT {
            return Err(LctError::NonConvergence { what: "Hankel (no accurate branch)", terms: 0 });
        }
    }
    if s == 0.0 {
        let j0 = series_j(c(0.0), z)?;
        let y0 = series_y0(z)?;
        let i = Complex64::i();
        return Ok((j0 + i * y0, j0 - i * y0));
    }
    let j = series_j(nu, z)?;
    let jm = j.conj();
    let sh = (2.0 * PI * s).sinh();
    let h1 = -(jm - (2.0 * PI * s).exp() * j) / sh;
    let h2 = (jm - (-2.0 * PI * s).exp() * j) / sh;
    Ok((h1, h2))
}

fn macdonald_span(x: f64) -> f64 {
    // e^{-x(cosh T - 1)} < e^{-42}
    (1.0 + 42.0 / x).acosh()
}

/// K_{2is}(w) e^{w} for `Re w > 0` by the trapezoid rule on
/// ∫₀^∞ e^{−w(cosh t − 1)} cos(2st) dt (exponentially convergent: the
/// integrand is even and analytic in a strip).
pub(crate) fn macdonald_scaled(s: f64, w: Complex64) -> Complex64 {
    let t_max = macdonald_span(w.re);
    // the peak at t = 0 has width ~ 1/sqrt(Re w)
    let h = 0.1f64.min(0.5 / w.re.sqrt()) / (1.0 + s.abs() / 5.0);
    let n = (t_max / h).ceil() as usize + 1;
    let mut acc = 0.5 * c(1.0);
    for j in 1..=n {
        let t = j as f64 * h;
        let v = (-w * (t.cosh() - 1.0)).exp() * (2.0 * s * t).cos();
        acc += v;
        if v.norm() < 1e-19 {
            break;
        }
    }
    acc * h
}

/// Macdonald function of imaginary order, K_{2is}(x), x > 0, by the
/// trapezoid rule on its integral representation.
///
/// Returns [`LctError::Underflow`] for x > 700, where the value is below the
/// smallest normal double times a modest factor; kernels map that to zero.
pub fn macdonald_imaginary_order(s: f64, x: f64) -> Result<f64> {
    if x <= 0.0 || !x.is_finite() {
        return Err(LctError::InvalidIndex(format!("Macdonald argument must be > 0, got {x}")));
    }
    if x > 700.0 {
        return Err(LctError::Underflow { x });
    }
    Ok((macdonald_scaled(s, c(x)) * (-x).exp()).re)
}

/// Same integral by composite Gauss-Legendre panels; an independent second
/// rule for cross-checking [`macdonald_imaginary_order`].
pub fn macdonald_imaginary_order_gauss(s: f64, x: f64) -> Result<f64> {
    if x <= 0.0 || !x.is_finite() {
        return Err(LctError::InvalidIndex(format!("Macdonald argument must be > 0, got {x}")));
    }
    if x > 700.0 {
        return Err(LctError::Underflow { x });
    }
    let t_max = macdonald_span(x);
    let panels = (t_max * (2.0 + 2.0 * s.abs() + x.sqrt())).ceil() as usize;
    let (u, wu) = gauss_legendre(24);
    let hp = t_max / panels as f64;
    let mut acc = 0.0;
    for p in 0..panels {
        let lo = p as f64 * hp;
        for (ui, wi) in u.iter().zip(&wu) {
            let t = lo + 0.5 * hp * (ui + 1.0);
            acc += 0.5 * hp * wi * (-x * (t.cosh() - 1.0)).exp() * (2.0 * s * t).cos();
        }
    }
    Ok(acc * (-x).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hankel_pair_matches_single() {
        for &(s, x) in &[(0.7, 0.3), (0.35, 4.0), (0.0, 2.5), (1.2, 30.0), (0.05, 12.0)] {
            let (a, b) = hankel_pair_imaginary(s, x).unwrap();
            let h1 = hankel_imaginary_order(HankelKind::First, s, x, Side::Above).unwrap();
            let h2 = hankel_imaginary_order(HankelKind::Second, s, x, Side::Above).unwrap();
            assert!((a - h1).norm() < 1e-12 * h1.norm(), "{s} {x}");
            assert!((b - h2).norm() < 1e-12 * h2.norm(), "{s} {x}");
        }
    }

    #[test]
    fn half_order_closed_form() {
        for x in [0.3, PI, 7.0, 30.0, 80.0] {
            let j = bessel_j(c(0.5), x).unwrap();
            let exact = (2.0 / (PI * x)).sqrt() * x.sin();
            assert!((j.re - exact).abs() < 5e-15 * exact.abs().max(0.1), "x={x} {j} {exact}");
            let jm = bessel_j(c(-0.5), x).unwrap();
            let exact = (2.0 / (PI * x)).sqrt() * x.cos();
            assert!((jm.re - exact).abs() < 5e-15 * exact.abs().max(0.1), "x={x}");
        }
    }

    #[test]
    fn hankel_sum_is_twice_j() {
        for x in [0.4, 3.0, 18.0, 40.0] {
            let h1 = hankel_imaginary_order(HankelKind::First, 0.5, x, Side::Above).unwrap();
            let h2 = hankel_imaginary_order(HankelKind::Second, 0.5, x, Side::Above).unwrap();
            let j = bessel_j(Complex64::new(0.0, 1.0), x).unwrap();
            assert!((h1 + h2 - 2.0 * j).norm() < 1e-12 * j.norm().max(1.0), "x={x}");
        }
    }

    #[test]
    fn small_s_refused() {
        assert!(matches!(
            hankel_imaginary_order(HankelKind::First, 1e-8, 1.0, Side::Above),
            Err(LctError::SmallS { .. })
        ));
    }

    #[test]
    fn k0_of_one() {
        let k = macdonald_imaginary_order(0.0, 1.0).unwrap();
        assert!((k - 0.421_024_438_240_708_3).abs() < 1e-15);
    }
}

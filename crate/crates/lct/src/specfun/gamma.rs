use crate::error::{LctError, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

// B_{2j} / (2j (2j-1)) for j = 1..8
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// True when `z` is (numerically) a pole of Γ.
pub fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && (z.re - z.re.round()).abs() < 1e-14
}

/// Principal-branch log Γ(z).
///
/// For `Re z ≥ ½` the imaginary part is the continuous branch (the one that
/// vanishes on the positive axis). For `Re z < ½` the reflection formula is
/// used and the imaginary part may differ from that branch by a multiple of
/// 2π, which never matters once exponentiated.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(LctError::PoleAtNonPositiveInteger { re: z.re, im: z.im });
    }
    if z.re < 0.5 {
        let one = Complex64::new(1.0, 0.0);
        return Ok(Complex64::new(PI.ln(), 0.0) - ln_sin_pi(z) - ln_gamma_right(one - z));
    }
    Ok(ln_gamma_right(z))
}

fn ln_gamma_right(z: Complex64) -> Complex64 {
    // shift to |z| >= 10 then Stirling with eight correction terms
    let mut shift = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.norm() < 10.0 {
        shift += w.ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv;
    for c in STIRLING {
        series += p * c;
        p *= inv2;
    }
    (w - 0.5) * w.ln() - w + LN_SQRT_2PI + series - shift
}

/// ln sin(πz) without overflow for large |Im z|.
fn ln_sin_pi(z: Complex64) -> Complex64 {
    let i = Complex64::i();
    if z.im.abs() < 20.0 {
        return (z * PI).sin().ln();
    }
    // sin(πz) = (e^{iπz} - e^{-iπz}) / 2i; keep the dominant exponential
    if z.im > 0.0 {
        let e = (2.0 * PI * i * z).exp();
        -i * PI * z + (1.0 - e).ln() - Complex64::new(2.0f64.ln(), 0.0) + i * (PI / 2.0)
    } else {
        let e = (-2.0 * PI * i * z).exp();
        i * PI * z + (1.0 - e).ln() - Complex64::new(2.0f64.ln(), 0.0) - i * (PI / 2.0)
    }
}

/// Γ(z).
pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(ln_gamma(z)?.exp())
}

/// 1/Γ(z), entire: zero at the poles of Γ.
pub fn rgamma(z: Complex64) -> Complex64 {
    match ln_gamma(z) {
        Ok(l) => (-l).exp(),
        Err(_) => Complex64::new(0.0, 0.0),
    }
}

/// ln Γ(x) for real x > 0.
pub fn ln_gamma_real(x: f64) -> f64 {
    ln_gamma_right(Complex64::new(x, 0.0)).re
}

use super::{c, KernelValue};
use crate::error::{LctError, Result};
use crate::symplectic::GroupElement;
use crate::EPS_B;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Line kernel `C_M(x, x′) = (2π|b|)^{−½} e^{−iπ sign(b)/4} exp(i(dx² − 2xx′ + ax′²)/2b)`.
///
/// It satisfies `C_{M⁻¹}(x, x′) = C_M(x′, x)*`. Requires `|b| ≥ EPS_B`.
pub fn classic_kernel(m: &GroupElement, x: f64, xp: f64) -> Result<KernelValue> {
    if m.has_degenerate_b() {
        return Err(LctError::DegenerateB { b: m.b });
    }
    let b = m.b;
    let sb = super::sign(b);
    let phase = -PI * sb / 4.0 + (m.d * x * x - 2.0 * x * xp + m.a * xp * xp) / (2.0 * b);
    Ok(KernelValue::Regular(Complex64::from_polar((2.0 * PI * b.abs()).powf(-0.5), phase)))
}

/// The `b = 0` limit: `e^{icx²/2a}/√a · δ(x′ − x/a)`, principal `√a`.
///
/// ```
/// use lct::kernels::{classic_kernel_b0, KernelValue};
/// use lct::symplectic::GroupElement;
/// let m = GroupElement::new(2.0, 0.0, 1.0, 0.5).unwrap();
/// match classic_kernel_b0(&m, 1.0).unwrap() {
///     KernelValue::DeltaLine { amplitude, support } => {
///         assert_eq!(support, 0.5);
///         assert!((amplitude.arg() - 0.25).abs() < 1e-15);
///         assert!((amplitude.norm() - 0.5f64.sqrt()).abs() < 1e-15);
///     }
///     _ => unreachable!(),
/// }
/// ```
pub fn classic_kernel_b0(m: &GroupElement, x: f64) -> Result<KernelValue> {
    if !m.has_degenerate_b() {
        return Err(LctError::UnsupportedCombination(format!("b = {} is not degenerate; use classic_kernel", m.b)));
    }
    let a = m.a;
    if a.abs() < EPS_B {
        return Err(LctError::DegenerateA { a });
    }
    let chirp = Complex64::from_polar(1.0, m.c * x * x / (2.0 * a));
    Ok(KernelValue::DeltaLine { amplitude: chirp / c(a).sqrt(), support: x / a })
}

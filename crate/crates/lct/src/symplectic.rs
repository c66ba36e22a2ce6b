//! `SL(2,R)` elements, their one-parameter subgroups and factorizations,
//! and the two-to-one map onto `SO(2,1)`.

use crate::error::{LctError, Result};
use crate::EPS_B;
use serde::{Deserialize, Serialize};

/// Tolerance on `ad − bc = 1` at construction.
pub const UNIMODULAR_TOL: f64 = 1e-12;

/// A real unimodular matrix `((a, b), (c, d))`, the parameter of every
/// canonical transform.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupElement {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl GroupElement {
    /// Checked constructor: `|ad − bc − 1| ≤ 1e-12`.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let m = GroupElement { a, b, c, d };
        let det = m.det();
        if !(det - 1.0).abs().le(&UNIMODULAR_TOL) {
            return Err(LctError::NotUnimodular { det });
        }
        Ok(m)
    }

    /// Completes `(a, b, c)` with `d = (1 + bc)/a`; `a` must be non-zero.
    pub fn from_abc(a: f64, b: f64, c: f64) -> Result<Self> {
        if a == 0.0 {
            return Err(LctError::DegenerateA { a });
        }
        Ok(GroupElement { a, b, c, d: (1.0 + b * c) / a })
    }

    pub const fn identity() -> Self {
        GroupElement { a: 1.0, b: 0.0, c: 0.0, d: 1.0 }
    }

    /// `F = ((0, 1), (−1, 0))`, whose transform is the Fourier transform up to
    /// the phase `e^{−iπ/4}`.
    pub const fn fourier() -> Self {
        GroupElement { a: 0.0, b: 1.0, c: -1.0, d: 0.0 }
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn inverse(&self) -> Self {
        GroupElement { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    pub fn neg(&self) -> Self {
        GroupElement { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }

    /// Sum of squared entries, `a² + b² + c² + d²` (≥ 2, with equality
    /// exactly on the rotation subgroup).
    pub fn frobenius_sq(&self) -> f64 {
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.a - other.a)
            .abs()
            .max((self.b - other.b).abs())
            .max((self.c - other.c).abs())
            .max((self.d - other.d).abs())
    }

    pub fn has_degenerate_b(&self) -> bool {
        self.b.abs() < EPS_B
    }
}

impl std::fmt::Display for GroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(({}, {}), ({}, {}))", self.a, self.b, self.c, self.d)
    }
}

/// Matrix product `m1 · m2`.
pub fn compose(m1: &GroupElement, m2: &GroupElement) -> GroupElement {
    GroupElement {
        a: m1.a * m2.a + m1.b * m2.c,
        b: m1.a * m2.b + m1.b * m2.d,
        c: m1.c * m2.a + m1.d * m2.c,
        d: m1.c * m2.b + m1.d * m2.d,
    }
}

/// The five one-parameter subgroups, named by their generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SubgroupTag {
    /// `exp(φ J₀)`: fractional Fourier transforms (rotations by φ/2).
    Elliptic,
    /// `exp(ζ J₁)`: repulsive oscillator.
    HyperbolicRepulsive,
    /// `exp(α J₂)`: scaling.
    HyperbolicScaling,
    /// `exp(b J₊)`: free propagation.
    ParabolicFree,
    /// `exp(c J₋)`: multiplication by a Gaussian chirp.
    ParabolicPosition,
}

/// The 2×2 matrix of the subgroup element with parameter `t`.
///
/// ```
/// use lct::symplectic::{subgroup_element, SubgroupTag};
/// let m = subgroup_element(SubgroupTag::HyperbolicScaling, 2.0 * 2f64.ln());
/// assert!((m.a - 0.5).abs() < 1e-15 && (m.d - 2.0).abs() < 1e-15);
/// ```
pub fn subgroup_element(tag: SubgroupTag, t: f64) -> GroupElement {
    let h = 0.5 * t;
    match tag {
        SubgroupTag::Elliptic => GroupElement { a: h.cos(), b: -h.sin(), c: h.sin(), d: h.cos() },
        SubgroupTag::HyperbolicRepulsive => GroupElement { a: h.cosh(), b: -h.sinh(), c: -h.sinh(), d: h.cosh() },
        SubgroupTag::HyperbolicScaling => GroupElement { a: (-h).exp(), b: 0.0, c: 0.0, d: h.exp() },
        SubgroupTag::ParabolicFree => GroupElement { a: 1.0, b: -t, c: 0.0, d: 1.0 },
        SubgroupTag::ParabolicPosition => GroupElement { a: 1.0, b: 0.0, c: t, d: 1.0 },
    }
}

/// A 3×3 real matrix in `SO(2,1)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LorentzMatrix(pub [[f64; 3]; 3]);

/// The invariant quadratic form of [`to_lorentz`]: `η = diag(1, 1, −1)`.
///
/// Fixed by requiring `Lᵀ η L = η` for the image of the elliptic subgroup
/// (which rotates the first two coordinates and fixes the third) and of the
/// repulsive subgroup (a boost mixing the second and third coordinates);
/// the third coordinate is the timelike one.
pub const METRIC: [f64; 3] = [1.0, 1.0, -1.0];

impl LorentzMatrix {
    pub fn identity() -> Self {
        LorentzMatrix([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..3).map(|k| self.0[i][k] * other.0[k][j]).sum();
            }
        }
        LorentzMatrix(out)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut m = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                m = m.max((self.0[i][j] - other.0[i][j]).abs());
            }
        }
        m
    }

    /// Largest entry of `|Lᵀ η L − η|`.
    pub fn metric_residual(&self) -> f64 {
        let mut m = 0.0f64;
        for i in 0..3 {
            for j in 0..3 {
                let v: f64 = (0..3).map(|k| self.0[k][i] * METRIC[k] * self.0[k][j]).sum();
                let target = if i == j { METRIC[i] } else { 0.0 };
                m = m.max((v - target).abs());
            }
        }
        m
    }
}

/// Image of `m` in `SO(2,1)`; quadratic in the entries, so `L(M) = L(−M)`.
///
/// The quadratic combinations are the classic ones, arranged so that
/// `L(M₁M₂) = L(M₁)L(M₂)`: laid out the other way round (rows and columns
/// exchanged) the same table reverses products.
pub fn to_lorentz(m: &GroupElement) -> LorentzMatrix {
    let GroupElement { a, b, c, d } = *m;
    LorentzMatrix([
        [0.5 * (a * a - b * b - c * c + d * d), c * d - a * b, 0.5 * (a * a + b * b - c * c - d * d)],
        [b * d - a * c, a * d + b * c, -b * d - a * c],
        [0.5 * (a * a - b * b + c * c - d * d), -c * d - a * b, 0.5 * (a * a + b * b + c * c + d * d)],
    ])
}

/// `M = ((a′, 0), (c′, 1/a′)) · exp(α J₀)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EllipticFactorization {
    pub a_prime: f64,
    pub c_prime: f64,
    /// Rotation parameter, `α = −2 atan2(b, a) ∈ [−2π, 2π)`.
    pub alpha: f64,
}

impl EllipticFactorization {
    pub fn reassemble(&self) -> GroupElement {
        let lower = GroupElement { a: self.a_prime, b: 0.0, c: self.c_prime, d: 1.0 / self.a_prime };
        compose(&lower, &subgroup_element(SubgroupTag::Elliptic, self.alpha))
    }
}

/// Splits `m` into a lower-triangular factor times an elliptic element.
///
/// `α` is kept on the continuous branch `−2 atan2(b, a)` rather than reduced
/// to `(−π, π]`: the rotation `exp(αJ₀)` has period 4π in α, and the reduced
/// range cannot reproduce elements with `a < 0, b = 0` such as `−I`. The same
/// α supplies the phase `e^{imα}` of the elliptic-basis actions.
///
/// ```
/// use lct::symplectic::{elliptic_factor, GroupElement};
/// let f = elliptic_factor(&GroupElement::new(1.0, 1.0, 0.0, 1.0).unwrap());
/// assert!((f.a_prime - 2f64.sqrt()).abs() < 1e-15);
/// assert!((f.alpha + std::f64::consts::FRAC_PI_2).abs() < 1e-15);
/// ```
pub fn elliptic_factor(m: &GroupElement) -> EllipticFactorization {
    let a_prime = m.a.hypot(m.b);
    EllipticFactorization {
        a_prime,
        c_prime: (m.a * m.c + m.b * m.d) / a_prime,
        alpha: -2.0 * m.b.atan2(m.a),
    }
}

/// `M = left · ((1, shear), (0, 1)) · F` with `left = ((b, 0), (d, 1/b))`
/// and `shear = −a/b`: the chain behind the radial kernel.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParabolicFactorization {
    pub left: GroupElement,
    pub shear: f64,
}

impl ParabolicFactorization {
    pub fn reassemble(&self) -> GroupElement {
        let s = GroupElement { a: 1.0, b: self.shear, c: 0.0, d: 1.0 };
        compose(&compose(&self.left, &s), &GroupElement::fourier())
    }
}

/// Parabolic factorization; needs `|b| ≥ 1e-12`.
pub fn parabolic_factor(m: &GroupElement) -> Result<ParabolicFactorization> {
    if m.has_degenerate_b() {
        return Err(LctError::DegenerateB { b: m.b });
    }
    Ok(ParabolicFactorization {
        left: GroupElement { a: m.b, b: 0.0, c: m.d, d: 1.0 / m.b },
        shear: -m.a / m.b,
    })
}

/// `((a, −b), (−c, d))`: conjugation by the reflection `diag(1, −1)`, which
/// carries `D⁺_k` kernels to `D⁻_k` kernels.
pub fn reflection_conjugate(m: &GroupElement) -> GroupElement {
    GroupElement { a: m.a, b: -m.b, c: -m.c, d: m.d }
}

/// `P⁻¹ M P` with `P = ((1, −1), (1, 1))/√2`, the square root of `F`. Turns a
/// scaling-basis element into the matching repulsive-oscillator-basis one.
pub fn cayley_conjugate_reposc(m: &GroupElement) -> GroupElement {
    let GroupElement { a, b, c, d } = *m;
    GroupElement {
        a: 0.5 * (a + b + c + d),
        b: 0.5 * (-a + b - c + d),
        c: 0.5 * (-a - b + c + d),
        d: 0.5 * (a - b - c + d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let f = GroupElement::fourier();
        assert_eq!(compose(&f, &f), GroupElement::identity().neg());
        let p = compose(&GroupElement::new(1.0, 1.0, 0.0, 1.0).unwrap(), &GroupElement::new(1.0, 0.0, 1.0, 1.0).unwrap());
        assert_eq!(p, GroupElement { a: 2.0, b: 1.0, c: 1.0, d: 1.0 });
        let e = subgroup_element(SubgroupTag::Elliptic, std::f64::consts::PI);
        assert!(e.max_abs_diff(&GroupElement { a: 0.0, b: -1.0, c: 1.0, d: 0.0 }) < 1e-15);
        let l = to_lorentz(&f);
        assert!(l.max_abs_diff(&LorentzMatrix([[-1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]])) < 1e-15);
        assert_eq!(cayley_conjugate_reposc(&f), f);
        let s = cayley_conjugate_reposc(&GroupElement { a: 2.0, b: 0.0, c: 0.0, d: 0.5 });
        assert_eq!(s, GroupElement { a: 1.25, b: -0.75, c: -0.75, d: 1.25 });
    }

    #[test]
    fn lorentz_map_is_a_homomorphism() {
        let m1 = GroupElement::new(2.0, 1.0, 1.0, 1.0).unwrap();
        let m2 = GroupElement::new(-1.0, 0.5, 0.4, -1.2).unwrap();
        let lhs = to_lorentz(&compose(&m1, &m2));
        assert!(lhs.max_abs_diff(&to_lorentz(&m1).mul(&to_lorentz(&m2))) < 1e-14);
        assert!(lhs.metric_residual() < 1e-14);
    }

    #[test]
    fn minus_identity_reassembles() {
        let m = GroupElement::identity().neg();
        let f = elliptic_factor(&m);
        assert!(f.reassemble().max_abs_diff(&m) < 1e-15);
    }

    #[test]
    fn parabolic_examples() {
        let p = parabolic_factor(&GroupElement::fourier()).unwrap();
        assert_eq!(p.left, GroupElement::identity());
        assert_eq!(p.shear, 0.0);
        let m = GroupElement::new(1.0, 1.0, 0.0, 1.0).unwrap();
        let p = parabolic_factor(&m).unwrap();
        assert_eq!(p.left, GroupElement { a: 1.0, b: 0.0, c: 1.0, d: 1.0 });
        assert_eq!(p.shear, -1.0);
        assert!(p.reassemble().max_abs_diff(&m) < 1e-15);
        assert!(parabolic_factor(&GroupElement::new(1.0, 0.0, 1.0, 1.0).unwrap()).is_err());
    }

    #[test]
    fn rejects_non_unimodular() {
        assert!(matches!(GroupElement::new(1.0, 1.0, 1.0, 1.0), Err(LctError::NotUnimodular { .. })));
    }
}

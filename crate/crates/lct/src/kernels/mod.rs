//! Closed-form kernels and matrix elements of the canonical transforms in
//! every subgroup basis.
//!
//! Kernels with `|b| < EPS_B` degenerate into delta distributions; those
//! come back as [`KernelValue::DeltaLine`] from the `*_b0` functions rather
//! than as sampled spikes.

mod classic;
mod continuous;
mod discrete;

pub use classic::{classic_kernel, classic_kernel_b0};
pub use continuous::{
    cont_elliptic_element, cont_hyperbolic_element, cont_radial_block, cont_radial_kernel, cont_radial_kernel_b0, cont_radial_kernel_rho,
    h_function, transformed_phi0_continuous,
};
pub use discrete::{
    dk_hyperbolic_element, dk_matrix_element, dk_matrix_element_2f1, elliptic_diagonal_element, jplus_kernel,
    mellin_action, radial_kernel, radial_kernel_1f1, radial_kernel_b0, reposc_element, transformed_phi0,
};

use crate::bases::{BasisTag, ContinuousLabel, DiscreteLabel};
use crate::symplectic::GroupElement;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A kernel entry: an ordinary value, or for `b = 0` the distribution
/// `amplitude · δ(x′ − support)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum KernelValue {
    Regular(Complex64),
    DeltaLine { amplitude: Complex64, support: f64 },
}

impl KernelValue {
    pub fn regular(&self) -> Option<Complex64> {
        match *self {
            KernelValue::Regular(v) => Some(v),
            KernelValue::DeltaLine { .. } => None,
        }
    }

    pub fn is_delta(&self) -> bool {
        matches!(self, KernelValue::DeltaLine { .. })
    }
}

/// Series selector for a [`KernelRequest`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Series {
    Discrete(DiscreteLabel),
    Continuous(ContinuousLabel),
}

/// Everything needed to name one kernel entry or matrix element. Row and
/// column carry the eigenvalue (m, ρ or μ; for the radial bases the
/// position r) and, for the continuous series, the component sign σ or τ.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct KernelRequest {
    pub series: Series,
    pub basis: BasisTag,
    pub m: GroupElement,
    pub row: f64,
    pub col: f64,
    pub row_sign: i8,
    pub col_sign: i8,
}

impl KernelRequest {
    /// Dispatches to the closed form for the (series, basis) pair.
    pub fn evaluate(&self) -> crate::Result<KernelValue> {
        use crate::LctError::UnsupportedCombination;
        let reg = |v: crate::Result<Complex64>| v.map(KernelValue::Regular);
        match (self.series, self.basis) {
            (Series::Discrete(l), BasisTag::J0) => reg(dk_matrix_element(&l, &self.m, self.row, self.col)),
            (Series::Discrete(l), BasisTag::JMinus) => radial_kernel(&l, &self.m, self.row, self.col),
            (Series::Discrete(l), BasisTag::JPlus) => jplus_kernel(&l, &self.m, self.row, self.col),
            (Series::Discrete(l), BasisTag::J2) => reg(dk_hyperbolic_element(&l, &self.m, self.row, self.col)),
            (Series::Discrete(l), BasisTag::J1) => reg(reposc_element(&l, &self.m, self.row, self.col)),
            (Series::Continuous(l), BasisTag::J0) => reg(cont_elliptic_element(&l, &self.m, self.row, self.col)),
            (Series::Continuous(l), BasisTag::JMinus) => {
                cont_radial_kernel(&l, &self.m, self.row_sign, self.row, self.col_sign, self.col)
            }
            (Series::Continuous(l), BasisTag::J2) => reg(cont_hyperbolic_element(
                &l,
                &self.m,
                self.row_sign,
                self.row,
                self.col_sign,
                self.col,
            )),
            (Series::Continuous(_), b) => Err(UnsupportedCombination(format!(
                "continuous series kernels are given in the elliptic, radial and scaling bases only, not {b:?}"
            ))),
        }
    }
}

pub(crate) fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub(crate) fn sign(x: f64) -> f64 {
    if x < 0.0 {
        -1.0
    } else {
        1.0
    }
}

/// ln[(a + d) + i(b − c)] on the branch that is continuous over the group,
/// so that its multiples give the covering-group phases. The argument is
/// split as atan2(b, a) + Arg(a² + b² + 1 − i(ac + bd)); the second term
/// stays in (−π/2, π/2) because its real part is positive.
pub(crate) fn ln_alpha(m: &GroupElement) -> Complex64 {
    let GroupElement { a, b, c, d } = *m;
    let modulus = (a + d).hypot(b - c);
    let arg = b.atan2(a) + (-(a * c + b * d)).atan2(a * a + b * b + 1.0);
    Complex64::new(modulus.ln(), arg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::{subgroup_element, SubgroupTag};

    #[test]
    fn alpha_log_is_continuous_along_rotations() {
        for j in -40..40 {
            let phi = j as f64 * 0.1;
            let m = subgroup_element(SubgroupTag::Elliptic, phi);
            let l = ln_alpha(&m);
            assert!((l.re - 2f64.ln()).abs() < 1e-14);
            assert!((l.im + phi / 2.0).abs() < 1e-14, "{phi} {l}");
        }
    }

    #[test]
    fn alpha_log_exponentiates_back() {
        for &(a, b, c0) in &[(1.0, 2.0, -0.5), (-2.0, 0.3, 1.0), (-0.5, -1.5, 2.0), (0.2, -3.0, 0.1)] {
            let m = GroupElement::from_abc(a, b, c0).unwrap();
            let z = Complex64::new(m.a + m.d, m.b - m.c);
            assert!((ln_alpha(&m).exp() - z).norm() < 1e-13 * z.norm());
        }
    }
}

//! Discrete unitarity diagnostics.

use crate::error::{LctError, Result};
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Largest `|λ|` of a Hermitian matrix.
fn hermitian_norm(a: DMatrix<Complex64>) -> f64 {
    a.symmetric_eigenvalues().iter().fold(0.0, |m, v| m.max(v.abs()))
}

fn weighted_gram(u: &DMatrix<Complex64>, weights: &[f64]) -> DMatrix<Complex64> {
    let wu = DMatrix::from_fn(u.nrows(), u.ncols(), |i, j| u[(i, j)] * weights[i]);
    let mut g = u.adjoint() * wu;
    // symmetrize away rounding so the Hermitian solver sees a Hermitian matrix
    let gh = g.adjoint();
    g += gh;
    g * Complex64::new(0.5, 0.0)
}

/// `‖U†WU − W‖₂ / ‖W‖₂` for a discretized operator `U` (see
/// [`KernelMatrix::operator`](super::KernelMatrix::operator)) with
/// quadrature weights `W = diag(w)`.
///
/// On a truncated grid this is the full-space figure: every direction the
/// grid can represent counts, including ones far outside the band the
/// kernel maps back into the interval, so it stays near one for sampled
/// kernels. [`probe_subspace_defect`] is the resolvable counterpart.
pub fn unitarity_defect(u: &DMatrix<Complex64>, weights: &[f64]) -> Result<f64> {
    if !u.is_square() || u.nrows() != weights.len() {
        return Err(LctError::InvalidIndex(format!("{}x{} operator with {} weights", u.nrows(), u.ncols(), weights.len())));
    }
    let mut a = weighted_gram(u, weights);
    for (i, w) in weights.iter().enumerate() {
        a[(i, i)] -= Complex64::new(*w, 0.0);
    }
    let wmax = weights.iter().fold(0.0f64, |m, w| m.max(w.abs()));
    Ok(hermitian_norm(a) / wmax)
}

/// The same defect restricted to the span of the probe columns `q`
/// (samples of functions the grid resolves and the transform keeps inside
/// the interval): `‖S^{−½} (UQ)†W(UQ) S^{−½} − I‖₂` with `S = Q†WQ`,
/// evaluated through the Cholesky factor of `S`.
pub fn probe_subspace_defect(u: &DMatrix<Complex64>, weights: &[f64], q: &DMatrix<Complex64>) -> Result<f64> {
    if u.ncols() != q.nrows() || u.nrows() != weights.len() {
        return Err(LctError::InvalidIndex("probe matrix does not match the operator".into()));
    }
    let s = weighted_gram(q, weights);
    let uq = u * q;
    let t = weighted_gram(&uq, weights);
    let chol = s
        .cholesky()
        .ok_or_else(|| LctError::InvalidIndex("probe functions are linearly dependent on this grid".into()))?;
    let l = chol.l();
    let linv = l
        .clone()
        .try_inverse()
        .ok_or_else(|| LctError::InvalidIndex("probe Gram factor is singular".into()))?;
    let mut b = &linv * t * linv.adjoint();
    let bh = b.adjoint();
    b = (b + bh) * Complex64::new(0.5, 0.0);
    for i in 0..b.nrows() {
        b[(i, i)] -= Complex64::new(1.0, 0.0);
    }
    Ok(hermitian_norm(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_operator_has_no_defect() {
        let w = vec![0.1, 0.3, 0.2, 0.4];
        let u = DMatrix::<Complex64>::identity(4, 4);
        assert_eq!(unitarity_defect(&u, &w).unwrap(), 0.0);
        let q = DMatrix::from_fn(4, 2, |i, j| Complex64::new((i + j) as f64, 1.0));
        let d = probe_subspace_defect(&u, &w, &q).unwrap();
        assert!(d < 1e-13, "{d}");
    }

    #[test]
    fn scaled_operator_defect() {
        let w = vec![0.5; 3];
        let u = DMatrix::<Complex64>::identity(3, 3) * Complex64::new(0.0, 2.0);
        // |2i|² − 1 = 3
        assert!((unitarity_defect(&u, &w).unwrap() - 3.0).abs() < 1e-14);
    }
}

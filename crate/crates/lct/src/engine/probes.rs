//! Well-resolved test functions used as probe columns for
//! [`probe_subspace_defect`](super::probe_subspace_defect).

use super::grid::Grid;
use crate::bases::{phi0_continuous, phi0_discrete, ContinuousLabel, DiscreteLabel};
use crate::error::Result;
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Normalized Hermite function `ψ_n(x) = H_n(x) e^{−x²/2} / √(2ⁿ n! √π)`,
/// by the stable three-term recurrence on the normalized functions.
pub fn hermite_function(n: usize, x: f64) -> f64 {
    let mut prev = 0.0;
    let mut cur = std::f64::consts::PI.powf(-0.25) * (-0.5 * x * x).exp();
    for j in 0..n {
        let next = (2.0 / (j as f64 + 1.0)).sqrt() * x * cur - (j as f64 / (j as f64 + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Columns `ψ_0, …, ψ_{count−1}` sampled on a line grid.
pub fn hermite_probes(grid: &Grid, count: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(grid.len(), count, |i, j| Complex64::new(hermite_function(j, grid.nodes[i]), 0.0))
}

/// Columns `⁰Φ^k_{k+n}`, `n < count`, sampled on a radial grid.
pub fn laguerre_probes(label: &DiscreteLabel, grid: &Grid, count: usize) -> Result<DMatrix<Complex64>> {
    let mut q = DMatrix::zeros(grid.len(), count);
    for j in 0..count {
        for (i, &r) in grid.nodes.iter().enumerate() {
            q[(i, j)] = phi0_discrete(label, j, r)?;
        }
    }
    Ok(q)
}

/// Two-component columns `⁰Φ^{ε,s}_m` for each `m`, stacked as `(σ = +1
/// rows, σ = −1 rows)` to match
/// [`cont_radial_matrix`](super::cont_radial_matrix).
pub fn continuous_probes(label: &ContinuousLabel, grid: &Grid, ms: &[f64]) -> Result<DMatrix<Complex64>> {
    let n = grid.len();
    let mut q = DMatrix::zeros(2 * n, ms.len());
    for (j, &m) in ms.iter().enumerate() {
        for (i, &r) in grid.nodes.iter().enumerate() {
            let v = phi0_continuous(label, m, r)?;
            q[(i, j)] = v[0];
            q[(n + i, j)] = v[1];
        }
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_functions_are_orthonormal() {
        let g = Grid::line(256, 10.0);
        for (a, b) in [(0, 0), (3, 3), (11, 11), (2, 5), (4, 6)] {
            let v: f64 = g.nodes.iter().zip(&g.weights).map(|(x, w)| w * hermite_function(a, *x) * hermite_function(b, *x)).sum();
            let want = if a == b { 1.0 } else { 0.0 };
            assert!((v - want).abs() < 1e-12, "{a},{b}: {v}");
        }
    }
}

//! Kernel matrices on grids and the transforms they define.

use super::grid::{Grid, GridKind};
use super::pool;
use super::signal::{SampledFunction, TwoComponentSampled};
use crate::bases::{ContinuousLabel, DiscreteLabel};
use crate::error::{LctError, Result};
use crate::kernels::{
    classic_kernel, classic_kernel_b0, cont_radial_block, cont_radial_kernel_b0, dk_matrix_element, jplus_kernel,
    radial_kernel, radial_kernel_b0, KernelValue,
};
use crate::quad::Compensated;
use crate::symplectic::GroupElement;
use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

/// Dense kernel samples `K(x_i, x′_j)`, row-major. Quadrature weights are
/// applied when the matrix acts, not stored.
#[derive(Clone, Debug)]
pub struct KernelMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Complex64>,
}

impl KernelMatrix {
    /// Evaluates `f(i, j)` for every entry, rows in parallel.
    pub fn build(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Result<Complex64> + Sync) -> Result<Self> {
        let data = pool().install(|| {
            (0..rows)
                .into_par_iter()
                .map(|i| (0..cols).map(|j| f(i, j)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()
        })?;
        Ok(Self { rows, cols, data: data.concat() })
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// `Σ_j K_ij w_j f_j` with compensated sums in index order, so the
    /// result does not depend on the thread count.
    pub fn apply(&self, weights: &[f64], f: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(weights.len(), self.cols);
        assert_eq!(f.len(), self.cols);
        let wf: Vec<Complex64> = f.iter().zip(weights).map(|(v, w)| v * *w).collect();
        pool().install(|| {
            (0..self.rows)
                .into_par_iter()
                .map(|i| {
                    let mut acc = Compensated::new();
                    for (k, x) in self.row(i).iter().zip(&wf) {
                        acc.add(k * x);
                    }
                    acc.value()
                })
                .collect()
        })
    }

    /// The discretized operator `U = K diag(w)` as a dense matrix.
    pub fn operator(&self, weights: &[f64]) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * weights[j])
    }
}

/// Line kernel on a line grid (rows and columns are the grid nodes).
pub fn classic_matrix(m: &GroupElement, grid: &Grid) -> Result<KernelMatrix> {
    let x = &grid.nodes;
    KernelMatrix::build(x.len(), x.len(), |i, j| regular(classic_kernel(m, x[i], x[j])?))
}

/// `⁻D^k` radial kernel on a radial grid.
pub fn radial_matrix(label: &DiscreteLabel, m: &GroupElement, grid: &Grid) -> Result<KernelMatrix> {
    let r = &grid.nodes;
    KernelMatrix::build(r.len(), r.len(), |i, j| regular(radial_kernel(label, m, r[i], r[j])?))
}

/// `⁺D^k` (Hankel-basis) kernel on a radial grid.
pub fn jplus_matrix(label: &DiscreteLabel, m: &GroupElement, grid: &Grid) -> Result<KernelMatrix> {
    let r = &grid.nodes;
    KernelMatrix::build(r.len(), r.len(), |i, j| regular(jplus_kernel(label, m, r[i], r[j])?))
}

/// Continuous-series radial kernel as a `2N × 2N` matrix: index `i < N` is
/// `(σ = +1, r_i)`, index `N + i` is `(σ = −1, r_i)`.
pub fn cont_radial_matrix(label: &ContinuousLabel, m: &GroupElement, grid: &Grid) -> Result<KernelMatrix> {
    let r = &grid.nodes;
    let n = r.len();
    let blocks = pool().install(|| {
        (0..n)
            .into_par_iter()
            .map(|i| (0..n).map(|j| cont_radial_block(label, m, r[i], r[j])).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
    })?;
    let mut data = vec![Complex64::new(0.0, 0.0); 4 * n * n];
    for (i, row) in blocks.iter().enumerate() {
        for (j, blk) in row.iter().enumerate() {
            for (bs, bi) in [(0, i), (1, n + i)] {
                for (cs, cj) in [(0, j), (1, n + j)] {
                    data[bi * 2 * n + cj] = blk[bs][cs];
                }
            }
        }
    }
    Ok(KernelMatrix { rows: 2 * n, cols: 2 * n, data })
}

fn regular(v: KernelValue) -> Result<Complex64> {
    v.regular().ok_or_else(|| LctError::UnsupportedCombination("delta-line kernel inside a dense matrix".into()))
}

/// True when the kernel's oscillation is under-resolved: the shortest local
/// wavelength `2π|b| / ((max(|a|, |d|) + 1) x_max)` spans fewer than four of
/// the grid's largest node gaps. The `+ 1` accounts for the cross term
/// `xx′/b`, which alone sets the wavelength for Fourier-type elements.
pub fn grid_too_coarse(m: &GroupElement, grid: &Grid) -> bool {
    if m.has_degenerate_b() {
        return false;
    }
    let wavelength = 2.0 * std::f64::consts::PI * m.b.abs() / ((m.a.abs().max(m.d.abs()) + 1.0) * grid.extent);
    wavelength < 4.0 * grid.max_spacing()
}

/// Node count for a Gauss-Legendre grid of half-width `extent` that passes
/// [`grid_too_coarse`] for every element in `ms`, capped at `cap`.
pub fn resolving_nodes(ms: &[GroupElement], extent: f64, kind: GridKind, floor: usize, cap: usize) -> usize {
    let mut n = floor;
    loop {
        let g = match kind {
            GridKind::Line => Grid::line(n, extent),
            GridKind::Radial => Grid::radial(n, extent),
        };
        if n >= cap || ms.iter().all(|m| !grid_too_coarse(m, &g)) {
            return n.min(cap);
        }
        n = (n * 5 / 4).div_ceil(16) * 16;
    }
}

fn delta_apply(f: &SampledFunction, kernel: impl Fn(f64) -> Result<KernelValue>) -> Result<SampledFunction> {
    let values = f
        .grid
        .nodes
        .iter()
        .map(|&x| match kernel(x)? {
            KernelValue::DeltaLine { amplitude, support } => Ok(amplitude * f.at(support)),
            KernelValue::Regular(_) => Err(LctError::UnsupportedCombination("expected a delta-line kernel".into())),
        })
        .collect::<Result<Vec<_>>>()?;
    SampledFunction::new(f.grid.clone(), values)
}

fn dense_apply(f: &SampledFunction, k: &KernelMatrix) -> Result<SampledFunction> {
    SampledFunction::new(f.grid.clone(), k.apply(&f.grid.weights, &f.values))
}

fn require(grid: &Grid, kind: GridKind) -> Result<()> {
    if grid.kind != kind {
        return Err(LctError::UnsupportedCombination(format!("this transform needs a {kind:?} grid, got {:?}", grid.kind)));
    }
    Ok(())
}

/// `f_M(x) = ∫ C_M(x, x′) f(x′) dx′` on the grid of `f` (output on the same
/// nodes). For `|b| < EPS_B` the delta-line action is used instead.
pub fn apply_classic(m: &GroupElement, f: &SampledFunction) -> Result<SampledFunction> {
    require(&f.grid, GridKind::Line)?;
    if m.has_degenerate_b() {
        return delta_apply(f, |x| classic_kernel_b0(m, x));
    }
    dense_apply(f, &classic_matrix(m, &f.grid)?)
}

/// `f_M(r) = ∫₀^∞ ⁻D^k(r, r′) f(r′) dr′`, delta-line action for `b = 0`.
pub fn apply_radial(label: &DiscreteLabel, m: &GroupElement, f: &SampledFunction) -> Result<SampledFunction> {
    require(&f.grid, GridKind::Radial)?;
    let g = match label.sign {
        crate::bases::SeriesSign::Plus => *m,
        crate::bases::SeriesSign::Minus => crate::symplectic::reflection_conjugate(m),
    };
    if g.has_degenerate_b() {
        return delta_apply(f, |r| radial_kernel_b0(label, m, r));
    }
    dense_apply(f, &radial_matrix(label, m, &f.grid)?)
}

/// Hankel-basis action with the `⁺D^k` kernel.
pub fn apply_jplus(label: &DiscreteLabel, m: &GroupElement, f: &SampledFunction) -> Result<SampledFunction> {
    require(&f.grid, GridKind::Radial)?;
    if jplus_kernel(label, m, 1.0, 1.0)?.is_delta() {
        return delta_apply(f, |r| jplus_kernel(label, m, r, r));
    }
    dense_apply(f, &jplus_matrix(label, m, &f.grid)?)
}

/// Two-component action of the continuous-series kernel.
pub fn apply_cont_radial(label: &ContinuousLabel, m: &GroupElement, f: &TwoComponentSampled) -> Result<TwoComponentSampled> {
    require(&f.grid, GridKind::Radial)?;
    let n = f.grid.len();
    if m.has_degenerate_b() {
        let mut out = [Vec::with_capacity(n), Vec::with_capacity(n)];
        for (idx, sigma) in [(0usize, 1i8), (1, -1)] {
            let comp = f.component(sigma);
            for &r in &f.grid.nodes {
                match cont_radial_kernel_b0(label, m, sigma, r)? {
                    KernelValue::DeltaLine { amplitude, support } => {
                        out[idx].push(amplitude * f.grid.interpolate(comp, support))
                    }
                    KernelValue::Regular(_) => unreachable!("b = 0 kernel is a delta line"),
                }
            }
        }
        let [plus, minus] = out;
        return TwoComponentSampled::new(f.grid.clone(), plus, minus);
    }
    let k = cont_radial_matrix(label, m, &f.grid)?;
    apply_two_component(&k, f)
}

/// Applies a `2N × 2N` block matrix from [`cont_radial_matrix`].
pub fn apply_two_component(k: &KernelMatrix, f: &TwoComponentSampled) -> Result<TwoComponentSampled> {
    let n = f.grid.len();
    let w2: Vec<f64> = f.grid.weights.iter().chain(&f.grid.weights).copied().collect();
    let v: Vec<Complex64> = f.plus.iter().chain(&f.minus).copied().collect();
    let out = k.apply(&w2, &v);
    TwoComponentSampled::new(f.grid.clone(), out[..n].to_vec(), out[n..].to_vec())
}

/// Result of [`apply_discrete`]: the truncated image and the fraction of
/// the input norm it lost, `1 − ‖out‖²/‖in‖²`, as a tail-mass estimate.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscreteImage {
    pub coeffs: Vec<Complex64>,
    pub tail_mass: f64,
}

/// `f_{M;n} = Σ_{n′<N} ⁰D^k_{k+n, k+n′}(M) f_{n′}` for `n < N`. Coefficients
/// beyond the input length are zero; inputs longer than `N` are truncated.
pub fn apply_discrete(label: &DiscreteLabel, m: &GroupElement, coeffs: &[Complex64], n: usize) -> Result<DiscreteImage> {
    if n == 0 {
        return Err(LctError::InvalidIndex("truncation N must be at least 1".into()));
    }
    let input: Vec<Complex64> = (0..n).map(|j| coeffs.get(j).copied().unwrap_or_default()).collect();
    let mat = KernelMatrix::build(n, n, |i, j| dk_matrix_element(label, m, label.m(i), label.m(j)))?;
    let ones = vec![1.0; n];
    let out = mat.apply(&ones, &input);
    let norm_in: f64 = coeffs.iter().map(|c| c.norm_sqr()).sum();
    let norm_out: f64 = out.iter().map(|c| c.norm_sqr()).sum();
    let tail_mass = if norm_in > 0.0 { (1.0 - norm_out / norm_in).max(0.0) } else { 0.0 };
    Ok(DiscreteImage { coeffs: out, tail_mass })
}

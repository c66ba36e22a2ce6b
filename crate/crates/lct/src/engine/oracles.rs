//! Independent numerical checks: the metaplectic sign, double Mellin
//! transforms on rotated contours, and `b → 0` limit studies.

use super::grid::Grid;
use super::pool;
use super::signal::SampledFunction;
use crate::bases::{ContinuousLabel, DiscreteLabel, Epsilon, SeriesSign};
use crate::error::{LctError, Result};
use crate::kernels::{
    classic_kernel, classic_kernel_b0, cont_radial_block, cont_radial_kernel_b0, radial_kernel, radial_kernel_b0,
    KernelValue,
};
use crate::quad::{gauss_legendre, Compensated};
use crate::specfun::{bessel_j_split, hankel_split, macdonald_scaled, HankelKind};
use crate::symplectic::{compose, reflection_conjugate, GroupElement};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Sign relating `C_{M₁} C_{M₂}` to `C_{M₁M₂}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CompositionSign {
    Plus,
    Minus,
    Undetermined,
}

impl CompositionSign {
    pub fn value(self) -> Option<i8> {
        match self {
            CompositionSign::Plus => Some(1),
            CompositionSign::Minus => Some(-1),
            CompositionSign::Undetermined => None,
        }
    }
}

/// Outcome of [`composition_sign`]: the sign and the relative residual
/// `‖C_{M₁}C_{M₂}f − σ C_{M₁M₂}f‖ / ‖C_{M₁M₂}f‖` after removing it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompositionOutcome {
    pub sign: CompositionSign,
    pub residual: f64,
}

/// Finds σ ∈ {+1, −1} with `apply(M₁, apply(M₂, f)) ≈ σ apply(M₁M₂, f)`.
///
/// Fails with [`LctError::Undetermined`] when neither sign brings the
/// relative residual under `tol`.
pub fn composition_sign(
    m1: &GroupElement,
    m2: &GroupElement,
    apply: impl Fn(&GroupElement, &SampledFunction) -> Result<SampledFunction>,
    probe: &SampledFunction,
    tol: f64,
) -> Result<CompositionOutcome> {
    let chained = apply(m1, &apply(m2, probe)?)?;
    let direct = apply(&compose(m1, m2), probe)?;
    let scale = direct.norm().max(f64::MIN_POSITIVE);
    let plus = chained.distance(&direct) / scale;
    let minus = chained.distance(&direct.scale(Complex64::new(-1.0, 0.0))) / scale;
    let (sign, residual) = if plus <= minus { (CompositionSign::Plus, plus) } else { (CompositionSign::Minus, minus) };
    if residual > tol {
        return Err(LctError::Undetermined { plus, minus });
    }
    Ok(CompositionOutcome { sign, residual })
}

/// Truncation and contour settings of the double Mellin oracle.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MellinOptions {
    /// Lower end of the radial integrals.
    pub r_min: f64,
    /// Upper end; the doubling check compares against `r_max / 2`.
    pub r_max: f64,
    /// Gauss-Legendre nodes per integration variable at `r_max`.
    pub nodes: usize,
    /// Contour rotation angle.
    pub theta: f64,
    /// Allowed change between `r_max / 2` and `r_max`, relative to
    /// `max(1, |value|)`.
    pub tol: f64,
}

impl Default for MellinOptions {
    fn default() -> Self {
        MellinOptions { r_min: 1e-6, r_max: 40.0, nodes: 480, theta: 0.3, tol: 1e-3 }
    }
}

/// Value of a double Mellin integral and how much it moved when the
/// truncation was doubled.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MellinEstimate {
    pub value: Complex64,
    pub doubling_change: f64,
}

/// Nodes and weights for `∫_{r_min}^{r_max} g(x) dx` in the variable
/// `u = √x`, which absorbs the `x^{−½}` of the Mellin functions.
fn sqrt_grid(r_min: f64, r_max: f64, nodes: usize) -> (Vec<f64>, Vec<f64>) {
    let per = 16;
    let panels = nodes.div_ceil(per).max(1);
    let (t, w) = gauss_legendre(per);
    let (u0, u1) = (r_min.sqrt(), r_max.sqrt());
    let h = (u1 - u0) / panels as f64;
    let mut x = Vec::with_capacity(panels * per);
    let mut wx = Vec::with_capacity(panels * per);
    for p in 0..panels {
        let lo = u0 + p as f64 * h;
        for (ti, wi) in t.iter().zip(&w) {
            let u = lo + 0.5 * h * (ti + 1.0);
            x.push(u * u);
            wx.push(0.5 * h * wi * 2.0 * u);
        }
    }
    (x, wx)
}

/// `Σ_ij w_i w_j g(x_i, x_j)` with rows in parallel and compensated sums.
fn double_sum(x: &[f64], w: &[f64], g: impl Fn(f64, f64) -> Result<Complex64> + Sync) -> Result<Complex64> {
    let rows = pool().install(|| {
        (0..x.len())
            .into_par_iter()
            .map(|i| {
                let mut acc = Compensated::new();
                for j in 0..x.len() {
                    acc.add(g(x[i], x[j])? * (w[i] * w[j]));
                }
                Ok(acc.value())
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let mut acc = Compensated::new();
    for v in rows {
        acc.add(v);
    }
    Ok(acc.value())
}

fn check_rotatable(m: &GroupElement) -> Result<()> {
    if m.has_degenerate_b() {
        return Err(LctError::DegenerateB { b: m.b });
    }
    let ad = m.a * m.d;
    // the rotated Gaussian dominates the Bessel growth only for ad < 0 or ad > 1
    if !(ad < 0.0 || ad > 1.0) {
        return Err(LctError::NonConvergence { what: "Mellin oracle (rotated contour needs ad < 0 or ad > 1)", terms: 0 });
    }
    Ok(())
}

fn with_doubling(opts: &MellinOptions, eval: impl Fn(f64, usize) -> Result<Complex64>) -> Result<MellinEstimate> {
    let value = eval(opts.r_max, opts.nodes)?;
    // same node density in u = √r on the halved interval
    let half_nodes = ((opts.nodes as f64) * ((opts.r_max / 2.0).sqrt() / opts.r_max.sqrt())).ceil() as usize;
    let half = eval(opts.r_max / 2.0, half_nodes)?;
    let doubling_change = (value - half).norm();
    if doubling_change > opts.tol * value.norm().max(1.0) {
        return Err(LctError::NonConvergence { what: "Mellin oracle truncation", terms: opts.nodes });
    }
    Ok(MellinEstimate { value, doubling_change })
}

/// Double Mellin transform `∬ ²Φ_μ(r)* ⁻D^k(r, r′) ²Φ_{μ′}(r′) dr dr′` of the
/// radial kernel, an independent value for `²D^k_{μ,μ′}(M)`.
///
/// Both contours are rotated by `±θ` (signs from `d/b` and `a/b`) so the
/// chirps decay; this is exact by analyticity when `ad < 0` or `ad > 1`,
/// which is checked.
pub fn mellin_oracle(label: &DiscreteLabel, m: &GroupElement, mu: f64, mup: f64, opts: &MellinOptions) -> Result<MellinEstimate> {
    let g = match label.sign {
        SeriesSign::Plus => *m,
        SeriesSign::Minus => reflection_conjugate(m),
    };
    check_rotatable(&g)?;
    let (a, b, d) = (g.a, g.b, g.d);
    let k = label.k;
    let i = Complex64::i();
    let t1 = opts.theta * (d / b).signum();
    let t2 = opts.theta * (a / b).signum();
    let (e1, e2) = (Complex64::from_polar(1.0, t1), Complex64::from_polar(1.0, t2));
    let nu = Complex64::new(2.0 * k - 1.0, 0.0);
    let pre = Complex64::from_polar(1.0 / (b.abs() * PI), -PI * k * b.signum()) * e1 * e2;
    with_doubling(opts, |r_max, nodes| {
        let (x, w) = sqrt_grid(opts.r_min, r_max, nodes);
        double_sum(&x, &w, |xi, yj| {
            let (r, rp) = (e1 * xi, e2 * yj);
            let z = r * rp / b.abs();
            let (ja, jb) = bessel_j_split(nu, z)?;
            let chirp = i * (d * r * r + a * rp * rp) / (2.0 * b);
            let kern = ja * (chirp + i * z).exp() + jb * (chirp - i * z).exp();
            let mellin = (-(0.5 + 2.0 * i * mu) * r.ln()).exp() * ((-0.5 + 2.0 * i * mup) * rp.ln()).exp();
            Ok(pre * r.sqrt() * rp.sqrt() * kern * mellin)
        })
    })
}

/// Two-component double Mellin transform of the continuous-series radial
/// kernel between `(1, τ) r^{−½+2iμ}/√(2π)` functions, an independent value
/// for `²C^{ε,k}_{τμ,τ′μ′}(M)`. Each of the four blocks gets its own contour
/// rotation.
pub fn mellin_oracle_continuous(
    label: &ContinuousLabel,
    m: &GroupElement,
    tau: i8,
    mu: f64,
    taup: i8,
    mup: f64,
    opts: &MellinOptions,
) -> Result<MellinEstimate> {
    check_rotatable(m)?;
    if label.s.abs() < 1e-6 {
        return Err(LctError::SmallS { s: label.s });
    }
    let (a, b, d) = (m.a, m.b, m.d);
    let i = Complex64::i();
    let s = label.s;
    let nu = Complex64::new(0.0, 2.0 * s);
    let h = label.h();
    let gg = label.g();
    let sz = -b.signum();
    let cross_phase = match label.eps {
        Epsilon::Zero => Complex64::new(1.0, 0.0),
        Epsilon::Half => i * sz,
    };
    with_doubling(opts, |r_max, nodes| {
        let (x, w) = sqrt_grid(opts.r_min, r_max, nodes);
        let mut total = Complex64::new(0.0, 0.0);
        for sg in [1.0, -1.0] {
            for sp in [1.0, -1.0] {
                let t1 = opts.theta * (sg * d / b).signum();
                let t2 = opts.theta * (sp * a / b).signum();
                let (e1, e2) = (Complex64::from_polar(1.0, t1), Complex64::from_polar(1.0, t2));
                let bra = if sg > 0.0 { 1.0 } else { tau as f64 };
                let ket = if sp > 0.0 { 1.0 } else { taup as f64 };
                total += double_sum(&x, &w, |xi, yj| {
                    let (r, rp) = (e1 * xi, e2 * yj);
                    let wv = r * rp / b.abs();
                    let chirp = i * (d * sg * r * r + a * sp * rp * rp) / (2.0 * b);
                    let amp = r.sqrt() * rp.sqrt() / (2.0 * PI * b.abs());
                    let kern = if sg == sp {
                        let a1 = hankel_split(HankelKind::First, nu, wv)?;
                        let a2 = hankel_split(HankelKind::Second, nu, wv)?;
                        let hp = i
                            * PI
                            * ((-PI * s).exp() * a1 * (chirp + i * wv).exp() - h * (PI * s).exp() * a2 * (chirp - i * wv).exp());
                        let hp = if sz > 0.0 { hp } else { h * hp };
                        if sg > 0.0 {
                            hp
                        } else {
                            h * hp
                        }
                    } else {
                        4.0 * gg * cross_phase * macdonald_scaled(s, wv) * (chirp - wv).exp()
                    };
                    let mellin = (-(0.5 + 2.0 * i * mu) * r.ln()).exp() * ((-0.5 + 2.0 * i * mup) * rp.ln()).exp() / (2.0 * PI);
                    Ok(bra * ket * amp * kern * mellin * e1 * e2)
                })?;
            }
        }
        Ok(total)
    })
}

/// Kernel family of a scalar limit study.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LimitFamily {
    Classic,
    Radial(DiscreteLabel),
}

/// Deviations of the regular kernels from the `b = 0` delta-line action
/// along a sequence of `b` values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitStudy {
    pub b_values: Vec<f64>,
    /// `max_x |(C_{M_b} f)(x) − (C_{M₀} f)(x)|` over the sample points.
    pub deviations: Vec<f64>,
    /// Strictly decreasing deviations.
    pub monotone: bool,
}

fn limit_element(base: &GroupElement, b: f64) -> Result<GroupElement> {
    if !base.has_degenerate_b() {
        return Err(LctError::UnsupportedCombination(format!("limit studies start from b = 0, got b = {}", base.b)));
    }
    // keep a and c, restore ad − bc = 1 through d
    GroupElement::new(base.a, b, base.c, (1.0 + b * base.c) / base.a)
}

/// Integration grid resolving the kernel chirp at every sample point:
/// panels no wider than `12|b| / ω_max`, `ω_max = (|a| X + x_max)/|b|`.
pub(crate) fn resolving_grid(m: &GroupElement, extent: f64, out_max: f64, radial: bool) -> Grid {
    let omega = (m.a.abs() * extent + out_max) / m.b.abs();
    let h = (12.0 / omega).min(0.5);
    let panels = (extent * if radial { 1.0 } else { 2.0 } / h).ceil() as usize;
    let n = panels * super::grid::PANEL_NODES;
    if radial {
        Grid::radial(n, extent)
    } else {
        Grid::line(n, extent)
    }
}

fn finish(b_values: &[f64], deviations: Vec<f64>) -> LimitStudy {
    let monotone = deviations.windows(2).all(|p| p[1] < p[0]);
    LimitStudy { b_values: b_values.to_vec(), deviations, monotone }
}

/// `b → 0` study for the line or radial kernel: applies `M_b = ((a, b), (c,
/// (1 + bc)/a))` to `f` (supported in `[−extent, extent]` or `(0, extent]`)
/// by quadrature and compares with the delta-line action at `points`.
pub fn b_limit_study(
    family: LimitFamily,
    base: &GroupElement,
    f: &(dyn Fn(f64) -> Complex64 + Sync),
    b_values: &[f64],
    points: &[f64],
    extent: f64,
) -> Result<LimitStudy> {
    let out_max = points.iter().fold(0.0f64, |m, p| m.max(p.abs()));
    let limit: Vec<Complex64> = points
        .iter()
        .map(|&x| {
            let kv = match family {
                LimitFamily::Classic => classic_kernel_b0(base, x)?,
                LimitFamily::Radial(l) => radial_kernel_b0(&l, base, x)?,
            };
            match kv {
                KernelValue::DeltaLine { amplitude, support } => Ok(amplitude * f(support)),
                KernelValue::Regular(_) => unreachable!("b = 0 kernels are delta lines"),
            }
        })
        .collect::<Result<_>>()?;
    let mut deviations = Vec::with_capacity(b_values.len());
    for &b in b_values {
        let m = limit_element(base, b)?;
        let radial = matches!(family, LimitFamily::Radial(_));
        let grid = resolving_grid(&m, extent, out_max, radial);
        let fv: Vec<Complex64> = grid.nodes.iter().zip(&grid.weights).map(|(&x, &w)| f(x) * w).collect();
        let vals = pool().install(|| {
            points
                .par_iter()
                .map(|&x| {
                    let mut acc = Compensated::new();
                    for (&xp, v) in grid.nodes.iter().zip(&fv) {
                        let kv = match family {
                            LimitFamily::Classic => classic_kernel(&m, x, xp)?,
                            LimitFamily::Radial(l) => radial_kernel(&l, &m, x, xp)?,
                        };
                        acc.add(kv.regular().expect("b != 0") * v);
                    }
                    Ok(acc.value())
                })
                .collect::<Result<Vec<_>>>()
        })?;
        deviations.push(vals.iter().zip(&limit).map(|(v, l)| (v - l).norm()).fold(0.0, f64::max));
    }
    Ok(finish(b_values, deviations))
}

/// The continuous-series counterpart of [`b_limit_study`] on two-component
/// signals.
pub fn b_limit_study_continuous(
    label: &ContinuousLabel,
    base: &GroupElement,
    f: &(dyn Fn(f64) -> [Complex64; 2] + Sync),
    b_values: &[f64],
    points: &[f64],
    extent: f64,
) -> Result<LimitStudy> {
    let out_max = points.iter().fold(0.0f64, |m, p| m.max(p.abs()));
    let mut limit = Vec::with_capacity(points.len());
    for &r in points {
        let mut pair = [Complex64::new(0.0, 0.0); 2];
        for (idx, sigma) in [(0usize, 1i8), (1, -1)] {
            if let KernelValue::DeltaLine { amplitude, support } = cont_radial_kernel_b0(label, base, sigma, r)? {
                pair[idx] = amplitude * f(support)[idx];
            }
        }
        limit.push(pair);
    }
    let mut deviations = Vec::with_capacity(b_values.len());
    for &b in b_values {
        let m = limit_element(base, b)?;
        let grid = resolving_grid(&m, extent, out_max, true);
        let fv: Vec<[Complex64; 2]> = grid
            .nodes
            .iter()
            .zip(&grid.weights)
            .map(|(&r, &w)| {
                let v = f(r);
                [v[0] * w, v[1] * w]
            })
            .collect();
        let vals = pool().install(|| {
            points
                .par_iter()
                .map(|&r| {
                    let (mut p, mut q) = (Compensated::new(), Compensated::new());
                    for (&rp, v) in grid.nodes.iter().zip(&fv) {
                        let blk = cont_radial_block(label, &m, r, rp)?;
                        p.add(blk[0][0] * v[0] + blk[0][1] * v[1]);
                        q.add(blk[1][0] * v[0] + blk[1][1] * v[1]);
                    }
                    Ok([p.value(), q.value()])
                })
                .collect::<Result<Vec<_>>>()
        })?;
        let dev = vals
            .iter()
            .zip(&limit)
            .map(|(v, l)| (v[0] - l[0]).norm().max((v[1] - l[1]).norm()))
            .fold(0.0, f64::max);
        deviations.push(dev);
    }
    Ok(finish(b_values, deviations))
}

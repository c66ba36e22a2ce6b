//! Quadrature grids and interpolation on them.

use crate::quad::gauss_legendre;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Nodes per Gauss-Legendre panel of the standard grids.
pub const PANEL_NODES: usize = 16;

/// Number of geometrically refined panels at the origin of a radial grid.
/// Radial functions behave like `r^{2k−½}` there, which a uniform panel
/// integrates only algebraically.
pub const GRADED_PANELS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GridKind {
    /// Symmetric interval `[−x_max, x_max]`.
    Line,
    /// Half line `(0, r_max]`.
    Radial,
}

/// Quadrature nodes and weights. Grids built by [`Grid::line`] and
/// [`Grid::radial`] are composite Gauss-Legendre with panel boundaries
/// recorded, so samples interpolate spectrally inside each panel. Grids from
/// arbitrary nodes ([`Grid::from_nodes`]) carry trapezoid weights and
/// interpolate with local cubics.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub kind: GridKind,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// Upper end of the interval (`x_max` or `r_max`).
    pub extent: f64,
    panel_edges: Vec<f64>,
    per_panel: usize,
    bary: Vec<f64>,
}

impl Grid {
    /// Composite Gauss-Legendre grid on `[−x_max, x_max]` with `n` nodes
    /// (rounded up to a whole number of panels).
    pub fn line(n: usize, x_max: f64) -> Self {
        let panels = n.div_ceil(PANEL_NODES).max(1);
        let edges: Vec<f64> = (0..=panels).map(|p| -x_max + 2.0 * x_max * p as f64 / panels as f64).collect();
        Self::from_edges(GridKind::Line, edges, PANEL_NODES, x_max)
    }

    /// Composite Gauss-Legendre grid on `(0, r_max]` with `n` nodes. The
    /// first uniform panel is split geometrically into [`GRADED_PANELS`]
    /// pieces, so `Σ w = r_max` still holds.
    pub fn radial(n: usize, r_max: f64) -> Self {
        let panels = n.div_ceil(PANEL_NODES).max(GRADED_PANELS + 2);
        let uniform = panels - GRADED_PANELS;
        let h = r_max / uniform as f64;
        let mut edges = vec![0.0];
        for g in (0..GRADED_PANELS).rev() {
            edges.push(h / f64::powi(4.0, g as i32 + 1));
        }
        for p in 1..=uniform {
            edges.push(h * p as f64);
        }
        Self::from_edges(GridKind::Radial, edges, PANEL_NODES, r_max)
    }

    fn from_edges(kind: GridKind, edges: Vec<f64>, per_panel: usize, extent: f64) -> Self {
        let (x0, w0) = gauss_legendre(per_panel);
        let mut nodes = Vec::with_capacity((edges.len() - 1) * per_panel);
        let mut weights = Vec::with_capacity(nodes.capacity());
        for p in edges.windows(2) {
            let (lo, hi) = (p[0], p[1]);
            let half = 0.5 * (hi - lo);
            for (x, w) in x0.iter().zip(&w0) {
                nodes.push(lo + half * (x + 1.0));
                weights.push(half * w);
            }
        }
        // barycentric weights of the Legendre nodes: (−1)^j √((1 − t_j²) w_j)
        let bary = x0.iter().zip(&w0).enumerate().map(|(j, (t, w))| if j % 2 == 0 { 1.0 } else { -1.0 } * ((1.0 - t * t) * w).sqrt()).collect();
        Grid { kind, nodes, weights, extent, panel_edges: edges, per_panel, bary }
    }

    /// Grid on caller-supplied strictly increasing nodes, trapezoid weights.
    pub fn from_nodes(kind: GridKind, nodes: Vec<f64>) -> crate::Result<Self> {
        if nodes.len() < 2 || nodes.windows(2).any(|p| p[1] <= p[0]) {
            return Err(crate::LctError::InvalidIndex("grid nodes must be at least two and strictly increasing".into()));
        }
        if kind == GridKind::Radial && nodes[0] <= 0.0 {
            return Err(crate::LctError::InvalidIndex("radial grid nodes must be positive".into()));
        }
        let n = nodes.len();
        let mut weights = vec![0.0; n];
        for i in 0..n - 1 {
            let h = 0.5 * (nodes[i + 1] - nodes[i]);
            weights[i] += h;
            weights[i + 1] += h;
        }
        let extent = match kind {
            GridKind::Line => nodes[0].abs().max(nodes[n - 1].abs()),
            GridKind::Radial => nodes[n - 1],
        };
        Ok(Grid { kind, nodes, weights, extent, panel_edges: Vec::new(), per_panel: 0, bary: Vec::new() })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Largest gap between neighbouring nodes.
    pub fn max_spacing(&self) -> f64 {
        self.nodes.windows(2).map(|p| p[1] - p[0]).fold(0.0, f64::max)
    }

    fn lower(&self) -> f64 {
        self.panel_edges.first().copied().unwrap_or(self.nodes[0])
    }

    /// Interpolates samples `values` (one per node) at `x`; zero outside the
    /// grid's interval.
    pub fn interpolate(&self, values: &[Complex64], x: f64) -> Complex64 {
        let zero = Complex64::new(0.0, 0.0);
        let upper = self.panel_edges.last().copied().unwrap_or(self.nodes[self.nodes.len() - 1]);
        if x < self.lower() || x > upper {
            return zero;
        }
        if self.per_panel == 0 {
            return cubic(&self.nodes, values, x);
        }
        let p = match self.panel_edges.binary_search_by(|e| e.total_cmp(&x)) {
            Ok(i) => i.min(self.panel_edges.len() - 2),
            Err(i) => i - 1,
        };
        let lo = p * self.per_panel;
        barycentric(&self.nodes[lo..lo + self.per_panel], &values[lo..lo + self.per_panel], &self.bary, x)
    }
}

/// Barycentric Lagrange interpolation on one Gauss-Legendre panel.
fn barycentric(nodes: &[f64], values: &[Complex64], bary: &[f64], x: f64) -> Complex64 {
    let mut num = Complex64::new(0.0, 0.0);
    let mut den = 0.0;
    for j in 0..nodes.len() {
        let d = x - nodes[j];
        if d == 0.0 {
            return values[j];
        }
        let q = bary[j] / d;
        num += values[j] * q;
        den += q;
    }
    num / den
}

fn cubic(nodes: &[f64], values: &[Complex64], x: f64) -> Complex64 {
    let n = nodes.len();
    let i = nodes.partition_point(|&t| t <= x).clamp(1, n - 1) - 1;
    let start = i.saturating_sub(1).min(n.saturating_sub(4));
    let end = (start + 4).min(n);
    let mut acc = Complex64::new(0.0, 0.0);
    for j in start..end {
        let mut l = 1.0;
        for m in start..end {
            if m != j {
                l *= (x - nodes[m]) / (nodes[j] - nodes[m]);
            }
        }
        acc += values[j] * l;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_interval() {
        let g = Grid::radial(256, 12.0);
        assert_eq!(g.len(), 256);
        assert!((g.weights.iter().sum::<f64>() - 12.0).abs() < 1e-12);
        assert!(g.nodes.windows(2).all(|p| p[0] < p[1]) && g.nodes[0] > 0.0);
        let l = Grid::line(256, 8.0);
        assert!((l.weights.iter().sum::<f64>() - 16.0).abs() < 1e-12);
    }

    #[test]
    fn graded_grid_integrates_sqrt() {
        let g = Grid::radial(256, 12.0);
        let v: f64 = g.nodes.iter().zip(&g.weights).map(|(r, w)| w * r.sqrt() * (-r * r).exp()).sum();
        // ∫₀^∞ √r e^{−r²} dr = Γ(3/4)/2
        assert!((v - 0.612_708_351_232_588_8).abs() < 1e-8, "{v}");
    }

    #[test]
    fn interpolation_is_spectral_inside_panels() {
        let g = Grid::line(128, 8.0);
        let f: Vec<Complex64> = g.nodes.iter().map(|&x| Complex64::new((-x * x / 2.0).exp(), x.sin())).collect();
        for &x in &[-7.9, -3.3, 0.0, 0.123, 5.5, 8.0] {
            let v = g.interpolate(&f, x);
            let want = Complex64::new((-x * x / 2.0).exp(), x.sin());
            assert!((v - want).norm() < 1e-9, "{x}: {v}");
        }
        assert_eq!(g.interpolate(&f, 8.5), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn cubic_interpolation_on_arbitrary_nodes() {
        let nodes: Vec<f64> = (0..200).map(|i| 0.05 + i as f64 * 0.05).collect();
        let g = Grid::from_nodes(GridKind::Radial, nodes).unwrap();
        let f: Vec<Complex64> = g.nodes.iter().map(|&x| Complex64::new(x.cos(), 0.0)).collect();
        let v = g.interpolate(&f, 3.333);
        assert!((v.re - 3.333f64.cos()).abs() < 1e-5);
    }
}

//! Sampled signals and their CSV form.

use super::grid::{Grid, GridKind};
use crate::error::{LctError, Result};
use crate::quad::Compensated;
use num_complex::Complex64;
use std::io::{Read, Write};

/// Complex samples on a grid.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledFunction {
    pub grid: Grid,
    pub values: Vec<Complex64>,
}

/// The two components σ = ±1 of a continuous-series signal on one grid.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoComponentSampled {
    pub grid: Grid,
    pub plus: Vec<Complex64>,
    pub minus: Vec<Complex64>,
}

fn check_values(grid: &Grid, values: &[Complex64]) -> Result<()> {
    if values.len() != grid.len() {
        return Err(LctError::InvalidIndex(format!("{} samples for {} grid nodes", values.len(), grid.len())));
    }
    if let Some(i) = values.iter().position(|v| !v.re.is_finite() || !v.im.is_finite()) {
        return Err(LctError::InvalidIndex(format!("sample {i} is not finite")));
    }
    Ok(())
}

fn weighted_inner(w: &[f64], a: &[Complex64], b: &[Complex64]) -> Complex64 {
    let mut acc = Compensated::new();
    for ((w, x), y) in w.iter().zip(a).zip(b) {
        acc.add(x.conj() * y * *w);
    }
    acc.value()
}

fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

fn parse_field(rec: &csv::StringRecord, i: usize, line: usize) -> Result<f64> {
    let s = rec.get(i).ok_or_else(|| LctError::Parse { line, msg: format!("missing column {}", i + 1) })?;
    s.trim().parse::<f64>().map_err(|e| LctError::Parse { line, msg: format!("{s:?}: {e}") })
}

fn read_rows(input: impl Read, header: &[&str]) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(input);
    let got = rdr.headers().map_err(|e| LctError::Parse { line: 1, msg: e.to_string() })?.clone();
    let got: Vec<&str> = got.iter().collect();
    let ok = got.len() == header.len() && got.iter().zip(header).enumerate().all(|(i, (g, h))| g == h || (i == 0 && (*g == "x" || *g == "r")));
    if !ok {
        return Err(LctError::Parse { line: 1, msg: format!("expected header {}, got {}", header.join(","), got.join(",")) });
    }
    let mut nodes = Vec::new();
    let mut cols = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let line = i + 2;
        let rec = rec.map_err(|e| LctError::Parse { line, msg: e.to_string() })?;
        if rec.len() != header.len() {
            return Err(LctError::Parse { line, msg: format!("expected {} fields, got {}", header.len(), rec.len()) });
        }
        nodes.push(parse_field(&rec, 0, line)?);
        let mut row = Vec::with_capacity(header.len() - 1);
        for j in 1..header.len() {
            row.push(parse_field(&rec, j, line)?);
        }
        cols.push(row);
    }
    if nodes.len() < 2 {
        return Err(LctError::Parse { line: nodes.len() + 1, msg: "need at least two samples".into() });
    }
    if let Some(i) = nodes.windows(2).position(|p| p[1] <= p[0]) {
        return Err(LctError::Parse { line: i + 3, msg: "abscissae must be strictly increasing".into() });
    }
    Ok((nodes, cols))
}

fn io(e: std::io::Error) -> LctError {
    LctError::Io(e.to_string())
}

impl SampledFunction {
    pub fn new(grid: Grid, values: Vec<Complex64>) -> Result<Self> {
        check_values(&grid, &values)?;
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: &Grid, f: impl Fn(f64) -> Complex64) -> Self {
        let values = grid.nodes.iter().map(|&x| f(x)).collect();
        Self { grid: grid.clone(), values }
    }

    /// Fallible variant of [`SampledFunction::from_fn`].
    pub fn try_from_fn(grid: &Grid, f: impl Fn(f64) -> Result<Complex64>) -> Result<Self> {
        let values = grid.nodes.iter().map(|&x| f(x)).collect::<Result<Vec<_>>>()?;
        Ok(Self { grid: grid.clone(), values })
    }

    /// `∫ f* g` by the grid's quadrature.
    pub fn inner(&self, other: &Self) -> Complex64 {
        weighted_inner(&self.grid.weights, &self.values, &other.values)
    }

    pub fn norm(&self) -> f64 {
        self.inner(self).re.max(0.0).sqrt()
    }

    /// Weighted L² distance `‖self − other‖`.
    pub fn distance(&self, other: &Self) -> f64 {
        let diff: Vec<Complex64> = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        weighted_inner(&self.grid.weights, &diff, &diff).re.max(0.0).sqrt()
    }

    pub fn at(&self, x: f64) -> Complex64 {
        self.grid.interpolate(&self.values, x)
    }

    /// Interpolates onto another grid (zero outside this grid's interval).
    pub fn resample(&self, target: &Grid) -> Self {
        Self::from_fn(target, |x| self.at(x))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self { grid: self.grid.clone(), values: self.values.iter().map(|v| v * s).collect() }
    }

    /// Reads `x,re,im` (line grid) or `r,re,im` (radial grid) CSV.
    pub fn read_csv(input: impl Read) -> Result<Self> {
        let mut buf = String::new();
        let mut input = input;
        input.read_to_string(&mut buf).map_err(io)?;
        let kind = if buf.trim_start().starts_with('r') { GridKind::Radial } else { GridKind::Line };
        let (nodes, cols) = read_rows(buf.as_bytes(), &["x", "re", "im"])?;
        let values = cols.iter().map(|c| Complex64::new(c[0], c[1])).collect();
        let grid = Grid::from_nodes(kind, nodes).map_err(|e| LctError::Parse { line: 2, msg: e.to_string() })?;
        Self::new(grid, values)
    }

    pub fn write_csv(&self, out: &mut impl Write) -> Result<()> {
        let x = if self.grid.kind == GridKind::Line { "x" } else { "r" };
        writeln!(out, "{x},re,im").map_err(io)?;
        for (n, v) in self.grid.nodes.iter().zip(&self.values) {
            writeln!(out, "{},{},{}", fmt(*n), fmt(v.re), fmt(v.im)).map_err(io)?;
        }
        Ok(())
    }
}

impl TwoComponentSampled {
    pub fn new(grid: Grid, plus: Vec<Complex64>, minus: Vec<Complex64>) -> Result<Self> {
        check_values(&grid, &plus)?;
        check_values(&grid, &minus)?;
        Ok(Self { grid, plus, minus })
    }

    pub fn from_fn(grid: &Grid, f: impl Fn(f64) -> [Complex64; 2]) -> Self {
        let (plus, minus) = grid.nodes.iter().map(|&r| f(r)).map(|[p, m]| (p, m)).unzip();
        Self { grid: grid.clone(), plus, minus }
    }

    pub fn try_from_fn(grid: &Grid, f: impl Fn(f64) -> Result<[Complex64; 2]>) -> Result<Self> {
        let vals = grid.nodes.iter().map(|&r| f(r)).collect::<Result<Vec<_>>>()?;
        let (plus, minus) = vals.into_iter().map(|[p, m]| (p, m)).unzip();
        Ok(Self { grid: grid.clone(), plus, minus })
    }

    /// `Σ_σ ∫ f_σ* g_σ`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        let w = &self.grid.weights;
        weighted_inner(w, &self.plus, &other.plus) + weighted_inner(w, &self.minus, &other.minus)
    }

    pub fn norm(&self) -> f64 {
        self.inner(self).re.max(0.0).sqrt()
    }

    pub fn component(&self, sigma: i8) -> &[Complex64] {
        if sigma > 0 {
            &self.plus
        } else {
            &self.minus
        }
    }

    pub fn resample(&self, target: &Grid) -> Self {
        Self::from_fn(target, |r| [self.grid.interpolate(&self.plus, r), self.grid.interpolate(&self.minus, r)])
    }

    /// Reads `r,re_p,im_p,re_m,im_m` CSV.
    pub fn read_csv(input: impl Read) -> Result<Self> {
        let (nodes, cols) = read_rows(input, &["r", "re_p", "im_p", "re_m", "im_m"])?;
        let plus = cols.iter().map(|c| Complex64::new(c[0], c[1])).collect();
        let minus = cols.iter().map(|c| Complex64::new(c[2], c[3])).collect();
        let grid = Grid::from_nodes(GridKind::Radial, nodes).map_err(|e| LctError::Parse { line: 2, msg: e.to_string() })?;
        Self::new(grid, plus, minus)
    }

    pub fn write_csv(&self, out: &mut impl Write) -> Result<()> {
        writeln!(out, "r,re_p,im_p,re_m,im_m").map_err(io)?;
        for ((r, p), m) in self.grid.nodes.iter().zip(&self.plus).zip(&self.minus) {
            writeln!(out, "{},{},{},{},{}", fmt(*r), fmt(p.re), fmt(p.im), fmt(m.re), fmt(m.im)).map_err(io)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trip_is_exact() {
        let g = Grid::line(32, 4.0);
        let f = SampledFunction::from_fn(&g, |x| Complex64::new((-x * x).exp(), x / 3.0));
        let mut buf = Vec::new();
        f.write_csv(&mut buf).unwrap();
        let back = SampledFunction::read_csv(buf.as_slice()).unwrap();
        assert_eq!(back.values, f.values);
        assert_eq!(back.grid.nodes, f.grid.nodes);
        assert_eq!(back.grid.kind, GridKind::Line);
    }

    #[test]
    fn malformed_csv_reports_line() {
        let text = "x,re,im\n0.0,1.0,0.0\n0.5,abc,0.0\n";
        match SampledFunction::read_csv(text.as_bytes()) {
            Err(LctError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        let text = "x,re\n0.0,1.0\n";
        assert!(matches!(SampledFunction::read_csv(text.as_bytes()), Err(LctError::Parse { line: 1, .. })));
    }

    #[test]
    fn two_component_csv_round_trip() {
        let g = Grid::radial(32, 6.0);
        let f = TwoComponentSampled::from_fn(&g, |r| [Complex64::new(r, 0.0), Complex64::new(0.0, -r)]);
        let mut buf = Vec::new();
        f.write_csv(&mut buf).unwrap();
        let back = TwoComponentSampled::read_csv(buf.as_slice()).unwrap();
        assert_eq!(back.plus, f.plus);
        assert_eq!(back.minus, f.minus);
    }
}

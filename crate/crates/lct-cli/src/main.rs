//! `lct`: kernels, transforms and verification of linear canonical
//! transforms from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 success with a grid-too-coarse warning.

mod support;

use clap::{Args, Parser, Subcommand};
use lct::bases::{phi0_continuous, phi0_discrete, phi1_discrete, phi2_continuous, phi2_discrete, phi_plus_discrete};
use lct::engine::{self, Grid, GridKind, SampledFunction, TransformReport, TwoComponentSampled};
use lct::kernels::{
    classic_kernel, classic_kernel_b0, cont_radial_kernel_b0, radial_kernel_b0, KernelRequest, KernelValue, Series,
};
use lct::specfun;
use lct::symplectic::GroupElement;
use lct::{Complex64, LctError, Result};
use serde_json::json;
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use support::{BasisArg, Command, Rep, SeriesArg};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_COARSE: u8 = 3;

#[derive(Parser)]
#[command(name = "lct", version, about = "Linear canonical transforms of SL(2,R) in every subgroup basis")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Tabulate a kernel or matrix element as row,col,re,im CSV.
    Kernel(KernelArgs),
    /// Apply a transform to a sampled signal read from CSV.
    Transform(TransformArgs),
    /// Run verification checks and print a JSON summary.
    Verify(VerifyArgs),
    /// Evaluate a special function.
    Specfun {
        #[command(subcommand)]
        cmd: SpecfunCmd,
    },
    /// Sample a basis function.
    Basis {
        #[command(subcommand)]
        cmd: BasisCmd,
    },
}

#[derive(Args, Clone)]
struct Selector {
    /// Representation series; omit for the classic transform on the line.
    #[arg(long, value_enum)]
    series: Option<SeriesArg>,
    /// Bargmann index k of the discrete series.
    #[arg(long)]
    k: Option<f64>,
    /// Parity epsilon (0 or 0.5) of the continuous series.
    #[arg(long)]
    eps: Option<f64>,
    /// Parameter s of the continuous series, k = 1/2 + is.
    #[arg(long)]
    s: Option<f64>,
    /// Basis in which the operator is diagonal.
    #[arg(long, value_enum, default_value = "parabolic")]
    basis: BasisArg,
}

#[derive(Args)]
struct MatrixArgs {
    /// Group element as a,b,c,d.
    #[arg(long, allow_hyphen_values = true)]
    matrix: Option<String>,
    /// Group element as four positional numbers a b c d.
    #[arg(num_args = 4, allow_negative_numbers = true, conflicts_with = "matrix")]
    elements: Option<Vec<f64>>,
}

impl MatrixArgs {
    fn element(&self) -> Result<GroupElement> {
        match (&self.matrix, &self.elements) {
            (Some(t), _) => support::parse_matrix(t),
            (None, Some(v)) => GroupElement::new(v[0], v[1], v[2], v[3]),
            (None, None) => Err(LctError::InvalidIndex("a group element is required (--matrix a,b,c,d)".into())),
        }
    }
}

#[derive(Args)]
struct KernelArgs {
    #[command(flatten)]
    sel: Selector,
    #[command(flatten)]
    mat: MatrixArgs,
    /// Row and column values (positions, eigenvalues or levels), comma separated.
    #[arg(long, allow_hyphen_values = true)]
    points: Option<String>,
    /// Default point set as n,rmax when --points is absent.
    #[arg(long, default_value = "16,8")]
    grid: String,
    /// Output path (default stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TransformArgs {
    #[command(flatten)]
    sel: Selector,
    #[command(flatten)]
    mat: MatrixArgs,
    /// Input CSV (x,re,im / r,re,im / r,re_p,im_p,re_m,im_m); default stdin.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output CSV; default stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Where to write the JSON report; default stdout after --out, else stderr.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Resample the input onto a Gauss-Legendre grid n,rmax before transforming.
    #[arg(long)]
    grid: Option<String>,
    /// Largest acceptable probe defect; above it the exit code is 1.
    #[arg(long, default_value_t = 1e-3)]
    tol: f64,
}

#[derive(Args)]
struct VerifyArgs {
    /// `all` or one suite name (fourier, composition, reconstruction, unitarity,
    /// action, matrix-elements, mellin, dual-forms, limits, structure, prefactor).
    #[arg(long, default_value = "all")]
    suite: String,
    /// Reduced sample counts and grids.
    #[arg(long)]
    quick: bool,
    /// Include wall-clock seconds (makes the output non-reproducible).
    #[arg(long)]
    timings: bool,
    /// Output path (default stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum SpecfunCmd {
    /// Print re,im of a function. Complex arguments are written re,im.
    ///
    /// Functions: gamma z, lngamma z, rgamma z, hyp1f1 a b z, hyp2f1 a b c z,
    /// besselj nu x, hankel1 s x, hankel2 s x (order 2is), macdonald s x
    /// (K_2is), laguerre n alpha x, whittakerm kappa mu z, whittakerw kappa mu x.
    Eval {
        function: String,
        #[arg(allow_hyphen_values = true, num_args = 1..)]
        args: Vec<String>,
    },
}

#[derive(Subcommand)]
enum BasisCmd {
    /// Sample one eigenfunction as r,re,im (two-component: r,re_p,im_p,re_m,im_m).
    Eval(BasisEvalArgs),
}

#[derive(Args)]
struct BasisEvalArgs {
    #[command(flatten)]
    sel: Selector,
    /// Level n (elliptic, discrete and classic), m (elliptic, continuous),
    /// rho (parabolic-plus) or mu (hyperbolic).
    #[arg(long, allow_hyphen_values = true)]
    index: f64,
    /// Component sign tau of the continuous Mellin basis.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    tau: i8,
    /// Sample positions, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    points: Option<String>,
    /// Uniform positions as n,rmax when --points is absent.
    #[arg(long, default_value = "64,8")]
    grid: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

fn io_err(e: io::Error) -> LctError {
    LctError::Io(e.to_string())
}

fn open_out(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| LctError::Io(format!("{}: {e}", p.display())))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// `n` points `rmax·(i+1)/n`, or `n` points evenly across `[−rmax, rmax]`.
fn uniform(n: usize, rmax: f64, symmetric: bool) -> Vec<f64> {
    if symmetric {
        (0..n).map(|i| -rmax + 2.0 * rmax * i as f64 / (n - 1) as f64).collect()
    } else {
        (0..n).map(|i| rmax * (i + 1) as f64 / n as f64).collect()
    }
}

fn kernel_points(rep: &Rep, basis: BasisArg, args: &KernelArgs) -> Result<Vec<f64>> {
    if let Some(p) = &args.points {
        return support::parse_list(p, "--points");
    }
    let (n, rmax) = support::parse_grid(&args.grid)?;
    Ok(match (rep, basis) {
        (Rep::Discrete(l), BasisArg::Elliptic) => (0..n).map(|j| l.m(j)).collect(),
        (Rep::Continuous(l), BasisArg::Elliptic) => (0..n).map(|j| l.eps.value() + j as f64 - (n / 2) as f64).collect(),
        (Rep::Classic, _) | (_, BasisArg::HyperbolicJ1 | BasisArg::HyperbolicJ2) => uniform(n, rmax, true),
        _ => uniform(n, rmax, false),
    })
}

fn cmd_kernel(args: &KernelArgs) -> Result<u8> {
    let rep = support::resolve_rep(args.sel.series, args.sel.k, args.sel.eps, args.sel.s)?;
    let basis = args.sel.basis;
    support::check_support(&rep, basis, Command::Kernel)?;
    let m = args.mat.element()?;
    let pts = kernel_points(&rep, basis, args)?;
    let mut out = open_out(&args.out)?;
    let radial = basis == BasisArg::Parabolic;
    let signs: &[i8] = match (rep, basis) {
        (Rep::Continuous(_), BasisArg::Parabolic | BasisArg::HyperbolicJ2) => &[1, -1],
        _ => &[0],
    };
    let two = signs.len() == 2;
    // b = 0 turns position-space kernels into delta lines: one row per point
    let delta = radial && m.has_degenerate_b();
    let header = match (two, delta) {
        (false, false) => "row,col,re,im",
        (true, false) => "row,col,sigma_row,sigma_col,re,im",
        (false, true) => "row,support,re,im",
        (true, true) => "row,sigma,support,re,im",
    };
    writeln!(out, "{header}").map_err(io_err)?;
    if delta {
        for &r in &pts {
            for &sg in signs {
                let v = match rep {
                    Rep::Classic => classic_kernel_b0(&m, r)?,
                    Rep::Discrete(l) => radial_kernel_b0(&l, &m, r)?,
                    Rep::Continuous(l) => cont_radial_kernel_b0(&l, &m, sg, r)?,
                };
                let KernelValue::DeltaLine { amplitude, support } = v else {
                    return Err(LctError::UnsupportedCombination("expected a delta-line kernel at b = 0".into()));
                };
                let lead = if two { format!("{},{sg}", fmt(r)) } else { fmt(r) };
                writeln!(out, "{lead},{},{},{}", fmt(support), fmt(amplitude.re), fmt(amplitude.im)).map_err(io_err)?;
            }
        }
        out.flush().map_err(io_err)?;
        return Ok(0);
    }
    let series = match rep {
        Rep::Discrete(l) => Some(Series::Discrete(l)),
        Rep::Continuous(l) => Some(Series::Continuous(l)),
        Rep::Classic => None,
    };
    for &row in &pts {
        for &sr in signs {
            for &col in &pts {
                for &sc in signs {
                    let v = match series {
                        None => classic_kernel(&m, row, col)?,
                        Some(series) => {
                            let req = KernelRequest { series, basis: basis.tag(), m, row, col, row_sign: sr, col_sign: sc };
                            req.evaluate()?
                        }
                    };
                    let v = v.regular().ok_or_else(|| LctError::UnsupportedCombination("delta-line kernel off the b = 0 path".into()))?;
                    let lead = if two { format!("{},{},{sr},{sc}", fmt(row), fmt(col)) } else { format!("{},{}", fmt(row), fmt(col)) };
                    writeln!(out, "{lead},{},{}", fmt(v.re), fmt(v.im)).map_err(io_err)?;
                }
            }
        }
    }
    out.flush().map_err(io_err)?;
    Ok(0)
}

fn read_input(path: &Option<PathBuf>) -> Result<String> {
    let mut buf = String::new();
    match path {
        Some(p) => File::open(p)
            .and_then(|mut f| f.read_to_string(&mut buf))
            .map_err(|e| LctError::Io(format!("{}: {e}", p.display())))?,
        None => io::stdin().read_to_string(&mut buf).map_err(io_err)?,
    };
    Ok(buf)
}

/// Signal on the target grid: the input itself, or its interpolant on a
/// Gauss-Legendre grid from `--grid`.
fn target_grid(args: &TransformArgs, kind: GridKind) -> Result<Option<Grid>> {
    let Some(g) = &args.grid else { return Ok(None) };
    let (n, rmax) = support::parse_grid(g)?;
    Ok(Some(match kind {
        GridKind::Line => Grid::line(n, rmax),
        GridKind::Radial => Grid::radial(n, rmax),
    }))
}

/// Probe count for the report: enough to span the smooth part of the
/// signal space, few enough to stay resolvable on small grids.
fn probe_count(n: usize) -> usize {
    (n / 8).clamp(2, 12)
}

/// Full-grid defects cost a dense eigen-solve, so they are skipped past this size.
const FULL_DEFECT_MAX: usize = 512;

fn cmd_transform(args: &TransformArgs) -> Result<u8> {
    let rep = support::resolve_rep(args.sel.series, args.sel.k, args.sel.eps, args.sel.s)?;
    let basis = args.sel.basis;
    support::check_support(&rep, basis, Command::Transform)?;
    let m = args.mat.element()?;
    let text = read_input(&args.input)?;
    let mut report = TransformReport::default();
    let mut csv = Vec::new();
    let grid_checked;
    let norm_change;
    match rep {
        Rep::Continuous(l) => {
            let mut f = TwoComponentSampled::read_csv(text.as_bytes())?;
            if let Some(g) = target_grid(args, GridKind::Radial)? {
                f = f.resample(&g);
            }
            report.grid_too_coarse = engine::grid_too_coarse(&m, &f.grid);
            let out = engine::apply_cont_radial(&l, &m, &f)?;
            out.write_csv(&mut csv)?;
            if !m.has_degenerate_b() {
                let g = &f.grid;
                let w2: Vec<f64> = g.weights.iter().chain(&g.weights).copied().collect();
                let u = engine::cont_radial_matrix(&l, &m, g)?.operator(&w2);
                let count = probe_count(g.len()) as i32;
                let ms: Vec<f64> = (-count / 2..count - count / 2).map(|j| l.eps.value() + j as f64).collect();
                report.probe_defect = engine::continuous_probes(&l, g, &ms)
                    .and_then(|q| engine::probe_subspace_defect(&u, &w2, &q))
                    .ok();
                if 2 * g.len() <= FULL_DEFECT_MAX {
                    report.unitarity_defect = engine::unitarity_defect(&u, &w2).ok();
                }
            }
            norm_change = (out.norm() - f.norm()).abs() / f.norm().max(f64::MIN_POSITIVE);
            grid_checked = f.grid.len();
        }
        _ => {
            let mut f = SampledFunction::read_csv(text.as_bytes())?;
            let want = if rep == Rep::Classic { GridKind::Line } else { GridKind::Radial };
            if f.grid.kind != want {
                let h = if want == GridKind::Line { "x,re,im" } else { "r,re,im" };
                return Err(LctError::Parse { line: 1, msg: format!("this transform reads {h}") });
            }
            if let Some(g) = target_grid(args, want)? {
                f = f.resample(&g);
            }
            report.grid_too_coarse = engine::grid_too_coarse(&m, &f.grid);
            let (out, kernel) = match (rep, basis) {
                (Rep::Classic, _) => (engine::apply_classic(&m, &f)?, None),
                (Rep::Discrete(l), BasisArg::ParabolicPlus) => {
                    let k = if m.has_degenerate_b() { None } else { engine::jplus_matrix(&l, &m, &f.grid).ok() };
                    (engine::apply_jplus(&l, &m, &f)?, k)
                }
                (Rep::Discrete(l), _) => {
                    let k = if m.has_degenerate_b() { None } else { Some(engine::radial_matrix(&l, &m, &f.grid)?) };
                    (engine::apply_radial(&l, &m, &f)?, k)
                }
                (Rep::Continuous(_), _) => unreachable!("handled above"),
            };
            let kernel = match (rep, kernel) {
                (Rep::Classic, _) if !m.has_degenerate_b() => Some(engine::classic_matrix(&m, &f.grid)?),
                (_, k) => k,
            };
            out.write_csv(&mut csv)?;
            if let Some(k) = kernel {
                let g = &f.grid;
                let u = k.operator(&g.weights);
                let q = match rep {
                    Rep::Discrete(l) => engine::laguerre_probes(&l, g, probe_count(g.len())),
                    _ => Ok(engine::hermite_probes(g, probe_count(g.len()))),
                };
                report.probe_defect = q.and_then(|q| engine::probe_subspace_defect(&u, &g.weights, &q)).ok();
                if g.len() <= FULL_DEFECT_MAX {
                    report.unitarity_defect = engine::unitarity_defect(&u, &g.weights).ok();
                }
            }
            norm_change = (out.norm() - f.norm()).abs() / f.norm().max(f64::MIN_POSITIVE);
            grid_checked = f.grid.len();
        }
    }
    report.notes.push(format!("relative change of the L2 norm on {grid_checked} nodes: {norm_change:.3e}"));
    if report.unitarity_defect.is_none() && !m.has_degenerate_b() {
        report.notes.push(format!("full-grid unitarity defect skipped above {FULL_DEFECT_MAX} unknowns"));
    }
    if report.grid_too_coarse {
        report.notes.push("kernel oscillation is under-resolved on this grid".into());
    }
    let mut out = open_out(&args.out)?;
    out.write_all(&csv).map_err(io_err)?;
    out.flush().map_err(io_err)?;
    drop(out);
    let json = serde_json::to_string_pretty(&report).map_err(|e| LctError::Io(e.to_string()))?;
    match (&args.report, &args.out) {
        (Some(p), _) => std::fs::write(p, json + "\n").map_err(|e| LctError::Io(format!("{}: {e}", p.display())))?,
        (None, Some(_)) => println!("{json}"),
        (None, None) => eprintln!("{json}"),
    }
    // an under-resolved grid explains a large defect, so the warning wins
    if report.grid_too_coarse {
        return Ok(EXIT_COARSE);
    }
    Ok(if report.probe_defect.is_some_and(|d| d > args.tol) { EXIT_VERIFY } else { 0 })
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8> {
    let ids = engine::suite::ids_for(&args.suite)?;
    let opts = engine::suite::SuiteOptions { quick: args.quick, ..Default::default() };
    let mut all = true;
    let mut criteria = Vec::new();
    for id in ids {
        let r = engine::suite::run(id, &opts);
        all &= r.passed();
        let metrics: Vec<_> = r
            .metrics
            .iter()
            .map(|m| json!({"name": m.name, "value": m.value, "limit": m.limit, "passed": m.passed, "gating": m.gating}))
            .collect();
        let mut entry = json!({
            "id": r.id,
            "suite": r.suite,
            "title": r.title,
            "passed": r.passed(),
            "strictPassed": r.strict_passed(),
            "metrics": metrics,
            "notes": r.notes,
        });
        if args.timings {
            entry["seconds"] = json!(r.seconds);
        }
        criteria.push(entry);
    }
    let summary = json!({
        "schemaVersion": engine::SCHEMA_VERSION,
        "suite": args.suite,
        "quick": args.quick,
        "passed": all,
        "criteria": criteria,
    });
    let mut out = open_out(&args.out)?;
    writeln!(out, "{}", serde_json::to_string_pretty(&summary).map_err(|e| LctError::Io(e.to_string()))?).map_err(io_err)?;
    out.flush().map_err(io_err)?;
    Ok(if all { 0 } else { EXIT_VERIFY })
}

fn complex_arg(t: &str) -> Result<Complex64> {
    let v = support::parse_list(t, "argument")?;
    match v[..] {
        [re] => Ok(Complex64::new(re, 0.0)),
        [re, im] => Ok(Complex64::new(re, im)),
        _ => Err(LctError::InvalidIndex(format!("argument {t:?} is neither re nor re,im"))),
    }
}

fn real_arg(t: &str) -> Result<f64> {
    t.trim().parse().map_err(|e| LctError::InvalidIndex(format!("argument {t:?}: {e}")))
}

fn cmd_specfun(function: &str, args: &[String]) -> Result<u8> {
    let arity = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(LctError::InvalidIndex(format!("{function} takes {n} arguments, got {}", args.len())))
        }
    };
    let z = |i: usize| complex_arg(&args[i]);
    let x = |i: usize| real_arg(&args[i]);
    let re = |v: f64| Complex64::new(v, 0.0);
    let v = match function {
        "gamma" => { arity(1)?; specfun::gamma(z(0)?)? }
        "lngamma" => { arity(1)?; specfun::ln_gamma(z(0)?)? }
        "rgamma" => { arity(1)?; specfun::rgamma(z(0)?) }
        "hyp1f1" => { arity(3)?; specfun::hyp1f1(z(0)?, z(1)?, z(2)?)? }
        "hyp2f1" => { arity(4)?; specfun::hyp2f1(z(0)?, z(1)?, z(2)?, z(3)?)? }
        "besselj" => { arity(2)?; specfun::bessel_j(z(0)?, x(1)?)? }
        "hankel1" | "hankel2" => {
            arity(2)?;
            let kind = if function == "hankel1" { specfun::HankelKind::First } else { specfun::HankelKind::Second };
            specfun::hankel_imaginary_order(kind, x(0)?, x(1)?, specfun::Side::Above)?
        }
        "macdonald" => { arity(2)?; re(specfun::macdonald_imaginary_order(x(0)?, x(1)?)?) }
        "laguerre" => {
            arity(3)?;
            let n = x(0)?;
            if n < 0.0 || n.fract() != 0.0 {
                return Err(LctError::InvalidIndex(format!("laguerre degree must be a non-negative integer, got {n}")));
            }
            re(specfun::laguerre(n as usize, x(1)?, x(2)?))
        }
        "whittakerm" => { arity(3)?; specfun::whittaker_m(z(0)?, z(1)?, z(2)?)? }
        "whittakerw" => { arity(3)?; specfun::whittaker_w(z(0)?, z(1)?, x(2)?)? }
        other => return Err(LctError::UnsupportedCombination(format!("unknown function {other:?}"))),
    };
    println!("re,im");
    println!("{},{}", fmt(v.re), fmt(v.im));
    Ok(0)
}

fn cmd_basis(args: &BasisEvalArgs) -> Result<u8> {
    let rep = support::resolve_rep(args.sel.series, args.sel.k, args.sel.eps, args.sel.s)?;
    let basis = args.sel.basis;
    support::check_support(&rep, basis, Command::BasisEval)?;
    let pts = match &args.points {
        Some(p) => support::parse_list(p, "--points")?,
        None => {
            let (n, rmax) = support::parse_grid(&args.grid)?;
            uniform(n, rmax, rep == Rep::Classic)
        }
    };
    let idx = args.index;
    let level = || {
        if idx < 0.0 || idx.fract() != 0.0 {
            Err(LctError::InvalidIndex(format!("--index must be a level n >= 0 here, got {idx}")))
        } else {
            Ok(idx as usize)
        }
    };
    if args.tau != 1 && args.tau != -1 {
        return Err(LctError::InvalidIndex(format!("--tau must be 1 or -1, got {}", args.tau)));
    }
    let mut out = open_out(&args.out)?;
    if let Rep::Continuous(l) = rep {
        if basis == BasisArg::Elliptic {
            l.check_m(idx)?;
        }
        writeln!(out, "r,re_p,im_p,re_m,im_m").map_err(io_err)?;
        for &r in &pts {
            let [p, m] = match basis {
                BasisArg::Elliptic => phi0_continuous(&l, idx, r)?,
                _ => phi2_continuous(args.tau, idx, r)?,
            };
            writeln!(out, "{},{},{},{},{}", fmt(r), fmt(p.re), fmt(p.im), fmt(m.re), fmt(m.im)).map_err(io_err)?;
        }
    } else {
        writeln!(out, "{},re,im", if rep == Rep::Classic { "x" } else { "r" }).map_err(io_err)?;
        for &r in &pts {
            let v = match (rep, basis) {
                (Rep::Classic, _) => Complex64::new(engine::hermite_function(level()?, r), 0.0),
                (Rep::Discrete(l), BasisArg::Elliptic) => phi0_discrete(&l, level()?, r)?,
                (Rep::Discrete(l), BasisArg::ParabolicPlus) => phi_plus_discrete(&l, idx, r)?,
                (Rep::Discrete(l), BasisArg::HyperbolicJ1) => phi1_discrete(&l, idx, r)?,
                _ => phi2_discrete(idx, r)?,
            };
            writeln!(out, "{},{},{}", fmt(r), fmt(v.re), fmt(v.im)).map_err(io_err)?;
        }
    }
    out.flush().map_err(io_err)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Kernel(a) => cmd_kernel(a),
        Cmd::Transform(a) => cmd_transform(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Specfun { cmd: SpecfunCmd::Eval { function, args } } => cmd_specfun(function, args),
        Cmd::Basis { cmd: BasisCmd::Eval(a) } => cmd_basis(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

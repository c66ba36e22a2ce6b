use lct::bases::{phi0_discrete, DiscreteLabel};
use lct::kernels::radial_kernel;
use lct::symplectic::GroupElement;
use std::io::Write;
use std::process::{Command, Stdio};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn lct(args: &[&str], stdin: Option<&str>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lct"))
        .args(args)
        .env("LCT_THREADS", "2")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn lct");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn rows(csv: &str) -> Vec<Vec<f64>> {
    csv.lines().skip(1).map(|l| l.split(',').map(|t| t.parse().unwrap()).collect()).collect()
}

fn gaussian_csv(n: usize, x_max: f64) -> String {
    let mut s = String::from("x,re,im\n");
    for i in 0..n {
        let x = -x_max + 2.0 * x_max * i as f64 / (n - 1) as f64;
        s += &format!("{x:e},{:e},0\n", (-x * x / 2.0).exp());
    }
    s
}

#[test]
fn radial_kernel_table_matches_library() {
    let r = lct(&["kernel", "--series", "dk", "--k", "0.5", "--basis", "parabolic", "--matrix", "0,1,-1,0", "--grid", "3,2"], None);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout.lines().next(), Some("row,col,re,im"));
    let l = DiscreteLabel::plus(0.5).unwrap();
    let m = GroupElement::fourier();
    let table = rows(&r.stdout);
    assert_eq!(table.len(), 9);
    for row in table {
        let want = radial_kernel(&l, &m, row[0], row[1]).unwrap().regular().unwrap();
        assert_eq!((row[2], row[3]), (want.re, want.im));
    }
}

#[test]
fn continuous_kernel_has_sigma_labels() {
    let r = lct(&["kernel", "--series", "cont", "--eps", "0", "--s", "0.5", "--basis", "parabolic", "--matrix", "0,1,-1,0", "--grid", "2,2"], None);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout.lines().next(), Some("row,col,sigma_row,sigma_col,re,im"));
    let table = rows(&r.stdout);
    assert_eq!(table.len(), 16);
    assert!(table.iter().all(|t| t[2].abs() == 1.0 && t[3].abs() == 1.0));
}

#[test]
fn exceptional_series_is_refused() {
    let r = lct(&["kernel", "--series", "exceptional", "--matrix", "0,1,-1,0"], None);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("exceptional"), "{}", r.stderr);
}

#[test]
fn unsupported_basis_is_refused() {
    let r = lct(&["kernel", "--series", "cont", "--eps", "0", "--s", "0.5", "--basis", "parabolic-plus", "--matrix", "0,1,-1,0"], None);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("unsupported combination"), "{}", r.stderr);
}

#[test]
fn positional_matrix_equals_flag() {
    let a = lct(&["kernel", "--series", "dk", "--k", "0.75", "--basis", "elliptic", "--grid", "3,1", "2", "1", "1", "1"], None);
    let b = lct(&["kernel", "--series", "dk", "--k", "0.75", "--basis", "elliptic", "--grid", "3,1", "--matrix", "2,1,1,1"], None);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn non_unimodular_matrix_is_a_usage_error() {
    let r = lct(&["kernel", "--matrix", "1,1,1,1"], None);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("unimodular"));
}

#[test]
fn fourier_transform_of_gaussian() {
    let r = lct(&["transform", "--matrix", "0,1,-1,0", "--grid", "256,10"], Some(&gaussian_csv(401, 10.0)));
    assert_eq!(r.code, 0, "{}", r.stderr);
    let report: serde_json::Value = serde_json::from_str(&r.stderr).unwrap();
    assert_eq!(report["schemaVersion"], 1);
    assert_eq!(report["gridTooCoarse"], false);
    assert!(report["probeDefect"].as_f64().unwrap() < 1e-10);
    let (c, s) = (std::f64::consts::FRAC_1_SQRT_2, -std::f64::consts::FRAC_1_SQRT_2);
    for row in rows(&r.stdout) {
        let g = (-row[0] * row[0] / 2.0).exp();
        // the input was interpolated from a uniform grid, which limits accuracy
        assert!((row[1] - c * g).abs() < 1e-6 && (row[2] - s * g).abs() < 1e-6, "{row:?}");
    }
}

#[test]
fn delta_branch_scales() {
    let r = lct(&["transform", "--matrix", "2,0,0,0.5"], Some(&gaussian_csv(81, 8.0)));
    assert_eq!(r.code, 0, "{}", r.stderr);
    for row in rows(&r.stdout) {
        // f(x/2)/√2, read off a piecewise-polynomial interpolant
        let want = (-row[0] * row[0] / 8.0).exp() / 2f64.sqrt();
        assert!((row[1] - want).abs() < 1e-4 && row[2] == 0.0, "{row:?}");
    }
}

#[test]
fn malformed_csv_reports_line() {
    let r = lct(&["transform", "--matrix", "0,1,-1,0"], Some("x,re,im\n0,1,0\n1,abc,0\n"));
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 3"), "{}", r.stderr);
    let r = lct(&["transform", "--series", "dk", "--k", "1", "--matrix", "0,1,-1,0"], Some("x,re,im\n0,1,0\n1,1,0\n"));
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 1"), "{}", r.stderr);
}

#[test]
fn coarse_grid_is_flagged_with_exit_three() {
    let r = lct(&["transform", "--matrix", "1,0.01,0,1"], Some(&gaussian_csv(128, 8.0)));
    assert_eq!(r.code, 3, "{}", r.stderr);
    let report: serde_json::Value = serde_json::from_str(&r.stderr).unwrap();
    assert_eq!(report["gridTooCoarse"], true);
}

#[test]
fn report_goes_to_file() {
    let dir = std::env::temp_dir().join(format!("lct-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("in.csv");
    let mut s = String::from("r,re,im\n");
    let l = DiscreteLabel::plus(1.0).unwrap();
    for i in 0..300 {
        let r = 0.01 + 12.0 * i as f64 / 299.0;
        s += &format!("{r:e},{:e},0\n", phi0_discrete(&l, 0, r).unwrap().re);
    }
    std::fs::write(&input, s).unwrap();
    let (out, rep) = (dir.join("out.csv"), dir.join("report.json"));
    let args = ["transform", "--series", "dk", "--k", "1", "--matrix", "1,1,0,1", "--grid", "384,12"];
    let r = lct(
        &[&args[..], &["--in", input.to_str().unwrap(), "--out", out.to_str().unwrap(), "--report", rep.to_str().unwrap()]].concat(),
        None,
    );
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.is_empty());
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&rep).unwrap()).unwrap();
    assert!(report["probeDefect"].as_f64().unwrap() < 1e-6, "{report}");
    assert!(std::fs::read_to_string(&out).unwrap().starts_with("r,re,im\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn outputs_are_deterministic() {
    let args = ["kernel", "--series", "cont", "--eps", "0.5", "--s", "0.6", "--basis", "hyperbolic-j2", "--matrix", "2,1,1,1", "--grid", "3,1"];
    let a = lct(&args, None);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, lct(&args, None).stdout);
    let v = ["verify", "--suite", "structure"];
    let a = lct(&v, None);
    assert_eq!(a.code, 0, "{}", a.stdout);
    assert_eq!(a.stdout, lct(&v, None).stdout);
}

#[test]
fn verify_summary_shape() {
    let r = lct(&["verify", "--suite", "dual-forms", "--timings"], None);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["criteria"][0]["id"], 8);
    assert!(v["criteria"][0]["seconds"].is_number());
    assert!(!v["criteria"][0]["metrics"].as_array().unwrap().is_empty());
    let r = lct(&["verify", "--suite", "nope"], None);
    assert_eq!(r.code, 2);
}

#[test]
fn specfun_eval() {
    let r = lct(&["specfun", "eval", "gamma", "0.5"], None);
    assert_eq!(r.code, 0);
    let v = rows(&r.stdout);
    assert!((v[0][0] - std::f64::consts::PI.sqrt()).abs() < 1e-14 && v[0][1] == 0.0);
    let r = lct(&["specfun", "eval", "hyp1f1", "1", "2", "-1,0.5"], None);
    assert_eq!(r.code, 0);
    assert_eq!(lct(&["specfun", "eval", "hyp2f1", "1", "2"], None).code, 2);
}

#[test]
fn basis_eval_matches_library() {
    let r = lct(&["basis", "eval", "--series", "dk", "--k", "1", "--basis", "elliptic", "--index", "2", "--points", "0.5,1,2"], None);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let l = DiscreteLabel::plus(1.0).unwrap();
    for row in rows(&r.stdout) {
        assert_eq!(row[1], phi0_discrete(&l, 2, row[0]).unwrap().re);
    }
    let r = lct(&["basis", "eval", "--series", "cont", "--eps", "0", "--s", "0.5", "--basis", "elliptic", "--index", "0.5"], None);
    assert_eq!(r.code, 2, "m - eps must be an integer");
}

use thiserror::Error;

/// Every failure mode of the library. Variants carry enough context to
/// decide which alternative branch the caller should take.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LctError {
    #[error("matrix is not unimodular: ad - bc = {det}")]
    NotUnimodular { det: f64 },
    #[error("|b| = {b:e} is below the degenerate threshold; use the b = 0 form")]
    DegenerateB { b: f64 },
    #[error("|a| = {a:e} is too small for this closed form")]
    DegenerateA { a: f64 },
    #[error("|d| = {d:e} is too small for this closed form")]
    DegenerateD { d: f64 },
    #[error("gamma function pole at z = {re} + {im}i")]
    PoleAtNonPositiveInteger { re: f64, im: f64 },
    #[error("parameter pole: {0}")]
    ParameterPole(&'static str),
    #[error("{what} did not converge after {terms} terms")]
    NonConvergence { what: &'static str, terms: usize },
    #[error("2F1 argument {z} lies on the branch cut [1, inf)")]
    OnBranchCut { z: f64 },
    #[error("1/(ad) = {z} is within tolerance of the 2F1 branch cut")]
    BranchCutProximity { z: f64 },
    #[error("imaginary order 2is with |s| = {s:e} is too close to zero for the J-combination")]
    SmallS { s: f64 },
    #[error("Macdonald function underflows at x = {x}")]
    Underflow { x: f64 },
    #[error("Whittaker M-combination is degenerate at mu = {re} + {im}i")]
    DegenerateMu { re: f64, im: f64 },
    #[error("element lies on the elliptic subgroup; the generic closed form degenerates there")]
    EllipticDegenerate,
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("composition sign undetermined: residuals {plus:e} (+1) and {minus:e} (-1)")]
    Undetermined { plus: f64, minus: f64 },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unsupported combination: {0}")]
    UnsupportedCombination(String),
    #[error("I/O error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, LctError>;

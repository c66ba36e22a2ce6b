//! Selector parsing and the (series, basis) support table.

use clap::ValueEnum;
use lct::bases::{BasisTag, ContinuousLabel, DiscreteLabel, Epsilon, SeriesSign};
use lct::symplectic::GroupElement;
use lct::{LctError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesArg {
    /// Discrete series D+_k.
    Dk,
    /// Discrete series D-_k.
    Dkminus,
    /// Continuous series C^eps_s.
    Cont,
    /// Exceptional continuous series (not supported).
    Exceptional,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    /// J0 eigenbasis (oscillator).
    Elliptic,
    /// Radial position r (J- eigenbasis).
    Parabolic,
    /// Hankel basis (J+ eigenbasis).
    ParabolicPlus,
    /// Repulsive oscillator (J1 eigenbasis).
    HyperbolicJ1,
    /// Mellin basis (J2 eigenbasis).
    HyperbolicJ2,
}

impl BasisArg {
    pub fn tag(self) -> BasisTag {
        match self {
            BasisArg::Elliptic => BasisTag::J0,
            BasisArg::Parabolic => BasisTag::JMinus,
            BasisArg::ParabolicPlus => BasisTag::JPlus,
            BasisArg::HyperbolicJ1 => BasisTag::J1,
            BasisArg::HyperbolicJ2 => BasisTag::J2,
        }
    }
}

/// A resolved series: the classic line transform, or a labelled
/// representation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Rep {
    Classic,
    Discrete(DiscreteLabel),
    Continuous(ContinuousLabel),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Classic,
    Discrete,
    Continuous,
}

impl Rep {
    pub fn family(&self) -> Family {
        match self {
            Rep::Classic => Family::Classic,
            Rep::Discrete(_) => Family::Discrete,
            Rep::Continuous(_) => Family::Continuous,
        }
    }
}

/// What each command can do with a (family, basis) pair.
pub struct Support {
    pub family: Family,
    pub basis: BasisArg,
    pub kernel: bool,
    pub transform: bool,
    pub basis_eval: bool,
}

const fn row(family: Family, basis: BasisArg, kernel: bool, transform: bool, basis_eval: bool) -> Support {
    Support { family, basis, kernel, transform, basis_eval }
}

pub const SUPPORT: &[Support] = &[
    row(Family::Classic, BasisArg::Parabolic, true, true, false),
    row(Family::Classic, BasisArg::Elliptic, false, false, true),
    row(Family::Discrete, BasisArg::Elliptic, true, false, true),
    row(Family::Discrete, BasisArg::Parabolic, true, true, false),
    row(Family::Discrete, BasisArg::ParabolicPlus, true, true, true),
    row(Family::Discrete, BasisArg::HyperbolicJ1, true, false, true),
    row(Family::Discrete, BasisArg::HyperbolicJ2, true, false, true),
    row(Family::Continuous, BasisArg::Elliptic, true, false, true),
    row(Family::Continuous, BasisArg::Parabolic, true, true, false),
    row(Family::Continuous, BasisArg::HyperbolicJ2, true, false, true),
];

#[derive(Clone, Copy, Debug)]
pub enum Command {
    Kernel,
    Transform,
    BasisEval,
}

pub fn check_support(rep: &Rep, basis: BasisArg, cmd: Command) -> Result<()> {
    let ok = SUPPORT.iter().any(|s| {
        s.family == rep.family()
            && s.basis == basis
            && match cmd {
                Command::Kernel => s.kernel,
                Command::Transform => s.transform,
                Command::BasisEval => s.basis_eval,
            }
    });
    if ok {
        return Ok(());
    }
    let what = match cmd {
        Command::Kernel => "kernel",
        Command::Transform => "transform",
        Command::BasisEval => "basis eval",
    };
    let family = match rep.family() {
        Family::Classic => "the classic transform (no --series)",
        Family::Discrete => "the discrete series",
        Family::Continuous => "the continuous series",
    };
    Err(LctError::UnsupportedCombination(format!(
        "{what} is not available for {family} in the {} basis",
        basis.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    )))
}

pub fn resolve_rep(series: Option<SeriesArg>, k: Option<f64>, eps: Option<f64>, s: Option<f64>) -> Result<Rep> {
    let need = |v: Option<f64>, flag: &str| v.ok_or_else(|| LctError::InvalidLabel(format!("{flag} is required for this series")));
    match series {
        None => Ok(Rep::Classic),
        Some(SeriesArg::Dk) => Ok(Rep::Discrete(DiscreteLabel::new(need(k, "--k")?, SeriesSign::Plus)?)),
        Some(SeriesArg::Dkminus) => Ok(Rep::Discrete(DiscreteLabel::new(need(k, "--k")?, SeriesSign::Minus)?)),
        Some(SeriesArg::Cont) => {
            let eps = Epsilon::from_f64(need(eps, "--eps")?)?;
            Ok(Rep::Continuous(ContinuousLabel::new(eps, need(s, "--s")?)?))
        }
        Some(SeriesArg::Exceptional) => Err(LctError::UnsupportedCombination(
            "the exceptional continuous series has no kernels here; only the discrete and principal continuous series are implemented"
                .into(),
        )),
    }
}

/// Parses `a,b,c,d`.
pub fn parse_matrix(text: &str) -> Result<GroupElement> {
    let v = parse_list(text, "--matrix")?;
    if v.len() != 4 {
        return Err(LctError::InvalidIndex(format!("--matrix needs four entries a,b,c,d, got {}", v.len())));
    }
    GroupElement::new(v[0], v[1], v[2], v[3])
}

/// Parses `n,rmax`.
pub fn parse_grid(text: &str) -> Result<(usize, f64)> {
    let v = parse_list(text, "--grid")?;
    if v.len() != 2 || v[0] < 2.0 || v[0].fract() != 0.0 || v[1] <= 0.0 {
        return Err(LctError::InvalidIndex(format!("--grid needs n,rmax with integer n >= 2 and rmax > 0, got {text:?}")));
    }
    Ok((v[0] as usize, v[1]))
}

pub fn parse_list(text: &str, flag: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| LctError::InvalidIndex(format!("{flag}: {t:?}: {e}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_basis_has_a_row_for_some_family() {
        for b in BasisArg::value_variants() {
            assert!(SUPPORT.iter().any(|s| s.basis == *b), "{b:?}");
        }
    }

    #[test]
    fn continuous_parabolic_plus_is_refused() {
        let rep = resolve_rep(Some(SeriesArg::Cont), None, Some(0.0), Some(0.5)).unwrap();
        assert!(matches!(check_support(&rep, BasisArg::ParabolicPlus, Command::Kernel), Err(LctError::UnsupportedCombination(_))));
    }

    #[test]
    fn matrix_must_be_unimodular() {
        assert!(parse_matrix("0,1,-1,0").is_ok());
        assert!(matches!(parse_matrix("1,1,1,1"), Err(LctError::NotUnimodular { .. })));
        assert!(parse_matrix("1,2,3").is_err());
    }
}

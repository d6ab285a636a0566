//! The identity checks shared by the `verify` command and the acceptance suite.
//!
//! Each check returns a [`Check`]. A computation that errors counts as a failure;
//! only inputs outside a check's domain are skipped.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::decompose::{degree_sum_check, multiplicity_sum_check, MonomialIdeal};
use crate::error::{Error, Result};
use crate::grmod::ModulePresentation;
use crate::gsop::{find_gsop, find_gsop_with, GsopResult, SearchStrategy, DEFAULT_MAX_TRIES};
use crate::koszul::{build_koszul, euler_poincare_identity_check, koszul_homology, DEFAULT_SLACK};
use crate::ring::{format_rational, Polynomial};
use crate::samuel::samuel_multiplicity;
use crate::series::{dimension_and_degree, poincare, Dimension};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub outcome: Outcome,
    pub detail: String,
}

impl Check {
    fn judged(name: &'static str, ok: bool, detail: String) -> Self {
        Check { name, outcome: if ok { Outcome::Pass } else { Outcome::Fail }, detail }
    }

    fn errored(name: &'static str, e: &Error) -> Self {
        Check { name, outcome: Outcome::Fail, detail: format!("error: {e}") }
    }

    fn skipped(name: &'static str, reason: &str) -> Self {
        Check { name, outcome: Outcome::Skipped(reason.to_string()), detail: String::new() }
    }

    pub fn failed(&self) -> bool {
        self.outcome == Outcome::Fail
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass => write!(f, "pass: {}", self.detail),
            Outcome::Fail => write!(f, "FAIL: {}", self.detail),
            Outcome::Skipped(reason) => write!(f, "skipped: {reason}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    Smoke,
    KoszulSamuel,
    MainTheorem,
    EulerPoincare,
    Decompose,
}

impl Scope {
    pub fn parse(s: &str) -> Option<Scope> {
        Some(match s {
            "all" => Scope::All,
            "smoke" => Scope::Smoke,
            "koszul_samuel" => Scope::KoszulSamuel,
            "main_theorem" => Scope::MainTheorem,
            "euler_poincare" => Scope::EulerPoincare,
            "decompose" => Scope::Decompose,
            _ => return None,
        })
    }

    fn includes(self, other: Scope) -> bool {
        self == Scope::All || self == other
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub max_tries: usize,
    pub window_slack: i64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 0, max_tries: DEFAULT_MAX_TRIES, window_slack: DEFAULT_SLACK }
    }
}

fn dim_of(m: &ModulePresentation) -> Option<usize> {
    dimension_and_degree(&poincare(m)).d1.finite()
}

/// Pole order, GSOP size and Samuel degree for the maximal ideal agree.
pub fn smoke(m: &ModulePresentation, gsop: &GsopResult) -> Check {
    let name = "smoke";
    let Some(d) = dim_of(m) else {
        return Check::skipped(name, "zero module");
    };
    let maximal: Vec<Polynomial> = (0..m.ring().nvars()).map(|v| Polynomial::var(m.ring(), v)).collect();
    match samuel_multiplicity(m, &maximal, d, None) {
        Ok(fit) => Check::judged(
            name,
            d == gsop.elements.len() && d == fit.fitted_degree,
            format!("d1={d} gsop={} samuel={}", gsop.elements.len(), fit.fitted_degree),
        ),
        Err(e) => Check::errored(name, &e),
    }
}

fn koszul_chi(m: &ModulePresentation, xs: &[Polynomial], slack: i64) -> Result<i64> {
    Ok(koszul_homology(&build_koszul(m, xs)?, slack)?.chi)
}

/// `χ(y, M) = e(M, (y), D)`, and `χ = 0` once an extra parameter is appended.
pub fn koszul_samuel(m: &ModulePresentation, gsop: &GsopResult, slack: i64) -> Check {
    let name = "koszul_samuel";
    let Some(d) = dim_of(m) else {
        return Check::skipped(name, "zero module");
    };
    let run = || -> Result<(i64, BigInt, i64)> {
        let chi = koszul_chi(m, &gsop.elements, slack)?;
        let e = samuel_multiplicity(m, &gsop.elements, d, None)?.leading_delta;
        let mut padded = gsop.elements.clone();
        padded.push(Polynomial::var(m.ring(), 0));
        Ok((chi, e, koszul_chi(m, &padded, slack)?))
    };
    match run() {
        Ok((chi, e, padded)) => Check::judged(
            name,
            BigInt::from(chi) == e && padded == 0,
            format!("chi={chi} e={e} padded_chi={padded}"),
        ),
        Err(e) => Check::errored(name, &e),
    }
}

/// `deg(M) = e(M, (y), D) / ∏ deg y_i` for every supplied system, with one common value.
pub fn main_theorem(m: &ModulePresentation, gsops: &[GsopResult]) -> Check {
    let name = "main_theorem";
    let report = dimension_and_degree(&poincare(m));
    let Dimension::Finite(d) = report.d1 else {
        return Check::skipped(name, "zero module");
    };
    let mut values = Vec::new();
    for g in gsops {
        match samuel_multiplicity(m, &g.elements, d, None) {
            Ok(fit) => values.push(BigRational::new(fit.leading_delta, BigInt::from(g.degree_product()))),
            Err(e) => return Check::errored(name, &e),
        }
    }
    let rendered: Vec<String> = values.iter().map(format_rational).collect();
    Check::judged(
        name,
        !values.is_empty() && values.iter().all(|v| *v == report.degree),
        format!("deg={} quotients=[{}]", format_rational(&report.degree), rendered.join(", ")),
    )
}

/// `χ(t) = P_M(t) ∏ (1 - t^{deg y_i})` with `χ` read off Koszul homology.
pub fn euler_poincare(m: &ModulePresentation, gsop: &GsopResult, slack: i64) -> Check {
    let name = "euler_poincare";
    if dim_of(m).is_none() {
        return Check::skipped(name, "zero module");
    }
    match euler_poincare_identity_check(m, &gsop.elements, slack) {
        Ok(c) => Check::judged(name, c.holds, format!("chi(t)={} expected={}", c.chi_series, c.expected)),
        Err(e) => Check::errored(name, &e),
    }
}

/// The monomial ideal when `M` is a cyclic monomial quotient.
pub fn monomial_quotient(m: &ModulePresentation) -> Option<MonomialIdeal> {
    if m.rank() != 1 {
        return None;
    }
    let gens: Vec<Polynomial> = m.relations().iter().map(|c| c[0].clone()).collect();
    MonomialIdeal::from_polynomials(m.ring(), &gens).ok()
}

/// Degree and multiplicity sum formulas over the top-dimensional minimal primes.
pub fn decompose(m: &ModulePresentation, gsop: &GsopResult) -> Check {
    let name = "decompose";
    let Some(ideal) = monomial_quotient(m) else {
        return Check::skipped(name, "not a cyclic monomial quotient");
    };
    if dim_of(m).is_none() {
        return Check::skipped(name, "zero module");
    }
    let run = || -> Result<Check> {
        let deg = degree_sum_check(m.ring(), &ideal)?;
        let mult = multiplicity_sum_check(m.ring(), &ideal, &gsop.elements)?;
        let terms: Vec<String> = deg
            .top_primes
            .iter()
            .map(|c| format!("{}*{}", c.local_length, format_rational(&c.quotient_degree)))
            .collect();
        Ok(Check::judged(
            name,
            deg.holds() && mult.holds(),
            format!(
                "deg {} = {} ; e {} = {}",
                format_rational(&deg.lhs),
                terms.join(" + "),
                mult.lhs,
                mult.rhs
            ),
        ))
    };
    run().unwrap_or_else(|e| Check::errored(name, &e))
}

/// A second system of parameters distinct from `first`: a random search with
/// another seed, else `first` with its leading element squared.
pub fn second_gsop(m: &ModulePresentation, first: &GsopResult, opts: &VerifyOptions) -> Option<GsopResult> {
    if first.elements.is_empty() {
        return None;
    }
    if let Ok(g) = find_gsop_with(m, opts.seed.wrapping_add(1), opts.max_tries, SearchStrategy::RandomOnly) {
        if g.elements != first.elements {
            return Some(g);
        }
    }
    let mut elements = first.elements.clone();
    elements[0] = elements[0].pow(2);
    let mut degrees = first.degrees.clone();
    degrees[0] *= 2;
    let certificate = m.quotient_by_ideal(&elements, 1).ok()?.total_length(0);
    Some(GsopResult { elements, degrees, certificate, seed: first.seed, tries: 0 })
}

/// Runs the checks selected by `scope`, sharing one system of parameters.
pub fn run_checks(m: &ModulePresentation, scope: Scope, opts: &VerifyOptions) -> Vec<Check> {
    let selected: Vec<(Scope, &'static str)> = [
        (Scope::Smoke, "smoke"),
        (Scope::KoszulSamuel, "koszul_samuel"),
        (Scope::MainTheorem, "main_theorem"),
        (Scope::EulerPoincare, "euler_poincare"),
        (Scope::Decompose, "decompose"),
    ]
    .into_iter()
    .filter(|(s, _)| scope.includes(*s))
    .collect();

    let gsop = match find_gsop(m, opts.seed, opts.max_tries) {
        Ok(g) => g,
        Err(Error::ZeroModule) => {
            return selected.iter().map(|(_, n)| Check::skipped(n, "zero module")).collect();
        }
        Err(e) => return selected.iter().map(|(_, n)| Check::errored(n, &e)).collect(),
    };
    selected
        .into_iter()
        .map(|(s, _)| match s {
            Scope::Smoke => smoke(m, &gsop),
            Scope::KoszulSamuel => koszul_samuel(m, &gsop, opts.window_slack),
            Scope::MainTheorem => {
                let mut systems = vec![gsop.clone()];
                systems.extend(second_gsop(m, &gsop, opts));
                main_theorem(m, &systems)
            }
            Scope::EulerPoincare => euler_poincare(m, &gsop, opts.window_slack),
            Scope::Decompose => decompose(m, &gsop),
            Scope::All => unreachable!(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingDescriptor;

    #[test]
    fn weighted_truncation_passes_everything() {
        let r = RingDescriptor::rational(&[("x", 1), ("y", 2)]);
        let m = ModulePresentation::cyclic(&r, &[Polynomial::var(&r, 0).pow(2)]).unwrap();
        let checks = run_checks(&m, Scope::All, &VerifyOptions::default());
        assert_eq!(checks.len(), 5);
        for c in &checks {
            assert_eq!(c.outcome, Outcome::Pass, "{}: {}", c.name, c.detail);
        }
        assert_eq!(checks[0].detail, "d1=1 gsop=1 samuel=1");
        assert_eq!(checks[1].detail, "chi=2 e=2 padded_chi=0");
        assert_eq!(checks[4].detail, "deg 1 = 2*1/2 ; e 2 = 2");
    }

    #[test]
    fn zero_module_is_skipped() {
        let r = RingDescriptor::rational(&[("x", 1)]);
        let m = ModulePresentation::cyclic(&r, &[Polynomial::one(&r)]).unwrap();
        let checks = run_checks(&m, Scope::All, &VerifyOptions::default());
        assert!(checks.iter().all(|c| matches!(c.outcome, Outcome::Skipped(_))));
    }

    #[test]
    fn finite_length_module() {
        let r = RingDescriptor::rational(&[("x", 1), ("y", 1)]);
        let m = ModulePresentation::cyclic(&r, &[Polynomial::var(&r, 0).pow(2), Polynomial::var(&r, 1).pow(3)]).unwrap();
        for c in run_checks(&m, Scope::All, &VerifyOptions::default()) {
            assert_eq!(c.outcome, Outcome::Pass, "{}: {}", c.name, c.detail);
        }
    }
}

//! Graded systems of parameters.
//!
//! A sequence `y_1..y_D` of homogeneous positive-degree elements, with `D` the
//! dimension of `M`, is a system of parameters when `M/(y)M` has finite length.
//! [`find_gsop`] builds one greedily, cutting the dimension by one per element.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::grmod::{LengthValue, ModulePresentation};
use crate::ring::{monomials_of_degree, Homogeneity, Monomial, Polynomial};
use crate::series::{dimension_and_degree, poincare, Dimension, LaurentPoly};

/// Default per-step candidate budget.
pub const DEFAULT_MAX_TRIES: usize = 200;

const COEFFICIENTS: [i64; 4] = [-2, -1, 1, 2];

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SearchStrategy {
    /// Variables, then pure powers of the common degree, then random combinations.
    #[default]
    Greedy,
    /// Random combinations of the common degree only.
    RandomOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GsopResult {
    pub elements: Vec<Polynomial>,
    pub degrees: Vec<i64>,
    /// Length of `M/(y)M`; always finite.
    pub certificate: LengthValue,
    pub seed: u64,
    /// Candidates evaluated over all steps.
    pub tries: usize,
}

impl GsopResult {
    pub fn degree_product(&self) -> i64 {
        self.degrees.iter().product()
    }
}

pub fn module_dimension(m: &ModulePresentation) -> Dimension {
    dimension_and_degree(&poincare(m)).d1
}

/// Degrees of a parameter sequence; every entry must be homogeneous of positive degree.
pub fn parameter_degrees(ys: &[Polynomial]) -> Result<Vec<i64>> {
    ys.iter()
        .enumerate()
        .map(|(index, y)| match y.homogeneity() {
            Homogeneity::Degree(d) if d > 0 => Ok(d),
            Homogeneity::Degree(d) => Err(Error::NonPositiveDegree { index, degree: d }),
            Homogeneity::Any => Err(Error::NonPositiveDegree { index, degree: 0 }),
            Homogeneity::Inhomogeneous => Err(Error::Inhomogeneous { index, degrees: y.term_degrees() }),
        })
        .collect()
}

pub fn find_gsop(m: &ModulePresentation, seed: u64, max_tries: usize) -> Result<GsopResult> {
    find_gsop_with(m, seed, max_tries, SearchStrategy::Greedy)
}

pub fn find_gsop_with(
    m: &ModulePresentation,
    seed: u64,
    max_tries: usize,
    strategy: SearchStrategy,
) -> Result<GsopResult> {
    let Dimension::Finite(dim) = module_dimension(m) else {
        return Err(Error::ZeroModule);
    };
    let ring = m.ring().clone();
    let n = ring.nvars();
    let weights = ring.weights().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = m.clone();
    let mut elements: Vec<Polynomial> = Vec::new();
    let mut tries = 0usize;

    for step in 1..=dim {
        let target = Dimension::Finite(dim - step);
        let live = live_variables(&current);
        let degree = live.iter().fold(1i64, |acc, &v| acc.lcm(&(weights[v] as i64)));

        let mut fixed: Vec<Polynomial> = Vec::new();
        if strategy == SearchStrategy::Greedy {
            fixed.extend(live.iter().map(|&v| Polynomial::var(&ring, v)));
            for &v in &live {
                let e = (degree / weights[v] as i64) as u32;
                if e > 1 {
                    fixed.push(Polynomial::monomial(&ring, Monomial::var(n, v, e)));
                }
            }
        }
        let pool = monomials_of_degree(&weights, degree);

        let mut accepted = None;
        let mut step_tries = 0usize;
        let mut fixed_iter = fixed.into_iter();
        while step_tries < max_tries {
            step_tries += 1;
            let candidate = match fixed_iter.next() {
                Some(c) => c,
                None => random_combination(&ring, &pool, &mut rng),
            };
            if candidate.is_zero() {
                continue;
            }
            let quotient = current.quotient_by_ideal(std::slice::from_ref(&candidate), 1)?;
            if module_dimension(&quotient) == target {
                accepted = Some((candidate, quotient));
                break;
            }
        }
        tries += step_tries;
        match accepted {
            Some((y, q)) => {
                elements.push(y);
                current = q;
            }
            None => {
                return Err(Error::GsopExhausted {
                    tries,
                    partial: elements.iter().map(|e| e.to_string()).collect(),
                    needed: dim,
                })
            }
        }
    }

    let certificate = current.total_length(2);
    debug_assert!(certificate.is_finite());
    let degrees = parameter_degrees(&elements)?;
    Ok(GsopResult { elements, degrees, certificate, seed, tries })
}

/// Variables with no pure power in the leading-term module of some nonzero component.
fn live_variables(m: &ModulePresentation) -> Vec<usize> {
    let n = m.ring().nvars();
    let lms = m.groebner_basis().leading_monomials();
    (0..n)
        .filter(|&v| {
            lms.iter()
                .any(|gens| !gens.iter().any(|g| g.is_one() || g.pure_power_var() == Some(v)))
        })
        .collect()
}

fn random_combination(ring: &crate::ring::Ring, pool: &[Monomial], rng: &mut ChaCha8Rng) -> Polynomial {
    let field = ring.field();
    Polynomial::from_terms(
        ring,
        pool.iter().map(|m| {
            let c = COEFFICIENTS[rng.gen_range(0..COEFFICIENTS.len())];
            (m.clone(), field.from_i64(c))
        }),
    )
}

/// `χ(M,k)(t) = P_M(t) ∏ (1 - t^{e_i})` when it is a Laurent polynomial.
pub fn euler_poincare_polynomial(m: &ModulePresentation, degrees: &[i64]) -> Option<LaurentPoly> {
    let ws: Vec<u32> = degrees.iter().map(|&d| d as u32).collect();
    poincare(m).times_cyclotomic_product(&ws)
}

/// True when `M/(ys)M` has finite length and `P_M ∏(1 - t^{e_i})` has finite support.
pub fn certify_algebraic_independence(ys: &[Polynomial], m: &ModulePresentation) -> Result<bool> {
    let degrees = parameter_degrees(ys)?;
    if !m.quotient_by_ideal(ys, 1)?.total_length(0).is_finite() {
        return Ok(false);
    }
    Ok(euler_poincare_polynomial(m, &degrees).is_some())
}

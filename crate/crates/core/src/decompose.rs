//! Minimal primes and sum decompositions for monomial quotients `R/I`.
//!
//! Minimal primes of a monomial ideal are the coordinate primes `p_S = (x_i : i ∈ S)`
//! for the minimal vertex covers `S` of the generator supports. The local length
//! at `p_S` is the length of `k[x_S]/I_S`, where `I_S` sets every variable off `S` to 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::grmod::ModulePresentation;
use crate::ring::{Monomial, Polynomial, Ring};
use crate::samuel::samuel_multiplicity;
use crate::series::{dimension_and_degree, minimalize, poincare, Dimension};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes the generators.
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { nvars, gens: minimalize(gens) }
    }

    /// Accepts polynomials that are single terms; coefficients are irrelevant to the ideal.
    pub fn from_polynomials(ring: &Ring, polys: &[Polynomial]) -> Result<Self> {
        let mut gens = Vec::new();
        for p in polys {
            let mut terms = p.terms();
            match (terms.next(), terms.next()) {
                (None, _) => {}
                (Some((m, _)), None) => gens.push(m.clone()),
                _ => return Err(Error::NotMonomial(p.to_string())),
            }
        }
        Ok(Self::new(ring.nvars(), gens))
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn to_polynomials(&self, ring: &Ring) -> Vec<Polynomial> {
        self.gens.iter().map(|g| Polynomial::monomial(ring, g.clone())).collect()
    }

    fn covered_by(&self, mask: u32) -> bool {
        self.gens.iter().all(|g| g.support().any(|v| mask & (1 << v) != 0))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeComponent {
    pub vars: Vec<usize>,
    pub local_length: u64,
    /// `deg(R/p_S) = 1 / ∏_{i ∉ S} d_i`.
    pub quotient_degree: BigRational,
}

fn mask_of(s: &[usize]) -> u32 {
    s.iter().fold(0, |acc, &v| acc | (1 << v))
}

fn vars_of(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|v| mask & (1 << v) != 0).collect()
}

/// Inclusion-minimal covers, ordered by size then lexicographically.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<Vec<usize>>> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.nvars;
    let covers: Vec<u32> = (0u32..(1 << n)).filter(|&m| ideal.covered_by(m)).collect();
    let mut minimal: Vec<Vec<usize>> = covers
        .iter()
        .filter(|&&m| !covers.iter().any(|&c| c != m && c & m == c))
        .map(|&m| vars_of(m, n))
        .collect();
    minimal.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(minimal)
}

fn is_minimal_prime(ideal: &MonomialIdeal, s: &[usize]) -> bool {
    let mask = mask_of(s);
    ideal.covered_by(mask) && s.iter().all(|&v| !ideal.covered_by(mask & !(1 << v)))
}

/// Length of `k[x_S]/I_S`.
pub fn local_length_at(ring: &Ring, ideal: &MonomialIdeal, s: &[usize]) -> Result<u64> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !is_minimal_prime(ideal, s) {
        return Err(Error::NotMinimalPrime(format!(
            "{{{}}} is not a minimal prime of the ideal",
            s.iter().map(|&v| ring.vars()[v].as_str()).collect::<Vec<_>>().join(", ")
        )));
    }
    let sub = ring.subring(s);
    let gens: Vec<Monomial> = ideal
        .gens
        .iter()
        .map(|g| Monomial::new(s.iter().map(|&v| g.exponents()[v]).collect()))
        .collect();
    let local = MonomialIdeal::new(s.len(), gens);
    let m = ModulePresentation::cyclic(&sub, &local.to_polynomials(&sub))?;
    Ok(m.total_length(0).finite().expect("minimal primes give finite local length"))
}

fn quotient_degree(ring: &Ring, s: &[usize]) -> BigRational {
    let prod: BigInt = (0..ring.nvars())
        .filter(|v| !s.contains(v))
        .map(|v| BigInt::from(ring.weights()[v]))
        .product();
    BigRational::new(1.into(), prod)
}

/// Minimal primes `p_S` with `dim R/p_S = dim R/I`, with their local lengths and degrees.
pub fn top_components(ring: &Ring, ideal: &MonomialIdeal) -> Result<Vec<PrimeComponent>> {
    let primes = minimal_primes(ideal)?;
    let smallest = primes.iter().map(Vec::len).min().unwrap_or(0);
    primes
        .into_iter()
        .filter(|s| s.len() == smallest)
        .map(|s| {
            Ok(PrimeComponent {
                local_length: local_length_at(ring, ideal, &s)?,
                quotient_degree: quotient_degree(ring, &s),
                vars: s,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSumReport {
    pub lhs: BigRational,
    pub rhs: BigRational,
    pub top_primes: Vec<PrimeComponent>,
}

impl DegreeSumReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `deg(R/I) = Σ ℓ_S deg(R/p_S)` over the top-dimensional minimal primes.
pub fn degree_sum_check(ring: &Ring, ideal: &MonomialIdeal) -> Result<DegreeSumReport> {
    let m = ModulePresentation::cyclic(ring, &ideal.to_polynomials(ring))?;
    let lhs = dimension_and_degree(&poincare(&m)).degree;
    let top_primes = top_components(ring, ideal)?;
    let rhs = top_primes
        .iter()
        .fold(BigRational::zero(), |acc, c| acc + BigRational::from_integer(c.local_length.into()) * &c.quotient_degree);
    Ok(DegreeSumReport { lhs, rhs, top_primes })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityTerm {
    pub vars: Vec<usize>,
    pub local_length: u64,
    pub multiplicity: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicitySumReport {
    pub degree: usize,
    pub lhs: BigInt,
    pub terms: Vec<MultiplicityTerm>,
    pub rhs: BigInt,
}

impl MultiplicitySumReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `e(R/I, (xs), D) = Σ ℓ_S e(R/p_S, (xs), D)` over the top-dimensional minimal primes.
pub fn multiplicity_sum_check(ring: &Ring, ideal: &MonomialIdeal, xs: &[Polynomial]) -> Result<MultiplicitySumReport> {
    let m = ModulePresentation::cyclic(ring, &ideal.to_polynomials(ring))?;
    let Dimension::Finite(d) = dimension_and_degree(&poincare(&m)).d1 else {
        return Err(Error::UnitIdeal);
    };
    let lhs = samuel_multiplicity(&m, xs, d, None)?.leading_delta;
    let mut terms = Vec::new();
    for c in top_components(ring, ideal)? {
        let prime: Vec<Polynomial> = c.vars.iter().map(|&v| Polynomial::var(ring, v)).collect();
        let q = ModulePresentation::cyclic(ring, &prime)?;
        let e = samuel_multiplicity(&q, xs, d, None)?.leading_delta;
        terms.push(MultiplicityTerm { vars: c.vars, local_length: c.local_length, multiplicity: e });
    }
    let rhs = terms.iter().map(|t| BigInt::from(t.local_length) * &t.multiplicity).sum();
    Ok(MultiplicitySumReport { degree: d, lhs, terms, rhs })
}

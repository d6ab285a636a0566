//! Poincaré series in Hilbert–Serre form `q(t) / ∏ (1 - t^{d_i})`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::grmod::ModulePresentation;
use crate::ring::{format_rational, Monomial};

/// Finite Laurent polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigRational::one())
    }

    pub fn monomial(exp: i64, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, &c);
        p
    }

    /// `t^e`.
    pub fn t_pow(exp: i64) -> Self {
        Self::monomial(exp, BigRational::one())
    }

    /// `1 - t^d`.
    pub fn one_minus_t_pow(d: u32) -> Self {
        Self::one().sub(&Self::t_pow(d as i64))
    }

    pub fn from_integers(pairs: &[(i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in pairs {
            p.add_term(e, &BigRational::from_integer(c.into()));
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, &-c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (e, a) in &self.coeffs {
            out.add_term(*e, &(a * c));
        }
        out
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn eval_at_one(&self) -> BigRational {
        self.coeffs.values().fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (dmin, dmax) = (divisor.min_exp()?, divisor.max_exp()?);
        if self.is_zero() {
            return Some(Self::zero());
        }
        let mut rem = self.shift(-self.min_exp().unwrap());
        let d = divisor.shift(-dmin);
        let dtop = dmax - dmin;
        let lead = d.coeff(dtop);
        let mut quotient = Self::zero();
        while let Some(top) = rem.max_exp() {
            if top < dtop {
                return None;
            }
            let c = rem.coeff(top) / &lead;
            let term = Self::monomial(top - dtop, c);
            rem = rem.sub(&d.mul(&term));
            quotient = quotient.add(&term);
        }
        Some(quotient.shift(self.min_exp().unwrap() - dmin))
    }

    /// Splits `self = (1 - t)^s * r(t)` with `r(1) != 0`. Zero input returns `(0, 0)`.
    pub fn factor_one_minus_t(&self) -> (usize, Self) {
        if self.is_zero() {
            return (0, Self::zero());
        }
        let base = Self::one_minus_t_pow(1);
        let mut s = 0;
        let mut r = self.clone();
        while r.eval_at_one().is_zero() {
            r = r.div_exact(&base).expect("root at one divides exactly");
            s += 1;
        }
        (s, r)
    }

    /// Integer coefficients when every coefficient is integral.
    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending exponents, each term rendered `c*t^e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{}*t^{}", format_rational(&abs), e)?;
        }
        Ok(())
    }
}

/// `numerator / ∏ (1 - t^{d})` over the multiset `denom_weights`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    numerator: LaurentPoly,
    denom_weights: Vec<u32>,
}

impl RationalSeries {
    pub fn new(numerator: LaurentPoly, mut denom_weights: Vec<u32>) -> Self {
        denom_weights.sort_unstable();
        RationalSeries { numerator, denom_weights }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denom_weights(&self) -> &[u32] {
        &self.denom_weights
    }

    pub fn denominator(&self) -> LaurentPoly {
        self.denom_weights
            .iter()
            .fold(LaurentPoly::one(), |acc, &d| acc.mul(&LaurentPoly::one_minus_t_pow(d)))
    }

    /// Coefficients of `t^lo ..= t^hi` in the power-series expansion.
    pub fn coefficients(&self, lo: i64, hi: i64) -> Vec<BigRational> {
        if hi < lo {
            return Vec::new();
        }
        let start = self.numerator.min_exp().map_or(lo, |m| m.min(lo));
        let len = (hi - start + 1) as usize;
        let mut c = vec![BigRational::zero(); len];
        for (e, v) in self.numerator.terms() {
            if e <= hi {
                c[(e - start) as usize] += v;
            }
        }
        for &d in &self.denom_weights {
            let d = d as usize;
            for k in d..len {
                let prev = c[k - d].clone();
                c[k] += prev;
            }
        }
        c.split_off((lo - start) as usize)
    }

    /// Integer expansion coefficients on `lo..=hi`; panics if any is not integral.
    pub fn dims(&self, lo: i64, hi: i64) -> Vec<i64> {
        self.coefficients(lo, hi)
            .into_iter()
            .map(|c| {
                assert!(c.is_integer(), "non-integral series coefficient {c}");
                i64::try_from(c.to_integer()).expect("coefficient fits in i64")
            })
            .collect()
    }

    /// Equality as rational functions.
    pub fn same_series(&self, other: &Self) -> bool {
        self.numerator.mul(&other.denominator()) == other.numerator.mul(&self.denominator())
    }

    /// Sum over the common denominator (largest multiplicity of each weight).
    pub fn add(&self, other: &Self) -> Self {
        let common = multiset_union(&self.denom_weights, &other.denom_weights);
        let lift = |s: &Self| {
            let extra = multiset_difference(&common, &s.denom_weights);
            extra.iter().fold(s.numerator.clone(), |acc, &d| acc.mul(&LaurentPoly::one_minus_t_pow(d)))
        };
        RationalSeries::new(lift(self).add(&lift(other)), common)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut denom = self.denom_weights.clone();
        denom.extend_from_slice(&other.denom_weights);
        RationalSeries::new(self.numerator.mul(&other.numerator), denom)
    }

    pub fn scale_by_t_power(&self, k: i64) -> Self {
        RationalSeries::new(self.numerator.shift(k), self.denom_weights.clone())
    }

    /// `numerator * ∏(1 - t^{w})/∏(1 - t^{d})` as a Laurent polynomial when it is one.
    pub fn times_cyclotomic_product(&self, weights: &[u32]) -> Option<LaurentPoly> {
        let num = weights
            .iter()
            .fold(self.numerator.clone(), |acc, &w| acc.mul(&LaurentPoly::one_minus_t_pow(w)));
        num.div_exact(&self.denominator())
    }
}

fn multiset_union(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut counts: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
    for &x in a {
        counts.entry(x).or_default().0 += 1;
    }
    for &x in b {
        counts.entry(x).or_default().1 += 1;
    }
    counts
        .into_iter()
        .flat_map(|(d, (ca, cb))| std::iter::repeat_n(d, ca.max(cb)))
        .collect()
}

fn multiset_difference(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut rest = b.to_vec();
    let mut out = Vec::new();
    for &x in a {
        if let Some(pos) = rest.iter().position(|&y| y == x) {
            rest.remove(pos);
        } else {
            out.push(x);
        }
    }
    out
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/", self.numerator)?;
        if self.denom_weights.is_empty() {
            return write!(f, "1");
        }
        for d in &self.denom_weights {
            write!(f, "(1-t^{d})")?;
        }
        Ok(())
    }
}

/// Krull dimension, with `-inf` for the zero module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Dimension {
    NegInfinity,
    Finite(usize),
}

impl Dimension {
    pub fn finite(&self) -> Option<usize> {
        match self {
            Dimension::Finite(d) => Some(*d),
            Dimension::NegInfinity => None,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::NegInfinity => write!(f, "-inf"),
            Dimension::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    /// Order of the pole at `t = 1`.
    pub d1: Dimension,
    /// `lim_{t->1} (1-t)^{d1} P(t)`; zero for the zero module.
    pub degree: BigRational,
    /// The numerator with every factor `1 - t` removed.
    pub numerator_reduced: LaurentPoly,
}

pub fn dimension_and_degree(p: &RationalSeries) -> DimensionReport {
    if p.numerator.is_zero() {
        return DimensionReport {
            d1: Dimension::NegInfinity,
            degree: BigRational::zero(),
            numerator_reduced: LaurentPoly::zero(),
        };
    }
    let (s, r) = p.numerator.factor_one_minus_t();
    let n = p.denom_weights.len();
    assert!(s <= n, "numerator vanishes to order {s} > {n} at t = 1; not a Poincaré series");
    let prod: BigInt = p.denom_weights.iter().map(|&d| BigInt::from(d)).product();
    DimensionReport {
        d1: Dimension::Finite(n - s),
        degree: r.eval_at_one() / BigRational::from_integer(prod),
        numerator_reduced: r,
    }
}

/// Pivot choice for the monomial-ideal numerator recursion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PivotRule {
    /// The variable dividing the most minimal generators.
    #[default]
    MostFrequent,
    /// The lowest-index variable dividing at least two generators.
    FirstVariable,
}

/// Numerator `N(I)` with `H_{R/I}(t) = N(I) / ∏(1 - t^{d_i})`, via
/// `N(I) = t^{w(x)} N(I : x) + N(I + (x))`.
pub fn monomial_ideal_numerator(gens: &[Monomial], weights: &[u32], rule: PivotRule) -> LaurentPoly {
    let mut memo = HashMap::new();
    numerator_rec(minimalize(gens.to_vec()), weights, rule, &mut memo)
}

/// The unique minimal generating set, sorted.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.total_degree(), m.clone()));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

fn numerator_rec(
    gens: Vec<Monomial>,
    weights: &[u32],
    rule: PivotRule,
    memo: &mut HashMap<Vec<Monomial>, LaurentPoly>,
) -> LaurentPoly {
    if gens.is_empty() {
        return LaurentPoly::one();
    }
    if gens.iter().any(|g| g.is_one()) {
        return LaurentPoly::zero();
    }
    if let Some(v) = memo.get(&gens) {
        return v.clone();
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    let result = if pairwise_coprime {
        gens.iter().fold(LaurentPoly::one(), |acc, g| {
            acc.mul(&LaurentPoly::one().sub(&LaurentPoly::t_pow(g.weighted_degree(weights))))
        })
    } else {
        let n = weights.len();
        let mut freq = vec![0usize; n];
        for g in &gens {
            for v in g.support() {
                freq[v] += 1;
            }
        }
        // a shared variable is never itself a minimal generator, so I + (x) shrinks
        let pivot = match rule {
            PivotRule::MostFrequent => (0..n).max_by_key(|&v| (freq[v], std::cmp::Reverse(v))).unwrap(),
            PivotRule::FirstVariable => (0..n).find(|&v| freq[v] >= 2).unwrap(),
        };
        let colon: Vec<Monomial> = gens
            .iter()
            .map(|g| {
                let mut h = g.clone();
                let e = h.exponent_mut(pivot);
                *e = e.saturating_sub(1);
                h
            })
            .collect();
        let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exponents()[pivot] == 0).cloned().collect();
        plus.push(Monomial::var(n, pivot, 1));
        let a = numerator_rec(minimalize(colon), weights, rule, memo).shift(weights[pivot] as i64);
        let b = numerator_rec(minimalize(plus), weights, rule, memo);
        a.add(&b)
    };
    memo.insert(gens, result.clone());
    result
}

/// Poincaré series of a presented module, computed from the leading-term module
/// of a Gröbner basis of its relations.
pub fn poincare(m: &ModulePresentation) -> RationalSeries {
    poincare_with(m, PivotRule::default())
}

pub fn poincare_with(m: &ModulePresentation, rule: PivotRule) -> RationalSeries {
    let weights = m.ring().weights().to_vec();
    if m.rank() == 0 {
        return RationalSeries::new(LaurentPoly::zero(), weights);
    }
    let gb = m.groebner_basis();
    let mut numerator = LaurentPoly::zero();
    for (c, lms) in gb.leading_monomials().into_iter().enumerate() {
        let n = monomial_ideal_numerator(&lms, &weights, rule);
        numerator = numerator.add(&n.shift(m.gen_shifts()[c]));
    }
    RationalSeries::new(numerator, weights)
}

//! Samuel functions `n -> length(M / I^n M)` and their multiplicities.
//!
//! The fit never extrapolates: the `D`-th differences must be constant on the
//! last `W` table entries before a polynomial is reported.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grmod::{LengthValue, ModulePresentation};
use crate::ring::Polynomial;
use crate::series::Dimension;

pub const DEFAULT_WINDOW: usize = 3;

/// Default table length for an expected degree `d`.
pub fn default_n_max(d: usize) -> u32 {
    d as u32 + 6
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamuelFit {
    /// Rows `(n, length(M / I^n M))` for `n = 1..=n_max`.
    pub table: Vec<(u32, u64)>,
    /// Largest `k` with a nonzero `k`-th difference on the certified tail.
    pub fitted_degree: usize,
    /// The constant `D`-th difference; zero when `D` exceeds the true degree.
    pub leading_delta: BigInt,
    /// Coefficients of `p(n)` in the monomial basis, constant term first.
    pub polynomial: Vec<BigRational>,
    /// Coefficients `c_k` with `p(n) = Σ c_k binom(n, k)`.
    pub binomial: Vec<BigRational>,
}

impl SamuelFit {
    pub fn eval(&self, n: i64) -> BigRational {
        let n = BigRational::from_integer(n.into());
        self.polynomial.iter().rev().fold(BigRational::zero(), |acc, c| acc * &n + c)
    }
}

/// Exact lengths for `n = 1..=n_max`. `I` must define a finite-length quotient of `M`.
pub fn samuel_table(m: &ModulePresentation, ideal: &[Polynomial], n_max: u32) -> Result<Vec<(u32, u64)>> {
    let base = m.quotient_by_ideal(ideal, 1)?;
    if let LengthValue::Infinite { component, variable } = base.total_length(0) {
        return Err(Error::NotIdealOfDefinition { component, variable });
    }
    (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let q = m.quotient_by_ideal(ideal, n)?;
            let len = q.total_length(0).finite().expect("I^n M contains I^n' M for large n'");
            Ok((n, len))
        })
        .collect()
}

fn differences(v: &[BigInt]) -> Vec<BigInt> {
    v.windows(2).map(|w| &w[1] - &w[0]).collect()
}

/// Fits the Samuel polynomial assuming degree `d_expected`, certified on the last `window` rows.
pub fn fit_and_multiplicity(table: &[(u32, u64)], d_expected: usize, window: usize) -> Result<SamuelFit> {
    let window = window.max(1);
    let needed = d_expected + window;
    if table.len() < needed {
        return Err(Error::TableTooShort { needed, got: table.len() });
    }
    let values: Vec<BigInt> = table.iter().map(|&(_, l)| BigInt::from(l)).collect();
    let mut rows = vec![values];
    for _ in 0..d_expected {
        let next = differences(rows.last().unwrap());
        rows.push(next);
    }
    let top = rows.last().unwrap();
    let tail = &top[top.len() - window..];
    if tail.iter().any(|v| v != &tail[0]) {
        return Err(Error::NotStabilized { order: d_expected, len: table.len() });
    }
    let leading_delta = tail[0].clone();

    // Newton interpolation through the last d+1 rows
    let start = table.len() - (d_expected + 1);
    let n0 = table[start].0 as i64;
    let mut polynomial = vec![BigRational::zero()];
    for (k, row) in rows.iter().enumerate() {
        let coeff = BigRational::from_integer(row[start].clone());
        let basis = shifted_binomial(n0, k);
        polynomial = add_poly(&polynomial, &scale_poly(&basis, &coeff));
    }
    trim(&mut polynomial);

    let fitted_degree = polynomial.len().saturating_sub(1);
    let fit = SamuelFit {
        table: table.to_vec(),
        fitted_degree: if polynomial.iter().all(|c| c.is_zero()) { 0 } else { fitted_degree },
        leading_delta,
        binomial: Vec::new(),
        polynomial,
    };
    let samples: Vec<BigRational> = (0..=d_expected as i64).map(|n| fit.eval(n)).collect();
    let mut binomial = Vec::with_capacity(samples.len());
    let mut layer = samples;
    while let Some(first) = layer.first() {
        binomial.push(first.clone());
        layer = layer.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    trim(&mut binomial);
    Ok(SamuelFit { binomial, ..fit })
}

/// `binom(n - n0, k)` as a polynomial in `n`.
fn shifted_binomial(n0: i64, k: usize) -> Vec<BigRational> {
    let mut p = vec![BigRational::one()];
    for i in 0..k as i64 {
        // multiply by (n - n0 - i) / (i + 1)
        let c = BigRational::from_integer((-(n0 + i)).into());
        let lin = vec![c, BigRational::one()];
        p = mul_poly(&p, &lin);
        let inv = BigRational::new(BigInt::one(), BigInt::from(i + 1));
        p = scale_poly(&p, &inv);
    }
    p
}

fn add_poly(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    out
}

fn mul_poly(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn scale_poly(a: &[BigRational], c: &BigRational) -> Vec<BigRational> {
    a.iter().map(|x| x * c).collect()
}

fn trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Tabulates and fits in one call with the default window.
pub fn samuel_multiplicity(
    m: &ModulePresentation,
    ideal: &[Polynomial],
    d: usize,
    n_max: Option<u32>,
) -> Result<SamuelFit> {
    let table = samuel_table(m, ideal, n_max.unwrap_or_else(|| default_n_max(d)))?;
    fit_and_multiplicity(&table, d, DEFAULT_WINDOW)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditivityReport {
    pub degree: usize,
    pub sum: BigInt,
    pub left: BigInt,
    pub right: BigInt,
}

impl AdditivityReport {
    pub fn holds(&self) -> bool {
        self.sum == &self.left + &self.right
    }
}

/// `e(N ⊕ P) = e(N) + e(P)` at `D = max(dim N, dim P)`.
pub fn multiplicity_additivity_check(
    n: &ModulePresentation,
    p: &ModulePresentation,
    ideal: &[Polynomial],
) -> Result<AdditivityReport> {
    let sum = n.direct_sum(p)?;
    let dim = |m: &ModulePresentation| crate::gsop::module_dimension(m);
    let d = match dim(n).max(dim(p)) {
        Dimension::Finite(d) => d,
        Dimension::NegInfinity => 0,
    };
    let e = |m: &ModulePresentation| samuel_multiplicity(m, ideal, d, None).map(|f| f.leading_delta);
    Ok(AdditivityReport { degree: d, sum: e(&sum)?, left: e(n)?, right: e(p)? })
}

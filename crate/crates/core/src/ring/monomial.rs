use std::cmp::Ordering;

/// Dense exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[index] = exp;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> i64 {
        debug_assert_eq!(weights.len(), self.0.len());
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w as i64)
            .sum()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the variable when this monomial is a pure power `x_i^k`, `k ≥ 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Reverse-lexicographic comparison for monomials of equal degree: the
    /// monomial with the smaller exponent in the last differing variable is larger.
    pub fn revlex_cmp(&self, other: &Monomial) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }

    /// Weighted-degrevlex comparison.
    pub fn degrevlex_cmp(&self, other: &Monomial, weights: &[u32]) -> Ordering {
        self.weighted_degree(weights)
            .cmp(&other.weighted_degree(weights))
            .then_with(|| self.revlex_cmp(other))
    }

    pub(crate) fn exponent_mut(&mut self, i: usize) -> &mut u32 {
        &mut self.0[i]
    }
}

/// Every monomial of weighted degree exactly `degree`, in lexicographic order of exponents.
pub fn monomials_of_degree(weights: &[u32], degree: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    if degree < 0 {
        return out;
    }
    let mut current = vec![0u32; weights.len()];
    fill(weights, 0, degree, &mut current, &mut out);
    out
}

fn fill(weights: &[u32], idx: usize, remaining: i64, current: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if idx == weights.len() {
        if remaining == 0 {
            out.push(Monomial(current.clone()));
        }
        return;
    }
    let w = weights[idx] as i64;
    let mut e = 0;
    while e * w <= remaining {
        current[idx] = e as u32;
        fill(weights, idx + 1, remaining - e * w, current, out);
        e += 1;
    }
    current[idx] = 0;
}

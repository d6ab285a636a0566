use std::collections::BTreeMap;
use std::fmt;

use super::{is_negative, same_ring, FieldElement, Monomial, Ring};
use crate::error::{Error, Result};

/// Answer of [`Polynomial::homogeneity`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial, homogeneous of every degree.
    Any,
    Degree(i64),
    Inhomogeneous,
}

impl Homogeneity {
    /// The degree, with the zero polynomial and inhomogeneous input both reported as `None`.
    pub fn degree(&self) -> Option<i64> {
        match self {
            Homogeneity::Degree(d) => Some(*d),
            _ => None,
        }
    }
}

/// A polynomial in a weighted ring; zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Ring, c: FieldElement) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn var(ring: &Ring, index: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), index, 1))
    }

    pub fn monomial(ring: &Ring, m: Monomial) -> Self {
        Self::term(ring, m, ring.field().one())
    }

    pub fn term(ring: &Ring, m: Monomial, c: FieldElement) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity does not match ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    /// Sums duplicate monomials and drops zeros.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, FieldElement)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.field().zero())
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = Polynomial::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-&self.ring.field().one())
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(|m| self.ring.weighted_degree(m));
        let Some(first) = degrees.next() else {
            return Homogeneity::Any;
        };
        if degrees.all(|d| d == first) {
            Homogeneity::Degree(first)
        } else {
            Homogeneity::Inhomogeneous
        }
    }

    /// Sorted, deduplicated weighted degrees of the terms.
    pub fn term_degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.terms.keys().map(|m| self.ring.weighted_degree(m)).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Decomposition into homogeneous components keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<i64, Polynomial> {
        let mut out: BTreeMap<i64, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(self.ring.weighted_degree(m))
                .or_insert_with(|| Polynomial::zero(&self.ring))
                .add_term(m.clone(), c);
        }
        out
    }

    /// True when the polynomial is a single term with coefficient one.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if c.is_one() {
                return Some(m);
            }
        }
        None
    }

    /// Terms sorted by descending weighted degrevlex order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &FieldElement)> {
        let w = self.ring.weights();
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| b.0.degrevlex_cmp(a.0, w));
        t
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = is_negative(c);
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono = self.ring.format_monomial(m);
            match (abs.is_one(), m.is_one()) {
                (true, _) => write!(f, "{mono}")?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}

//! Weighted polynomial rings `k[x_1:d_1, ..., x_n:d_n]` with exact coefficients.

mod field;
mod monomial;
mod polynomial;

use std::fmt;
use std::sync::Arc;

pub use field::{format_rational, FieldElement, FieldKind};
pub(crate) use field::is_negative;
pub use monomial::{monomials_of_degree, Monomial};
pub use polynomial::{Homogeneity, Polynomial};

use crate::error::{Error, Result};

pub const MAX_VARS: usize = 16;

/// Shared handle to a ring; polynomials keep one so mixed-ring arithmetic can be refused.
pub type Ring = Arc<RingDescriptor>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    field: FieldKind,
    vars: Vec<String>,
    weights: Vec<u32>,
}

impl RingDescriptor {
    /// Builds a ring from `(name, weight)` pairs. Weights must be positive and names unique.
    pub fn new<S: AsRef<str>>(field: FieldKind, vars: &[(S, u32)]) -> Result<Ring> {
        if vars.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!(
                "{} variables exceed the limit of {MAX_VARS}",
                vars.len()
            )));
        }
        let mut names = Vec::with_capacity(vars.len());
        let mut weights = Vec::with_capacity(vars.len());
        for (name, w) in vars {
            let name = name.as_ref();
            let valid = name
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidRing(format!("bad variable name {name:?}")));
            }
            if names.iter().any(|n: &String| n == name) {
                return Err(Error::InvalidRing(format!("duplicate variable {name}")));
            }
            if *w == 0 {
                return Err(Error::InvalidRing(format!("variable {name} has weight 0")));
            }
            names.push(name.to_string());
            weights.push(*w);
        }
        if let FieldKind::Prime(p) = field {
            FieldKind::prime(p)?;
        }
        Ok(Arc::new(RingDescriptor { field, vars: names, weights }))
    }

    /// Rational ring from `(name, weight)` pairs; panics on invalid input.
    pub fn rational(vars: &[(&str, u32)]) -> Ring {
        Self::new(FieldKind::Rationals, vars).expect("valid ring")
    }

    pub fn field(&self) -> FieldKind {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn weighted_degree(&self, m: &Monomial) -> i64 {
        m.weighted_degree(&self.weights)
    }

    /// The subring on the variables in `keep`, same field, same weights.
    pub fn subring(&self, keep: &[usize]) -> Ring {
        Arc::new(RingDescriptor {
            field: self.field,
            vars: keep.iter().map(|&i| self.vars[i].clone()).collect(),
            weights: keep.iter().map(|&i| self.weights[i]).collect(),
        })
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.vars[i].clone()
                } else {
                    format!("{}^{}", self.vars[i], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.field)?;
        for (i, (v, w)) in self.vars.iter().zip(&self.weights).enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}:{w}")?;
        }
        write!(f, "]")
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

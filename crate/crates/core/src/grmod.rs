//! Finitely presented graded modules: cokernels of homogeneous matrices
//! `⊕_k R(-b_k) -> ⊕_i R(-a_i)`.
//!
//! [`ModulePresentation::component_basis`] is deliberately written without any
//! Gröbner machinery. It enumerates the degree-`j` part of the free module,
//! row-reduces the span of the relation multiples landing there, and reads off
//! the cokernel. Everything built on Gröbner bases is tested against it.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, FreeModule, GroebnerBasis, ModuleElement};
use crate::linalg::{echelon, SparseRow};
use crate::ring::{monomials_of_degree, same_ring, Homogeneity, Monomial, Polynomial, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    ring: Ring,
    gen_shifts: Vec<i64>,
    relations: Vec<Vec<Polynomial>>,
}

/// The degree-`j` piece of a module with a basis of coset representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSpace {
    pub degree: i64,
    pub basis: Vec<(usize, Monomial)>,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LengthValue {
    Finite(u64),
    /// No pure power of `variable` lies in the leading-term module at `component`.
    Infinite { component: usize, variable: String },
}

impl LengthValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, LengthValue::Finite(_))
    }

    pub fn finite(&self) -> Option<u64> {
        match self {
            LengthValue::Finite(v) => Some(*v),
            LengthValue::Infinite { .. } => None,
        }
    }
}

impl fmt::Display for LengthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LengthValue::Finite(v) => write!(f, "{v}"),
            LengthValue::Infinite { .. } => write!(f, "inf"),
        }
    }
}

impl ModulePresentation {
    /// Validates that every relation column has one entry per generator and is homogeneous.
    pub fn new(ring: &Ring, gen_shifts: Vec<i64>, relations: Vec<Vec<Polynomial>>) -> Result<Self> {
        let fm = FreeModule::new(ring, gen_shifts.clone());
        for (index, col) in relations.iter().enumerate() {
            let e = fm.element(col)?;
            if !e.is_zero() && e.homogeneous_degree().is_none() {
                return Err(Error::Inhomogeneous { index, degrees: e.term_degrees() });
            }
        }
        Ok(ModulePresentation { ring: ring.clone(), gen_shifts, relations })
    }

    /// The free module `⊕ R(-a_i)`.
    pub fn free(ring: &Ring, gen_shifts: Vec<i64>) -> Self {
        ModulePresentation { ring: ring.clone(), gen_shifts, relations: Vec::new() }
    }

    /// `R / I` for homogeneous generators of `I`.
    pub fn cyclic(ring: &Ring, ideal: &[Polynomial]) -> Result<Self> {
        Self::new(ring, vec![0], ideal.iter().map(|g| vec![g.clone()]).collect())
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::free(ring, Vec::new())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gen_shifts(&self) -> &[i64] {
        &self.gen_shifts
    }

    pub fn relations(&self) -> &[Vec<Polynomial>] {
        &self.relations
    }

    pub fn rank(&self) -> usize {
        self.gen_shifts.len()
    }

    pub fn min_shift(&self) -> Option<i64> {
        self.gen_shifts.iter().copied().min()
    }

    pub fn free_module(&self) -> FreeModule {
        FreeModule::new(&self.ring, self.gen_shifts.clone())
    }

    pub fn relation_elements(&self) -> Vec<ModuleElement> {
        let fm = self.free_module();
        self.relations.iter().map(|c| fm.element(c).expect("validated column")).collect()
    }

    pub fn groebner_basis(&self) -> GroebnerBasis {
        buchberger(&self.free_module(), &self.relation_elements()).expect("validated homogeneous relations")
    }

    pub fn is_zero(&self) -> bool {
        if self.rank() == 0 {
            return true;
        }
        let gb = self.groebner_basis();
        gb.leading_monomials().iter().all(|lm| lm.iter().any(|m| m.is_one()))
    }

    /// The `r = 0` presentation when the module is zero, otherwise a copy.
    pub fn canonical(&self) -> Self {
        if self.is_zero() {
            Self::zero(&self.ring)
        } else {
            self.clone()
        }
    }

    /// `M(d)`, whose degree-`j` piece is `M_{d+j}`.
    pub fn shift(&self, d: i64) -> Self {
        ModulePresentation {
            ring: self.ring.clone(),
            gen_shifts: self.gen_shifts.iter().map(|a| a - d).collect(),
            relations: self.relations.clone(),
        }
    }

    pub fn direct_sum(&self, other: &ModulePresentation) -> Result<Self> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let r1 = self.rank();
        let r2 = other.rank();
        let zero = Polynomial::zero(&self.ring);
        let mut relations = Vec::with_capacity(self.relations.len() + other.relations.len());
        for col in &self.relations {
            let mut c = col.clone();
            c.extend(std::iter::repeat_n(zero.clone(), r2));
            relations.push(c);
        }
        for col in &other.relations {
            let mut c = vec![zero.clone(); r1];
            c.extend(col.iter().cloned());
            relations.push(c);
        }
        let mut gen_shifts = self.gen_shifts.clone();
        gen_shifts.extend_from_slice(&other.gen_shifts);
        Ok(ModulePresentation { ring: self.ring.clone(), gen_shifts, relations })
    }

    /// `M / I^power M`.
    pub fn quotient_by_ideal(&self, ideal: &[Polynomial], power: u32) -> Result<Self> {
        check_homogeneous(ideal)?;
        let products = ideal_power(ideal, power);
        let mut relations = self.relations.clone();
        let zero = Polynomial::zero(&self.ring);
        for g in &products {
            for i in 0..self.rank() {
                let mut col = vec![zero.clone(); self.rank()];
                col[i] = g.clone();
                relations.push(col);
            }
        }
        Ok(ModulePresentation { ring: self.ring.clone(), gen_shifts: self.gen_shifts.clone(), relations })
    }

    /// Exact `k`-dimension and coset basis of `M_j` by direct enumeration and elimination.
    pub fn component_basis(&self, j: i64) -> ComponentSpace {
        let weights = self.ring.weights();
        let mut columns: Vec<(usize, Monomial)> = Vec::new();
        for (c, &a) in self.gen_shifts.iter().enumerate() {
            for m in monomials_of_degree(weights, j - a) {
                columns.push((c, m));
            }
        }
        // largest term first: revlex within the degree, then lower component
        columns.sort_by(|(ca, ma), (cb, mb)| mb.revlex_cmp(ma).then(ca.cmp(cb)));
        let index: HashMap<(usize, Monomial), usize> =
            columns.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();

        let mut rows: Vec<SparseRow> = Vec::new();
        for col in &self.relations {
            let Some(delta) = column_degree(&self.gen_shifts, col) else {
                continue;
            };
            for u in monomials_of_degree(weights, j - delta) {
                let mut row: SparseRow = Vec::new();
                for (c, p) in col.iter().enumerate() {
                    for (m, coeff) in p.terms() {
                        row.push((index[&(c, m.mul(&u))], coeff.clone()));
                    }
                }
                row.sort_by_key(|(i, _)| *i);
                rows.push(row);
            }
        }
        let ech = echelon(rows, self.ring.field());
        let mut is_pivot = vec![false; columns.len()];
        for p in &ech.pivots {
            is_pivot[*p] = true;
        }
        let basis: Vec<(usize, Monomial)> = columns
            .into_iter()
            .zip(is_pivot)
            .filter(|(_, p)| !p)
            .map(|(k, _)| k)
            .collect();
        ComponentSpace { degree: j, dim: basis.len(), basis }
    }

    /// Total `k`-dimension when finite. The finiteness certificate is the
    /// pure-power criterion on the leading-term module; the oracle then confirms
    /// that the `probe_window` degrees above the top standard monomial vanish.
    pub fn total_length(&self, probe_window: u32) -> LengthValue {
        let gb = self.groebner_basis();
        let length = length_from_basis(&gb);
        if let (LengthValue::Finite(_), Some(top)) = (&length, gb.top_degree()) {
            for d in top + 1..=top + probe_window as i64 {
                assert_eq!(
                    self.component_basis(d).dim,
                    0,
                    "degree {d} above the certified top {top} is nonzero"
                );
            }
        }
        length
    }
}

/// Length read off a Gröbner basis of the relations.
pub(crate) fn length_from_basis(gb: &GroebnerBasis) -> LengthValue {
    match gb.finite_quotient_witness() {
        Ok(()) => LengthValue::Finite(gb.quotient_dimension().expect("finite quotient")),
        Err((component, v)) => LengthValue::Infinite {
            component,
            variable: gb.module().ring().vars()[v].clone(),
        },
    }
}

fn column_degree(shifts: &[i64], col: &[Polynomial]) -> Option<i64> {
    col.iter()
        .zip(shifts)
        .find_map(|(p, a)| p.homogeneity().degree().map(|d| d + a))
}

pub(crate) fn check_homogeneous(gens: &[Polynomial]) -> Result<()> {
    for (index, g) in gens.iter().enumerate() {
        if g.homogeneity() == Homogeneity::Inhomogeneous {
            return Err(Error::Inhomogeneous { index, degrees: g.term_degrees() });
        }
    }
    Ok(())
}

/// All products of `power` generators (with repetition), deduplicated.
pub fn ideal_power(gens: &[Polynomial], power: u32) -> Vec<Polynomial> {
    let gens: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let mut current: Vec<(usize, Polynomial)> = vec![(0, Polynomial::one(first.ring()))];
    for _ in 0..power {
        let mut next = Vec::new();
        for (start, p) in &current {
            for (k, g) in gens.iter().enumerate().skip(*start) {
                next.push((k, p.mul(g).expect("same ring")));
            }
        }
        current = next;
    }
    let mut out: Vec<Polynomial> = Vec::new();
    for (_, p) in current {
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

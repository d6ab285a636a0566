//! Gröbner bases for graded submodules of free modules `⊕ R(-a_i)`.
//!
//! Terms are ordered by total degree (weighted degree plus generator shift),
//! then reverse-lexicographically on the monomial, then by position with the
//! lower generator index larger. Input must be homogeneous; every basis
//! element stays homogeneous.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::ring::{monomials_of_degree, same_ring, FieldElement, Monomial, Polynomial, Ring};

/// The term order used everywhere: weighted degrevlex, extended term-over-position.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MonomialOrder;

impl MonomialOrder {
    pub fn cmp_terms(&self, a: &ModuleTerm, b: &ModuleTerm) -> Ordering {
        a.degree
            .cmp(&b.degree)
            .then_with(|| a.monomial.revlex_cmp(&b.monomial))
            .then_with(|| b.component.cmp(&a.component))
    }
}

/// `⊕_i R e_i` with `deg e_i = shifts[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    ring: Ring,
    shifts: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleTerm {
    pub component: usize,
    pub monomial: Monomial,
    pub coeff: FieldElement,
    degree: i64,
}

impl ModuleTerm {
    /// Internal degree: weighted degree of the monomial plus the generator shift.
    pub fn degree(&self) -> i64 {
        self.degree
    }
}

/// A module element as terms sorted in decreasing term order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ModuleElement {
    terms: Vec<ModuleTerm>,
}

impl FreeModule {
    pub fn new(ring: &Ring, shifts: Vec<i64>) -> Self {
        FreeModule { ring: ring.clone(), shifts }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn term(&self, component: usize, monomial: Monomial, coeff: FieldElement) -> ModuleTerm {
        let degree = self.ring.weighted_degree(&monomial) + self.shifts[component];
        ModuleTerm { component, monomial, coeff, degree }
    }

    pub fn basis_vector(&self, component: usize) -> ModuleElement {
        ModuleElement {
            terms: vec![self.term(component, Monomial::one(self.ring.nvars()), self.ring.field().one())],
        }
    }

    /// Element from a dense column of polynomials, one per generator.
    pub fn element(&self, column: &[Polynomial]) -> Result<ModuleElement> {
        if column.len() != self.rank() {
            return Err(Error::ColumnLength { expected: self.rank(), found: column.len() });
        }
        let mut terms = Vec::new();
        for (c, p) in column.iter().enumerate() {
            if !same_ring(p.ring(), &self.ring) {
                return Err(Error::RingMismatch);
            }
            for (m, coeff) in p.terms() {
                terms.push(self.term(c, m.clone(), coeff.clone()));
            }
        }
        terms.sort_by(|a, b| MonomialOrder.cmp_terms(b, a));
        Ok(ModuleElement { terms })
    }

    /// `p * e_component`.
    pub fn polynomial_times_basis(&self, p: &Polynomial, component: usize) -> ModuleElement {
        let mut terms: Vec<ModuleTerm> =
            p.terms().map(|(m, c)| self.term(component, m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| MonomialOrder.cmp_terms(b, a));
        ModuleElement { terms }
    }

    pub fn to_column(&self, f: &ModuleElement) -> Vec<Polynomial> {
        let mut col = vec![Polynomial::zero(&self.ring); self.rank()];
        for t in &f.terms {
            col[t.component].add_term(t.monomial.clone(), &t.coeff);
        }
        col
    }

    /// `p * f` for a polynomial `p`.
    pub fn mul_polynomial(&self, p: &Polynomial, f: &ModuleElement) -> ModuleElement {
        let weights = self.ring.weights();
        let mut acc = ModuleElement::default();
        for (m, c) in p.terms() {
            acc = acc.add_scaled_shift(c, m, m.weighted_degree(weights), f);
        }
        acc
    }
}

impl ModuleElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[ModuleTerm] {
        &self.terms
    }

    pub fn leading_term(&self) -> Option<&ModuleTerm> {
        self.terms.first()
    }

    /// Term degrees, sorted and deduplicated.
    pub fn term_degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self.terms.iter().map(|t| t.degree).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// The common degree of all terms; `None` for zero or inhomogeneous elements.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let first = self.terms.first()?.degree;
        self.terms.iter().all(|t| t.degree == first).then_some(first)
    }

    pub fn scale(&self, c: &FieldElement) -> ModuleElement {
        if c.is_zero() {
            return ModuleElement::default();
        }
        ModuleElement {
            terms: self
                .terms
                .iter()
                .map(|t| ModuleTerm { coeff: &t.coeff * c, ..t.clone() })
                .collect(),
        }
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        let Some(first) = other.terms.first().or(self.terms.first()) else {
            return ModuleElement::default();
        };
        let one = first.coeff.kind().one();
        let nvars = first.monomial.nvars();
        self.add_scaled_shift(&one, &Monomial::one(nvars), 0, other)
    }

    pub fn sub(&self, other: &ModuleElement) -> ModuleElement {
        match other.terms.first() {
            None => self.clone(),
            Some(t) => self.add(&other.scale(&-&t.coeff.kind().one())),
        }
    }

    /// `self + c * m * other`, where `m` has weighted degree `mdeg`.
    fn add_scaled_shift(&self, c: &FieldElement, m: &Monomial, mdeg: i64, other: &ModuleElement) -> ModuleElement {
        if c.is_zero() {
            return self.clone();
        }
        let x = &self.terms;
        let y = &other.terms;
        let mut out = Vec::with_capacity(x.len() + y.len());
        let shifted = |t: &ModuleTerm| ModuleTerm {
            component: t.component,
            monomial: t.monomial.mul(m),
            coeff: &t.coeff * c,
            degree: t.degree + mdeg,
        };
        let (mut i, mut j) = (0, 0);
        let mut pending_y: Option<ModuleTerm> = y.first().map(shifted);
        while i < x.len() || pending_y.is_some() {
            let ord = match &pending_y {
                None => Ordering::Greater,
                Some(ty) if i < x.len() => MonomialOrder.cmp_terms(&x[i], ty),
                Some(_) => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(x[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(pending_y.take().unwrap());
                    j += 1;
                    pending_y = y.get(j).map(shifted);
                }
                Ordering::Equal => {
                    let ty = pending_y.take().unwrap();
                    let sum = &x[i].coeff + &ty.coeff;
                    if !sum.is_zero() {
                        out.push(ModuleTerm { coeff: sum, ..ty });
                    }
                    i += 1;
                    j += 1;
                    pending_y = y.get(j).map(shifted);
                }
            }
        }
        ModuleElement { terms: out }
    }

    fn make_monic(&mut self) {
        if let Some(lc) = self.terms.first().map(|t| t.coeff.clone()) {
            if !lc.is_one() {
                let inv = lc.inv().expect("nonzero leading coefficient");
                for t in &mut self.terms {
                    t.coeff = &t.coeff * &inv;
                }
            }
        }
    }
}

/// A reduced Gröbner basis: monic, inter-reduced, sorted by increasing leading term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    module: FreeModule,
    generators: Vec<ModuleElement>,
}

/// Computes the reduced Gröbner basis of the submodule generated by `gens`.
pub fn buchberger(module: &FreeModule, gens: &[ModuleElement]) -> Result<GroebnerBasis> {
    for (index, g) in gens.iter().enumerate() {
        if !g.is_zero() && g.homogeneous_degree().is_none() {
            return Err(Error::Inhomogeneous { index, degrees: g.term_degrees() });
        }
        if g.terms.iter().any(|t| t.component >= module.rank()) {
            return Err(Error::ColumnLength { expected: module.rank(), found: g.terms.len() });
        }
    }
    let mut state = Buchberger::new(module);
    let mut inputs: Vec<&ModuleElement> = gens.iter().filter(|g| !g.is_zero()).collect();
    inputs.sort_by_key(|g| g.homogeneous_degree());
    let mut inputs = inputs.into_iter().peekable();

    loop {
        let next_pair_deg = state.queue.first().map(|p| p.0);
        let next_input_deg = inputs.peek().and_then(|g| g.homogeneous_degree());
        match (next_pair_deg, next_input_deg) {
            (None, None) => break,
            (Some(pd), Some(id)) if id <= pd => {
                let g = inputs.next().unwrap();
                state.insert_reduced(g.clone());
            }
            (None, Some(_)) => {
                let g = inputs.next().unwrap();
                state.insert_reduced(g.clone());
            }
            _ => {
                let (_, i, j) = state.queue.pop_first().unwrap();
                state.pending.remove(&(i, j));
                state.process_pair(i, j);
            }
        }
    }
    Ok(state.finish())
}

struct Buchberger<'a> {
    module: &'a FreeModule,
    basis: Vec<ModuleElement>,
    queue: BTreeSet<(i64, usize, usize)>,
    pending: HashSet<(usize, usize)>,
}

impl<'a> Buchberger<'a> {
    fn new(module: &'a FreeModule) -> Self {
        Buchberger { module, basis: Vec::new(), queue: BTreeSet::new(), pending: HashSet::new() }
    }

    fn insert_reduced(&mut self, f: ModuleElement) {
        let mut r = reduce(self.module, f, &self.basis);
        if r.is_zero() {
            return;
        }
        r.make_monic();
        let k = self.basis.len();
        let lk = r.terms[0].clone();
        self.basis.push(r);
        for i in 0..k {
            let li = &self.basis[i].terms[0];
            if li.component != lk.component {
                continue;
            }
            let lcm = li.monomial.lcm(&lk.monomial);
            let deg = self.module.ring.weighted_degree(&lcm) + self.module.shifts[lk.component];
            self.queue.insert((deg, i, k));
            self.pending.insert((i, k));
        }
    }

    fn process_pair(&mut self, i: usize, j: usize) {
        let li = &self.basis[i].terms[0];
        let lj = &self.basis[j].terms[0];
        // product criterion holds for ideals only
        if self.module.rank() == 1 && li.monomial.is_coprime(&lj.monomial) {
            return;
        }
        let lcm = li.monomial.lcm(&lj.monomial);
        if self.chain_criterion(i, j, &lcm, li.component) {
            return;
        }
        let weights = self.module.ring.weights();
        let mi = li.monomial.quotient_of(&lcm).unwrap();
        let mj = lj.monomial.quotient_of(&lcm).unwrap();
        let one = li.coeff.kind().one();
        let s = ModuleElement::default()
            .add_scaled_shift(&one, &mi, mi.weighted_degree(weights), &self.basis[i])
            .add_scaled_shift(&-&one, &mj, mj.weighted_degree(weights), &self.basis[j]);
        self.insert_reduced(s);
    }

    fn chain_criterion(&self, i: usize, j: usize, lcm: &Monomial, comp: usize) -> bool {
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        self.basis.iter().enumerate().any(|(k, g)| {
            k != i
                && k != j
                && g.terms[0].component == comp
                && g.terms[0].monomial.divides(lcm)
                && !self.pending.contains(&key(i, k))
                && !self.pending.contains(&key(j, k))
        })
    }

    fn finish(self) -> GroebnerBasis {
        let module = self.module.clone();
        // keep elements whose leading term is not divisible by another's
        let mut minimal: Vec<ModuleElement> = Vec::new();
        for (idx, g) in self.basis.iter().enumerate() {
            let lt = &g.terms[0];
            let redundant = self.basis.iter().enumerate().any(|(k, h)| {
                let lh = &h.terms[0];
                k != idx
                    && lh.component == lt.component
                    && lh.monomial.divides(&lt.monomial)
                    && (lh.monomial != lt.monomial || k < idx)
            });
            if !redundant {
                minimal.push(g.clone());
            }
        }
        let mut reduced = Vec::with_capacity(minimal.len());
        for idx in 0..minimal.len() {
            let g = minimal[idx].clone();
            let head = ModuleElement { terms: vec![g.terms[0].clone()] };
            let tail = ModuleElement { terms: g.terms[1..].to_vec() };
            let others: Vec<ModuleElement> = minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != idx)
                .map(|(_, h)| h.clone())
                .collect();
            let tail = reduce(&module, tail, &others);
            let mut r = head.add(&tail);
            r.make_monic();
            reduced.push(r);
        }
        reduced.sort_by(|a, b| MonomialOrder.cmp_terms(&a.terms[0], &b.terms[0]));
        GroebnerBasis { module, generators: reduced }
    }
}

/// Full reduction of `f` by `basis` (elements assumed monic).
fn reduce(module: &FreeModule, f: ModuleElement, basis: &[ModuleElement]) -> ModuleElement {
    let weights = module.ring.weights();
    let mut done: Vec<ModuleTerm> = Vec::new();
    let mut rest = f;
    while let Some(lt) = rest.terms.first() {
        let reducer = basis.iter().find(|g| {
            let lg = &g.terms[0];
            lg.component == lt.component && lg.monomial.divides(&lt.monomial)
        });
        match reducer {
            Some(g) => {
                let lg = &g.terms[0];
                let q = lg.monomial.quotient_of(&lt.monomial).unwrap();
                let c = -&(&lt.coeff * &lg.coeff.inv().unwrap());
                let qdeg = q.weighted_degree(weights);
                rest = rest.add_scaled_shift(&c, &q, qdeg, g);
            }
            None => {
                let t = rest.terms.remove(0);
                done.push(t);
            }
        }
    }
    ModuleElement { terms: done }
}

impl GroebnerBasis {
    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn generators(&self) -> &[ModuleElement] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        MonomialOrder
    }

    /// Unique remainder with no term divisible by a leading term of the basis.
    pub fn normal_form(&self, f: &ModuleElement) -> ModuleElement {
        reduce(&self.module, f.clone(), &self.generators)
    }

    pub fn contains(&self, f: &ModuleElement) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Leading monomials lying in each component.
    pub fn leading_monomials(&self) -> Vec<Vec<Monomial>> {
        let mut out = vec![Vec::new(); self.module.rank()];
        for g in &self.generators {
            let lt = &g.terms[0];
            out[lt.component].push(lt.monomial.clone());
        }
        out
    }

    fn is_standard(&self, component: usize, m: &Monomial) -> bool {
        !self.generators.iter().any(|g| {
            let lt = &g.terms[0];
            lt.component == component && lt.monomial.divides(m)
        })
    }

    /// Standard monomials of internal degree `j`, in decreasing term order.
    pub fn standard_monomials_in_degree(&self, j: i64) -> Vec<(usize, Monomial)> {
        let weights = self.module.ring.weights();
        let mut terms: Vec<ModuleTerm> = Vec::new();
        for (c, &a) in self.module.shifts.iter().enumerate() {
            for m in monomials_of_degree(weights, j - a) {
                if self.is_standard(c, &m) {
                    terms.push(self.module.term(c, m, self.module.ring.field().one()));
                }
            }
        }
        terms.sort_by(|a, b| MonomialOrder.cmp_terms(b, a));
        terms.into_iter().map(|t| (t.component, t.monomial)).collect()
    }

    /// Standard monomials per degree for every degree from the lowest shift up to `max_degree`.
    pub fn standard_monomials_up_to(&self, max_degree: i64) -> BTreeMap<i64, Vec<(usize, Monomial)>> {
        let lo = self.module.shifts.iter().copied().min().unwrap_or(0);
        (lo..=max_degree).map(|j| (j, self.standard_monomials_in_degree(j))).collect()
    }

    /// `Ok(())` when the quotient has finite length; otherwise the first
    /// `(component, variable)` whose pure powers avoid the leading-term module.
    pub fn finite_quotient_witness(&self) -> std::result::Result<(), (usize, usize)> {
        let lms = self.leading_monomials();
        let n = self.module.ring.nvars();
        for (c, gens) in lms.iter().enumerate() {
            if gens.iter().any(|m| m.is_one()) {
                continue;
            }
            for v in 0..n {
                if !gens.iter().any(|m| m.pure_power_var() == Some(v)) {
                    return Err((c, v));
                }
            }
        }
        Ok(())
    }

    /// Total number of standard monomials, or `None` when infinite.
    pub fn quotient_dimension(&self) -> Option<u64> {
        self.finite_quotient_witness().ok()?;
        let lms = self.leading_monomials();
        let n = self.module.ring.nvars();
        let mut total = 0u64;
        for gens in &lms {
            if gens.iter().any(|m| m.is_one()) {
                continue;
            }
            let mut bounds = vec![0u32; n];
            for m in gens {
                if let Some(v) = m.pure_power_var() {
                    let e = m.exponents()[v];
                    if bounds[v] == 0 || e < bounds[v] {
                        bounds[v] = e;
                    }
                }
            }
            total += count_standard_in_box(gens, &bounds);
        }
        Some(total)
    }

    /// Highest degree carrying a standard monomial when the quotient is finite.
    pub fn top_degree(&self) -> Option<i64> {
        self.finite_quotient_witness().ok()?;
        let weights = self.module.ring.weights();
        let mut top: Option<i64> = None;
        for (c, gens) in self.leading_monomials().iter().enumerate() {
            if gens.iter().any(|m| m.is_one()) {
                continue;
            }
            let bound: i64 = (0..weights.len())
                .map(|v| {
                    let e = gens
                        .iter()
                        .filter(|m| m.pure_power_var() == Some(v))
                        .map(|m| m.exponents()[v])
                        .min()
                        .unwrap();
                    (e as i64 - 1) * weights[v] as i64
                })
                .sum();
            let shift = self.module.shifts[c];
            for d in (shift..=shift + bound).rev() {
                if self.standard_monomials_in_degree(d).iter().any(|(cc, _)| *cc == c) {
                    top = Some(top.map_or(d, |t: i64| t.max(d)));
                    break;
                }
            }
        }
        top
    }
}

fn count_standard_in_box(gens: &[Monomial], bounds: &[u32]) -> u64 {
    let n = bounds.len();
    let mut count = 0u64;
    let mut e = vec![0u32; n];
    loop {
        let m = Monomial::new(e.clone());
        if !gens.iter().any(|g| g.divides(&m)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            e[i] += 1;
            if e[i] < bounds[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

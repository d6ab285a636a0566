//! Exact sparse row echelon forms.
//!
//! Rows over the rationals are cleared of denominators and eliminated
//! fraction-free, dividing out the content after every combination so entries
//! stay small. Rows over a prime field use ordinary elimination with monic pivots.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ring::{FieldElement, FieldKind};

/// A sparse row: strictly increasing column indices with nonzero entries.
pub type SparseRow = Vec<(usize, FieldElement)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    /// Pivot columns in increasing order; the pivot of a row is its smallest column.
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn rank(rows: impl IntoIterator<Item = SparseRow>, field: FieldKind) -> usize {
    echelon(rows, field).rank()
}

pub fn echelon(rows: impl IntoIterator<Item = SparseRow>, field: FieldKind) -> Echelon {
    match field {
        FieldKind::Rationals => integer_echelon(rows),
        FieldKind::Prime(p) => modular_echelon(rows, p as u64),
    }
}

type IntRow = Vec<(usize, BigInt)>;

fn to_integer_row(row: SparseRow) -> IntRow {
    let mut den = BigInt::one();
    for (_, e) in &row {
        let r = e.to_rational();
        den = den.lcm(r.denom());
    }
    let mut out: IntRow = row
        .into_iter()
        .filter(|(_, e)| !e.is_zero())
        .map(|(c, e)| {
            let r = e.to_rational();
            (c, r.numer() * (&den / r.denom()))
        })
        .collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut IntRow) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.abs();
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    let negate = row[0].1.is_negative();
    if !g.is_one() || negate {
        let g = if negate { -g } else { g };
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// `a*x - b*y`, merged by column.
fn combine(a: &BigInt, x: &IntRow, b: &BigInt, y: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn integer_echelon(rows: impl IntoIterator<Item = SparseRow>) -> Echelon {
    let mut pivots: BTreeMap<usize, IntRow> = BTreeMap::new();
    for row in rows {
        let mut row = to_integer_row(row);
        while let Some(&(lead, _)) = row.first() {
            match pivots.get(&lead) {
                Some(p) => {
                    let g = p[0].1.gcd(&row[0].1);
                    let a = &p[0].1 / &g;
                    let b = &row[0].1 / &g;
                    row = combine(&a, &row, &b, p);
                    make_primitive(&mut row);
                }
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    Echelon { pivots: pivots.into_keys().collect() }
}

fn modular_echelon(rows: impl IntoIterator<Item = SparseRow>, p: u64) -> Echelon {
    let mut pivots: BTreeMap<usize, Vec<(usize, u64)>> = BTreeMap::new();
    for row in rows {
        let mut row: Vec<(usize, u64)> = row
            .into_iter()
            .filter_map(|(c, e)| match e {
                FieldElement::Residue { value, .. } if value != 0 => Some((c, value as u64)),
                _ => None,
            })
            .collect();
        while let Some(&(lead, lv)) = row.first() {
            match pivots.get(&lead) {
                Some(piv) => {
                    // piv is monic; row <- row - lv * piv
                    let mut out = Vec::with_capacity(row.len() + piv.len());
                    let (mut i, mut j) = (0, 0);
                    while i < row.len() || j < piv.len() {
                        if j >= piv.len() || (i < row.len() && row[i].0 < piv[j].0) {
                            out.push(row[i]);
                            i += 1;
                        } else if i >= row.len() || piv[j].0 < row[i].0 {
                            out.push((piv[j].0, (p - lv * piv[j].1 % p) % p));
                            j += 1;
                        } else {
                            let v = (row[i].1 + p - lv * piv[j].1 % p) % p;
                            if v != 0 {
                                out.push((row[i].0, v));
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                    row = out;
                }
                None => {
                    let inv = mod_inv(lv, p);
                    for (_, v) in row.iter_mut() {
                        *v = *v * inv % p;
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    Echelon { pivots: pivots.into_keys().collect() }
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Product of sparse matrices given as rows: `(a * b)[i] = sum_k a[i][k] * b[k]`.
pub fn mat_mul(a: &[SparseRow], b: &[SparseRow], field: FieldKind) -> Vec<SparseRow> {
    a.iter()
        .map(|row| {
            let mut acc: BTreeMap<usize, FieldElement> = BTreeMap::new();
            for (k, v) in row {
                for (c, w) in &b[*k] {
                    let e = acc.entry(*c).or_insert_with(|| field.zero());
                    *e = &*e + &(v * w);
                }
            }
            acc.into_iter().filter(|(_, e)| !e.is_zero()).collect()
        })
        .collect()
}

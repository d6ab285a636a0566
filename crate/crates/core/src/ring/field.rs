//! Exact coefficient fields: the rationals and prime fields of word size.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which coefficient field a ring is defined over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    /// Integers modulo a prime `p < 2^31`.
    Prime(u32),
}

impl FieldKind {
    pub fn prime(p: u32) -> Result<Self> {
        if !(2..1 << 31).contains(&p) {
            return Err(Error::InvalidField(format!("modulus {p} out of range")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldKind::Prime(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldKind::Rationals => 0,
            FieldKind::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        match *self {
            FieldKind::Rationals => FieldElement::Rational(BigRational::from_integer(v.into())),
            FieldKind::Prime(p) => FieldElement::Residue {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElement {
        match *self {
            FieldKind::Rationals => FieldElement::Rational(BigRational::from_integer(v.clone())),
            FieldKind::Prime(p) => {
                let r = ((v % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                FieldElement::Residue {
                    value: r.to_u32().expect("residue below modulus"),
                    modulus: p,
                }
            }
        }
    }

    /// Fails when the denominator vanishes modulo `p`.
    pub fn from_rational(&self, v: &BigRational) -> Result<FieldElement> {
        match *self {
            FieldKind::Rationals => Ok(FieldElement::Rational(v.clone())),
            FieldKind::Prime(p) => {
                let num = self.from_bigint(v.numer());
                let den = self.from_bigint(v.denom());
                let inv = den.inv().ok_or_else(|| {
                    Error::InvalidField(format!("denominator of {v} vanishes mod {p}"))
                })?;
                Ok(&num * &inv)
            }
        }
    }

    pub fn contains(&self, e: &FieldElement) -> bool {
        match (self, e) {
            (FieldKind::Rationals, FieldElement::Rational(_)) => true,
            (FieldKind::Prime(p), FieldElement::Residue { modulus, .. }) => p == modulus,
            _ => false,
        }
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "Fp {p}"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if (p as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`FieldKind`]. Rationals are kept in lowest terms with a
/// positive denominator; residues live in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Residue { value, .. } => *value == 1,
        }
    }

    pub fn kind(&self) -> FieldKind {
        match self {
            FieldElement::Rational(_) => FieldKind::Rationals,
            FieldElement::Residue { modulus, .. } => FieldKind::Prime(*modulus),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldElement::Rational(r) => FieldElement::Rational(r.recip()),
            FieldElement::Residue { value, modulus } => FieldElement::Residue {
                value: pow_mod(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            },
        })
    }

    /// The exact rational value; residues are lifted to their representative in `[0, p)`.
    pub fn to_rational(&self) -> BigRational {
        match self {
            FieldElement::Rational(r) => r.clone(),
            FieldElement::Residue { value, .. } => BigRational::from_integer((*value).into()),
        }
    }

    fn binop(&self, other: &Self, q: impl Fn(&BigRational, &BigRational) -> BigRational, m: impl Fn(u64, u64, u64) -> u64) -> Self {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(q(a, b)),
            (
                FieldElement::Residue { value: a, modulus: p },
                FieldElement::Residue { value: b, modulus: p2 },
            ) if p == p2 => FieldElement::Residue {
                value: m(*a as u64, *b as u64, *p as u64) as u32,
                modulus: *p,
            },
            _ => panic!("field element arithmetic across different fields"),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.binop(rhs, |a, b| a + b, |a, b, p| (a + b) % p)
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.binop(rhs, |a, b| a - b, |a, b, p| (a + p - b) % p)
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.binop(rhs, |a, b| a * b, |a, b, p| a * b % p)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(r) => FieldElement::Rational(-r),
            FieldElement::Residue { value, modulus } => FieldElement::Residue {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => f.write_str(&format_rational(r)),
            FieldElement::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

/// `p/q`, or just `p` for integers.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Whether the rational is negative; used by renderers that print signs separately.
pub(crate) fn is_negative(e: &FieldElement) -> bool {
    matches!(e, FieldElement::Rational(r) if r.is_negative())
}

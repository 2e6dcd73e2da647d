//! Scalar fields. Everything downstream is generic over [`Field`]; the
//! exhaustive machinery additionally needs [`FiniteField`].

use std::fmt;
use std::hash::Hash;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Runtime description of a base field, as it appears in literals and files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Prime(u32),
    Rationals,
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rationals => write!(f, "Q"),
        }
    }
}

pub trait Field: Clone + fmt::Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Copy + Eq + Ord + Hash + fmt::Debug + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: Self::Elem) -> Option<Self::Elem>;
    fn from_int(&self, v: i64) -> Self::Elem;
    fn spec(&self) -> FieldSpec;
    fn format(&self, a: Self::Elem) -> String;
    /// Parses a scalar token such as `2`, `-1` or (over Q) `3/4`.
    fn parse(&self, s: &str) -> Option<Self::Elem>;

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn is_unit(&self, a: Self::Elem) -> bool {
        !self.is_zero(a)
    }
}

/// Fields whose elements can be listed; element `i` is the residue `i`.
pub trait FiniteField: Field {
    fn order(&self) -> usize;
    fn element(&self, i: usize) -> Self::Elem;
    fn index_of(&self, a: Self::Elem) -> usize;

    fn elements(&self) -> Vec<Self::Elem> {
        (0..self.order()).map(|i| self.element(i)).collect()
    }
}

/// The prime field GF(p), elements stored as canonical residues `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p > u16::MAX as u32 {
            return Err(Error::InvalidField(format!("{p} exceeds the supported range")));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u32;

    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p { s - self.p } else { s }
    }
    #[inline]
    fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b { a - b } else { a + self.p - b }
    }
    #[inline]
    fn neg(&self, a: u32) -> u32 {
        if a == 0 { 0 } else { self.p - a }
    }
    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        (a * b) % self.p
    }
    fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        // a^(p-2) by square-and-multiply
        let mut result = 1u32;
        let mut base = a;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        Some(result)
    }
    fn from_int(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
    fn format(&self, a: u32) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Option<u32> {
        s.trim().parse::<i64>().ok().map(|v| self.from_int(v))
    }
}

impl FiniteField for PrimeField {
    fn order(&self) -> usize {
        self.p as usize
    }
    fn element(&self, i: usize) -> u32 {
        debug_assert!(i < self.p as usize);
        i as u32
    }
    fn index_of(&self, a: u32) -> usize {
        a as usize
    }
}

/// The rationals with `i128` numerators and denominators. Overflow is
/// reported loudly instead of wrapping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

pub type Rational = Ratio<i128>;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::from_integer(1)
    }
    fn add(&self, a: Rational, b: Rational) -> Rational {
        a.checked_add(&b).expect("rational overflow in addition")
    }
    fn sub(&self, a: Rational, b: Rational) -> Rational {
        a.checked_sub(&b).expect("rational overflow in subtraction")
    }
    fn neg(&self, a: Rational) -> Rational {
        -a
    }
    fn mul(&self, a: Rational, b: Rational) -> Rational {
        a.checked_mul(&b).expect("rational overflow in multiplication")
    }
    fn inv(&self, a: Rational) -> Option<Rational> {
        if a.is_zero() { None } else { Some(a.recip()) }
    }
    fn from_int(&self, v: i64) -> Rational {
        Rational::from_integer(v as i128)
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn format(&self, a: Rational) -> String {
        if *a.denom() == 1 {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn parse(&self, s: &str) -> Option<Rational> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let d: i128 = d.trim().parse().ok()?;
                if d == 0 {
                    return None;
                }
                Some(Rational::new(n.trim().parse().ok()?, d))
            }
            None => s.parse::<i128>().ok().map(Rational::from_integer),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(13).is_ok());
    }

    #[test]
    fn prime_field_inverses() {
        for p in [2u32, 3, 5, 7, 11, 13] {
            let f = PrimeField::new(p).unwrap();
            assert_eq!(f.inv(0), None);
            for a in 1..p {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
        }
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(f3.inv(2), Some(2));
        assert_eq!(f3.from_int(-1), 2);
    }

    #[test]
    fn rationals_lowest_terms() {
        let q = Rationals;
        let half = q.mul(q.from_int(2), q.inv(q.from_int(4)).unwrap());
        assert_eq!(*half.numer(), 1);
        assert_eq!(*half.denom(), 2);
        let neg = q.inv(q.from_int(-3)).unwrap();
        assert!(*neg.denom() > 0);
        assert_eq!(q.format(neg), "-1/3");
    }
}

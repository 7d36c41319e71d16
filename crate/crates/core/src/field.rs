//! The two exact coefficient fields used for ranks and radicals: the
//! rationals and prime fields. Field arithmetic goes through a context
//! object so the prime travels once, not per element.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt::Debug;

pub trait FieldCtx: Clone + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn from_int(&self, x: &BigInt) -> Self::Elem;
}

/// The rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rationals;

impl FieldCtx for Rationals {
    type Elem = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, x: &BigRational) -> bool {
        x.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn from_int(&self, x: &BigInt) -> BigRational {
        BigRational::from_integer(x.clone())
    }
}

/// The field with p elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2, "characteristic must be prime");
        PrimeField { p }
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = (acc as u128 * base as u128 % self.p as u128) as u64;
            }
            base = (base as u128 * base as u128 % self.p as u128) as u64;
            exp >>= 1;
        }
        acc
    }
}

impl FieldCtx for PrimeField {
    type Elem = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (*a as u128 * *b as u128 % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0);
        self.pow(*a, self.p - 2)
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a % self.p) % self.p
    }
    fn from_int(&self, x: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let mut r = x % &m;
        if r.is_negative() {
            r += &m;
        }
        u64::try_from(r).unwrap()
    }
}

/// Reduce a rational with denominator coprime to p into F_p.
pub fn rational_mod_p(x: &BigRational, f: &PrimeField) -> u64 {
    let num = f.from_int(x.numer());
    let den = f.from_int(x.denom());
    assert!(den != 0, "denominator divisible by {}", f.p);
    f.mul(&num, &f.inv(&den))
}

//! Coefficient fields: exact rationals and prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted; products of two residues must fit in a `u64`.
pub const MAX_MODULUS: u32 = (1 << 31) - 1;

/// Default prime for randomized runs.
pub const DEFAULT_PRIME: u32 = 32003;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientField {
    Rationals,
    Prime(u32),
}

/// A field element. Which variant is meaningful is decided by the owning
/// [`CoefficientField`]; mixing variants is a logic error.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Box<BigRational>),
    Modular(u32),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl CoefficientField {
    /// The prime field `F_p`; rejects composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_MODULUS as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(CoefficientField::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            CoefficientField::Rationals => 0,
            CoefficientField::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            CoefficientField::Rationals => {
                Scalar::Rational(Box::new(BigRational::from_integer(BigInt::from(n))))
            }
            CoefficientField::Prime(p) => Scalar::Modular(n.rem_euclid(*p as i64) as u32),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            CoefficientField::Rationals => {
                Scalar::Rational(Box::new(BigRational::from_integer(n.clone())))
            }
            CoefficientField::Prime(p) => {
                let r = n % BigInt::from(*p);
                let r = if r.is_negative() { r + BigInt::from(*p) } else { r };
                Scalar::Modular(r.to_u32().expect("residue fits in u32"))
            }
        }
    }

    /// `num / den` as a field element; `None` when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Scalar> {
        let d = self.from_bigint(den);
        if self.is_zero(&d) {
            return None;
        }
        Some(self.div(&self.from_bigint(num), &d))
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular(v) => *v == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular(v) => *v == 1,
        }
    }

    fn modulus(&self) -> u64 {
        match self {
            CoefficientField::Prime(p) => *p as u64,
            CoefficientField::Rationals => unreachable!("rationals have no modulus"),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(Box::new(&**x + &**y)),
            (Scalar::Modular(x), Scalar::Modular(y)) => {
                Scalar::Modular(((*x as u64 + *y as u64) % self.modulus()) as u32)
            }
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Rational(x) => Scalar::Rational(Box::new(-&**x)),
            Scalar::Modular(0) => Scalar::Modular(0),
            Scalar::Modular(x) => Scalar::Modular((self.modulus() - *x as u64) as u32),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(Box::new(&**x * &**y)),
            (Scalar::Modular(x), Scalar::Modular(y)) => {
                Scalar::Modular(((*x as u64 * *y as u64) % self.modulus()) as u32)
            }
            _ => panic!("mixed scalar kinds"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!self.is_zero(a), "division by zero in coefficient field");
        match a {
            Scalar::Rational(x) => Scalar::Rational(Box::new(x.recip())),
            Scalar::Modular(x) => {
                let p = self.modulus();
                Scalar::Modular(mod_pow(*x as u64, p - 2, p) as u32)
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    /// Human-readable form; prime-field residues use the symmetric range.
    pub fn display(&self, a: &Scalar) -> String {
        match a {
            Scalar::Rational(q) => q.to_string(),
            Scalar::Modular(v) => self.symmetric(*v).to_string(),
        }
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn symmetric(&self, v: u32) -> i64 {
        let p = self.modulus() as i64;
        let v = v as i64;
        if v > p / 2 {
            v - p
        } else {
            v
        }
    }

    /// Whether the displayed form starts with a minus sign.
    pub fn is_negative(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(q) => q.is_negative(),
            Scalar::Modular(v) => self.symmetric(*v) < 0,
        }
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rationals => write!(f, "QQ"),
            CoefficientField::Prime(p) => write!(f, "Fp({p})"),
        }
    }
}

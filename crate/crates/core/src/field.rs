//! Coefficient fields: the rationals and prime fields.
//!
//! Every coefficient is stored as a [`BigRational`]. Over a prime field the
//! value is kept as the least nonnegative residue (an integer in `0..p`), so
//! equality and hashing of polynomials stay structural in both cases.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) && p < (1 << 31) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::InvalidField(p))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(self) -> Scalar {
        Scalar::one()
    }

    fn reduce_int(self, n: BigInt) -> Scalar {
        match self {
            Field::Rationals => Scalar::from_integer(n),
            Field::Prime(p) => Scalar::from_integer(n.mod_floor(&BigInt::from(p))),
        }
    }

    pub fn from_int(self, n: i64) -> Scalar {
        self.reduce_int(BigInt::from(n))
    }

    /// Maps a rational number into this field. Fails over `F_p` when the
    /// denominator is divisible by `p`.
    pub fn from_rational(self, r: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rationals => Ok(r.clone()),
            Field::Prime(p) => {
                let num = self.reduce_int(r.numer().clone());
                let den = self.reduce_int(r.denom().clone());
                if den.is_zero() {
                    return Err(Error::DenominatorVanishes {
                        value: r.to_string(),
                        p,
                    });
                }
                Ok(self.div(&num, &den))
            }
        }
    }

    pub fn add(self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a + b,
            Field::Prime(_) => self.reduce_int(a.numer() + b.numer()),
        }
    }

    pub fn sub(self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a - b,
            Field::Prime(_) => self.reduce_int(a.numer() - b.numer()),
        }
    }

    pub fn neg(self, a: &Scalar) -> Scalar {
        match self {
            Field::Rationals => -a,
            Field::Prime(_) => self.reduce_int(-a.numer()),
        }
    }

    pub fn mul(self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a * b,
            Field::Prime(_) => self.reduce_int(a.numer() * b.numer()),
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self, a: &Scalar) -> Scalar {
        assert!(!a.is_zero(), "inverse of zero");
        match self {
            Field::Rationals => a.recip(),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let e = &pb - BigInt::from(2);
                Scalar::from_integer(a.numer().modpow(&e, &pb))
            }
        }
    }

    pub fn div(self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    pub fn pow(self, a: &Scalar, e: u64) -> Scalar {
        match self {
            Field::Rationals => {
                let mut base = a.clone();
                let mut acc = Scalar::one();
                let mut e = e;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = &acc * &base;
                    }
                    base = &base * &base;
                    e >>= 1;
                }
                acc
            }
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                Scalar::from_integer(a.numer().modpow(&BigInt::from(e), &pb))
            }
        }
    }

    /// `n · a` for a machine integer `n`; vanishes when `p | n`.
    pub fn mul_int(self, a: &Scalar, n: u64) -> Scalar {
        self.mul(a, &self.reduce_int(BigInt::from(n)))
    }

    /// Normalizes an arbitrary rational (already known to be representable).
    pub fn normalize(self, a: &Scalar) -> Scalar {
        match self {
            Field::Rationals => a.clone(),
            Field::Prime(_) => self.from_rational(a).expect("value not representable"),
        }
    }

    /// Whether `n` is zero in this field.
    pub fn divides_characteristic(self, n: u64) -> bool {
        match self {
            Field::Rationals => n == 0,
            Field::Prime(p) => n % p == 0,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "FF({p})"),
        }
    }
}

/// Renders a coefficient; over `F_p` residues above `p/2` print as negatives
/// so that `-1` reads naturally.
pub(crate) fn render_scalar(field: Field, a: &Scalar) -> String {
    match field {
        Field::Rationals => {
            if a.is_integer() {
                a.numer().to_string()
            } else {
                format!("{}/{}", a.numer(), a.denom())
            }
        }
        Field::Prime(p) => {
            let v = a.numer().to_u64().unwrap_or(0);
            if v > p / 2 {
                format!("-{}", p - v)
            } else {
                v.to_string()
            }
        }
    }
}

pub(crate) fn is_negative_scalar(field: Field, a: &Scalar) -> bool {
    match field {
        Field::Rationals => a.is_negative(),
        Field::Prime(p) => a.numer().to_u64().map(|v| v > p / 2).unwrap_or(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(5).unwrap();
        let a = f.from_int(3);
        let b = f.from_int(4);
        assert_eq!(f.add(&a, &b), f.from_int(2));
        assert_eq!(f.mul(&a, &b), f.from_int(2));
        assert_eq!(f.mul(&a, &f.inv(&a)), f.one());
        assert_eq!(f.neg(&f.from_int(1)), f.from_int(4));
        assert_eq!(f.pow(&a, 5), a);
    }

    #[test]
    fn rational_into_prime_field() {
        let f = Field::prime(3).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f.from_rational(&half).unwrap(), f.from_int(2));
        let third = BigRational::new(1.into(), 3.into());
        assert!(f.from_rational(&third).is_err());
    }

    #[test]
    fn rejects_composite() {
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
    }

    #[test]
    fn negative_rendering() {
        let f = Field::Prime(7);
        assert_eq!(render_scalar(f, &f.from_int(-2)), "-2");
        assert_eq!(render_scalar(f, &f.from_int(3)), "3");
    }
}

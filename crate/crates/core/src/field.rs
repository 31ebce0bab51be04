//! Prime field arithmetic.
//!
//! [`PrimeField`] is the lightweight context used by every kernel in the crate;
//! coefficients are stored as bare `u32` residues and the modulus travels with
//! the ring. [`FieldElement`] is the self-describing value type used at API
//! boundaries.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported characteristic. Products of two residues must fit in `u64`.
pub const MAX_PRIME: u32 = 1 << 31;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p as u64) || p >= MAX_PRIME {
            return Err(Error::InvalidModulus(p as u64));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Reduce an arbitrary signed integer into `[0, p)`.
    #[inline]
    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p as u64 - b as u64) as u32
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut base: u32, mut e: u64) -> u32 {
        let mut acc = 1u32 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat. Panics on zero; callers check first.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    pub fn try_inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.inv(a))
        }
    }

    /// Symmetric representative in `(-p/2, p/2]`, used for printing signs.
    pub fn signed(&self, a: u32) -> i64 {
        if (a as u64) * 2 > self.p as u64 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Inv,
    Neg,
}

/// An element of F_p carrying its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    field: PrimeField,
}

impl FieldElement {
    pub fn new(value: i64, p: u32) -> Result<Self> {
        let field = PrimeField::new(p)?;
        Ok(FieldElement {
            value: field.from_i64(value),
            field,
        })
    }

    pub fn in_field(value: u32, field: PrimeField) -> Self {
        FieldElement {
            value: value % field.p(),
            field,
        }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.field.p()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ModulusMismatch(self.modulus(), other.modulus()));
        }
        Ok(())
    }

    /// Binary/unary dispatch; `b` is ignored for `Inv` and `Neg`.
    pub fn apply(self, b: Self, op: FieldOp) -> Result<Self> {
        let f = self.field;
        let value = match op {
            FieldOp::Add => {
                self.check(&b)?;
                f.add(self.value, b.value)
            }
            FieldOp::Sub => {
                self.check(&b)?;
                f.sub(self.value, b.value)
            }
            FieldOp::Mul => {
                self.check(&b)?;
                f.mul(self.value, b.value)
            }
            FieldOp::Inv => f.try_inv(self.value)?,
            FieldOp::Neg => f.neg(self.value),
        };
        Ok(FieldElement { value, field: f })
    }

    pub fn inv(self) -> Result<Self> {
        self.apply(self, FieldOp::Inv)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(v: i64, p: u32) -> FieldElement {
        FieldElement::new(v, p).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(fe(2, 3).apply(fe(2, 3), FieldOp::Add).unwrap(), fe(1, 3));
        assert_eq!(fe(2, 3).inv().unwrap(), fe(2, 3));
        assert_eq!(fe(3, 5).apply(fe(4, 5), FieldOp::Mul).unwrap(), fe(2, 5));
        assert_eq!(fe(0, 5).apply(fe(1, 5), FieldOp::Neg).unwrap(), fe(0, 5));
        assert_eq!(fe(1, 5).apply(fe(1, 5), FieldOp::Neg).unwrap(), fe(4, 5));
        assert_eq!(fe(-1, 7).value(), 6);
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert!(matches!(fe(0, 7).inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn composite_modulus_rejected() {
        assert!(FieldElement::new(1, 9).is_err());
        assert!(FieldElement::new(1, 1).is_err());
    }

    #[test]
    fn mixed_moduli_rejected() {
        assert!(fe(1, 3).apply(fe(1, 5), FieldOp::Add).is_err());
    }

    #[test]
    fn field_laws_exhaustive_small_primes() {
        for p in [2u32, 3, 5, 7, 11] {
            let f = PrimeField::new(p).unwrap();
            for a in 0..p {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..p {
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..p {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }
}

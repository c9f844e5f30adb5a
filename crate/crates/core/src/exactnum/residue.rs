use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::BigInt;

use super::{inverse_mod, mod_u64, mul_mod, pow_mod};
use crate::{Error, Result};

/// An element of `Z/mZ`, stored as its representative in `[0, m)`.
///
/// Arithmetic between residues of different moduli is a logic error and
/// panics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ResidueInt {
    value: u64,
    modulus: u64,
}

impl ResidueInt {
    pub fn new(value: i128, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::NonPositive(0.into()));
        }
        Ok(Self {
            value: value.rem_euclid(modulus as i128) as u64,
            modulus,
        })
    }

    pub fn from_bigint(value: &BigInt, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::NonPositive(0.into()));
        }
        Ok(Self {
            value: mod_u64(value, modulus),
            modulus,
        })
    }

    pub(crate) fn raw(value: u64, modulus: u64) -> Self {
        debug_assert!(value < modulus);
        Self { value, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, exp: u64) -> Self {
        Self::raw(pow_mod(self.value, exp, self.modulus), self.modulus)
    }

    pub fn inverse(self) -> Result<Self> {
        inverse_mod(self.value, self.modulus)
            .map(|v| Self::raw(v, self.modulus))
            .ok_or_else(|| Error::NotInvertible(self.to_string()))
    }

    /// Reduces into `Z/m'Z` for a divisor `m'` of the modulus.
    pub fn reduce(self, modulus: u64) -> Result<Self> {
        if modulus == 0 || !self.modulus.is_multiple_of(modulus) {
            return Err(Error::Mismatch(format!(
                "{modulus} does not divide {}",
                self.modulus
            )));
        }
        Ok(Self::raw(self.value % modulus, modulus))
    }

    fn check(self, other: Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "residues with different moduli"
        );
    }
}

impl fmt::Display for ResidueInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

impl Add for ResidueInt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check(rhs);
        let s = (self.value as u128 + rhs.value as u128) % self.modulus as u128;
        Self::raw(s as u64, self.modulus)
    }
}

impl Sub for ResidueInt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for ResidueInt {
    type Output = Self;
    fn neg(self) -> Self {
        if self.value == 0 {
            self
        } else {
            Self::raw(self.modulus - self.value, self.modulus)
        }
    }
}

impl Mul for ResidueInt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check(rhs);
        Self::raw(mul_mod(self.value, rhs.value, self.modulus), self.modulus)
    }
}

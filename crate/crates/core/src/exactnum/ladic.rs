//! Finite truncations of the l-adic integers as compatible residue sequences.

use std::fmt;

use num::{BigInt, Integer};

use super::{mod_u64, mul_mod, require_prime};
use crate::{Error, Result};

/// `(a_1, ..., a_depth)` with `a_n ∈ Z/l^n Z` and `a_{n+1} ≡ a_n (mod l^n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LAdicTrunc {
    prime: u64,
    digits: Vec<u64>,
}

fn level_modulus(prime: u64, level: usize) -> Result<u64> {
    prime
        .checked_pow(level as u32)
        .filter(|m| *m <= 1u64 << 62)
        .ok_or_else(|| Error::invalid(format!("{prime}^{level} is too large")))
}

impl LAdicTrunc {
    /// Validates primality, ranges and the compatibility condition.
    pub fn new(prime: u64, digits: Vec<u64>) -> Result<Self> {
        require_prime(prime)?;
        if digits.is_empty() {
            return Err(Error::invalid("depth must be positive"));
        }
        for (i, &d) in digits.iter().enumerate() {
            let m = level_modulus(prime, i + 1)?;
            if d >= m {
                return Err(Error::invalid(format!(
                    "a_{} = {d} is not reduced mod {m}",
                    i + 1
                )));
            }
            if i > 0 && d % level_modulus(prime, i)? != digits[i - 1] {
                return Err(Error::invalid(format!(
                    "a_{} = {d} is not ≡ a_{} = {} mod {}^{}",
                    i + 1,
                    i,
                    digits[i - 1],
                    prime,
                    i
                )));
            }
        }
        Ok(Self { prime, digits })
    }

    /// Image of an integer: `(n mod l, n mod l^2, ...)`.
    pub fn embed(prime: u64, depth: usize, n: &BigInt) -> Result<Self> {
        require_prime(prime)?;
        if depth == 0 {
            return Err(Error::invalid("depth must be positive"));
        }
        let digits = (1..=depth)
            .map(|k| level_modulus(prime, k).map(|m| mod_u64(n, m)))
            .collect::<Result<_>>()?;
        Ok(Self { prime, digits })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn depth(&self) -> usize {
        self.digits.len()
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// `a_n` for `1 <= n <= depth`.
    pub fn component(&self, n: usize) -> u64 {
        self.digits[n - 1]
    }

    pub fn is_unit(&self) -> bool {
        !self.digits[0].is_multiple_of(self.prime)
    }

    /// The compatibility condition; always true for values built through
    /// this type's constructors and operations.
    pub fn is_compatible(&self) -> bool {
        Self::new(self.prime, self.digits.clone()).is_ok()
    }

    pub fn truncate(&self, depth: usize) -> Result<Self> {
        if depth == 0 || depth > self.depth() {
            return Err(Error::invalid(format!(
                "cannot truncate depth {} to {depth}",
                self.depth()
            )));
        }
        Ok(Self {
            prime: self.prime,
            digits: self.digits[..depth].to_vec(),
        })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64, u64) -> u64) -> Result<Self> {
        if self.prime != other.prime || self.depth() != other.depth() {
            return Err(Error::Mismatch(format!(
                "Z_{} depth {} vs Z_{} depth {}",
                self.prime,
                self.depth(),
                other.prime,
                other.depth()
            )));
        }
        let digits = self
            .digits
            .iter()
            .zip(&other.digits)
            .enumerate()
            .map(|(i, (&x, &y))| {
                f(
                    x,
                    y,
                    level_modulus(self.prime, i + 1).expect("checked at construction"),
                )
            })
            .collect();
        Ok(Self {
            prime: self.prime,
            digits,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |x, y, m| {
            ((x as u128 + y as u128) % m as u128) as u64
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, mul_mod)
    }

    pub fn neg(&self) -> Self {
        let digits = self
            .digits
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let m = level_modulus(self.prime, i + 1).expect("checked at construction");
                (m - x) % m
            })
            .collect();
        Self {
            prime: self.prime,
            digits,
        }
    }

    /// Multiplicative inverse of a unit, componentwise.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotInvertible(self.to_string()));
        }
        let digits = self
            .digits
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let m = level_modulus(self.prime, i + 1).expect("checked at construction");
                let g = (x as i128).extended_gcd(&(m as i128));
                g.x.rem_euclid(m as i128) as u64
            })
            .collect();
        Ok(Self {
            prime: self.prime,
            digits,
        })
    }
}

impl fmt::Display for LAdicTrunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.digits.iter().map(u64::to_string).collect();
        write!(f, "({}) in Z_{}", parts.join(", "), self.prime)
    }
}

//! The Eisenstein integers `Z[rho]`, `rho = e^{2 pi i / 3}`, with `rho^2 = -1 - rho`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Integer, One, Signed, Zero};

use crate::{Error, Result};

/// `a + b rho`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EisensteinInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn rho() -> Self {
        Self::new(0, 1)
    }

    /// `lambda = 1 - rho`, the prime of norm 3.
    pub fn lambda() -> Self {
        Self::new(1, -1)
    }

    /// The six elements of norm 1: `±1, ±rho, ±rho^2`.
    pub fn units() -> [Self; 6] {
        [
            Self::new(1, 0),
            Self::new(-1, 0),
            Self::new(0, 1),
            Self::new(0, -1),
            Self::new(-1, -1),
            Self::new(1, 1),
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Complex conjugate, `a + b rho^2 = (a - b) - b rho`.
    pub fn conj(&self) -> Self {
        Self::new(&self.a - &self.b, -&self.b)
    }

    /// `N(a + b rho) = a^2 - ab + b^2`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// `self / divisor` when the quotient lies in `Z[rho]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let n = divisor.norm();
        if n.is_zero() {
            return None;
        }
        let t = self * &divisor.conj();
        let (qa, ra) = t.a.div_rem(&n);
        let (qb, rb) = t.b.div_rem(&n);
        (ra.is_zero() && rb.is_zero()).then(|| Self::new(qa, qb))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_some()
    }

    /// Largest `k` with `lambda^k | self`, by repeated exact division.
    pub fn lambda_valuation(&self) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::invalid("lambda-adic valuation of zero"));
        }
        let lambda = Self::lambda();
        let mut cur = self.clone();
        let mut k = 0;
        while let Some(q) = cur.div_exact(&lambda) {
            cur = q;
            k += 1;
        }
        Ok(k)
    }

    /// The representative `r ∈ {0, 1, -1}` with `self ≡ r (mod lambda)`.
    pub fn residue_mod_lambda(&self) -> i32 {
        let lambda = Self::lambda();
        for r in [0, 1, -1] {
            if lambda.divides(&(self - &Self::new(r, 0))) {
                return r;
            }
        }
        unreachable!("Z[rho]/lambda has exactly three classes")
    }

    /// `lambda^k | (self - other)`.
    pub fn congruent_mod_lambda_pow(&self, other: &Self, k: u32) -> bool {
        let diff = self - other;
        diff.is_zero() || diff.lambda_valuation().is_ok_and(|v| v >= k)
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{}-{}ρ", self.a, -&self.b)
        } else {
            write!(f, "{}+{}ρ", self.a, self.b)
        }
    }
}

impl Add for &EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, rhs: Self) -> EisensteinInt {
        EisensteinInt::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, rhs: Self) -> EisensteinInt {
        EisensteinInt::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Neg for &EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt::new(-&self.a, -&self.b)
    }
}

impl Mul for &EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, rhs: Self) -> EisensteinInt {
        // (a + b rho)(c + d rho) = (ac - bd) + (ad + bc - bd) rho
        let bd = &self.b * &rhs.b;
        EisensteinInt::new(
            &self.a * &rhs.a - &bd,
            &self.a * &rhs.b + &self.b * &rhs.a - bd,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    #[test]
    fn norms() {
        assert_eq!(EisensteinInt::lambda().norm(), BigInt::from(3));
        assert_eq!(e(1, 0).norm(), BigInt::from(1));
        assert_eq!(e(3, 1).norm(), BigInt::from(7));
        for u in EisensteinInt::units() {
            assert!(u.is_unit(), "{u}");
        }
    }

    #[test]
    fn rho_is_a_cube_root_of_unity() {
        let rho = EisensteinInt::rho();
        assert_eq!(rho.pow(3), EisensteinInt::one());
        assert_eq!(
            &(&rho * &rho) + &(&rho + &EisensteinInt::one()),
            EisensteinInt::zero()
        );
    }

    #[test]
    fn lambda_squared_is_minus_three_rho() {
        let l = EisensteinInt::lambda();
        let minus_three_rho = e(0, -3);
        assert_eq!(&l * &l, minus_three_rho);
    }

    #[test]
    fn valuations() {
        assert_eq!(e(3, 0).lambda_valuation().unwrap(), 2);
        assert_eq!(EisensteinInt::lambda().lambda_valuation().unwrap(), 1);
        assert_eq!(e(2, 0).lambda_valuation().unwrap(), 0);
        assert_eq!(e(9, 9).lambda_valuation().unwrap(), 4);
        assert!(EisensteinInt::zero().lambda_valuation().is_err());
    }

    #[test]
    fn residues_mod_lambda() {
        assert_eq!(e(0, 0).residue_mod_lambda(), 0);
        assert_eq!(e(1, 0).residue_mod_lambda(), 1);
        assert_eq!(e(0, 1).residue_mod_lambda(), 1); // rho ≡ 1
        assert_eq!(e(1, 1).residue_mod_lambda(), -1);
        assert_eq!(EisensteinInt::lambda().residue_mod_lambda(), 0);
    }

    #[test]
    fn exact_division() {
        let a = e(5, -2);
        let b = e(3, 7);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b), Some(a));
        assert_eq!(e(1, 0).div_exact(&e(2, 0)), None);
        assert_eq!(e(1, 0).div_exact(&EisensteinInt::zero()), None);
    }
}

use num::{BigInt, One, Zero};

use crate::exactnum::{divisors, euler_phi, factor_u64, legendre_symbol, BigRat};
use crate::{Error, Result};

/// The pieces of the genus formula for `X_0(N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimFormulaParts {
    pub level: u64,
    pub mu0: u64,
    pub mu02: u64,
    pub mu03: u64,
    pub c0: u64,
    pub g0: BigRat,
}

impl DimFormulaParts {
    /// `g0` as an integer (validated at construction).
    pub fn genus(&self) -> u64 {
        num::ToPrimitive::to_u64(&self.g0.to_integer()).expect("nonnegative genus")
    }
}

/// `dim S_2(Γ_0(N)) = g0(N) = 1 + μ0/12 - μ0,2/4 - μ0,3/3 - c0/2`.
///
/// The local factors use the Legendre symbol with `(·/2) = 0`, so the
/// product for `μ0,2` and `μ0,3` picks up a factor 1 at `p = 2`.
pub fn dim_s2_gamma0(n: u64) -> Result<DimFormulaParts> {
    if n == 0 {
        return Err(Error::NonPositive(BigInt::zero()));
    }
    let fac = factor_u64(n)?;
    let mut mu0 = 1u64;
    for &(p, v) in &fac {
        mu0 *= p.pow(v) + p.pow(v - 1);
    }
    let mu02 = if n.is_multiple_of(4) {
        0
    } else {
        let mut acc = 1i64;
        for &(p, _) in &fac {
            acc *= 1 + legendre_symbol(&BigInt::from(-4), p)? as i64;
        }
        acc as u64
    };
    let mu03 = if n.is_multiple_of(2) || n.is_multiple_of(9) {
        0
    } else {
        let mut acc = 1i64;
        for &(p, _) in &fac {
            acc *= 1 + legendre_symbol(&BigInt::from(-3), p)? as i64;
        }
        acc as u64
    };
    let c0 = divisors(n)
        .into_iter()
        .map(|d| euler_phi(num::integer::gcd(d, n / d)))
        .sum::<u64>();
    let r = |num: u64, den: i64| BigRat::new(BigInt::from(num), BigInt::from(den));
    let g0 = BigRat::one() + r(mu0, 12) - r(mu02, 4) - r(mu03, 3) - r(c0, 2);
    if !g0.is_integer() || g0 < BigRat::zero() {
        return Err(Error::FormulaViolation(format!("g0({n}) = {g0}")));
    }
    Ok(DimFormulaParts {
        level: n,
        mu0,
        mu02,
        mu03,
        c0,
        g0,
    })
}

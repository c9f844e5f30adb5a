//! Exact arithmetic foundations.
//!
//! Integers are arbitrary precision throughout ([`BigInt`]); rationals are
//! [`BigRat`], always kept in lowest terms with a positive denominator.
//! Factorization is trial division up to [`TRIAL_DIVISION_BOUND`], which covers
//! every input below `10^12` and any input whose cofactor after trial
//! division is a probable-prime `u64`.

mod eisenstein;
mod ladic;
mod residue;

pub use eisenstein::EisensteinInt;
pub use ladic::LAdicTrunc;
pub use residue::ResidueInt;

pub use num::BigInt;
use num::{Integer, One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Rational numbers in lowest terms, denominator positive.
pub type BigRat = num::BigRational;

/// Largest trial divisor tried by the factorization routines.
pub const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_rat(n: impl Into<BigInt>) -> BigRat {
    BigRat::from_integer(n.into())
}

/// Parses `"7"`, `"-3/4"` and similar into a rational.
pub fn parse_rational(s: &str) -> Result<BigRat> {
    let s = s.trim();
    let bad = || Error::invalid(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::invalid(format!("zero denominator in {s:?}")));
            }
            Ok(BigRat::new(n, d))
        }
        None => Ok(BigRat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// `a mod m` in `[0, m)`.
pub fn mod_u64(a: &BigInt, m: u64) -> u64 {
    a.mod_floor(&BigInt::from(m))
        .to_u64()
        .expect("residue fits in u64")
}

/// Reduces a rational modulo `m`; `None` when the denominator is not a unit.
pub fn rat_mod(r: &BigRat, m: u64) -> Option<u64> {
    let num = mod_u64(r.numer(), m);
    let den = mod_u64(r.denom(), m);
    let inv = inverse_mod(den, m)?;
    Some(mul_mod(num, inv, m))
}

pub fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    let g = (a as i128).extended_gcd(&(m as i128));
    if g.gcd != 1 {
        return None;
    }
    Some(g.x.rem_euclid(m as i128) as u64)
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn is_prime(n: &BigInt) -> bool {
    n.to_u64().is_some_and(is_prime_u64)
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime_u64(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p.into()))
    }
}

/// Primes in `[lo, hi]`, ascending.
pub fn primes_between(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 {
        return Vec::new();
    }
    let hi_us = hi as usize;
    let mut sieve = vec![true; hi_us + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= hi_us {
        if sieve[i] {
            for j in (i * i..=hi_us).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    (lo.max(2)..=hi).filter(|&k| sieve[k as usize]).collect()
}

/// Prime factorization of a positive `u64` as `(prime, exponent)` pairs.
pub fn factor_u64(n: u64) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(Error::NonPositive(BigInt::zero()));
    }
    let mut out = Vec::new();
    let mut rest = n;
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_BOUND && d.saturating_mul(d) <= rest {
        if rest.is_multiple_of(d) {
            let mut e = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        let bound_sq = TRIAL_DIVISION_BOUND as u128 * TRIAL_DIVISION_BOUND as u128;
        if (rest as u128) < bound_sq || is_prime_u64(rest) {
            out.push((rest, 1));
        } else {
            return Err(Error::FactorizationBound(n.into()));
        }
    }
    Ok(out)
}

/// Prime factorization of `|n|` for nonzero `n`.
pub fn factor(n: &BigInt) -> Result<Vec<(BigInt, u32)>> {
    if n.is_zero() {
        return Err(Error::NonPositive(n.clone()));
    }
    let n = n.abs();
    if let Some(small) = n.to_u64() {
        return Ok(factor_u64(small)?
            .into_iter()
            .map(|(p, e)| (BigInt::from(p), e))
            .collect());
    }
    let mut out = Vec::new();
    let mut rest = n.clone();
    let mut d = 2u64;
    while d <= TRIAL_DIVISION_BOUND {
        let dd = BigInt::from(d);
        if &dd * &dd > rest {
            break;
        }
        if rest.is_multiple_of(&dd) {
            let mut e = 0;
            while rest.is_multiple_of(&dd) {
                rest /= &dd;
                e += 1;
            }
            out.push((dd, e));
            if let Some(small) = rest.to_u64() {
                for (p, e) in factor_u64(small).map_err(|_| Error::FactorizationBound(n.clone()))? {
                    out.push((p.into(), e));
                }
                return Ok(out);
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > BigInt::one() {
        let bound = BigInt::from(TRIAL_DIVISION_BOUND);
        if rest < &bound * &bound || is_prime(&rest) {
            out.push((rest, 1));
        } else {
            return Err(Error::FactorizationBound(n));
        }
    }
    Ok(out)
}

/// Product of the distinct primes dividing `n`; `radical(1) = 1`.
pub fn radical(n: &BigInt) -> Result<BigInt> {
    if !n.is_positive() {
        return Err(Error::NonPositive(n.clone()));
    }
    Ok(factor(n)?.into_iter().map(|(p, _)| p).product())
}

/// Legendre symbol `(a / p)`.
///
/// `p = 2` always gives 0. This is the convention the `Gamma_0(N)` dimension
/// formula relies on; no Kronecker extension is attempted.
pub fn legendre_symbol(a: &BigInt, p: u64) -> Result<i32> {
    require_prime(p)?;
    Ok(legendre_residue(mod_u64(a, p), p))
}

/// Legendre symbol of a residue already reduced into `[0, p)`; `p` must be prime.
pub(crate) fn legendre_residue(a: u64, p: u64) -> i32 {
    if p == 2 || a.is_multiple_of(p) {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Table `chi[x] = (x / p)` for every residue `x`, built by marking squares.
pub(crate) fn legendre_table(p: u64) -> Vec<i8> {
    let mut chi = vec![-1i8; p as usize];
    chi[0] = 0;
    for y in 1..=(p / 2) {
        chi[mul_mod(y, y, p) as usize] = 1;
    }
    chi
}

/// Sum of `d^k` over the positive divisors of `n`.
pub fn sigma_k(n: u64, k: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::NonPositive(BigInt::zero()));
    }
    Ok(divisors(n)
        .into_iter()
        .map(|d| BigInt::from(d).pow(k))
        .sum())
}

/// Positive divisors of `n > 0`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn euler_phi(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut result = n;
    for (p, _) in factor_u64(n).expect("u64 within trial bound") {
        result = result / p * (p - 1);
    }
    result
}

/// `p`-adic valuation of a nonzero integer.
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    assert!(!n.is_zero(), "valuation of zero");
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    while n.is_multiple_of(&p) {
        n /= &p;
        v += 1;
    }
    v
}

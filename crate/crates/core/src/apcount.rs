//! Point counts over `F_p` and the coefficient system `A_n`.
//!
//! `A_p = p + 1 - #E(F_p)` at good primes, `0` / `+1` / `-1` at additive,
//! split and nonsplit multiplicative primes. Prime powers follow the
//! recurrence `A_{p^k} = A_p A_{p^{k-1}} - p A_{p^{k-2}}` (good) or
//! `A_p A_{p^{k-1}}` (bad), and `A` is multiplicative on coprime arguments.

use std::collections::BTreeMap;
use std::io::{self, Write};

use num::{BigInt, One};

use crate::ecurve::{reduction_type, FreyData, ReductionType, WeierstrassModel};
use crate::exactnum::{
    factor_u64, legendre_residue, legendre_table, mod_u64, mul_mod, primes_between, require_prime,
};
use crate::exec::Strategy;
use crate::{Error, Result};

/// Above this size the Legendre table is replaced by per-residue Euler tests.
const TABLE_LIMIT: u64 = 1 << 24;

fn cubic_value(e: &[u64; 3], x: u64, p: u64) -> u64 {
    let [e2, e1, e0] = *e;
    let v = (x + e2) % p;
    let v = (mul_mod(v, x, p) + e1) % p;
    (mul_mod(v, x, p) + e0) % p
}

/// `Σ_x χ(f(x))` over `F_p` for `f = x^3 + e2 x^2 + e1 x + e0`.
fn character_sum(e: &[u64; 3], p: u64) -> i64 {
    if p <= TABLE_LIMIT {
        let chi = legendre_table(p);
        (0..p)
            .map(|x| chi[cubic_value(e, x, p) as usize] as i64)
            .sum()
    } else {
        (0..p)
            .map(|x| legendre_residue(cubic_value(e, x, p), p) as i64)
            .sum()
    }
}

fn count_unchecked(m: &WeierstrassModel, p: u64) -> Result<u64> {
    let e = m.monic_cubic_mod(p)?;
    Ok((1 + p as i64 + character_sum(&e, p)) as u64)
}

/// `#E(F_p)` including the point at infinity, by a Legendre-symbol scan of
/// the square-completed model. Requires `p >= 5` and integrality at `p`.
pub fn count_points(m: &WeierstrassModel, p: u64) -> Result<u64> {
    require_prime(p)?;
    if p < 5 {
        return Err(Error::UnsupportedPrime(p));
    }
    count_unchecked(m, p)
}

fn ap_with_type(m: &WeierstrassModel, p: u64) -> Result<(i64, ReductionType)> {
    let kind = reduction_type(m, p)?;
    let ap = match kind.bad_ap() {
        Some(v) => v,
        None => p as i64 + 1 - count_unchecked(m, p)? as i64,
    };
    if kind.is_good() && (ap * ap) as u128 > 4 * p as u128 {
        log::warn!("A_{p} = {ap} exceeds 2 sqrt(p) for {m}");
    }
    Ok((ap, kind))
}

/// `A_p` for an odd prime `p`.
///
/// `p = 3` is accepted: the reduction type there comes from the root
/// pattern of the cubic, and the count from the same square-completed scan.
pub fn ap(m: &WeierstrassModel, p: u64) -> Result<i64> {
    Ok(ap_with_type(m, p)?.0)
}

fn prime_power_from(ap: i64, good: bool, p: u64, k: u32) -> BigInt {
    let a = BigInt::from(ap);
    let p = BigInt::from(p);
    let (mut prev, mut cur) = (BigInt::one(), a.clone());
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = if good {
            &a * &cur - &p * &prev
        } else {
            &a * &cur
        };
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `A_{p^k}`; `k = 0` gives `A_1 = 1`.
pub fn ap_prime_power(m: &WeierstrassModel, p: u64, k: u32) -> Result<BigInt> {
    if k == 0 {
        return Ok(BigInt::one());
    }
    let (a, kind) = ap_with_type(m, p)?;
    Ok(prime_power_from(a, kind.is_good(), p, k))
}

/// `A_n` by factoring `n` and multiplying prime-power values.
pub fn an(m: &WeierstrassModel, n: u64) -> Result<BigInt> {
    let mut acc = BigInt::one();
    for (p, k) in factor_u64(n)? {
        acc *= ap_prime_power(m, p, k)?;
    }
    Ok(acc)
}

/// `A_n` for every `n <= pmax` coprime to 6.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApTable {
    pub model: WeierstrassModel,
    pub pmax: u64,
    pub values: BTreeMap<u64, BigInt>,
}

impl ApTable {
    pub fn build(m: &WeierstrassModel, pmax: u64) -> Result<Self> {
        Self::build_with(m, pmax, Strategy::default())
    }

    pub fn build_with(m: &WeierstrassModel, pmax: u64, strategy: Strategy) -> Result<Self> {
        let primes = primes_between(5, pmax);
        let per_prime: Vec<Result<(i64, ReductionType)>> =
            strategy.map(&primes, |&p| ap_with_type(m, p));
        let mut local = BTreeMap::new();
        for (&p, r) in primes.iter().zip(per_prime) {
            let (a, kind) = r?;
            local.insert(p, (a, kind.is_good()));
        }
        let mut values = BTreeMap::new();
        for n in 1..=pmax {
            if n % 2 == 0 || n % 3 == 0 {
                continue;
            }
            let mut acc = BigInt::one();
            for (p, k) in factor_u64(n)? {
                let (a, good) = local[&p];
                acc *= prime_power_from(a, good, p, k);
            }
            values.insert(n, acc);
        }
        Ok(Self {
            model: m.clone(),
            pmax,
            values,
        })
    }

    pub fn get(&self, n: u64) -> Option<&BigInt> {
        self.values.get(&n)
    }

    /// `n,a_n` rows in ascending `n`, with a header line.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "n,a_n")?;
        for (n, a) in &self.values {
            writeln!(w, "{n},{a}")?;
        }
        Ok(())
    }
}

/// `a_p = -Σ_x χ(x (x - a^P)(x + b^P))` for the Frey curve at a good odd prime.
pub fn frey_ap_formula(f: &FreyData, p: u64) -> Result<i64> {
    require_prime(p)?;
    if p < 3 {
        return Err(Error::UnsupportedPrime(p));
    }
    if mod_u64(&f.discriminant, p) == 0 {
        return Err(Error::BadReductionPrime(p));
    }
    let ap_ = mod_u64(&f.a.pow(f.exponent), p);
    let bp = mod_u64(&f.b.pow(f.exponent), p);
    let minus_ap = (p - ap_) % p;
    let chi = legendre_table(p);
    let sum: i64 = (0..p)
        .map(|x| {
            let v = mul_mod(mul_mod(x, (x + minus_ap) % p, p), (x + bp) % p, p);
            chi[v as usize] as i64
        })
        .sum();
    Ok(-sum)
}

use num::{BigInt, Integer, Zero};

use crate::exactnum::{divisors, BigRat};
use crate::{Error, Result};

use super::QSeries;

/// `T_n f` on a level-1 q-expansion, to the largest precision the input supports.
///
/// With `T_n f = n^{k-1} Σ f[μ]_k` over `μ = (a, b; 0, d)`, `ad = n`,
/// `0 <= b < d`, the sum over `b` picks out every `d`-th coefficient and
/// gives `a_m(T_n f) = Σ_{a | gcd(m, n)} a^{k-1} a_{mn/a^2}(f)`.
/// The output precision is `floor(prec(f) / n)`.
pub fn hecke_tn(f: &QSeries, n: u64) -> Result<QSeries> {
    if n == 0 {
        return Err(Error::NonPositive(BigInt::zero()));
    }
    let out_prec = f.prec().max(0) / n as i64;
    hecke_tn_to(f, n, out_prec.max(1))
}

/// `T_n f` to exactly `out_prec`; needs `prec(f) >= n * out_prec`.
pub fn hecke_tn_to(f: &QSeries, n: u64, out_prec: i64) -> Result<QSeries> {
    if n == 0 {
        return Err(Error::NonPositive(BigInt::zero()));
    }
    if f.lowest() < 0 {
        return Err(Error::invalid(
            "Hecke operators act on holomorphic q-expansions only",
        ));
    }
    let required = n as i64 * out_prec;
    if f.prec() < required {
        return Err(Error::InsufficientPrecision {
            required,
            available: f.prec(),
        });
    }
    let k = f.weight();
    let ni = n as i64;
    let lowest = f.lowest();
    let coeffs = (lowest..out_prec)
        .map(|m| {
            let g = if m == 0 { ni } else { m.gcd(&ni) };
            divisors(g as u64)
                .into_iter()
                .map(|a| {
                    let a = a as i64;
                    let c = f.coeff(m * ni / (a * a)).expect("precision checked");
                    BigRat::from_integer(a.into()).pow(k - 1) * c
                })
                .sum::<BigRat>()
        })
        .collect();
    Ok(QSeries::new(k, lowest, coeffs))
}

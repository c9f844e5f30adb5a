use num::{BigInt, Integer, One, Zero};

use crate::exactnum::{sigma_k, BigRat};
use crate::{Error, Result};

use super::QSeries;

/// `E4 = 1 + 240 Σ σ3(n) q^n` or `E6 = 1 - 504 Σ σ5(n) q^n`, to `q^(prec-1)`.
pub fn eisenstein_series(k: u32, prec: usize) -> Result<QSeries> {
    let scale: i64 = match k {
        4 => 240,
        6 => -504,
        _ => {
            return Err(Error::invalid(format!(
                "no normalised E_{k} available; use 4 or 6"
            )))
        }
    };
    if prec < 1 {
        return Err(Error::invalid("prec must be at least 1"));
    }
    let mut coeffs = Vec::with_capacity(prec);
    coeffs.push(BigInt::one());
    for n in 1..prec as u64 {
        coeffs.push(sigma_k(n, k - 1)? * scale);
    }
    Ok(QSeries::from_bigints(k as i32, 0, coeffs))
}

/// `∏_{n>=1} (1 - q^n)^24` to `len` terms, with integer coefficients.
fn eta_product_24(len: usize) -> Vec<BigInt> {
    let mut base = vec![BigInt::zero(); len];
    base[0] = BigInt::one();
    for n in 1..len {
        // multiply by (1 - q^n)
        for i in (n..len).rev() {
            let t = base[i - n].clone();
            base[i] -= t;
        }
    }
    let mul = |a: &[BigInt], b: &[BigInt]| {
        let mut out = vec![BigInt::zero(); len];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().take(len - i).enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    };
    // 24 = 16 + 8
    let p2 = mul(&base, &base);
    let p4 = mul(&p2, &p2);
    let p8 = mul(&p4, &p4);
    let p16 = mul(&p8, &p8);
    mul(&p16, &p8)
}

/// `Δ = Σ τ(n) q^n` to `q^(prec-1)`, computed both as `(E4^3 - E6^2)/1728`
/// and as `q ∏ (1 - q^n)^24`; the two must agree exactly.
pub fn delta_series(prec: usize) -> Result<QSeries> {
    if prec < 2 {
        return Err(Error::invalid("prec must be at least 2"));
    }
    let e4 = eisenstein_series(4, prec)?;
    let e6 = eisenstein_series(6, prec)?;
    let diff = e4.pow(3).sub(&e6.pow(2))?;
    let via_eisenstein = diff.scale(&BigRat::new(BigInt::one(), 1728.into()));

    let product = eta_product_24(prec - 1);
    let via_product = QSeries::from_bigints(12, 1, product);

    if !via_product.coeffs_eq(&via_eisenstein) || via_eisenstein.prec() != via_product.prec() {
        return Err(Error::InternalInconsistency(
            "(E4^3 - E6^2)/1728 differs from q ∏ (1 - q^n)^24".into(),
        ));
    }
    Ok(via_product)
}

/// Ramanujan's `τ(n)`.
pub fn tau(n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::NonPositive(BigInt::zero()));
    }
    let d = delta_series(n as usize + 1)?;
    Ok(d.int_coeff(n as i64).expect("integral coefficient"))
}

/// `j = E4^3 / Δ`, a Laurent series starting at `q^-1`, to `q^(prec-1)`.
pub fn j_series(prec: usize) -> Result<QSeries> {
    let e4 = eisenstein_series(4, prec + 1)?;
    let delta = delta_series(prec + 2)?;
    let j = e4.pow(3).div(&delta)?;
    debug_assert_eq!(j.lowest(), -1);
    Ok(j.truncate(prec as i64))
}

/// `true` iff `τ(n) ≡ σ11(n) (mod 691)` for every `1 <= n < delta.prec()`.
pub fn ramanujan_691_holds(delta: &QSeries) -> Result<bool> {
    let m = BigInt::from(691);
    for n in 1..delta.prec() {
        let t = delta
            .int_coeff(n)
            .ok_or_else(|| Error::invalid("non-integral τ"))?;
        if !(t - sigma_k(n as u64, 11)?).mod_floor(&m).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

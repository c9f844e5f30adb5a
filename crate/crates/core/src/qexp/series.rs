use std::f64::consts::PI;
use std::fmt;

use num::{BigInt, Complex, One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::exactnum::BigRat;
use crate::{Error, Result};

/// A truncated q-expansion `Σ_{lowest <= n < prec} c_n q^n` with exact coefficients.
///
/// `lowest` is `-1`, `0` or `1` for the forms built in this module; products
/// and quotients may move it further.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    weight: i32,
    lowest: i64,
    coeffs: Vec<BigRat>,
}

impl QSeries {
    pub fn new(weight: i32, lowest: i64, coeffs: Vec<BigRat>) -> Self {
        Self {
            weight,
            lowest,
            coeffs,
        }
    }

    pub fn from_integers(weight: i32, lowest: i64, coeffs: &[i64]) -> Self {
        Self::new(
            weight,
            lowest,
            coeffs
                .iter()
                .map(|&c| BigRat::from_integer(c.into()))
                .collect(),
        )
    }

    pub(crate) fn from_bigints(weight: i32, lowest: i64, coeffs: Vec<BigInt>) -> Self {
        Self::new(
            weight,
            lowest,
            coeffs.into_iter().map(BigRat::from_integer).collect(),
        )
    }

    pub fn weight(&self) -> i32 {
        self.weight
    }

    pub fn lowest(&self) -> i64 {
        self.lowest
    }

    /// Truncation order: coefficients are known for `n < prec`.
    pub fn prec(&self) -> i64 {
        self.lowest + self.coeffs.len() as i64
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    /// Coefficient of `q^n`; zero below `lowest`, `None` at or beyond `prec`.
    pub fn coeff(&self, n: i64) -> Option<BigRat> {
        if n >= self.prec() {
            None
        } else if n < self.lowest {
            Some(BigRat::zero())
        } else {
            Some(self.coeffs[(n - self.lowest) as usize].clone())
        }
    }

    /// Coefficient of `q^n` as an integer, if it is one.
    pub fn int_coeff(&self, n: i64) -> Option<BigInt> {
        self.coeff(n)
            .filter(|c| c.is_integer())
            .map(|c| c.to_integer())
    }

    pub fn is_cusp_form(&self) -> bool {
        (self.lowest..1.min(self.prec())).all(|n| self.coeff(n).is_some_and(|c| c.is_zero()))
    }

    pub fn truncate(&self, prec: i64) -> Self {
        let keep = (prec - self.lowest).clamp(0, self.coeffs.len() as i64) as usize;
        Self::new(self.weight, self.lowest, self.coeffs[..keep].to_vec())
    }

    /// Coefficientwise equality on the common range of precision.
    pub fn coeffs_eq(&self, other: &Self) -> bool {
        let lo = self.lowest.min(other.lowest);
        let hi = self.prec().min(other.prec());
        (lo..hi).all(|n| self.coeff(n) == other.coeff(n))
    }

    fn combine(&self, other: &Self, sign: i32) -> Result<Self> {
        if self.weight != other.weight {
            return Err(Error::Mismatch(format!(
                "weights {} and {}",
                self.weight, other.weight
            )));
        }
        let lowest = self.lowest.min(other.lowest);
        let prec = self.prec().min(other.prec());
        let coeffs = (lowest..prec.max(lowest))
            .map(|n| {
                let a = self.coeff(n).expect("below prec");
                let b = other.coeff(n).expect("below prec");
                if sign > 0 {
                    a + b
                } else {
                    a - b
                }
            })
            .collect();
        Ok(Self::new(self.weight, lowest, coeffs))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        Self::new(
            self.weight,
            self.lowest,
            self.coeffs.iter().map(|x| x * c).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let lowest = self.lowest + other.lowest;
        // relative precision: terms known past the leading exponent
        let len = self.coeffs.len().min(other.coeffs.len());
        let mut coeffs = vec![BigRat::zero(); len];
        for (i, a) in self.coeffs.iter().take(len).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(len - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(self.weight + other.weight, lowest, coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = self.clone();
        for _ in 1..e {
            out = out.mul(self);
        }
        out
    }

    /// Drops leading zero coefficients so that the first stored one is nonzero.
    pub fn normalize_lowest(&self) -> Self {
        let skip = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        Self::new(
            self.weight,
            self.lowest + skip as i64,
            self.coeffs[skip..].to_vec(),
        )
    }

    /// Exact quotient; the divisor's leading coefficient must be nonzero
    /// after normalisation.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let f = self.normalize_lowest();
        let g = other.normalize_lowest();
        if g.coeffs.is_empty() {
            return Err(Error::NotInvertible(
                "series with no known nonzero term".into(),
            ));
        }
        let len = f.coeffs.len().min(g.coeffs.len());
        let lead_inv = g.coeffs[0].recip();
        let mut out: Vec<BigRat> = Vec::with_capacity(len);
        for n in 0..len {
            let mut acc = f.coeffs[n].clone();
            for (i, h) in out.iter().enumerate() {
                acc -= h * &g.coeffs[n - i];
            }
            out.push(acc * &lead_inv);
        }
        Ok(Self::new(
            self.weight - other.weight,
            f.lowest - g.lowest,
            out,
        ))
    }

    /// Numeric value at `z` in the upper half-plane, using the known terms.
    pub fn eval(&self, z: Complex<f64>) -> Complex<f64> {
        let q = (Complex::new(0.0, 2.0 * PI) * z).exp();
        let mut acc = Complex::new(0.0, 0.0);
        let mut qn = q.powi(self.lowest as i32);
        for c in &self.coeffs {
            acc += qn * c.to_f64().unwrap_or(f64::NAN);
            qn *= q;
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        json!({
            "weight": self.weight,
            "lowest": self.lowest,
            "prec": self.prec(),
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let n = self.lowest + i as i64;
            let (neg, mag) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = n == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match n {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.prec())
    }
}

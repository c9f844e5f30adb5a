use std::fmt;
use std::str::FromStr;

use num::{BigInt, One, Zero};

use crate::exactnum::{parse_rational, rat_mod, BigRat};
use crate::{Error, Result};

/// An elliptic curve given by exact rational coefficients in one of three
/// presentations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WeierstrassModel {
    /// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`, stored as `[a1, a2, a3, a4, a6]`.
    Long([BigRat; 5]),
    /// `y^2 = x^3 + A x + B`.
    Short { a: BigRat, b: BigRat },
    /// `y^2 = (x - r1)(x - r2)(x - r3)`.
    Roots([BigRat; 3]),
}

fn ri(n: i64) -> BigRat {
    BigRat::from_integer(n.into())
}

/// Discriminant, `c4`, `c6` and `j` of a model.
///
/// `c4` and `c6` follow the normalisation `y^2 = 4x^3 - c4 x - c6`, i.e.
/// `c4 = (b2^2 - 24 b4)/12` and `c6 = (-b2^3 + 36 b2 b4 - 216 b6)/216`. These
/// are the usual `c4`, `c6` divided by 12 and 216. With that choice
/// `j = 1728 c4^3 / Δ_short` is the classical j-invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    /// The discriminant in the model's own convention: the root product
    /// `∏ (ri - rj)^2` for [`WeierstrassModel::Roots`], `-16(4A^3 + 27B^2)` otherwise.
    pub discriminant: BigRat,
    /// The `-16(4A^3 + 27B^2)` convention for every model; `16 ×` the root
    /// product for monic root form.
    pub discriminant_short: BigRat,
    pub c4: BigRat,
    pub c6: BigRat,
    pub j: BigRat,
}

impl WeierstrassModel {
    pub fn long(coeffs: [i64; 5]) -> Self {
        Self::Long(coeffs.map(ri))
    }

    pub fn short(a: i64, b: i64) -> Self {
        Self::Short { a: ri(a), b: ri(b) }
    }

    pub fn roots(r1: i64, r2: i64, r3: i64) -> Self {
        Self::Roots([ri(r1), ri(r2), ri(r3)])
    }

    /// `[a1, a2, a3, a4, a6]` of the equivalent long form.
    pub fn long_coefficients(&self) -> [BigRat; 5] {
        match self {
            Self::Long(c) => c.clone(),
            Self::Short { a, b } => [ri(0), ri(0), ri(0), a.clone(), b.clone()],
            Self::Roots([r1, r2, r3]) => [
                ri(0),
                -(r1 + r2 + r3),
                ri(0),
                r1 * r2 + r1 * r3 + r2 * r3,
                -(r1 * r2 * r3),
            ],
        }
    }

    /// `(b2, b4, b6)`.
    pub fn b_invariants(&self) -> (BigRat, BigRat, BigRat) {
        let [a1, a2, a3, a4, a6] = self.long_coefficients();
        (
            &a1 * &a1 + &a2 * ri(4),
            &a1 * &a3 + &a4 * ri(2),
            &a3 * &a3 + &a6 * ri(4),
        )
    }

    pub fn c4(&self) -> BigRat {
        let (b2, b4, _) = self.b_invariants();
        (&b2 * &b2 - b4 * ri(24)) / ri(12)
    }

    pub fn c6(&self) -> BigRat {
        let (b2, b4, b6) = self.b_invariants();
        (-(&b2 * &b2 * &b2) + ri(36) * &b2 * &b4 - ri(216) * b6) / ri(216)
    }

    /// `∏_{i<j} (ri - rj)^2`, only for root form.
    pub fn root_discriminant(&self) -> Option<BigRat> {
        match self {
            Self::Roots([r1, r2, r3]) => {
                let d = (r1 - r2) * (r1 - r3) * (r2 - r3);
                Some(&d * &d)
            }
            _ => None,
        }
    }

    /// Discriminant in the `-16(4A^3 + 27B^2)` convention.
    pub fn discriminant_short(&self) -> BigRat {
        match self {
            Self::Short { a, b } => ri(-16) * (ri(4) * a * a * a + ri(27) * b * b),
            Self::Roots(_) => self.root_discriminant().expect("root form") * ri(16),
            Self::Long(_) => {
                let c4 = self.c4();
                let c6 = self.c6();
                &c4 * &c4 * &c4 - ri(27) * &c6 * &c6
            }
        }
    }

    /// Discriminant in the model's own convention (see [`Invariants::discriminant`]).
    pub fn discriminant(&self) -> BigRat {
        self.root_discriminant()
            .unwrap_or_else(|| self.discriminant_short())
    }

    pub fn invariants(&self) -> Result<Invariants> {
        let discriminant_short = self.discriminant_short();
        if discriminant_short.is_zero() {
            return Err(Error::SingularCurve);
        }
        let c4 = self.c4();
        let j = ri(1728) * &c4 * &c4 * &c4 / &discriminant_short;
        Ok(Invariants {
            discriminant: self.discriminant(),
            discriminant_short,
            c4,
            c6: self.c6(),
            j,
        })
    }

    pub fn j_invariant(&self) -> Result<BigRat> {
        self.invariants().map(|inv| inv.j)
    }

    /// `y^2 = x^3 + A x + B` with `A = -4 c4`, `B = -16 c6`.
    ///
    /// Short models are returned unchanged. Other models go through the
    /// `b`/`c` pipeline, which lands on a model scaled by `x -> 4x`, `y -> 8y`
    /// relative to the plain completed cube; the j-invariant is preserved.
    pub fn to_short_form(&self) -> Self {
        match self {
            Self::Short { .. } => self.clone(),
            _ => Self::Short {
                a: ri(-4) * self.c4(),
                b: ri(-16) * self.c6(),
            },
        }
    }

    /// `true` if `y^2 = f(x)` with no `xy` or `y` term.
    pub fn is_y_squared_form(&self) -> bool {
        let c = self.long_coefficients();
        c[0].is_zero() && c[2].is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.long_coefficients().iter().all(|c| c.denom().is_one())
    }

    /// Coefficients `[a1, a2, a3, a4, a6]` reduced mod `p`.
    pub fn reduce_mod(&self, p: u64) -> Result<[u64; 5]> {
        let c = self.long_coefficients();
        let mut out = [0u64; 5];
        for (slot, coeff) in out.iter_mut().zip(&c) {
            *slot = rat_mod(coeff, p).ok_or(Error::NonIntegralModel(p))?;
        }
        Ok(out)
    }

    /// Monic cubic `x^3 + e2 x^2 + e1 x + e0` over `F_p` whose curve
    /// `y^2 = f(x)` is isomorphic to this model mod `p`.
    ///
    /// For odd `p` the square is completed (`y -> y + (a1 x + a3)/2`). For
    /// `p = 2` the model must already be of the form `y^2 = f(x)`.
    pub fn monic_cubic_mod(&self, p: u64) -> Result<[u64; 3]> {
        let [a1, a2, a3, a4, a6] = self.reduce_mod(p)?;
        if p == 2 {
            if a1 != 0 || a3 != 0 || !self.is_y_squared_form() {
                return Err(Error::UnsupportedPrime(2));
            }
            return Ok([a2, a4, a6]);
        }
        let (b2, b4, b6) = self.b_invariants();
        let quarter = BigRat::new(BigInt::one(), 4.into());
        let half = BigRat::new(BigInt::one(), 2.into());
        let _ = (a1, a2, a3, a4, a6);
        Ok([
            rat_mod(&(b2 * &quarter), p).ok_or(Error::NonIntegralModel(p))?,
            rat_mod(&(b4 * &half), p).ok_or(Error::NonIntegralModel(p))?,
            rat_mod(&(b6 * &quarter), p).ok_or(Error::NonIntegralModel(p))?,
        ])
    }
}

fn fmt_rat(r: &BigRat) -> String {
    r.to_string()
}

impl fmt::Display for WeierstrassModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Long(c) => {
                let parts: Vec<String> = c.iter().map(fmt_rat).collect();
                write!(f, "{}", parts.join(","))
            }
            Self::Short { a, b } => write!(f, "[{},{}]", fmt_rat(a), fmt_rat(b)),
            Self::Roots([r1, r2, r3]) => {
                write!(f, "({},{},{})", fmt_rat(r1), fmt_rat(r2), fmt_rat(r3))
            }
        }
    }
}

/// Parses `"a1,a2,a3,a4,a6"`, `"[A,B]"` or `"(r1,r2,r3)"`; entries are
/// integers or fractions `p/q`.
impl FromStr for WeierstrassModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let list =
            |inner: &str| -> Result<Vec<BigRat>> { inner.split(',').map(parse_rational).collect() };
        let arity = |v: &Vec<BigRat>, n: usize| {
            if v.len() == n {
                Ok(())
            } else {
                Err(Error::invalid(format!(
                    "expected {n} coefficients in {s:?}, found {}",
                    v.len()
                )))
            }
        };
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let v = list(inner)?;
            arity(&v, 2)?;
            let [a, b]: [BigRat; 2] = v.try_into().expect("arity checked");
            Ok(Self::Short { a, b })
        } else if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let v = list(inner)?;
            arity(&v, 3)?;
            Ok(Self::Roots(v.try_into().expect("arity checked")))
        } else {
            let v = list(s)?;
            arity(&v, 5)?;
            Ok(Self::Long(v.try_into().expect("arity checked")))
        }
    }
}

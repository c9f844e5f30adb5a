use std::fmt;

use num::{BigInt, One, Zero};

use crate::exactnum::{factor, inverse_mod, legendre_residue, mul_mod, rat_mod, require_prime};
use crate::{Error, Result};

use super::WeierstrassModel;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionType {
    Good,
    MultiplicativeSplit,
    MultiplicativeNonsplit,
    Additive,
}

impl ReductionType {
    pub fn is_good(self) -> bool {
        self == Self::Good
    }

    pub fn is_multiplicative(self) -> bool {
        matches!(
            self,
            Self::MultiplicativeSplit | Self::MultiplicativeNonsplit
        )
    }

    /// `A_p` at a bad prime; `None` for good reduction.
    pub fn bad_ap(self) -> Option<i64> {
        match self {
            Self::Good => None,
            Self::MultiplicativeSplit => Some(1),
            Self::MultiplicativeNonsplit => Some(-1),
            Self::Additive => Some(0),
        }
    }
}

impl fmt::Display for ReductionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Good => "good",
            Self::MultiplicativeSplit => "split multiplicative",
            Self::MultiplicativeNonsplit => "nonsplit multiplicative",
            Self::Additive => "additive",
        })
    }
}

/// How the roots of the cubic `f` in `y^2 = f(x)` collide mod `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootCoincidence {
    Distinct,
    TwoCoincide,
    AllCoincide,
}

// Dense polynomials over F_p, lowest degree first, no trailing zeros.

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = inverse_mod(b[db], p).expect("nonzero leading coefficient");
    while r.len() > db {
        let dr = r.len() - 1;
        let q = mul_mod(r[dr], lead_inv, p);
        for (i, &bi) in b.iter().enumerate() {
            let idx = dr - db + i;
            r[idx] = (r[idx] + p - mul_mod(q, bi, p)) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// `x^3 + e2 x^2 + e1 x + e0` and its derivative.
fn cubic_and_derivative(e: [u64; 3], p: u64) -> (Vec<u64>, Vec<u64>) {
    let [e2, e1, e0] = e;
    let f = vec![e0, e1, e2, 1];
    let df = trim(vec![e1 % p, (2 * e2) % p, 3 % p]);
    (f, df)
}

fn is_cube_of_linear(e: [u64; 3], p: u64) -> bool {
    let [e2, e1, e0] = e;
    if p == 3 {
        // x^3 + e0 is a cube in characteristic 3
        return e2 == 0 && e1 == 0;
    }
    // (x - r)^3 with r = -e2 / 3
    let r = mul_mod((p - e2) % p, inverse_mod(3 % p, p).expect("p != 3"), p);
    let r2 = mul_mod(r, r, p);
    e1 == mul_mod(3 % p, r2, p) && e0 == (p - mul_mod(r2, r, p)) % p
}

/// Pattern plus `gcd(f, f')`. A repeated root exists iff the gcd is
/// nontrivial in any characteristic, but in characteristic 2 and 3 its
/// degree does not tell double from triple, so that case is tested directly.
fn coincidence_of(e: [u64; 3], p: u64) -> (RootCoincidence, Vec<u64>) {
    let (f, df) = cubic_and_derivative(e, p);
    let g = if df.is_empty() {
        f.clone()
    } else {
        poly_gcd(&f, &df, p)
    };
    let kind = if g.len() == 1 {
        RootCoincidence::Distinct
    } else if is_cube_of_linear(e, p) {
        RootCoincidence::AllCoincide
    } else {
        RootCoincidence::TwoCoincide
    };
    (kind, g)
}

/// Root-coincidence pattern of the (square-completed) cubic mod `p`.
///
/// Works at every prime, including 2 and 3; at `p = 2` the model must be
/// of the form `y^2 = f(x)`.
pub fn root_coincidence(m: &WeierstrassModel, p: u64) -> Result<RootCoincidence> {
    require_prime(p)?;
    let e = m.monic_cubic_mod(p)?;
    Ok(coincidence_of(e, p).0)
}

/// Reduction type at an odd prime.
///
/// Additive exactly when the cubic has a triple root mod `p` (for `p >= 5`
/// that is the same as `p | c4`). At a node with double root `x0` and simple
/// root `x1`, the tangent slopes are `±sqrt(x0 - x1)`, so the reduction is
/// split iff `x0 - x1` is a nonzero square mod `p`.
pub fn reduction_type(m: &WeierstrassModel, p: u64) -> Result<ReductionType> {
    require_prime(p)?;
    if p == 2 {
        return Err(Error::UnsupportedPrime(2));
    }
    let e = m.monic_cubic_mod(p)?;
    let disc = rat_mod(&m.discriminant_short(), p).ok_or(Error::NonIntegralModel(p))?;
    if disc != 0 {
        return Ok(ReductionType::Good);
    }
    if p >= 5 {
        let c4 = rat_mod(&m.c4(), p).ok_or(Error::NonIntegralModel(p))?;
        if c4 == 0 {
            return Ok(ReductionType::Additive);
        }
    }
    let (kind, g) = coincidence_of(e, p);
    match kind {
        RootCoincidence::AllCoincide => Ok(ReductionType::Additive),
        RootCoincidence::Distinct => Err(Error::InternalInconsistency(format!(
            "discriminant vanishes mod {p} but the cubic is separable"
        ))),
        RootCoincidence::TwoCoincide => {
            if g.len() != 2 {
                return Err(Error::InternalInconsistency(format!(
                    "expected a linear gcd mod {p}"
                )));
            }
            // g = g0 + g1 x, root x0 = -g0 / g1
            let x0 = mul_mod((p - g[0]) % p, inverse_mod(g[1], p).expect("linear gcd"), p);
            // roots sum to -e2: x1 = -e2 - 2 x0
            let x1 = ((2 * p - e[0] % p) + (p - mul_mod(2, x0, p))) % p;
            let diff = (x0 + p - x1) % p;
            match legendre_residue(diff, p) {
                1 => Ok(ReductionType::MultiplicativeSplit),
                -1 => Ok(ReductionType::MultiplicativeNonsplit),
                _ => Err(Error::InternalInconsistency(format!(
                    "double and simple roots coincide mod {p}"
                ))),
            }
        }
    }
}

/// One prime of bad reduction and its conductor exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConductorFactor {
    pub prime: u64,
    pub exponent: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conductor {
    pub value: BigInt,
    pub factors: Vec<ConductorFactor>,
}

impl Conductor {
    pub fn is_semistable(&self) -> bool {
        self.factors.iter().all(|f| f.exponent <= 1)
    }
}

/// Conductor exponent at one prime dividing the discriminant.
pub(crate) fn local_exponent(m: &WeierstrassModel, p: u64) -> Result<u32> {
    match p {
        2 => {
            if !m.is_y_squared_form() {
                return Err(Error::UnsupportedPrime(2));
            }
            match root_coincidence(m, 2)? {
                RootCoincidence::TwoCoincide => Ok(1),
                _ => Err(Error::UnsupportedAdditiveSmallPrime(2)),
            }
        }
        3 => match reduction_type(m, 3)? {
            ReductionType::Good => Ok(0),
            ReductionType::Additive => Err(Error::UnsupportedAdditiveSmallPrime(3)),
            _ => Ok(1),
        },
        _ => Ok(match reduction_type(m, p)? {
            ReductionType::Good => 0,
            ReductionType::Additive => 2,
            _ => 1,
        }),
    }
}

pub(crate) fn conductor_over(m: &WeierstrassModel, primes: &[u64]) -> Result<Conductor> {
    let mut value = BigInt::one();
    let mut factors = Vec::new();
    for &p in primes {
        let exponent = local_exponent(m, p)?;
        if exponent > 0 {
            value *= BigInt::from(p).pow(exponent);
            factors.push(ConductorFactor { prime: p, exponent });
        }
    }
    Ok(Conductor { value, factors })
}

/// Conductor of an integral model: exponent 1 at multiplicative primes, 2
/// at additive primes `>= 5`; additive reduction at 2 or 3 is rejected.
pub fn conductor(m: &WeierstrassModel) -> Result<Conductor> {
    let disc = m.invariants()?.discriminant_short;
    if !m.is_integral() {
        let bad = m
            .long_coefficients()
            .iter()
            .map(|c| c.denom().clone())
            .find(|d| !d.is_one())
            .expect("non-integral coefficient");
        let p = factor(&bad)?[0].0.clone();
        return Err(Error::NonIntegralModel(
            num::ToPrimitive::to_u64(&p).unwrap_or(u64::MAX),
        ));
    }
    let disc: BigInt = disc.to_integer();
    let mut primes = Vec::new();
    for (p, _) in factor(&disc)? {
        let p = num::ToPrimitive::to_u64(&p).ok_or_else(|| Error::FactorizationBound(p.clone()))?;
        primes.push(p);
    }
    debug_assert!(!disc.is_zero());
    conductor_over(m, &primes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_examples() {
        let m = WeierstrassModel::roots(0, 1, -8);
        assert_eq!(
            reduction_type(&m, 3).unwrap(),
            ReductionType::MultiplicativeSplit
        );
        assert_eq!(reduction_type(&m, 5).unwrap(), ReductionType::Good);
        assert_eq!(
            reduction_type(&WeierstrassModel::short(0, 3), 3).unwrap(),
            ReductionType::Additive
        );
        assert_eq!(reduction_type(&m, 2), Err(Error::UnsupportedPrime(2)));
        assert_eq!(reduction_type(&m, 9), Err(Error::NotPrime(9.into())));
    }

    #[test]
    fn nonsplit_example() {
        // roots (0, 7, 2) mod 7: double root 0, simple root 2, and
        // 0 - 2 = 5 is a nonresidue mod 7
        let m = WeierstrassModel::roots(0, 7, 2);
        assert_eq!(
            reduction_type(&m, 7).unwrap(),
            ReductionType::MultiplicativeNonsplit
        );
        // roots (0, 7, -2): 0 - (-2) = 2 = 3^2 mod 7
        let m = WeierstrassModel::roots(0, 7, -2);
        assert_eq!(
            reduction_type(&m, 7).unwrap(),
            ReductionType::MultiplicativeSplit
        );
    }

    #[test]
    fn c4_test_agrees_with_root_test() {
        for (a, b) in [(0, 5), (5, 0), (-5, 10), (25, 125), (-3, 2)] {
            let m = WeierstrassModel::short(a, b);
            for p in [5u64, 7, 11, 13] {
                let Ok(t) = reduction_type(&m, p) else {
                    continue;
                };
                if t.is_good() {
                    continue;
                }
                let e = m.monic_cubic_mod(p).unwrap();
                let triple = coincidence_of(e, p).0 == RootCoincidence::AllCoincide;
                assert_eq!(triple, t == ReductionType::Additive, "{m} at {p}");
            }
        }
    }

    #[test]
    fn coincidence_at_two() {
        assert_eq!(
            root_coincidence(&WeierstrassModel::roots(0, 1, -8), 2).unwrap(),
            RootCoincidence::TwoCoincide
        );
        assert_eq!(
            root_coincidence(&WeierstrassModel::roots(0, 2, 4), 2).unwrap(),
            RootCoincidence::AllCoincide
        );
        assert_eq!(
            root_coincidence(&WeierstrassModel::roots(0, 1, 2), 3).unwrap(),
            RootCoincidence::Distinct
        );
    }

    #[test]
    fn conductor_examples() {
        // Frey curve for 1 + 8 = 9
        let c = conductor(&WeierstrassModel::roots(0, 1, -8)).unwrap();
        assert_eq!(c.value, BigInt::from(6));
        assert!(c.is_semistable());

        // y^2 = x^3 + 25x: additive at 5, exponent 2
        let m = WeierstrassModel::short(25, 0);
        assert_eq!(local_exponent(&m, 5).unwrap(), 2);
        let c = conductor(&m).unwrap();
        assert_eq!(c.value, BigInt::from(50));
        assert_eq!(
            c.factors[1],
            ConductorFactor {
                prime: 5,
                exponent: 2
            }
        );
        assert!(!c.is_semistable());

        // y^2 = x^3 + 1: 2 divides the discriminant, cubic separable mod 2
        assert_eq!(
            conductor(&WeierstrassModel::short(0, 1)),
            Err(Error::UnsupportedAdditiveSmallPrime(2))
        );

        assert_eq!(
            conductor(&WeierstrassModel::roots(0, 0, 1)),
            Err(Error::SingularCurve)
        );
    }

    #[test]
    fn empty_product_conductor() {
        let c = conductor_over(&WeierstrassModel::short(1, 1), &[]).unwrap();
        assert_eq!(c.value, BigInt::one());
        assert!(c.factors.is_empty());
    }
}

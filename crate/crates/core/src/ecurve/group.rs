use std::fmt;

use num::{BigInt, Complex, Integer, One, Signed, Zero};

use crate::exactnum::{factor, BigRat, ResidueInt};
use crate::{Error, Result};

use super::WeierstrassModel;

/// Field operations needed by the chord-and-tangent law.
pub trait CurveField: Clone + fmt::Debug {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// Exact zero test, or a tolerance test for approximate fields.
    fn is_zero_elem(&self) -> bool;
    /// The integer `n` embedded in the same field as `self`.
    fn lift_int(&self, n: i64) -> Self;

    fn neg(&self) -> Self {
        self.lift_int(0).sub(self)
    }
}

impl CurveField for BigRat {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn lift_int(&self, n: i64) -> Self {
        BigRat::from_integer(n.into())
    }
}

impl CurveField for ResidueInt {
    fn add(&self, other: &Self) -> Self {
        *self + *other
    }
    fn sub(&self, other: &Self) -> Self {
        *self - *other
    }
    fn mul(&self, other: &Self) -> Self {
        *self * *other
    }
    fn inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn lift_int(&self, n: i64) -> Self {
        ResidueInt::new(n.into(), self.modulus()).expect("modulus already validated")
    }
}

/// Absolute tolerance used for zero tests on `Complex<f64>`.
pub const COMPLEX_ZERO_TOL: f64 = 1e-9;

impl CurveField for Complex<f64> {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Option<Self> {
        (self.norm() > 0.0).then(|| self.inv())
    }
    fn is_zero_elem(&self) -> bool {
        self.norm() <= COMPLEX_ZERO_TOL
    }
    fn lift_int(&self, n: i64) -> Self {
        Complex::new(n as f64, 0.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurvePoint<K> {
    Infinity,
    Affine(K, K),
}

impl<K> CurvePoint<K> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, Self::Infinity)
    }
}

impl<K: fmt::Display> fmt::Display for CurvePoint<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Infinity => write!(f, "O"),
            Self::Affine(x, y) => write!(f, "({x},{y})"),
        }
    }
}

/// Long-form coefficients `[a1, a2, a3, a4, a6]` over a field `K`.
#[derive(Clone, Debug)]
pub struct CurveLaw<K> {
    pub coeffs: [K; 5],
}

impl<K: CurveField> CurveLaw<K> {
    pub fn new(coeffs: [K; 5]) -> Self {
        Self { coeffs }
    }

    /// `y^2 + a1 xy + a3 y - (x^3 + a2 x^2 + a4 x + a6)`.
    fn residual(&self, x: &K, y: &K) -> K {
        let [a1, a2, a3, a4, a6] = &self.coeffs;
        let lhs = y.mul(y).add(&a1.mul(x).mul(y)).add(&a3.mul(y));
        let x2 = x.mul(x);
        let rhs = x2.mul(x).add(&a2.mul(&x2)).add(&a4.mul(x)).add(a6);
        lhs.sub(&rhs)
    }

    pub fn contains(&self, p: &CurvePoint<K>) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => self.residual(x, y).is_zero_elem(),
        }
    }

    pub fn neg(&self, p: &CurvePoint<K>) -> CurvePoint<K> {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => {
                let [a1, _, a3, _, _] = &self.coeffs;
                CurvePoint::Affine(x.clone(), y.neg().sub(&a1.mul(x)).sub(a3))
            }
        }
    }

    pub fn add(&self, p: &CurvePoint<K>, q: &CurvePoint<K>) -> CurvePoint<K> {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let [a1, a2, a3, a4, _] = &self.coeffs;
        let lambda = if !x1.sub(x2).is_zero_elem() {
            let dx = x2.sub(x1).inv().expect("nonzero difference");
            y2.sub(y1).mul(&dx)
        } else {
            // Same x: either Q = -P or a doubling.
            let vertical = y1.add(y2).add(&a1.mul(x2)).add(a3);
            if vertical.is_zero_elem() {
                return CurvePoint::Infinity;
            }
            let num = x1
                .mul(x1)
                .mul(&x1.lift_int(3))
                .add(&a2.mul(x1).mul(&x1.lift_int(2)))
                .add(a4)
                .sub(&a1.mul(y1));
            let den = y1.mul(&y1.lift_int(2)).add(&a1.mul(x1)).add(a3);
            match den.inv() {
                Some(d) => num.mul(&d),
                None => return CurvePoint::Infinity,
            }
        };
        self.finish(lambda, x1, y1, x2)
    }

    fn finish(&self, lambda: K, x1: &K, y1: &K, x2: &K) -> CurvePoint<K> {
        let [a1, a2, a3, _, _] = &self.coeffs;
        let nu = y1.sub(&lambda.mul(x1));
        let x3 = lambda
            .mul(&lambda)
            .add(&a1.mul(&lambda))
            .sub(a2)
            .sub(x1)
            .sub(x2);
        let y3 = lambda.add(a1).mul(&x3).neg().sub(&nu).sub(a3);
        CurvePoint::Affine(x3, y3)
    }

    /// `[k] P` by double-and-add; negative `k` negates first.
    pub fn mul(&self, k: &BigInt, p: &CurvePoint<K>) -> CurvePoint<K> {
        let base = if k.is_negative() {
            self.neg(p)
        } else {
            p.clone()
        };
        let mut acc = CurvePoint::Infinity;
        let mut k = k.abs();
        let mut base = base;
        while !k.is_zero() {
            if k.is_odd() {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            k >>= 1;
        }
        acc
    }
}

fn rational_law(m: &WeierstrassModel) -> CurveLaw<BigRat> {
    CurveLaw::new(m.long_coefficients())
}

fn require_on_curve(law: &CurveLaw<BigRat>, p: &CurvePoint<BigRat>) -> Result<()> {
    if law.contains(p) {
        Ok(())
    } else {
        Err(Error::PointNotOnCurve)
    }
}

pub fn is_on_curve(m: &WeierstrassModel, p: &CurvePoint<BigRat>) -> bool {
    rational_law(m).contains(p)
}

pub fn add_points(
    m: &WeierstrassModel,
    p: &CurvePoint<BigRat>,
    q: &CurvePoint<BigRat>,
) -> Result<CurvePoint<BigRat>> {
    let law = rational_law(m);
    require_on_curve(&law, p)?;
    require_on_curve(&law, q)?;
    Ok(law.add(p, q))
}

pub fn negate_point(m: &WeierstrassModel, p: &CurvePoint<BigRat>) -> Result<CurvePoint<BigRat>> {
    let law = rational_law(m);
    require_on_curve(&law, p)?;
    Ok(law.neg(p))
}

pub fn scalar_mul(
    m: &WeierstrassModel,
    k: &BigInt,
    p: &CurvePoint<BigRat>,
) -> Result<CurvePoint<BigRat>> {
    let law = rational_law(m);
    require_on_curve(&law, p)?;
    Ok(law.mul(k, p))
}

/// The reduction of an integral model at a prime of good reduction.
#[derive(Clone, Debug)]
pub struct FpCurve {
    prime: u64,
    law: CurveLaw<ResidueInt>,
}

impl FpCurve {
    pub fn new(m: &WeierstrassModel, p: u64) -> Result<Self> {
        crate::exactnum::require_prime(p)?;
        let coeffs = m.reduce_mod(p)?;
        let disc = crate::exactnum::rat_mod(&m.discriminant_short(), p)
            .ok_or(Error::NonIntegralModel(p))?;
        // Δ_short carries a factor 16, so it is always 0 mod 2; use the
        // root test there instead.
        let singular = if p == 2 {
            super::root_coincidence(m, 2)? != super::RootCoincidence::Distinct
                || !m.is_y_squared_form()
        } else {
            disc == 0
        };
        if singular {
            return Err(Error::BadReductionPrime(p));
        }
        let coeffs = coeffs.map(|c| ResidueInt::new(c.into(), p).expect("prime modulus"));
        Ok(Self {
            prime: p,
            law: CurveLaw::new(coeffs),
        })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn law(&self) -> &CurveLaw<ResidueInt> {
        &self.law
    }

    pub fn element(&self, v: i64) -> ResidueInt {
        ResidueInt::new(v.into(), self.prime).expect("prime modulus")
    }

    pub fn point(&self, x: i64, y: i64) -> Result<CurvePoint<ResidueInt>> {
        let p = CurvePoint::Affine(self.element(x), self.element(y));
        if self.law.contains(&p) {
            Ok(p)
        } else {
            Err(Error::PointNotOnCurve)
        }
    }

    /// Every point, by brute force over `F_p^2`; intended for small primes.
    pub fn points(&self) -> Vec<CurvePoint<ResidueInt>> {
        let mut out = vec![CurvePoint::Infinity];
        for x in 0..self.prime {
            for y in 0..self.prime {
                let p = CurvePoint::Affine(self.element(x as i64), self.element(y as i64));
                if self.law.contains(&p) {
                    out.push(p);
                }
            }
        }
        out
    }

    pub fn add(
        &self,
        p: &CurvePoint<ResidueInt>,
        q: &CurvePoint<ResidueInt>,
    ) -> CurvePoint<ResidueInt> {
        self.law.add(p, q)
    }

    pub fn neg(&self, p: &CurvePoint<ResidueInt>) -> CurvePoint<ResidueInt> {
        self.law.neg(p)
    }

    pub fn mul(&self, k: i64, p: &CurvePoint<ResidueInt>) -> CurvePoint<ResidueInt> {
        self.law.mul(&BigInt::from(k), p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwoTorsionStructure {
    Trivial,
    Z2,
    Z2xZ2,
}

impl fmt::Display for TwoTorsionStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Trivial => "trivial",
            Self::Z2 => "Z/2",
            Self::Z2xZ2 => "Z/2 x Z/2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTorsion {
    /// `O` first, then the affine points by increasing `x`.
    pub points: Vec<CurvePoint<BigRat>>,
    pub structure: TwoTorsionStructure,
}

/// Integer roots of a monic integer cubic, ascending, without multiplicity.
fn monic_integer_roots(e2: &BigInt, e1: &BigInt, e0: &BigInt) -> Result<Vec<BigInt>> {
    let eval = |x: &BigInt| ((x + e2) * x + e1) * x + e0;
    let mut roots = Vec::new();
    if e0.is_zero() {
        roots.push(BigInt::zero());
        // x (x^2 + e2 x + e1): the rest come from the quadratic.
        let disc = e2 * e2 - BigInt::from(4) * e1;
        if !disc.is_negative() {
            let s = disc.sqrt();
            if &s * &s == disc {
                for r in [(-e2 + &s), (-e2 - &s)] {
                    if r.is_even() {
                        roots.push(r / 2);
                    }
                }
            }
        }
    } else {
        let fac = factor(e0)?;
        let mut divisors = vec![BigInt::one()];
        for (p, e) in fac {
            let mut next = Vec::new();
            for d in &divisors {
                let mut pk = BigInt::one();
                for _ in 0..=e {
                    next.push(d * &pk);
                    pk *= &p;
                }
            }
            divisors = next;
        }
        for d in divisors {
            for cand in [d.clone(), -d] {
                if eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// The rational 2-torsion of `E(Q)`: points with `2y + a1 x + a3 = 0`.
pub fn two_torsion(m: &WeierstrassModel) -> Result<TwoTorsion> {
    m.invariants()?;
    let [a1, _, a3, _, _] = m.long_coefficients();
    let xs: Vec<BigRat> = match m {
        WeierstrassModel::Roots(r) => {
            let mut v = r.to_vec();
            v.sort();
            v
        }
        _ => {
            // 4x^3 + b2 x^2 + 2 b4 x + b6, scaled to an integer polynomial and
            // made monic via x = X / (4 L).
            let (b2, b4, b6) = m.b_invariants();
            let coeffs = [
                BigRat::from_integer(4.into()),
                b2,
                b4 * BigRat::from_integer(2.into()),
                b6,
            ];
            let l = coeffs
                .iter()
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            let ints: Vec<BigInt> = coeffs
                .iter()
                .map(|c| (c * BigRat::from_integer(l.clone())).to_integer())
                .collect();
            let lead = &ints[0];
            let e2 = ints[1].clone();
            let e1 = &ints[2] * lead;
            let e0 = &ints[3] * lead * lead;
            monic_integer_roots(&e2, &e1, &e0)?
                .into_iter()
                .map(|r| BigRat::new(r, lead.clone()))
                .collect()
        }
    };
    let half = BigRat::new(BigInt::one(), 2.into());
    let mut points = vec![CurvePoint::Infinity];
    for x in xs {
        let y = -(&a1 * &x + &a3) * &half;
        points.push(CurvePoint::Affine(x, y));
    }
    let structure = match points.len() {
        1 => TwoTorsionStructure::Trivial,
        2 => TwoTorsionStructure::Z2,
        4 => TwoTorsionStructure::Z2xZ2,
        n => {
            return Err(Error::InternalInconsistency(format!(
                "{n} points of order dividing 2"
            )))
        }
    };
    Ok(TwoTorsion { points, structure })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int_rat, rat};

    fn pt(x: i64, y: i64) -> CurvePoint<BigRat> {
        CurvePoint::Affine(int_rat(x), int_rat(y))
    }

    #[test]
    fn rational_sum_example() {
        // y^2 = x^3 - 2: (3,5) doubled
        let m = WeierstrassModel::short(0, -2);
        let p = pt(3, 5);
        let q = add_points(&m, &p, &p).unwrap();
        assert_eq!(q, CurvePoint::Affine(rat(129, 100), rat(-383, 1000)));
        assert!(is_on_curve(&m, &q));
        assert_eq!(scalar_mul(&m, &BigInt::from(2), &p).unwrap(), q);
    }

    #[test]
    fn inverse_and_identity() {
        let m = WeierstrassModel::long([1, 0, 1, -1, 0]);
        let p = pt(0, 0);
        assert!(is_on_curve(&m, &p));
        let np = negate_point(&m, &p).unwrap();
        assert_eq!(add_points(&m, &p, &np).unwrap(), CurvePoint::Infinity);
        assert_eq!(add_points(&m, &p, &CurvePoint::Infinity).unwrap(), p);
        assert_eq!(scalar_mul(&m, &BigInt::from(-1), &p).unwrap(), np);
        assert_eq!(
            scalar_mul(&m, &BigInt::zero(), &p).unwrap(),
            CurvePoint::Infinity
        );
    }

    #[test]
    fn rejects_points_off_the_curve() {
        let m = WeierstrassModel::short(0, 1);
        assert_eq!(
            add_points(&m, &pt(1, 1), &pt(0, 1)),
            Err(Error::PointNotOnCurve)
        );
    }

    #[test]
    fn torsion_point_of_order_six() {
        // y^2 = x^3 + 1 has (2,3) of order 6
        let m = WeierstrassModel::short(0, 1);
        let p = pt(2, 3);
        assert_ne!(
            scalar_mul(&m, &BigInt::from(3), &p).unwrap(),
            CurvePoint::Infinity
        );
        assert_eq!(
            scalar_mul(&m, &BigInt::from(6), &p).unwrap(),
            CurvePoint::Infinity
        );
        assert_eq!(scalar_mul(&m, &BigInt::from(3), &p).unwrap(), pt(-1, 0));
    }

    #[test]
    fn two_torsion_examples() {
        let t = two_torsion(&WeierstrassModel::roots(0, 1, -8)).unwrap();
        assert_eq!(t.structure, TwoTorsionStructure::Z2xZ2);
        assert_eq!(
            t.points,
            vec![CurvePoint::Infinity, pt(-8, 0), pt(0, 0), pt(1, 0)]
        );

        let t = two_torsion(&WeierstrassModel::short(0, 1)).unwrap();
        assert_eq!(t.structure, TwoTorsionStructure::Z2);
        assert_eq!(t.points[1], pt(-1, 0));

        let t = two_torsion(&WeierstrassModel::short(1, 1)).unwrap();
        assert_eq!(t.structure, TwoTorsionStructure::Trivial);

        // same curve as roots (0,1,-8) in long form
        let t = two_torsion(&WeierstrassModel::long([0, 7, 0, -8, 0])).unwrap();
        assert_eq!(t.structure, TwoTorsionStructure::Z2xZ2);

        // y^2 + xy = x^3 - x: 2-torsion at x with 4x^3 + x^2 - 4x = 0
        let m = WeierstrassModel::long([1, 0, 0, -1, 0]);
        let t = two_torsion(&m).unwrap();
        for p in &t.points[1..] {
            assert!(is_on_curve(&m, p));
            assert_eq!(
                scalar_mul(&m, &BigInt::from(2), p).unwrap(),
                CurvePoint::Infinity
            );
        }
    }

    #[test]
    fn fp_curve_counts_and_group() {
        // y^2 = x^3 + x + 1 over F_5 has 9 points
        let e = FpCurve::new(&WeierstrassModel::short(1, 1), 5).unwrap();
        let pts = e.points();
        assert_eq!(pts.len(), 9);
        for p in &pts {
            assert_eq!(e.mul(9, p), CurvePoint::Infinity);
        }
        assert_eq!(
            FpCurve::new(&WeierstrassModel::roots(0, 1, -8), 3).unwrap_err(),
            Error::BadReductionPrime(3)
        );
    }

    #[test]
    fn complex_field_law() {
        let law = CurveLaw::new([0.0, 0.0, 0.0, 0.0, 1.0].map(|v| Complex::new(v, 0.0)));
        let p = CurvePoint::Affine(Complex::new(2.0, 0.0), Complex::new(3.0, 0.0));
        let six = law.mul(&BigInt::from(6), &p);
        assert!(six.is_infinity());
    }
}

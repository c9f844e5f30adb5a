//! 2x2 integer matrices and their action on the upper half-plane.
//!
//! Matrix entries are exact; points of the upper half-plane are `f64`
//! pairs. Comparisons of points use [`POINT_TOLERANCE`].

use std::fmt;
use std::ops::Mul;

use num::{BigInt, Complex, Integer, One, Signed, ToPrimitive, Zero};

use crate::exactnum::divisors;
use crate::{Error, Result};

/// Tolerance for comparing half-plane points produced by different routes.
pub const POINT_TOLERANCE: f64 = 1e-9;
/// Slack allowed in the fundamental-domain inequalities.
pub const DOMAIN_TOLERANCE: f64 = 1e-12;
/// Step cap for [`fundamental_reduce`].
pub const MAX_REDUCTION_STEPS: usize = 10_000;

/// `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl IntMat2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    /// `S: z -> -1/z`.
    pub fn s() -> Self {
        Self::new(0, -1, 1, 0)
    }

    /// `T^k: z -> z + k`.
    pub fn t_pow(k: impl Into<BigInt>) -> Self {
        Self::new(1, k.into(), 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    /// `adj(X)`, so that `X adj(X) = det(X) I`.
    pub fn adjugate(&self) -> Self {
        Self::new(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn is_sl2(&self) -> bool {
        self.det().is_one()
    }

    fn require_det_one(&self) -> Result<()> {
        let det = self.det();
        if det.is_one() {
            Ok(())
        } else {
            Err(Error::WrongDeterminant {
                expected: BigInt::one(),
                found: det,
            })
        }
    }

    fn entries_f64(&self) -> [f64; 4] {
        [&self.a, &self.b, &self.c, &self.d].map(|x| x.to_f64().unwrap_or(f64::NAN))
    }

    /// The automorphy factor `j(alpha, z) = cz + d`.
    pub fn j(&self, z: Complex<f64>) -> Complex<f64> {
        let [_, _, c, d] = self.entries_f64();
        z * c + d
    }

    /// `(az + b)/(cz + d)` without any determinant check.
    pub fn act(&self, z: Complex<f64>) -> Complex<f64> {
        let [a, b, c, d] = self.entries_f64();
        (z * a + b) / (z * c + d)
    }
}

impl Mul for &IntMat2 {
    type Output = IntMat2;
    fn mul(self, r: &IntMat2) -> IntMat2 {
        IntMat2::new(
            &self.a * &r.a + &self.b * &r.c,
            &self.a * &r.b + &self.b * &r.d,
            &self.c * &r.a + &self.d * &r.c,
            &self.c * &r.b + &self.d * &r.d,
        )
    }
}

impl fmt::Display for IntMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{},{})", self.a, self.b, self.c, self.d)
    }
}

/// A point `re + i im` with `im > 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UpperHalfPoint {
    re: f64,
    im: f64,
}

impl UpperHalfPoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !re.is_finite() || !im.is_finite() || im <= 0.0 {
            return Err(Error::NotInUpperHalfPlane(im));
        }
        Ok(Self { re, im })
    }

    pub fn re(self) -> f64 {
        self.re
    }

    pub fn im(self) -> f64 {
        self.im
    }

    pub fn to_complex(self) -> Complex<f64> {
        Complex::new(self.re, self.im)
    }

    pub fn distance(self, other: Self) -> f64 {
        (self.to_complex() - other.to_complex()).norm()
    }

    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        self.distance(other) <= tol * (1.0 + self.to_complex().norm())
    }
}

/// `gamma . z` for `gamma` in `SL2(Z)`.
pub fn mobius_apply(gamma: &IntMat2, z: UpperHalfPoint) -> Result<UpperHalfPoint> {
    gamma.require_det_one()?;
    let w = gamma.act(z.to_complex());
    // im(gamma z) = im(z) / |cz + d|^2, evaluated directly to keep the sign exact
    let im = z.im / gamma.j(z.to_complex()).norm_sqr();
    UpperHalfPoint::new(w.re, im)
}

/// One step of the reduction walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionStep {
    /// `T^k`.
    Translate(i64),
    /// `S`.
    Invert,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Reduction {
    /// The representative in the fundamental domain.
    pub point: UpperHalfPoint,
    /// `gamma` with `gamma . z = point`.
    pub matrix: IntMat2,
    /// Steps in the order they were applied.
    pub steps: Vec<ReductionStep>,
}

impl Reduction {
    /// `gamma` written as a word in `S` and `T`, leftmost factor first.
    pub fn word(&self) -> String {
        if self.steps.is_empty() {
            return "I".into();
        }
        self.steps
            .iter()
            .rev()
            .map(|s| match s {
                ReductionStep::Invert => "S".to_string(),
                ReductionStep::Translate(k) => format!("T^{k}"),
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Moves `z` into `{|Re z| <= 1/2, |z| >= 1}` by translations and inversions.
///
/// The representative is normalised to `Re z* ∈ [-1/2, 1/2)`, and on the unit
/// circle to `Re z* <= 0`.
pub fn fundamental_reduce(z: UpperHalfPoint) -> Result<Reduction> {
    let mut w = z.to_complex();
    let mut gamma = IntMat2::identity();
    let mut steps = Vec::new();
    for _ in 0..MAX_REDUCTION_STEPS {
        let k = (w.re + 0.5).floor();
        if k != 0.0 {
            let k_int = k as i64;
            w.re -= k;
            gamma = &IntMat2::t_pow(-k_int) * &gamma;
            steps.push(ReductionStep::Translate(-k_int));
        }
        if w.norm_sqr() < 1.0 - DOMAIN_TOLERANCE {
            w = -w.inv();
            gamma = &IntMat2::s() * &gamma;
            steps.push(ReductionStep::Invert);
            continue;
        }
        if (w.norm_sqr() - 1.0).abs() <= DOMAIN_TOLERANCE && w.re > DOMAIN_TOLERANCE {
            w = Complex::new(-w.re, w.im);
            gamma = &IntMat2::s() * &gamma;
            steps.push(ReductionStep::Invert);
        }
        return Ok(Reduction {
            point: UpperHalfPoint::new(w.re, w.im)?,
            matrix: gamma,
            steps,
        });
    }
    Err(Error::IterationCap(MAX_REDUCTION_STEPS))
}

/// True when `z` satisfies the fundamental-domain inequalities up to `tol`.
pub fn in_fundamental_domain(z: UpperHalfPoint, tol: f64) -> bool {
    z.re.abs() <= 0.5 + tol && z.to_complex().norm() >= 1.0 - tol
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CongruenceSubgroup {
    /// `Gamma(N)`: matrices congruent to the identity mod `N`.
    Principal(u64),
    /// `Gamma_0(N)`: lower-left entry divisible by `N`.
    Gamma0(u64),
}

pub fn subgroup_contains(gamma: &IntMat2, group: CongruenceSubgroup) -> Result<bool> {
    gamma.require_det_one()?;
    let level = match group {
        CongruenceSubgroup::Principal(n) | CongruenceSubgroup::Gamma0(n) => n,
    };
    if level == 0 {
        return Err(Error::NonPositive(BigInt::zero()));
    }
    let n = BigInt::from(level);
    let zero_mod = |x: &BigInt| x.is_multiple_of(&n);
    let one_mod = |x: &BigInt| (x - BigInt::one()).is_multiple_of(&n);
    Ok(match group {
        CongruenceSubgroup::Principal(_) => {
            one_mod(&gamma.a) && zero_mod(&gamma.b) && zero_mod(&gamma.c) && one_mod(&gamma.d)
        }
        CongruenceSubgroup::Gamma0(_) => zero_mod(&gamma.c),
    })
}

/// Representatives `(a, b; 0, d)` of `SL2(Z)\M_n`: `ad = n`, `a, d > 0`, `0 <= b < d`.
pub fn coset_reps_mn(n: u64) -> Result<Vec<IntMat2>> {
    if n == 0 {
        return Err(Error::NonPositive(BigInt::zero()));
    }
    let mut reps = Vec::new();
    for a in divisors(n) {
        let d = n / a;
        for b in 0..d {
            reps.push(IntMat2::new(a, b, 0, d));
        }
    }
    Ok(reps)
}

/// Reduces `m` (with `det m > 0`) to its upper-triangular orbit
/// representative by left multiplication with `SL2(Z)`, running the
/// Euclidean algorithm on the first column.
///
/// Returns `(rep, g)` with `g` in `SL2(Z)` and `g m = rep`.
pub fn orbit_representative(m: &IntMat2) -> Result<(IntMat2, IntMat2)> {
    let det = m.det();
    if !det.is_positive() {
        return Err(Error::NonPositive(det));
    }
    let mut cur = m.clone();
    let mut g = IntMat2::identity();
    let apply = |op: IntMat2, cur: &mut IntMat2, g: &mut IntMat2| {
        *cur = &op * cur;
        *g = &op * g;
    };
    while !cur.c.is_zero() {
        let q = cur.a.div_floor(&cur.c);
        apply(IntMat2::t_pow(-q), &mut cur, &mut g);
        apply(IntMat2::s(), &mut cur, &mut g);
    }
    if cur.a.is_negative() {
        apply(IntMat2::new(-1, 0, 0, -1), &mut cur, &mut g);
    }
    let q = cur.b.div_floor(&cur.d);
    apply(IntMat2::t_pow(-q), &mut cur, &mut g);
    Ok((cur, g))
}

use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::ecurve::{CurveLaw, CurvePoint};
use crate::Result;

use super::{ode_residual, wp_eval, LatticeSpec, C64};

/// A point of `C/L` in basis coordinates, each reduced into `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TorusPoint {
    t1: f64,
    t2: f64,
}

fn reduce_unit(t: f64) -> f64 {
    let r = t.rem_euclid(1.0);
    if r >= 1.0 {
        0.0
    } else {
        r
    }
}

/// Distance from `t` to the nearest integer.
fn frac_dist(t: f64) -> f64 {
    (t - t.round()).abs()
}

impl TorusPoint {
    pub fn new(t1: f64, t2: f64) -> Self {
        Self {
            t1: reduce_unit(t1),
            t2: reduce_unit(t2),
        }
    }

    pub fn zero() -> Self {
        Self { t1: 0.0, t2: 0.0 }
    }

    pub fn from_complex(l: &LatticeSpec, z: C64) -> Self {
        let (t1, t2) = l.basis_coords(z);
        Self::new(t1, t2)
    }

    pub fn coords(&self) -> (f64, f64) {
        (self.t1, self.t2)
    }

    pub fn to_complex(&self, l: &LatticeSpec) -> C64 {
        l.from_coords(self.t1, self.t2)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.t1 + other.t1, self.t2 + other.t2)
    }

    pub fn neg(&self) -> Self {
        Self::new(-self.t1, -self.t2)
    }

    pub fn mul(&self, n: i64) -> Self {
        Self::new(self.t1 * n as f64, self.t2 * n as f64)
    }

    /// Max-norm distance to the origin of `R^2 / Z^2`.
    pub fn dist_to_zero(&self) -> f64 {
        frac_dist(self.t1).max(frac_dist(self.t2))
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.dist_to_zero() <= tol
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.add(&other.neg()).is_zero(tol)
    }

    /// Least `m <= max` with `m P = 0`.
    pub fn order(&self, max: u64, tol: f64) -> Option<u64> {
        (1..=max).find(|&m| self.mul(m as i64).is_zero(tol))
    }
}

/// `E[n] = {(j/n, k/n)}` on the torus model.
#[derive(Clone, Debug, PartialEq)]
pub struct TorsionGroup {
    pub n: u64,
    pub points: Vec<TorusPoint>,
    pub generators: [TorusPoint; 2],
}

impl TorsionGroup {
    /// Every point is killed by `n`, both generators have order exactly `n`,
    /// and the points are pairwise distinct with `n^2` of them.
    pub fn verify(&self, tol: f64) -> bool {
        let n = self.n;
        let killed = self.points.iter().all(|p| p.mul(n as i64).is_zero(tol));
        let orders = self.generators.iter().all(|g| g.order(n, tol) == Some(n));
        let mut distinct = true;
        for (i, p) in self.points.iter().enumerate() {
            for q in &self.points[i + 1..] {
                distinct &= !p.approx_eq(q, tol);
            }
        }
        killed && orders && distinct && self.points.len() as u64 == n * n
    }

    pub fn structure(&self) -> String {
        format!("Z/{0} + Z/{0}", self.n)
    }
}

pub fn torus_torsion(n: u64) -> Result<TorsionGroup> {
    if n == 0 {
        return Err(crate::Error::NonPositive(0.into()));
    }
    let nf = n as f64;
    let mut points = Vec::with_capacity((n * n) as usize);
    for j in 0..n {
        for k in 0..n {
            points.push(TorusPoint::new(j as f64 / nf, k as f64 / nf));
        }
    }
    Ok(TorsionGroup {
        n,
        points,
        generators: [
            TorusPoint::new(1.0 / nf, 0.0),
            TorusPoint::new(0.0, 1.0 / nf),
        ],
    })
}

/// `z ↦ (℘(z), ℘'(z))` on `y^2 = 4x^3 - g2 x - g3`; the origin maps to infinity.
pub fn torus_to_curve(l: &LatticeSpec, z: &TorusPoint) -> Result<CurvePoint<C64>> {
    if z.dist_to_zero() == 0.0 {
        return Ok(CurvePoint::Infinity);
    }
    let v = wp_eval(l, z.to_complex(l))?;
    Ok(CurvePoint::Affine(v.wp, v.dwp))
}

/// Chord-and-tangent sum on `y^2 = 4x^3 - g2 x - g3`, via `Y = y/2` on
/// `Y^2 = x^3 - (g2/4) x - g3/4`.
pub fn curve_add(g2: C64, g3: C64, p: &CurvePoint<C64>, q: &CurvePoint<C64>) -> CurvePoint<C64> {
    let zero = C64::new(0.0, 0.0);
    let law = CurveLaw::new([zero, zero, zero, -g2 / 4.0, -g3 / 4.0]);
    let halve = |p: &CurvePoint<C64>| match p {
        CurvePoint::Infinity => CurvePoint::Infinity,
        CurvePoint::Affine(x, y) => CurvePoint::Affine(*x, y / 2.0),
    };
    match law.add(&halve(p), &halve(q)) {
        CurvePoint::Infinity => CurvePoint::Infinity,
        CurvePoint::Affine(x, y) => CurvePoint::Affine(x, y * 2.0),
    }
}

fn rel_err(a: C64, b: C64) -> f64 {
    (a - b).norm() / a.norm().max(1.0)
}

/// Relative discrepancy between `Φ(z1 + z2)` and `Φ(z1) + Φ(z2)` on the curve.
pub fn homomorphism_error(l: &LatticeSpec, z1: &TorusPoint, z2: &TorusPoint) -> Result<f64> {
    let (g2, g3) = l.g2_g3()?;
    let lhs = torus_to_curve(l, &z1.add(z2))?;
    let rhs = curve_add(g2, g3, &torus_to_curve(l, z1)?, &torus_to_curve(l, z2)?);
    Ok(match (lhs, rhs) {
        (CurvePoint::Infinity, CurvePoint::Infinity) => 0.0,
        (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) => {
            rel_err(x1, x2).max(rel_err(y1, y2))
        }
        _ => f64::INFINITY,
    })
}

/// Seeded random torus points at least `min_dist` (max-norm, basis
/// coordinates) from the origin.
pub fn sample_points(seed: u64, count: usize, min_dist: f64) -> Vec<TorusPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = TorusPoint::new(rng.gen::<f64>(), rng.gen::<f64>());
        if p.dist_to_zero() >= min_dist {
            out.push(p);
        }
    }
    out
}

/// Seeded pairs with `z1`, `z2`, `z1 ± z2` all at least `min_dist` from the
/// origin, so that neither the chord nor the sum degenerates.
pub fn sample_pairs(seed: u64, count: usize, min_dist: f64) -> Vec<(TorusPoint, TorusPoint)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let a = TorusPoint::new(rng.gen::<f64>(), rng.gen::<f64>());
        let b = TorusPoint::new(rng.gen::<f64>(), rng.gen::<f64>());
        let ok = [a, b, a.add(&b), a.add(&b.neg())]
            .iter()
            .all(|p| p.dist_to_zero() >= min_dist);
        if ok {
            out.push((a, b));
        }
    }
    out
}

/// Numeric consequences of the uniformization theorem on one lattice.
#[derive(Clone, Debug, PartialEq)]
pub struct UniformizationReport {
    pub g2: C64,
    pub g3: C64,
    pub samples: usize,
    pub ode_max_residual: f64,
    pub even_max: f64,
    pub periodic_max: f64,
    pub derivative_odd_max: f64,
    pub homomorphism_max: f64,
    pub half_period_values: [C64; 3],
    pub half_period_derivative_max: f64,
    pub half_periods_distinct: bool,
}

pub fn uniformization_report(
    l: &LatticeSpec,
    samples: usize,
    seed: u64,
) -> Result<UniformizationReport> {
    let (g2, g3) = l.g2_g3()?;
    let mut ode = 0.0f64;
    let mut even = 0.0f64;
    let mut periodic = 0.0f64;
    let mut odd = 0.0f64;
    for p in sample_points(seed, samples, 0.1) {
        let z = p.to_complex(l);
        ode = ode.max(ode_residual(l, z)?);
        let v = wp_eval(l, z)?;
        let m = wp_eval(l, -z)?;
        even = even.max(rel_err(v.wp, m.wp));
        odd = odd.max(rel_err(v.dwp, -m.dwp));
        for shift in [l.omega1(), l.omega2()] {
            periodic = periodic.max(rel_err(v.wp, wp_eval(l, z + shift)?.wp));
        }
    }
    let mut hom = 0.0f64;
    for (a, b) in sample_pairs(seed ^ 0x9e37_79b9, samples, 0.1) {
        hom = hom.max(homomorphism_error(l, &a, &b)?);
    }
    let halves = [
        l.omega1() / 2.0,
        l.omega2() / 2.0,
        (l.omega1() + l.omega2()) / 2.0,
    ];
    let mut values = [C64::new(0.0, 0.0); 3];
    let mut dmax = 0.0f64;
    for (slot, h) in values.iter_mut().zip(halves) {
        let v = wp_eval(l, h)?;
        *slot = v.wp;
        dmax = dmax.max(v.dwp.norm());
    }
    let scale = values.iter().map(|v| v.norm()).fold(1.0, f64::max);
    let distinct =
        (0..3).all(|i| (i + 1..3).all(|j| (values[i] - values[j]).norm() > 1e-6 * scale));
    Ok(UniformizationReport {
        g2,
        g3,
        samples,
        ode_max_residual: ode,
        even_max: even,
        periodic_max: periodic,
        derivative_odd_max: odd,
        homomorphism_max: hom,
        half_period_values: values,
        half_period_derivative_max: dmax,
        half_periods_distinct: distinct,
    })
}

fn cjson(z: C64) -> Value {
    json!([z.re, z.im])
}

impl UniformizationReport {
    pub fn to_json(&self) -> Value {
        json!({
            "g2": cjson(self.g2),
            "g3": cjson(self.g3),
            "samples": self.samples,
            "ode_max_residual": self.ode_max_residual,
            "even_max": self.even_max,
            "periodic_max": self.periodic_max,
            "derivative_odd_max": self.derivative_odd_max,
            "homomorphism_max": self.homomorphism_max,
            "half_period_values": self.half_period_values.iter().map(|z| cjson(*z)).collect::<Vec<_>>(),
            "half_period_derivative_max": self.half_period_derivative_max,
            "half_periods_distinct": self.half_periods_distinct,
        })
    }
}

/// `Φ([k] z)` against `[k] Φ(z)`; used by tests of the scalar action.
#[doc(hidden)]
pub fn scalar_error(l: &LatticeSpec, z: &TorusPoint, k: i64) -> Result<f64> {
    let (g2, g3) = l.g2_g3()?;
    let zero = C64::new(0.0, 0.0);
    let law = CurveLaw::new([zero, zero, zero, -g2 / 4.0, -g3 / 4.0]);
    let lhs = torus_to_curve(l, &z.mul(k))?;
    let p = match torus_to_curve(l, z)? {
        CurvePoint::Affine(x, y) => CurvePoint::Affine(x, y / 2.0),
        inf => inf,
    };
    let rhs = match law.mul(&BigInt::from(k), &p) {
        CurvePoint::Affine(x, y) => CurvePoint::Affine(x, y * 2.0),
        inf => inf,
    };
    Ok(match (lhs, rhs) {
        (CurvePoint::Affine(x1, y1), CurvePoint::Affine(x2, y2)) => {
            rel_err(x1, x2).max(rel_err(y1, y2))
        }
        (CurvePoint::Infinity, CurvePoint::Infinity) => 0.0,
        _ => f64::INFINITY,
    })
}

//! Numeric lattice sums over `L = Z ω1 + Z ω2`: Eisenstein sums `G_k`, the
//! Weierstrass `℘` function and its derivative, torsion on `C/L` and the
//! uniformization map `z ↦ (℘(z), ℘'(z))`.
//!
//! Two summation orders are available. [`Summation::Shells`] adds lattice
//! points in shells `|k1| + |k2| = s` up to the radius; its truncation error
//! decays only polynomially in the radius. [`Summation::Rows`] sums each row
//! `{m ω1 + n ω2 : m ∈ Z}` in closed form with cotangent identities and
//! truncates only in `n`, which converges geometrically.

mod sums;
mod tate;
mod torus;

pub use sums::{eisenstein_gk, ode_residual, wp_eval, Approx, WpValue, NEAR_POLE_TOL};
pub use tate::{tate_truncation, TateReport};
pub use torus::{
    curve_add, homomorphism_error, sample_pairs, sample_points, scalar_error, torus_to_curve,
    torus_torsion, uniformization_report, TorsionGroup, TorusPoint, UniformizationReport,
};

use num::Complex;

use crate::exec::Strategy;
use crate::{Error, Result};

pub type C64 = Complex<f64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Summation {
    /// Closed-form row sums, truncated at `|n| <= radius`.
    #[default]
    Rows,
    /// Plain shells `1 <= |k1| + |k2| <= radius`.
    Shells,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LatticeSpec {
    omega1: C64,
    omega2: C64,
    radius: u32,
    method: Summation,
    strategy: Strategy,
}

impl LatticeSpec {
    /// Requires `Im(ω2 / ω1) > 0` and a positive radius.
    pub fn new(omega1: C64, omega2: C64, radius: u32) -> Result<Self> {
        if radius == 0 {
            return Err(Error::NonPositive(0.into()));
        }
        if omega1.norm() == 0.0 || !omega1.is_finite() || !omega2.is_finite() {
            return Err(Error::invalid("periods must be finite and nonzero"));
        }
        let tau = omega2 / omega1;
        if tau.im <= 0.0 {
            return Err(Error::invalid(format!(
                "Im(ω2/ω1) = {} must be positive",
                tau.im
            )));
        }
        Ok(Self {
            omega1,
            omega2,
            radius,
            method: Summation::default(),
            strategy: Strategy::default(),
        })
    }

    /// `Z + Z i`.
    pub fn square(radius: u32) -> Result<Self> {
        Self::new(C64::new(1.0, 0.0), C64::new(0.0, 1.0), radius)
    }

    /// `Z + Z ρ` with `ρ = e^{2πi/3}`.
    pub fn hexagonal(radius: u32) -> Result<Self> {
        Self::new(
            C64::new(1.0, 0.0),
            C64::new(-0.5, 3f64.sqrt() / 2.0),
            radius,
        )
    }

    pub fn with_method(mut self, method: Summation) -> Self {
        self.method = method;
        self
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn with_radius(mut self, radius: u32) -> Result<Self> {
        if radius == 0 {
            return Err(Error::NonPositive(0.into()));
        }
        self.radius = radius;
        Ok(self)
    }

    pub fn scaled(&self, lambda: C64) -> Result<Self> {
        let mut out = Self::new(self.omega1 * lambda, self.omega2 * lambda, self.radius)?;
        out.method = self.method;
        out.strategy = self.strategy;
        Ok(out)
    }

    pub fn omega1(&self) -> C64 {
        self.omega1
    }

    pub fn omega2(&self) -> C64 {
        self.omega2
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn method(&self) -> Summation {
        self.method
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn tau(&self) -> C64 {
        self.omega2 / self.omega1
    }

    /// `(t1, t2)` with `z = t1 ω1 + t2 ω2`.
    pub fn basis_coords(&self, z: C64) -> (f64, f64) {
        let det = (self.omega1.conj() * self.omega2).im;
        let t1 = (z.conj() * self.omega2).im / det;
        let t2 = (self.omega1.conj() * z).im / det;
        (t1, t2)
    }

    pub fn from_coords(&self, t1: f64, t2: f64) -> C64 {
        self.omega1 * t1 + self.omega2 * t2
    }

    /// `g2 = 60 G4`, `g3 = 140 G6`.
    pub fn g2_g3(&self) -> Result<(C64, C64)> {
        Ok((
            eisenstein_gk(self, 4)?.value * 60.0,
            eisenstein_gk(self, 6)?.value * 140.0,
        ))
    }
}

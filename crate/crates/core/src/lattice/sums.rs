use std::f64::consts::PI;

use crate::{Error, Result};

use super::{LatticeSpec, Summation, C64};

/// Minimum distance from `z` to the lattice, in basis coordinates.
pub const NEAR_POLE_TOL: f64 = 1e-8;

/// Rows whose argument has `|Im(π w)|` beyond this contribute below `1e-250`.
const ROW_CUTOFF: f64 = 300.0;

/// A truncated sum and the size of its last included shell or row pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Approx {
    pub value: C64,
    pub error: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WpValue {
    pub wp: C64,
    pub dwp: C64,
    pub wp_error: f64,
    pub dwp_error: f64,
}

/// `Σ_{m ≥ 1} m^{-k}`: direct to 1000, then an Euler-Maclaurin tail.
fn zeta(k: u32) -> f64 {
    const M: u32 = 1000;
    let direct: f64 = (1..=M).rev().map(|m| (m as f64).powi(-(k as i32))).sum();
    let m = M as f64;
    let k_f = k as f64;
    let tail =
        m.powf(1.0 - k_f) / (k_f - 1.0) - m.powf(-k_f) / 2.0 + k_f * m.powf(-k_f - 1.0) / 12.0;
    direct + tail
}

/// Polynomial `Q_k` with `Σ_m (w + m)^{-k} = π^k Q_k(u)` for even `k` and
/// `π^k cot(πw) Q_k(u)` for odd `k`, where `u = csc^2(π w)`.
///
/// Built from `Q_2 = u` and `S_{k+1} = -(1/k) dS_k/dw`, using
/// `du/dw = -2π u cot` and `d cot/dw = -π u`.
fn row_polynomial(k: u32) -> Vec<f64> {
    assert!(k >= 2);
    let mut q = vec![0.0, 1.0];
    for j in 2..k {
        let jf = j as f64;
        let mut next = vec![0.0; q.len() + 1];
        if j % 2 == 0 {
            // even -> odd: coefficient 2i q_i / j, multiplied by cot
            for (i, &c) in q.iter().enumerate() {
                next[i] += 2.0 * i as f64 * c / jf;
            }
        } else {
            // odd -> even: q_i ((2i + 1) u^{i+1} - 2i u^i) / j
            for (i, &c) in q.iter().enumerate() {
                next[i + 1] += (2 * i + 1) as f64 * c / jf;
                next[i] -= 2.0 * i as f64 * c / jf;
            }
        }
        q = next;
    }
    q
}

/// `Σ_{m ∈ Z} (w + m)^{-k}` for `w` off the integers.
fn row_sum(k: u32, poly: &[f64], w: C64) -> C64 {
    let x = w * PI;
    if x.im.abs() > ROW_CUTOFF {
        return C64::new(0.0, 0.0);
    }
    let s = x.sin();
    let u = (s * s).inv();
    let mut acc = C64::new(0.0, 0.0);
    for &c in poly.iter().rev() {
        acc = acc * u + c;
    }
    if k % 2 == 1 {
        acc *= x.cos() / s;
    }
    acc * PI.powi(k as i32)
}

fn shell_points(s: i64) -> Vec<(i64, i64)> {
    if s == 0 {
        return vec![(0, 0)];
    }
    let mut out = Vec::with_capacity(4 * s as usize);
    for a in -s..=s {
        let b = s - a.abs();
        out.push((a, b));
        if b != 0 {
            out.push((a, -b));
        }
    }
    out
}

/// Sums `f(index)` for indices `-R..=R` in parallel, combining in a fixed
/// order, and returns the total with the size of the outermost pair.
fn sum_rows(l: &LatticeSpec, f: impl Fn(i64) -> C64 + Sync + Send) -> Approx {
    let r = l.radius() as i64;
    let terms = l
        .strategy()
        .map_range(0, (2 * r + 1) as u64, |i| f(i as i64 - r));
    let value = terms.iter().fold(C64::new(0.0, 0.0), |acc, t| acc + t);
    let error = terms[0].norm() + terms[terms.len() - 1].norm();
    Approx { value, error }
}

fn sum_shells(l: &LatticeSpec, first: i64, f: impl Fn(i64, i64) -> C64 + Sync + Send) -> Approx {
    let r = l.radius() as i64;
    let shells = l.strategy().map_range(first as u64, (r + 1) as u64, |s| {
        shell_points(s as i64)
            .into_iter()
            .fold(C64::new(0.0, 0.0), |acc, (a, b)| acc + f(a, b))
    });
    let value = shells.iter().fold(C64::new(0.0, 0.0), |acc, t| acc + t);
    let error = shells.last().map_or(0.0, |t| t.norm());
    Approx { value, error }
}

/// `G_k(L) = Σ_{ω ≠ 0} ω^{-k}`; odd `k` gives exactly zero.
pub fn eisenstein_gk(l: &LatticeSpec, k: u32) -> Result<Approx> {
    if k < 3 {
        return Err(Error::invalid(format!("G_{k} diverges; need k >= 3")));
    }
    if k % 2 == 1 {
        return Ok(Approx {
            value: C64::new(0.0, 0.0),
            error: 0.0,
        });
    }
    let (w1, w2) = (l.omega1(), l.omega2());
    match l.method() {
        Summation::Shells => Ok(sum_shells(l, 1, |a, b| {
            (w1 * a as f64 + w2 * b as f64).powi(-(k as i32))
        })),
        Summation::Rows => {
            let poly = row_polynomial(k);
            let tau = l.tau();
            let rows = sum_rows(l, |n| {
                if n == 0 {
                    C64::new(2.0 * zeta(k), 0.0)
                } else {
                    row_sum(k, &poly, tau * n as f64)
                }
            });
            let scale = w1.powi(-(k as i32));
            Ok(Approx {
                value: rows.value * scale,
                error: rows.error * scale.norm(),
            })
        }
    }
}

fn check_pole(l: &LatticeSpec, z: C64) -> Result<()> {
    let (t1, t2) = l.basis_coords(z);
    let d = (t1 - t1.round()).abs().max((t2 - t2.round()).abs());
    if d < NEAR_POLE_TOL {
        return Err(Error::NearPole(d));
    }
    Ok(())
}

/// `℘(z)` and `℘'(z)`.
pub fn wp_eval(l: &LatticeSpec, z: C64) -> Result<WpValue> {
    check_pole(l, z)?;
    let (w1, w2) = (l.omega1(), l.omega2());
    let (wp, dwp) = match l.method() {
        Summation::Shells => {
            let wp = sum_shells(l, 1, |a, b| {
                let w = w1 * a as f64 + w2 * b as f64;
                (z - w).powi(-2) - w.powi(-2)
            });
            let dwp = sum_shells(l, 1, |a, b| {
                let w = w1 * a as f64 + w2 * b as f64;
                (z - w).powi(-3)
            });
            let wp = Approx {
                value: wp.value + z.powi(-2),
                error: wp.error,
            };
            let dwp = Approx {
                value: (dwp.value + z.powi(-3)) * -2.0,
                error: 2.0 * dwp.error,
            };
            (wp, dwp)
        }
        Summation::Rows => {
            let p2 = row_polynomial(2);
            let p3 = row_polynomial(3);
            let tau = l.tau();
            let w = z / w1;
            let wp = sum_rows(l, |n| {
                let shift = tau * n as f64;
                let base = if n == 0 {
                    C64::new(PI * PI / 3.0, 0.0)
                } else {
                    row_sum(2, &p2, shift)
                };
                row_sum(2, &p2, w - shift) - base
            });
            let dwp = sum_rows(l, |n| row_sum(3, &p3, w - tau * n as f64));
            let s2 = w1.powi(-2);
            let s3 = w1.powi(-3) * -2.0;
            (
                Approx {
                    value: wp.value * s2,
                    error: wp.error * s2.norm(),
                },
                Approx {
                    value: dwp.value * s3,
                    error: dwp.error * s3.norm(),
                },
            )
        }
    };
    Ok(WpValue {
        wp: wp.value,
        dwp: dwp.value,
        wp_error: wp.error,
        dwp_error: dwp.error,
    })
}

/// `|℘'^2 - 4℘^3 + 60 G4 ℘ + 140 G6|` at `z`.
pub fn ode_residual(l: &LatticeSpec, z: C64) -> Result<f64> {
    let v = wp_eval(l, z)?;
    let (g2, g3) = l.g2_g3()?;
    Ok((v.dwp * v.dwp - v.wp * v.wp * v.wp * 4.0 + g2 * v.wp + g3).norm())
}

use std::collections::HashSet;

use crate::exactnum::LAdicTrunc;
use crate::{Error, Result};

use super::TorusPoint;

/// Above this many points a transition map is checked on generators only.
const EXHAUSTIVE_LIMIT: u64 = 1 << 20;

/// Verification of `E[ℓ^n] ≅ (Z/ℓ^n)^2` and the maps `E[ℓ^{n+1}] → E[ℓ^n]`,
/// `P ↦ ℓP`, on the torus model.
#[derive(Clone, Debug, PartialEq)]
pub struct TateReport {
    pub ell: u64,
    pub depth: u32,
    /// `|E[ℓ^n]|` for `n = 1..=depth`.
    pub level_sizes: Vec<u64>,
    /// One flag per transition `E[ℓ^{n+1}] → E[ℓ^n]`, `n = 1..=depth`.
    pub transitions_surjective: Vec<bool>,
    pub exhaustive: Vec<bool>,
    pub generators_compatible: bool,
    /// Coordinates of the generator sequences `(1/ℓ^n, 0)` and `(0, 1/ℓ^n)`
    /// in the first and second slot, as compatible systems mod `ℓ^n`.
    pub generator_coordinates: [LAdicTrunc; 2],
    pub rank: u32,
    pub free: bool,
}

impl TateReport {
    pub fn all_surjective(&self) -> bool {
        self.transitions_surjective.iter().all(|&b| b)
    }
}

/// Image of `E[ℓ^{n+1}]` under multiplication by `ℓ`, as exact residues.
fn image_is_everything(ell: u64, n: u32) -> bool {
    let big = ell.pow(n + 1);
    let small = ell.pow(n);
    let mut seen = HashSet::new();
    for a in 0..big {
        for b in 0..big {
            // ℓ (a, b) / ℓ^{n+1} = (a, b) / ℓ^n
            seen.insert((a % small, b % small));
        }
    }
    seen.len() as u64 == small * small
}

pub fn tate_truncation(ell: u64, depth: u32) -> Result<TateReport> {
    if ![2, 3, 5].contains(&ell) {
        return Err(Error::invalid(format!("ℓ = {ell} not in {{2, 3, 5}}")));
    }
    if !(1..=6).contains(&depth) {
        return Err(Error::invalid(format!("depth {depth} not in 1..=6")));
    }
    let tol = 1e-9;
    let level_sizes: Vec<u64> = (1..=depth).map(|n| ell.pow(2 * n)).collect();

    let mut surjective = Vec::new();
    let mut exhaustive = Vec::new();
    for n in 1..=depth {
        // The map is a homomorphism, so it is onto iff the images of the
        // generators (1/ℓ^{n+1}, 0), (0, 1/ℓ^{n+1}) generate E[ℓ^n].
        let ln = ell.pow(n + 1) as f64;
        let p = TorusPoint::new(1.0 / ln, 0.0).mul(ell as i64);
        let q = TorusPoint::new(0.0, 1.0 / ln).mul(ell as i64);
        let small = ell.pow(n);
        let on_generators = p.order(small, tol) == Some(small)
            && q.order(small, tol) == Some(small)
            && p.approx_eq(&TorusPoint::new(1.0 / small as f64, 0.0), tol)
            && q.approx_eq(&TorusPoint::new(0.0, 1.0 / small as f64), tol);
        let full = ell.pow(2 * (n + 1)) <= EXHAUSTIVE_LIMIT;
        let ok = on_generators && (!full || image_is_everything(ell, n));
        surjective.push(ok);
        exhaustive.push(full);
    }

    let mut compatible = true;
    for n in 1..=depth {
        let hi = ell.pow(n + 1) as f64;
        let lo = ell.pow(n) as f64;
        for (p_hi, p_lo) in [
            (
                TorusPoint::new(1.0 / hi, 0.0),
                TorusPoint::new(1.0 / lo, 0.0),
            ),
            (
                TorusPoint::new(0.0, 1.0 / hi),
                TorusPoint::new(0.0, 1.0 / lo),
            ),
        ] {
            compatible &= p_hi.mul(ell as i64).approx_eq(&p_lo, tol);
        }
    }

    // Generators have order ℓ^depth and their coordinate matrix is the
    // identity, a unit mod ℓ; the ℓ-torsion of (Z/ℓ^depth)^2 has ℓ^2
    // elements, so two generators are needed and suffice.
    let top = ell.pow(depth);
    let p = TorusPoint::new(1.0 / top as f64, 0.0);
    let q = TorusPoint::new(0.0, 1.0 / top as f64);
    let orders_ok = p.order(top, tol) == Some(top) && q.order(top, tol) == Some(top);
    let ell_torsion = (0..top).filter(|a| (a * ell).is_multiple_of(top)).count() as u64;
    let rank = if ell_torsion.pow(2) == ell * ell {
        2
    } else {
        0
    };
    let free = orders_ok && rank == 2 && level_sizes.last() == Some(&(top * top));

    let coords = |first: bool| {
        let digits = (1..=depth)
            .map(|_| if first { 1 } else { 0 })
            .collect::<Vec<u64>>();
        LAdicTrunc::new(ell, digits)
    };
    Ok(TateReport {
        ell,
        depth,
        level_sizes,
        transitions_surjective: surjective,
        exhaustive,
        generators_compatible: compatible,
        generator_coordinates: [coords(true)?, coords(false)?],
        rank,
        free,
    })
}

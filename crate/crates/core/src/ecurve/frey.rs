use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

use crate::exactnum::{factor, radical, BigRat};
use crate::{Error, Result};

use super::reduction::{conductor_over, reduction_type, root_coincidence, RootCoincidence};
use super::{Conductor, WeierstrassModel};

/// The curve `y^2 = x (x - a^P)(x + b^P)` attached to `a^P + b^P = c^P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreyData {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub exponent: u32,
    pub model: WeierstrassModel,
    /// `(abc)^(2P)`, the root-product discriminant.
    pub discriminant: BigInt,
    pub conductor: Conductor,
    pub semistable: bool,
}

pub fn frey_curve(a: &BigInt, b: &BigInt, c: &BigInt, exponent: u32) -> Result<FreyData> {
    if exponent == 0 {
        return Err(Error::invalid("exponent must be positive"));
    }
    let abc = a * b * c;
    if abc.is_zero() {
        return Err(Error::NotAFermatTriple("abc = 0".into()));
    }
    let (ap, bp, cp) = (a.pow(exponent), b.pow(exponent), c.pow(exponent));
    if &ap + &bp != cp {
        return Err(Error::NotAFermatTriple(format!(
            "{a}^{exponent} + {b}^{exponent} != {c}^{exponent}"
        )));
    }
    for (x, y) in [(a, b), (a, c), (b, c)] {
        if !x.gcd(y).is_one() {
            return Err(Error::NotCoprime(format!("gcd({x}, {y}) != 1")));
        }
    }

    let model = WeierstrassModel::Roots([
        BigRat::zero(),
        BigRat::from_integer(ap.clone()),
        BigRat::from_integer(-bp.clone()),
    ]);
    let discriminant = abc.pow(2 * exponent);
    let from_roots = model.root_discriminant().expect("root form");
    if from_roots != BigRat::from_integer(discriminant.clone()) {
        return Err(Error::InternalInconsistency(format!(
            "root discriminant {from_roots} != (abc)^(2P)"
        )));
    }

    // Bad primes are those dividing abc; 2 always does since one of a, b, c is even.
    let mut primes = Vec::new();
    for (p, _) in factor(&abc)? {
        primes.push(
            p.to_u64()
                .ok_or_else(|| Error::FactorizationBound(p.clone()))?,
        );
    }
    let mut semistable = true;
    for &p in &primes {
        let ok = if p >= 5 {
            reduction_type(&model, p)?.is_multiplicative()
        } else {
            // 0, a^P, -b^P: at most two of them meet mod p since they are coprime
            root_coincidence(&model, p)? == RootCoincidence::TwoCoincide
        };
        semistable &= ok;
    }
    let conductor = conductor_over(&model, &primes)?;
    let rad = radical(&abc)?;
    if conductor.value != rad.abs() {
        return Err(Error::InternalInconsistency(format!(
            "conductor {} differs from rad(abc) = {}",
            conductor.value, rad
        )));
    }
    if !semistable {
        return Err(Error::InternalInconsistency(
            "Frey curve failed the semistability check".into(),
        ));
    }
    Ok(FreyData {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        exponent,
        model,
        discriminant,
        conductor,
        semistable,
    })
}

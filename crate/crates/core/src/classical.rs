//! Classical exponent machinery: Pythagorean triples, reduction of the
//! exponent to 4 or an odd prime, the `x^4 + y^4 = z^2` search, the `Z[ρ]`
//! congruences behind the `n = 3` case, and abc radicals and qualities.

use std::io::{self, Write};

use num::integer::Roots;
use num::{BigInt, Integer, One, Signed, ToPrimitive};

use crate::exactnum::{factor_u64, radical, EisensteinInt};
use crate::exec::Strategy;
use crate::{Error, Result};

/// `(2ab, a^2 - b^2, a^2 + b^2)` with its generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PythagTriple {
    pub x: BigInt,
    pub y: BigInt,
    pub z: BigInt,
    pub a: BigInt,
    pub b: BigInt,
}

/// The primitive triple generated by `a > b > 0`, coprime, of opposite parity.
/// Every violated condition is listed in the error.
pub fn pythag_param(a: &BigInt, b: &BigInt) -> Result<PythagTriple> {
    let mut problems = Vec::new();
    if !b.is_positive() {
        problems.push(format!("b = {b} is not positive"));
    }
    if a <= b {
        problems.push(format!("a = {a} is not greater than b = {b}"));
    }
    if !a.gcd(b).is_one() {
        problems.push(format!("gcd({a}, {b}) = {} is not 1", a.gcd(b)));
    }
    if a.is_odd() == b.is_odd() {
        let kind = if a.is_odd() { "odd" } else { "even" };
        problems.push(format!("a and b are both {kind}"));
    }
    if !problems.is_empty() {
        return Err(Error::InvalidArgument(problems.join("; ")));
    }
    let (a2, b2) = (a * a, b * b);
    let t = PythagTriple {
        x: BigInt::from(2) * a * b,
        y: &a2 - &b2,
        z: &a2 + &b2,
        a: a.clone(),
        b: b.clone(),
    };
    if &t.x * &t.x + &t.y * &t.y != &t.z * &t.z {
        return Err(Error::InternalInconsistency(format!(
            "({}, {}, {}) is not Pythagorean",
            t.x, t.y, t.z
        )));
    }
    Ok(t)
}

/// Primitive `(even leg, odd leg, hypotenuse)` with `z <= zmax`, found by
/// scanning all legs; sorted.
pub fn primitive_triples_by_scan(zmax: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for z in 1..=zmax {
        for x in 1..z {
            let y2 = z * z - x * x;
            let y = y2.sqrt();
            if y * y == y2 && y > 0 && x.gcd(&y) == 1 && x % 2 == 0 {
                out.push((x, y, z));
            }
        }
    }
    out.sort();
    out
}

/// How `x^n + y^n = z^n` reduces to a smaller exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExponentReduction {
    /// `n = 2^k`, `k >= 2`: `(x^r)^4 + (y^r)^4 = (z^r)^4` with `r = 2^{k-2}`.
    Four { r: u64 },
    /// `n = p r` for the smallest odd prime `p | n`: `(x^r)^p + ... `.
    OddPrime { p: u64, r: u64 },
}

impl ExponentReduction {
    pub fn exponent(&self) -> u64 {
        match *self {
            Self::Four { .. } => 4,
            Self::OddPrime { p, .. } => p,
        }
    }

    pub fn cofactor(&self) -> u64 {
        match *self {
            Self::Four { r } | Self::OddPrime { r, .. } => r,
        }
    }

    /// `x^n + y^n = z^n  ⇒  (x^r)^e + (y^r)^e = (z^r)^e`.
    pub fn witness(&self) -> String {
        let (e, r) = (self.exponent(), self.cofactor());
        format!("x^{n} = (x^{r})^{e}", n = e * r)
    }
}

pub fn exponent_reduce(n: u64) -> Result<ExponentReduction> {
    if n <= 2 {
        return Err(Error::invalid(format!("n = {n} must exceed 2")));
    }
    if n.is_power_of_two() {
        return Ok(ExponentReduction::Four { r: n / 4 });
    }
    let p = factor_u64(n)?
        .into_iter()
        .map(|(p, _)| p)
        .find(|&p| p != 2)
        .expect("n is not a power of two");
    Ok(ExponentReduction::OddPrime { p, r: n / p })
}

pub const N4_SEARCH_LIMIT: u64 = 10_000;

/// All `1 <= x <= y <= bound` with `x^4 + y^4` a perfect square.
pub fn n4_search(bound: u64) -> Result<Vec<(u64, u64, u128)>> {
    n4_search_with(bound, Strategy::default())
}

pub fn n4_search_with(bound: u64, strategy: Strategy) -> Result<Vec<(u64, u64, u128)>> {
    if bound == 0 || bound > N4_SEARCH_LIMIT {
        return Err(Error::invalid(format!(
            "bound {bound} not in 1..={N4_SEARCH_LIMIT}"
        )));
    }
    let rows = strategy.map_range(1, bound + 1, |x| {
        let x4 = (x as u128).pow(4);
        (x..=bound)
            .filter_map(|y| {
                let s = x4 + (y as u128).pow(4);
                let r = s.sqrt();
                (r * r == s).then_some((x, y, r))
            })
            .collect::<Vec<_>>()
    });
    Ok(rows.into_iter().flatten().collect())
}

/// Outcome of the brute-force check of the `Z[ρ]` congruence lemmas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub range: i64,
    pub elements: usize,
    /// Elements with `λ ∤ ω`, to which the cube lemma applies.
    pub cube_cases: usize,
    pub norm_lambda: BigInt,
    pub lambda_valuation_of_3: u32,
    pub three_over_lambda_squared_is_unit: bool,
}

/// Checks, for every `ω = a + bρ` with `|a|, |b| <= range`:
/// `ω ≡ 0, ±1 (mod λ)`; if `λ ∤ ω` then `ω^3 ≡ ±1 (mod λ^4)`; and that
/// `λ^2 = -3ρ`, so `3/λ^2` is a unit. Any failure is returned as a witness.
pub fn eisenstein_lemma_check(range: i64) -> Result<LemmaReport> {
    if !(1..=50).contains(&range) {
        return Err(Error::invalid(format!("range {range} not in 1..=50")));
    }
    let lambda = EisensteinInt::lambda();
    let one = EisensteinInt::one();
    let minus_one = EisensteinInt::new(-1, 0);
    let mut elements = 0;
    let mut cube_cases = 0;
    for a in -range..=range {
        for b in -range..=range {
            let w = EisensteinInt::new(a, b);
            elements += 1;
            let r = w.residue_mod_lambda();
            let rep = EisensteinInt::new(r, 0);
            if ![-1, 0, 1].contains(&r) || !lambda.divides(&(&w - &rep)) {
                return Err(Error::Counterexample(format!("{w} has residue {r} mod λ")));
            }
            if lambda.divides(&w) {
                continue;
            }
            cube_cases += 1;
            let cube = w.pow(3);
            if !cube.congruent_mod_lambda_pow(&one, 4)
                && !cube.congruent_mod_lambda_pow(&minus_one, 4)
            {
                return Err(Error::Counterexample(format!("{w}^3 is not ±1 mod λ^4")));
            }
        }
    }
    let three = EisensteinInt::new(3, 0);
    let lambda_sq = lambda.pow(2);
    if lambda_sq != &EisensteinInt::new(-3, 0) * &EisensteinInt::rho() {
        return Err(Error::Counterexample(format!("λ^2 = {lambda_sq} != -3ρ")));
    }
    let unit = three.div_exact(&lambda_sq).is_some_and(|u| u.is_unit());
    if !unit {
        return Err(Error::Counterexample("3/λ^2 is not a unit".into()));
    }
    Ok(LemmaReport {
        range,
        elements,
        cube_cases,
        norm_lambda: lambda.norm(),
        lambda_valuation_of_3: three.lambda_valuation()?,
        three_over_lambda_squared_is_unit: unit,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct AbcQuality {
    pub rad: BigInt,
    /// `ln c / ln rad(abc)`.
    pub q: f64,
}

fn ln_big(n: &BigInt) -> f64 {
    // ln n = ln(mantissa) + shift ln 2 for numbers beyond f64 range
    let bits = n.bits();
    if bits < 1000 {
        n.to_f64().expect("finite").ln()
    } else {
        let shift = bits - 64;
        (n >> shift).to_f64().expect("finite").ln() + shift as f64 * std::f64::consts::LN_2
    }
}

/// Radical of `abc` and quality `ln c / ln rad` for coprime positive `a + b = c`.
pub fn abc_quality(a: &BigInt, b: &BigInt, c: &BigInt) -> Result<AbcQuality> {
    if a + b != *c {
        return Err(Error::invalid(format!("{a} + {b} != {c}")));
    }
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::invalid("a and b must be positive"));
    }
    if !a.gcd(b).is_one() {
        return Err(Error::NotCoprime(format!("gcd({a}, {b}) != 1")));
    }
    let rad = radical(&(a * b * c))?;
    let q = if rad.is_one() {
        f64::INFINITY
    } else {
        ln_big(c) / ln_big(&rad)
    };
    Ok(AbcQuality { rad, q })
}

/// Largest `n` with `z^n <= rad(xyz)^{3/2}`, i.e. `z^{2n} <= rad^3`.
///
/// This reads the abc inequality with `ε = 1/2` and the constant taken as 1,
/// an illustrative choice rather than a known bound.
pub fn flt_exponent_bound(x: &BigInt, y: &BigInt, z: &BigInt) -> Result<u32> {
    if !x.is_positive() || !y.is_positive() || z <= &BigInt::one() {
        return Err(Error::invalid("need x, y > 0 and z > 1"));
    }
    let rad3 = radical(&(x * y * z))?.pow(3);
    let z2 = z * z;
    let mut n = 0;
    let mut acc = z2.clone();
    while acc <= rad3 {
        n += 1;
        acc *= &z2;
    }
    Ok(n)
}

/// One row of an abc scan.
#[derive(Clone, Debug, PartialEq)]
pub struct AbcHit {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub rad: u64,
    pub q: f64,
}

/// Coprime `a + b = c` with `a <= b`, `c <= cmax` and quality above
/// `threshold`, sorted by quality descending (ties by `c`, then `a`).
pub fn abc_scan(cmax: u64, threshold: f64, strategy: Strategy) -> Result<Vec<AbcHit>> {
    if cmax < 2 {
        return Err(Error::invalid("cmax must be at least 2"));
    }
    // radicals up to cmax by a sieve
    let mut rad = vec![1u64; cmax as usize + 1];
    for p in 2..=cmax as usize {
        if rad[p] == 1 {
            for m in (p..=cmax as usize).step_by(p) {
                rad[m] *= p as u64;
            }
        }
    }
    let rad = &rad;
    let rows = strategy.map_range(2, cmax + 1, |c| {
        (1..=c / 2)
            .filter(|&a| a.gcd(&c) == 1)
            .filter_map(|a| {
                let b = c - a;
                let r = rad[a as usize] as u128 * rad[b as usize] as u128 * rad[c as usize] as u128;
                let q = (c as f64).ln() / (r as f64).ln();
                (q > threshold).then_some(AbcHit {
                    a,
                    b,
                    c,
                    rad: r as u64,
                    q,
                })
            })
            .collect::<Vec<_>>()
    });
    let mut hits: Vec<AbcHit> = rows.into_iter().flatten().collect();
    hits.sort_by(|x, y| y.q.total_cmp(&x.q).then(x.c.cmp(&y.c)).then(x.a.cmp(&y.a)));
    Ok(hits)
}

/// `a,b,c,rad,q` rows with a header.
pub fn write_abc_csv<W: Write>(hits: &[AbcHit], mut w: W) -> io::Result<()> {
    writeln!(w, "a,b,c,rad,q")?;
    for h in hits {
        writeln!(w, "{},{},{},{},{:.12}", h.a, h.b, h.c, h.rad, h.q)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        n.into()
    }

    #[test]
    fn pythag_examples() {
        let t = pythag_param(&big(2), &big(1)).unwrap();
        assert_eq!((t.x, t.y, t.z), (big(4), big(3), big(5)));
        let t = pythag_param(&big(3), &big(2)).unwrap();
        assert_eq!((t.x, t.y, t.z), (big(12), big(5), big(13)));
        let e = pythag_param(&big(3), &big(1)).unwrap_err();
        assert!(e.to_string().contains("both odd"));
        let Error::InvalidArgument(msg) = pythag_param(&big(2), &big(4)).unwrap_err() else {
            panic!()
        };
        assert_eq!(msg.matches(';').count(), 2, "{msg}");
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(
            exponent_reduce(8).unwrap(),
            ExponentReduction::Four { r: 2 }
        );
        assert_eq!(
            exponent_reduce(4).unwrap(),
            ExponentReduction::Four { r: 1 }
        );
        assert_eq!(
            exponent_reduce(15).unwrap(),
            ExponentReduction::OddPrime { p: 3, r: 5 }
        );
        assert_eq!(
            exponent_reduce(3).unwrap(),
            ExponentReduction::OddPrime { p: 3, r: 1 }
        );
        assert_eq!(
            exponent_reduce(20).unwrap(),
            ExponentReduction::OddPrime { p: 5, r: 4 }
        );
        assert!(exponent_reduce(2).is_err());
        assert_eq!(exponent_reduce(15).unwrap().witness(), "x^15 = (x^5)^3");
    }

    #[test]
    fn n4_examples() {
        assert!(n4_search(1).unwrap().is_empty());
        assert!(n4_search(50).unwrap().is_empty());
        assert!(n4_search(0).is_err());
    }

    #[test]
    fn lemma_check() {
        let r = eisenstein_lemma_check(10).unwrap();
        assert_eq!(r.elements, 441);
        assert_eq!(r.norm_lambda, big(3));
        assert_eq!(r.lambda_valuation_of_3, 2);
        assert!(r.three_over_lambda_squared_is_unit);
    }

    #[test]
    fn abc_examples() {
        let q = abc_quality(&big(1), &big(8), &big(9)).unwrap();
        assert_eq!(q.rad, big(6));
        assert!((q.q - 9f64.ln() / 6f64.ln()).abs() < 1e-12);
        let q = abc_quality(&big(1), &big(1), &big(2)).unwrap();
        assert_eq!((q.rad, q.q), (big(2), 1.0));
        assert!(abc_quality(&big(1), &big(2), &big(4)).is_err());
        assert_eq!(flt_exponent_bound(&big(1), &big(8), &big(9)).unwrap(), 1);
    }

    #[test]
    fn abc_scan_top_hit() {
        let hits = abc_scan(1000, 1.4, Strategy::Sequential).unwrap();
        // 3 + 125 = 128 is the best triple below 1000 (q ≈ 1.4266)
        assert_eq!((hits[0].a, hits[0].b, hits[0].c), (3, 125, 128));
        assert_eq!(hits, abc_scan(1000, 1.4, Strategy::Parallel).unwrap());
        let mut buf = Vec::new();
        write_abc_csv(&hits[..1], &mut buf).unwrap();
        assert!(String::from_utf8(buf)
            .unwrap()
            .starts_with("a,b,c,rad,q\n3,125,128,30,"));
    }

    #[test]
    fn scan_finds_classic_triples() {
        let t = primitive_triples_by_scan(30);
        assert_eq!(
            t,
            vec![
                (4, 3, 5),
                (8, 15, 17),
                (12, 5, 13),
                (20, 21, 29),
                (24, 7, 25)
            ]
        );
    }
}

//! Finite fields `F_{p^k}`, the Frobenius automorphism and its fixed fields,
//! and the cyclotomic character on `Gal(Q(ζ_{p^k})/Q) ≅ (Z/p^k)^×`.
//!
//! Roots of unity are never represented numerically: `ζ^i` is the exponent
//! `i mod p^k`, and `σ_a : ζ ↦ ζ^a` acts by multiplication on exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactnum::{
    divisors, inverse_mod, mod_u64, mul_mod, pow_mod, require_prime, LAdicTrunc, ResidueInt,
};
use crate::{Error, Result};

/// Largest field `subfield_lattice` will enumerate.
pub const MAX_ENUMERATED_FIELD: u64 = 1 << 20;

/// Fixed sets up to this size are checked for closure on all pairs.
const EXHAUSTIVE_CLOSURE: u64 = 2048;

// Polynomials over F_p, lowest degree first.

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let k = m.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    // m is monic of degree k
    for d in (k..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        for (i, &mi) in m.iter().enumerate() {
            let idx = d - k + i;
            prod[idx] = (prod[idx] + p - mul_mod(c, mi, p)) % p;
        }
    }
    prod.truncate(k);
    prod.resize(k, 0);
    prod
}

fn poly_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let k = m.len() - 1;
    let mut result = vec![0u64; k];
    result[0] = 1 % p;
    let mut b = base.to_vec();
    b.resize(k, 0);
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mulmod(&result, &b, m, p);
        }
        b = poly_mulmod(&b, &b, m, p);
        e >>= 1;
    }
    result
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let inv = inverse_mod(b[db], p).expect("nonzero leading coefficient");
    while r.len() > db {
        let dr = r.len() - 1;
        let q = mul_mod(r[dr], inv, p);
        for (i, &bi) in b.iter().enumerate() {
            let idx = dr - db + i;
            r[idx] = (r[idx] + p - mul_mod(q, bi, p)) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_gcd_degree(a: &[u64], b: &[u64], p: u64) -> usize {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

/// Monic `f` of degree `k` is irreducible iff it has no factor of degree
/// `<= k/2`, i.e. `gcd(f, x^{p^i} - x) = 1` for `1 <= i <= k/2`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    let x = {
        let mut v = vec![0u64; k];
        v[1] = 1;
        v
    };
    let mut xp = x.clone();
    for _ in 1..=k / 2 {
        xp = poly_powmod(&xp, p, f, p);
        let mut diff = xp.clone();
        diff[1] = (diff[1] + p - 1) % p;
        if trim(diff.clone()).is_empty() || poly_gcd_degree(f, &diff, p) > 0 {
            return false;
        }
    }
    true
}

/// `F_p[t] / (m(t))` for the lexicographically first monic irreducible `m`
/// of degree `k`, ordering `t^k + c_{k-1} t^{k-1} + ... + c_0` by the integer
/// `Σ c_j p^j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteField {
    p: u64,
    k: u32,
    modulus: Vec<u64>,
}

impl FiniteField {
    pub fn new(p: u64, k: u32) -> Result<Arc<Self>> {
        require_prime(p)?;
        if k == 0 {
            return Err(Error::NonPositive(0.into()));
        }
        if p.checked_pow(k).is_none_or(|q| q > 1 << 62) {
            return Err(Error::FieldTooLarge(p));
        }
        let count = p.pow(k);
        for index in 0..count {
            let mut m: Vec<u64> = (0..k).map(|j| (index / p.pow(j)) % p).collect();
            m.push(1);
            if k > 1 && m[0] == 0 {
                continue;
            }
            if is_irreducible(&m, p) {
                return Ok(Arc::new(Self { p, k, modulus: m }));
            }
        }
        Err(Error::InternalInconsistency(format!(
            "no irreducible polynomial of degree {k} over F_{p}"
        )))
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.k)
    }

    /// Coefficients of the modulus, lowest first, ending in the leading 1.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqElement {
    field: Arc<FiniteField>,
    coeffs: Vec<u64>,
}

impl FqElement {
    pub fn from_coeffs(field: &Arc<FiniteField>, coeffs: &[u64]) -> Self {
        let k = field.k as usize;
        let p = field.p;
        let mut c: Vec<u64> = coeffs.iter().map(|&x| x % p).collect();
        if c.len() > k {
            c = poly_rem(&c, &field.modulus, p);
        }
        c.resize(k, 0);
        Self {
            field: field.clone(),
            coeffs: c,
        }
    }

    pub fn zero(field: &Arc<FiniteField>) -> Self {
        Self::from_coeffs(field, &[])
    }

    pub fn one(field: &Arc<FiniteField>) -> Self {
        Self::from_coeffs(field, &[1])
    }

    pub fn from_int(field: &Arc<FiniteField>, n: &BigInt) -> Self {
        Self::from_coeffs(field, &[mod_u64(n, field.p)])
    }

    /// The class of `t`, which generates the field over `F_p`.
    pub fn generator(field: &Arc<FiniteField>) -> Self {
        Self::from_coeffs(field, &[0, 1])
    }

    /// The element whose coefficients are the base-`p` digits of `index`.
    pub fn from_index(field: &Arc<FiniteField>, mut index: u64) -> Self {
        let p = field.p;
        let coeffs: Vec<u64> = (0..field.k)
            .map(|_| {
                let d = index % p;
                index /= p;
                d
            })
            .collect();
        Self::from_coeffs(field, &coeffs)
    }

    pub fn index(&self) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * self.field.p + c)
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_same(&self, other: &Self) {
        assert!(self.field == other.field, "elements of different fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        let p = self.field.p;
        let c: Vec<u64> = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a + b) % p)
            .collect();
        Self {
            field: self.field.clone(),
            coeffs: c,
        }
    }

    pub fn neg(&self) -> Self {
        let p = self.field.p;
        let c = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        Self {
            field: self.field.clone(),
            coeffs: c,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other);
        let c = poly_mulmod(
            &self.coeffs,
            &other.coeffs,
            &self.field.modulus,
            self.field.p,
        );
        Self {
            field: self.field.clone(),
            coeffs: c,
        }
    }

    pub fn pow(&self, e: u64) -> Self {
        let c = poly_powmod(&self.coeffs, e, &self.field.modulus, self.field.p);
        Self {
            field: self.field.clone(),
            coeffs: c,
        }
    }

    /// `x^{q-2}` for nonzero `x`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible("0 in a finite field".into()));
        }
        Ok(self.pow(self.field.order() - 2))
    }
}

impl fmt::Display for FqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".into(),
                (1, c) => format!("{c}t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}t^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `x ↦ x^p`.
pub fn frobenius(x: &FqElement) -> FqElement {
    x.pow(x.field.p)
}

/// `Frob^m`.
pub fn frobenius_pow(x: &FqElement, m: u32) -> FqElement {
    (0..m).fold(x.clone(), |acc, _| frobenius(&acc))
}

/// Least `m >= 1` with `Frob^m(t) = t`; equals `k` since `t` generates.
pub fn frobenius_order(p: u64, k: u32) -> Result<u32> {
    let field = FiniteField::new(p, k)?;
    let t = FqElement::generator(&field);
    let mut x = frobenius(&t);
    let mut m = 1;
    while x != t {
        x = frobenius(&x);
        m += 1;
        if m > k {
            return Err(Error::InternalInconsistency(format!(
                "Frobenius order exceeds {k} in F_{p}^{k}"
            )));
        }
    }
    Ok(m)
}

/// Checks `Frob(x + y) = Frob(x) + Frob(y)` and `Frob(xy) = Frob(x) Frob(y)`
/// on every pair when the field is small enough, else on `samples` random pairs.
pub fn frobenius_is_homomorphism(field: &Arc<FiniteField>, samples: usize, seed: u64) -> bool {
    let q = field.order();
    let check = |a: u64, b: u64| {
        let x = FqElement::from_index(field, a);
        let y = FqElement::from_index(field, b);
        frobenius(&x.add(&y)) == frobenius(&x).add(&frobenius(&y))
            && frobenius(&x.mul(&y)) == frobenius(&x).mul(&frobenius(&y))
    };
    if q * q <= (samples as u64).max(1 << 12) {
        (0..q).all(|a| (0..q).all(|b| check(a, b)))
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples).all(|_| check(rng.gen_range(0..q), rng.gen_range(0..q)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubfieldLattice {
    pub p: u64,
    pub k: u32,
    /// `d ↦ |{x : Frob^d(x) = x}|` for each `d | k`.
    pub fixed_sizes: BTreeMap<u32, u64>,
    /// `d ↦` whether that fixed set is closed under `+`, `-`, `×`, inverse.
    pub closed: BTreeMap<u32, bool>,
}

impl SubfieldLattice {
    /// Every fixed set has `p^d` elements and is a subfield.
    pub fn is_consistent(&self) -> bool {
        self.fixed_sizes
            .iter()
            .all(|(&d, &n)| n == self.p.pow(d) && self.closed[&d])
    }
}

pub fn subfield_lattice(p: u64, k: u32) -> Result<SubfieldLattice> {
    require_prime(p)?;
    if k > 8 || p.checked_pow(k).is_none_or(|q| q > MAX_ENUMERATED_FIELD) {
        return Err(Error::FieldTooLarge(p.saturating_pow(k)));
    }
    let field = FiniteField::new(p, k)?;
    let elements: Vec<FqElement> = (0..field.order())
        .map(|i| FqElement::from_index(&field, i))
        .collect();
    let mut fixed_sizes = BTreeMap::new();
    let mut closed = BTreeMap::new();
    for d in divisors(k as u64) {
        let d = d as u32;
        let member: Vec<bool> = elements.iter().map(|x| frobenius_pow(x, d) == *x).collect();
        let fixed: Vec<&FqElement> = elements
            .iter()
            .zip(&member)
            .filter(|(_, &m)| m)
            .map(|(x, _)| x)
            .collect();
        let is_fixed = |x: &FqElement| member[x.index() as usize];
        let pair_ok = |x: &FqElement, y: &FqElement| {
            is_fixed(&x.add(y)) && is_fixed(&x.sub(y)) && is_fixed(&x.mul(y))
        };
        let inverse_ok = |y: &FqElement| y.is_zero() || is_fixed(&y.inverse().expect("nonzero"));
        let n = fixed.len() as u64;
        let ok = if n <= EXHAUSTIVE_CLOSURE {
            fixed.iter().all(|y| inverse_ok(y))
                && fixed.iter().all(|x| fixed.iter().all(|y| pair_ok(x, y)))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(u64::from(d) * 7919 + p);
            (0..4096).all(|_| {
                let x = fixed[rng.gen_range(0..fixed.len())];
                let y = fixed[rng.gen_range(0..fixed.len())];
                pair_ok(x, y) && inverse_ok(y)
            })
        };
        fixed_sizes.insert(d, n);
        closed.insert(d, ok);
    }
    Ok(SubfieldLattice {
        p,
        k,
        fixed_sizes,
        closed,
    })
}

/// `σ_a ∈ Gal(Q(ζ_{p^k})/Q)`, `ζ ↦ ζ^a`, for a unit `a mod p^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CycloAut {
    p: u64,
    k: u32,
    a: u64,
}

impl CycloAut {
    pub fn new(p: u64, k: u32, a: &BigInt) -> Result<Self> {
        require_prime(p)?;
        if k == 0 {
            return Err(Error::NonPositive(0.into()));
        }
        let m = p
            .checked_pow(k)
            .filter(|m| *m <= 1 << 62)
            .ok_or(Error::FieldTooLarge(p))?;
        let a = mod_u64(a, m);
        if a.is_multiple_of(p) {
            return Err(Error::NotInvertible(format!("{a} mod {p}^{k}")));
        }
        Ok(Self { p, k, a })
    }

    pub fn identity(p: u64, k: u32) -> Result<Self> {
        Self::new(p, k, &BigInt::from(1))
    }

    pub fn modulus(&self) -> u64 {
        self.p.pow(self.k)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.k
    }

    /// `χ(σ_a) = a ∈ (Z/p^k)^×`.
    pub fn character(&self) -> ResidueInt {
        ResidueInt::new(self.a.into(), self.modulus()).expect("valid modulus")
    }

    /// Restriction to `Q(ζ_{p^j})`, `1 <= j <= k`.
    pub fn project(&self, j: u32) -> Result<Self> {
        if j == 0 || j > self.k {
            return Err(Error::invalid(format!(
                "cannot project level {} to {j}",
                self.k
            )));
        }
        Ok(Self {
            p: self.p,
            k: j,
            a: self.a % self.p.pow(j),
        })
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if (self.p, self.k) != (other.p, other.k) {
            return Err(Error::Mismatch(format!(
                "automorphisms at levels {}^{} and {}^{}",
                self.p, self.k, other.p, other.k
            )));
        }
        Ok(Self {
            a: mul_mod(self.a, other.a, self.modulus()),
            ..*self
        })
    }

    /// `σ(ζ^i) = ζ^{a i}` on exponents.
    pub fn apply(&self, exponent: u64) -> u64 {
        mul_mod(self.a, exponent % self.modulus(), self.modulus())
    }

    /// Order of `σ` in the Galois group.
    pub fn order(&self) -> u64 {
        let m = self.modulus();
        (1..=m)
            .find(|&e| pow_mod(self.a, e, m) == 1)
            .expect("unit has finite order")
    }
}

/// The truncated `p`-adic cyclotomic character of `σ_a`: the compatible
/// sequence `(χ_{p}(σ), χ_{p^2}(σ), ..., χ_{p^depth}(σ))`.
pub fn cyclotomic_tower(p: u64, depth: u32, a: &BigInt) -> Result<LAdicTrunc> {
    let top = CycloAut::new(p, depth, a)?;
    let mut digits = Vec::with_capacity(depth as usize);
    for j in 1..=depth {
        let level = top.project(j)?;
        if j > 1 && level.project(j - 1)?.a != digits[j as usize - 2] {
            return Err(Error::InternalInconsistency(
                "incompatible projections".into(),
            ));
        }
        digits.push(level.a);
    }
    LAdicTrunc::new(p, digits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_moduli() {
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(FiniteField::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FiniteField::new(5, 1).unwrap().modulus(), &[0, 1]);
        assert!(FiniteField::new(4, 2).is_err());
    }

    #[test]
    fn frobenius_examples() {
        let f8 = FiniteField::new(2, 3).unwrap();
        let t = FqElement::generator(&f8);
        assert_eq!(frobenius(&t), FqElement::from_coeffs(&f8, &[0, 0, 1]));
        assert_eq!(frobenius(&FqElement::zero(&f8)), FqElement::zero(&f8));
        assert_eq!(frobenius(&FqElement::one(&f8)), FqElement::one(&f8));
        let f27 = FiniteField::new(3, 3).unwrap();
        for c in 0..3 {
            let x = FqElement::from_int(&f27, &BigInt::from(c));
            assert_eq!(frobenius(&x), x);
        }
    }

    #[test]
    fn orders_and_lattices() {
        assert_eq!(frobenius_order(2, 3).unwrap(), 3);
        assert_eq!(frobenius_order(7, 1).unwrap(), 1);
        assert_eq!(frobenius_order(3, 2).unwrap(), 2);
        let l = subfield_lattice(3, 2).unwrap();
        assert_eq!(l.fixed_sizes, BTreeMap::from([(1, 3), (2, 9)]));
        assert!(l.is_consistent());
        let l = subfield_lattice(2, 3).unwrap();
        assert_eq!(l.fixed_sizes, BTreeMap::from([(1, 2), (3, 8)]));
        assert!(subfield_lattice(2, 9).is_err());
    }

    #[test]
    fn inverses() {
        let f = FiniteField::new(5, 2).unwrap();
        for i in 1..25 {
            let x = FqElement::from_index(&f, i);
            assert_eq!(x.mul(&x.inverse().unwrap()), FqElement::one(&f));
            assert_eq!(x.index(), i);
        }
        assert!(FqElement::zero(&f).inverse().is_err());
    }

    #[test]
    fn cyclotomic_examples() {
        let s = CycloAut::new(3, 2, &BigInt::from(2)).unwrap();
        assert_eq!(s.character().value(), 2);
        assert_eq!(s.project(1).unwrap().character().value(), 2);
        assert_eq!(CycloAut::identity(3, 4).unwrap().character().value(), 1);
        assert!(CycloAut::new(3, 2, &BigInt::from(6)).is_err());
        assert_eq!(s.order(), 6);
        let t = cyclotomic_tower(3, 4, &BigInt::from(-1)).unwrap();
        assert_eq!(t.digits(), &[2, 8, 26, 80]);
        assert!(t.is_unit() && t.is_compatible());
    }

    #[test]
    fn display() {
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(FqElement::from_coeffs(&f, &[2, 1]).to_string(), "t + 2");
        assert_eq!(FqElement::zero(&f).to_string(), "0");
    }
}

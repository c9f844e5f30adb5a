//! Desk-scale computational number theory around elliptic curves and modular forms.
//!
//! The crate is organised by subject:
//!
//! - [`exactnum`]: big integers and rationals, residue rings, Legendre symbols,
//!   radicals, the Eisenstein integers `Z[rho]` and truncated l-adic integers.
//! - [`matrix2`]: 2x2 integer matrices, Möbius action on the upper half-plane,
//!   fundamental-domain reduction, congruence subgroups and `SL2(Z)\M_n`.
//! - [`ecurve`]: Weierstrass models, invariants, the chord-tangent group law,
//!   reduction types, conductors and Frey curves.
//! - [`apcount`]: point counts over `F_p` and the `A_n` coefficient system.
//! - [`qexp`]: exact q-expansions, Eisenstein series, `Delta`, `j`, Hecke
//!   operators and `dim S_2(Gamma_0(N))`.
//! - [`lattice`]: numeric lattice sums, the Weierstrass `℘` function and
//!   uniformization checks.
//! - [`galois`]: finite fields, Frobenius and cyclotomic characters.
//! - [`classical`]: Pythagorean triples, exponent reduction, the `n = 4` search,
//!   `Z[rho]` congruence lemmas and abc quality.
//!
//! Data-parallel scans go through [`exec::Strategy`]; with the `parallel`
//! feature (on by default) they run on rayon, otherwise sequentially.

pub mod apcount;
pub mod classical;
pub mod ecurve;
pub mod error;
pub mod exactnum;
pub mod exec;
pub mod galois;
pub mod lattice;
pub mod matrix2;
pub mod qexp;

pub use error::{Error, Result};
pub use exactnum::{BigInt, BigRat};

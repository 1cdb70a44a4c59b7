//! Exact computation with additively idempotent semirings, their congruences
//! and prime chains.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod chain;
pub mod closure;
pub mod congruence;
pub mod element;
pub mod error;
pub mod finite;
pub mod fractions;
pub mod lattice;
pub mod laws;
pub mod monomial;
pub mod poly;
pub mod primes;
pub mod sample;
pub mod scalar;
pub mod weight;

pub use congruence::{twisted_product, Congruence, Family, Pair};
pub use element::{Element, Fraction, Ring};
pub use error::{Error, Result};
pub use finite::FiniteSemiring;
pub use poly::{Poly, PolyRing};
pub use scalar::{Base, Scalar};
pub use weight::WeightMatrix;

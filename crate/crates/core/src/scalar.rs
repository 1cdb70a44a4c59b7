//! Exact arithmetic in the base semirings.
//!
//! `IntMax` and `RatMax` are the max-plus semifields over the integers and the
//! rationals; `None` stands for the bottom element `-inf`.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::finite::FiniteSemiring;
use crate::monomial::MonomialRing;

/// A base semiring.
#[derive(Clone, Debug)]
pub enum Base {
    Bool,
    IntMax,
    RatMax,
    Finite(Arc<FiniteSemiring>),
    Monomial(Arc<MonomialRing>),
}

impl PartialEq for Base {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Base::Bool, Base::Bool) | (Base::IntMax, Base::IntMax) | (Base::RatMax, Base::RatMax) => true,
            (Base::Finite(a), Base::Finite(b)) => Arc::ptr_eq(a, b) || a == b,
            (Base::Monomial(a), Base::Monomial(b)) => Arc::ptr_eq(a, b) || a == b,
            _ => false,
        }
    }
}

impl Eq for Base {}

impl Base {
    pub fn name(&self) -> String {
        match self {
            Base::Bool => "b".into(),
            Base::IntMax => "zmax".into(),
            Base::RatMax => "qmax".into(),
            Base::Finite(f) => f.name().to_string(),
            Base::Monomial(m) => m.name().to_string(),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Base::Bool => Scalar::Bool(false),
            Base::IntMax => Scalar::Int(None),
            Base::RatMax => Scalar::Rat(None),
            Base::Finite(f) => Scalar::Finite(f.clone(), f.zero()),
            Base::Monomial(m) => Scalar::Mono(m.clone(), None),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Base::Bool => Scalar::Bool(true),
            Base::IntMax => Scalar::Int(Some(BigInt::zero())),
            Base::RatMax => Scalar::Rat(Some(BigRational::zero())),
            Base::Finite(f) => Scalar::Finite(f.clone(), f.one()),
            Base::Monomial(m) => Scalar::Mono(m.clone(), Some(alloc::vec![BigInt::zero(); m.rank()])),
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (Base::Bool, Scalar::Bool(_))
            | (Base::IntMax, Scalar::Int(_))
            | (Base::RatMax, Scalar::Rat(_)) => true,
            (Base::Finite(f), Scalar::Finite(g, i)) => (Arc::ptr_eq(f, g) || f == g) && *i < f.size(),
            (Base::Monomial(m), Scalar::Mono(n, u)) => {
                (Arc::ptr_eq(m, n) || m == n) && u.as_ref().map_or(true, |u| m.contains(u))
            }
            _ => false,
        }
    }

    pub fn check(&self, s: &Scalar) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::RingMismatch { expected: self.name(), found: s.kind() })
        }
    }

    /// Every nonzero element is invertible.
    pub fn is_semifield(&self) -> bool {
        match self {
            Base::Bool | Base::IntMax | Base::RatMax => true,
            Base::Finite(f) => {
                (0..f.size()).all(|a| a == f.zero() || (0..f.size()).any(|b| f.mul(a, b) == f.one()))
            }
            Base::Monomial(m) => m.is_semifield(),
        }
    }

    /// Cancellative and totally ordered.
    pub fn is_domain(&self) -> bool {
        match self {
            Base::Finite(f) => f.domain_report().is_domain,
            _ => true,
        }
    }

    /// All elements when the carrier is finite.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Base::Bool => Some(alloc::vec![Scalar::Bool(false), Scalar::Bool(true)]),
            Base::Finite(f) => Some((0..f.size()).map(|i| Scalar::Finite(f.clone(), i)).collect()),
            _ => None,
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// An element of a base semiring.
#[derive(Clone, Debug)]
pub enum Scalar {
    Bool(bool),
    Int(Option<BigInt>),
    Rat(Option<BigRational>),
    Finite(Arc<FiniteSemiring>, usize),
    Mono(Arc<MonomialRing>, Option<Vec<BigInt>>),
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Bool(a), Scalar::Bool(b)) => a == b,
            (Scalar::Int(a), Scalar::Int(b)) => a == b,
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            (Scalar::Finite(f, a), Scalar::Finite(g, b)) => a == b && (Arc::ptr_eq(f, g) || f == g),
            (Scalar::Mono(m, a), Scalar::Mono(n, b)) => a == b && (Arc::ptr_eq(m, n) || m == n),
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl Scalar {
    pub fn int(v: i64) -> Self {
        Scalar::Int(Some(v.into()))
    }

    pub fn rat(n: i64, d: i64) -> Self {
        Scalar::Rat(Some(BigRational::new(n.into(), d.into())))
    }

    pub fn mono(ring: &Arc<MonomialRing>, u: &[i64]) -> Self {
        Scalar::Mono(ring.clone(), Some(u.iter().map(|&e| BigInt::from(e)).collect()))
    }

    pub fn base(&self) -> Base {
        match self {
            Scalar::Bool(_) => Base::Bool,
            Scalar::Int(_) => Base::IntMax,
            Scalar::Rat(_) => Base::RatMax,
            Scalar::Finite(f, _) => Base::Finite(f.clone()),
            Scalar::Mono(m, _) => Base::Monomial(m.clone()),
        }
    }

    pub fn kind(&self) -> String {
        self.base().name()
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Bool(b) => !b,
            Scalar::Int(v) => v.is_none(),
            Scalar::Rat(v) => v.is_none(),
            Scalar::Finite(f, i) => *i == f.zero(),
            Scalar::Mono(_, u) => u.is_none(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.base().one()
    }

    fn mismatch(&self, other: &Scalar) -> Error {
        Error::TagMismatch { left: self.kind(), right: other.kind() }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Bool(a), Scalar::Bool(b)) => Scalar::Bool(*a || *b),
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(max_opt(a, b)),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(max_opt(a, b)),
            (Scalar::Finite(f, a), Scalar::Finite(g, b)) if Arc::ptr_eq(f, g) || f == g => {
                Scalar::Finite(f.clone(), f.add(*a, *b))
            }
            (Scalar::Mono(m, a), Scalar::Mono(n, b)) if Arc::ptr_eq(m, n) || m == n => {
                let v = match (a, b) {
                    (None, x) | (x, None) => x.clone(),
                    (Some(u), Some(w)) => {
                        if m.compare(u, w) == Ordering::Less {
                            Some(w.clone())
                        } else {
                            Some(u.clone())
                        }
                    }
                };
                Scalar::Mono(m.clone(), v)
            }
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Bool(a), Scalar::Bool(b)) => Scalar::Bool(*a && *b),
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(match (a, b) {
                (Some(x), Some(y)) => Some(x + y),
                _ => None,
            }),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(match (a, b) {
                (Some(x), Some(y)) => Some(x + y),
                _ => None,
            }),
            (Scalar::Finite(f, a), Scalar::Finite(g, b)) if Arc::ptr_eq(f, g) || f == g => {
                Scalar::Finite(f.clone(), f.mul(*a, *b))
            }
            (Scalar::Mono(m, a), Scalar::Mono(n, b)) if Arc::ptr_eq(m, n) || m == n => {
                Scalar::Mono(
                    m.clone(),
                    match (a, b) {
                        (Some(u), Some(w)) => Some(u.iter().zip(w).map(|(x, y)| x + y).collect()),
                        _ => None,
                    },
                )
            }
            _ => return Err(self.mismatch(other)),
        })
    }

    /// `self <= other` in the natural order (`self + other == other`).
    pub fn leq(&self, other: &Scalar) -> Result<bool> {
        Ok(self.add(other)? == *other)
    }

    /// Multiplicative inverse, when it exists.
    pub fn inverse(&self) -> Result<Scalar> {
        let none = || Error::Invalid(alloc::format!("{self} has no multiplicative inverse"));
        match self {
            Scalar::Bool(true) => Ok(self.clone()),
            Scalar::Int(Some(v)) => Ok(Scalar::Int(Some(-v))),
            Scalar::Rat(Some(v)) => Ok(Scalar::Rat(Some(-v))),
            Scalar::Finite(f, a) => (0..f.size())
                .find(|&b| f.mul(*a, b) == f.one())
                .map(|b| Scalar::Finite(f.clone(), b))
                .ok_or_else(none),
            Scalar::Mono(m, Some(u)) => {
                let inv: Vec<BigInt> = u.iter().map(|e| -e).collect();
                if m.contains(&inv) {
                    Ok(Scalar::Mono(m.clone(), Some(inv)))
                } else {
                    Err(none())
                }
            }
            _ => Err(Error::ZeroDenominator),
        }
    }

    /// `self^n` for `n >= 0`.
    pub fn pow(&self, n: u32) -> Result<Scalar> {
        let mut acc = self.base().one();
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `self^n` for any integer `n`; negative powers need an inverse.
    pub fn zpow(&self, n: i64) -> Result<Scalar> {
        match self {
            Scalar::Int(Some(v)) => Ok(Scalar::Int(Some(v * BigInt::from(n)))),
            Scalar::Rat(Some(v)) => Ok(Scalar::Rat(Some(v * BigRational::from_integer(n.into())))),
            Scalar::Mono(m, Some(u)) => {
                let w: Vec<BigInt> = u.iter().map(|e| e * BigInt::from(n)).collect();
                if m.contains(&w) {
                    Ok(Scalar::Mono(m.clone(), Some(w)))
                } else {
                    Err(Error::Invalid("negative power outside the domain".into()))
                }
            }
            _ if n >= 0 => self.pow(n as u32),
            _ => self.inverse()?.pow(n.unsigned_abs() as u32),
        }
    }
}

fn max_opt<T: Ord + Clone>(a: &Option<T>, b: &Option<T>) -> Option<T> {
    match (a, b) {
        (None, x) | (x, None) => x.clone(),
        (Some(x), Some(y)) => Some(if x >= y { x.clone() } else { y.clone() }),
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Bool(b) => f.write_str(if *b { "1" } else { "0" }),
            Scalar::Int(None) | Scalar::Rat(None) => f.write_str("-inf"),
            Scalar::Int(Some(v)) => write!(f, "{v}"),
            Scalar::Rat(Some(v)) => write!(f, "{v}"),
            Scalar::Finite(s, i) => f.write_str(s.label(*i)),
            Scalar::Mono(_, None) => f.write_str("0"),
            Scalar::Mono(_, Some(u)) => {
                let mut first = true;
                for (i, e) in u.iter().enumerate() {
                    if e.is_zero() {
                        continue;
                    }
                    if !first {
                        f.write_str("*")?;
                    }
                    first = false;
                    if e == &BigInt::from(1) {
                        write!(f, "t{}", i + 1)?;
                    } else {
                        write!(f, "t{}^{}", i + 1, e)?;
                    }
                }
                if first {
                    f.write_str("1")?;
                }
                Ok(())
            }
        }
    }
}

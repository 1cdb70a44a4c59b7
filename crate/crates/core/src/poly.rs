//! Formal polynomial and Laurent polynomial semirings over a base.
//!
//! A polynomial is a finite map from exponent vectors to nonzero
//! coefficients. Distinct supports are distinct elements even when they
//! define the same function.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Base, Scalar};

pub type Exponent = Vec<BigInt>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    pub base: Base,
    pub nvars: usize,
    pub laurent: bool,
}

impl PolyRing {
    pub fn new(base: Base, nvars: usize, laurent: bool) -> Self {
        PolyRing { base, nvars, laurent }
    }

    pub fn name(&self) -> String {
        let vars: Vec<String> = (0..self.nvars).map(|i| var_name(self.nvars, i)).collect();
        if self.laurent {
            alloc::format!("{}({})", self.base.name(), vars.join(","))
        } else {
            alloc::format!("{}[{}]", self.base.name(), vars.join(","))
        }
    }

    /// The same ring without one variable.
    pub fn drop_var(&self, _var: usize) -> PolyRing {
        PolyRing { base: self.base.clone(), nvars: self.nvars - 1, laurent: self.laurent }
    }

    pub fn check_exponent(&self, u: &[BigInt]) -> Result<()> {
        if u.len() != self.nvars {
            return Err(Error::BadExponent(alloc::format!(
                "expected {} entries, found {}",
                self.nvars,
                u.len()
            )));
        }
        if !self.laurent && u.iter().any(Signed::is_negative) {
            return Err(Error::BadExponent("negative exponent outside Laurent mode".into()));
        }
        Ok(())
    }
}

/// Printed name of variable `i` in a ring with `n` variables.
pub fn var_name(n: usize, i: usize) -> String {
    if n <= 3 {
        String::from(["x", "y", "z"][i])
    } else {
        alloc::format!("x{}", i + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    ring: PolyRing,
    terms: BTreeMap<Exponent, Scalar>,
}

impl Poly {
    pub fn zero(ring: &PolyRing) -> Self {
        Poly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &PolyRing) -> Self {
        Self::constant(ring, ring.base.one()).expect("one belongs to the base")
    }

    pub fn constant(ring: &PolyRing, c: Scalar) -> Result<Self> {
        Self::monomial(ring, alloc::vec![BigInt::zero(); ring.nvars], c)
    }

    pub fn monomial(ring: &PolyRing, u: Exponent, c: Scalar) -> Result<Self> {
        ring.base.check(&c)?;
        ring.check_exponent(&u)?;
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(u, c);
        }
        Ok(Poly { ring: ring.clone(), terms })
    }

    /// `x_var^e` with unit coefficient.
    pub fn var_power(ring: &PolyRing, var: usize, e: i64) -> Result<Self> {
        let mut u = alloc::vec![BigInt::zero(); ring.nvars];
        u[var] = e.into();
        Self::monomial(ring, u, ring.base.one())
    }

    pub fn from_terms(ring: &PolyRing, terms: impl IntoIterator<Item = (Exponent, Scalar)>) -> Result<Self> {
        let mut p = Poly::zero(ring);
        for (u, c) in terms {
            ring.check_exponent(&u)?;
            ring.base.check(&c)?;
            p.add_term(u, c)?;
        }
        Ok(p)
    }

    fn add_term(&mut self, u: Exponent, c: Scalar) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.get_mut(&u) {
            Some(existing) => *existing = existing.add(&c)?,
            None => {
                self.terms.insert(u, c);
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(self.ring.base.zero()),
            1 => {
                let (u, c) = self.terms.iter().next()?;
                u.iter().all(Zero::is_zero).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn check_same_ring(&self, other: &Poly) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch { expected: self.ring.name(), found: other.ring.name() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (u, c) in &other.terms {
            out.add_term(u.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_same_ring(other)?;
        let mut out = Poly::zero(&self.ring);
        for (u, a) in &self.terms {
            for (w, b) in &other.terms {
                let e: Exponent = u.iter().zip(w).map(|(x, y)| x + y).collect();
                out.add_term(e, a.mul(b)?)?;
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Result<Poly> {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiply every coefficient by a scalar.
    pub fn scale(&self, c: &Scalar) -> Result<Poly> {
        let mut out = Poly::zero(&self.ring);
        for (u, a) in &self.terms {
            out.add_term(u.clone(), a.mul(c)?)?;
        }
        Ok(out)
    }

    /// `self <= other` in the natural order.
    pub fn leq(&self, other: &Poly) -> Result<bool> {
        Ok(other.add(self)? == *other)
    }

    /// Substitute base scalars for some variables and keep the others.
    /// Assigned variables end up with exponent zero.
    pub fn evaluate(&self, assignment: &[Option<Scalar>]) -> Result<Poly> {
        if assignment.len() != self.ring.nvars {
            return Err(Error::Invalid(alloc::format!(
                "assignment has {} entries for {} variables",
                assignment.len(),
                self.ring.nvars
            )));
        }
        for s in assignment.iter().flatten() {
            self.ring.base.check(s)?;
        }
        let mut out = Poly::zero(&self.ring);
        'terms: for (u, c) in &self.terms {
            let mut coef = c.clone();
            let mut e = u.clone();
            for (var, s) in assignment.iter().enumerate() {
                let Some(s) = s else { continue };
                let k = &u[var];
                if k.is_zero() {
                    continue;
                }
                if s.is_zero() {
                    if k.is_negative() {
                        return Err(Error::NegativeExponentAtZero { var });
                    }
                    continue 'terms;
                }
                coef = coef.mul(&scalar_pow(s, k)?)?;
                e[var] = BigInt::zero();
            }
            out.add_term(e, coef)?;
        }
        Ok(out)
    }

    /// Group terms by the exponent of `var`; each coefficient lives in the
    /// ring without `var`.
    pub fn coefficients_in(&self, var: usize) -> BTreeMap<BigInt, Poly> {
        let sub = self.ring.drop_var(var);
        let mut out: BTreeMap<BigInt, Poly> = BTreeMap::new();
        for (u, c) in &self.terms {
            let mut w = u.clone();
            let k = w.remove(var);
            out.entry(k)
                .or_insert_with(|| Poly::zero(&sub))
                .terms
                .insert(w, c.clone());
        }
        out
    }

    /// Inverse of [`Poly::coefficients_in`] for a single coefficient:
    /// embed a polynomial of the smaller ring at `x_var^k`.
    pub fn embed(sub: &Poly, ring: &PolyRing, var: usize, k: &BigInt) -> Result<Poly> {
        if sub.ring.nvars + 1 != ring.nvars || sub.ring.base != ring.base {
            return Err(Error::RingMismatch { expected: ring.name(), found: sub.ring.name() });
        }
        let mut out = Poly::zero(ring);
        for (u, c) in &sub.terms {
            let mut w = u.clone();
            w.insert(var, k.clone());
            ring.check_exponent(&w)?;
            out.terms.insert(w, c.clone());
        }
        Ok(out)
    }

    /// Smallest and largest exponent of `var` over the support.
    pub fn exponent_range(&self, var: usize) -> Option<(BigInt, BigInt)> {
        let mut it = self.terms.keys().map(|u| &u[var]);
        let first = it.next()?.clone();
        Some(it.fold((first.clone(), first), |(lo, hi), e| {
            (if *e < lo { e.clone() } else { lo }, if *e > hi { e.clone() } else { hi })
        }))
    }

    /// Map every coefficient through `f` into another base, dropping zeros.
    pub fn map_coefficients(&self, ring: &PolyRing, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<Poly> {
        if ring.nvars != self.ring.nvars || ring.laurent != self.ring.laurent {
            return Err(Error::RingMismatch { expected: ring.name(), found: self.ring.name() });
        }
        let mut out = Poly::zero(ring);
        for (u, c) in &self.terms {
            let d = f(c)?;
            ring.base.check(&d)?;
            out.add_term(u.clone(), d)?;
        }
        Ok(out)
    }

    /// Terms in descending graded-lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&Exponent, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex(b.0, a.0));
        v
    }
}

/// Graded lexicographic comparison of exponent vectors.
pub fn grlex(a: &[BigInt], b: &[BigInt]) -> Ordering {
    let da: BigInt = a.iter().sum();
    let db: BigInt = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// `s^k` for an arbitrary-precision integer exponent.
pub fn scalar_pow(s: &Scalar, k: &BigInt) -> Result<Scalar> {
    match s {
        Scalar::Int(Some(v)) => Ok(Scalar::Int(Some(v * k))),
        Scalar::Rat(Some(v)) => Ok(Scalar::Rat(Some(v * num_rational::BigRational::from_integer(k.clone())))),
        Scalar::Mono(m, Some(u)) => {
            let w: Vec<BigInt> = u.iter().map(|e| e * k).collect();
            if m.contains(&w) {
                Ok(Scalar::Mono(m.clone(), Some(w)))
            } else {
                Err(Error::Invalid(alloc::format!("{s} has no inverse in {}", m.name())))
            }
        }
        _ if k.is_zero() => Ok(s.base().one()),
        Scalar::Bool(_) | Scalar::Int(None) | Scalar::Rat(None) | Scalar::Mono(_, None) => {
            if k.is_negative() {
                s.inverse()?;
            }
            Ok(s.clone())
        }
        Scalar::Finite(..) => {
            let base = if k.is_negative() { s.inverse()? } else { s.clone() };
            let mut n = k
                .abs()
                .to_u64()
                .ok_or_else(|| Error::Invalid("exponent too large for a finite carrier".into()))?;
            let mut acc = s.base().one();
            let mut sq = base;
            while n > 0 {
                if n & 1 == 1 {
                    acc = acc.mul(&sq)?;
                }
                sq = sq.mul(&sq)?;
                n >>= 1;
            }
            Ok(acc)
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "{}", self.ring.base.zero());
        }
        let n = self.ring.nvars;
        for (i, (u, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (j, e) in u.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                if e.is_one() {
                    factors.push(var_name(n, j));
                } else {
                    factors.push(alloc::format!("{}^{}", var_name(n, j), e));
                }
            }
            if factors.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{c}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

//! Rings and their elements, unified so congruences can be stated uniformly.

use alloc::string::{String, ToString};
use core::fmt;

use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};
use crate::scalar::{Base, Scalar};

/// A semiring that congruences can live on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ring {
    Base(Base),
    Poly(PolyRing),
    /// Semifield of fractions of a cancellative base.
    Frac(Base),
}

impl Ring {
    /// The semifield of fractions of `base`; fails unless `base` is cancellative.
    pub fn fractions(base: Base) -> Result<Ring> {
        let ok = match &base {
            Base::Finite(f) => f.domain_report().cancellative,
            _ => true,
        };
        if !ok {
            return Err(Error::NotCancellative(base.name()));
        }
        Ok(Ring::Frac(base))
    }

    pub fn name(&self) -> String {
        match self {
            Ring::Base(b) => b.name(),
            Ring::Poly(p) => p.name(),
            Ring::Frac(b) => alloc::format!("Frac({})", b.name()),
        }
    }

    pub fn base(&self) -> &Base {
        match self {
            Ring::Base(b) | Ring::Frac(b) => b,
            Ring::Poly(p) => &p.base,
        }
    }

    pub fn zero(&self) -> Element {
        match self {
            Ring::Base(b) => Element::Scalar(b.zero()),
            Ring::Poly(p) => Element::Poly(Poly::zero(p)),
            Ring::Frac(b) => Element::Frac(Fraction { num: b.zero(), den: b.one() }),
        }
    }

    pub fn one(&self) -> Element {
        match self {
            Ring::Base(b) => Element::Scalar(b.one()),
            Ring::Poly(p) => Element::Poly(Poly::one(p)),
            Ring::Frac(b) => Element::Frac(Fraction { num: b.one(), den: b.one() }),
        }
    }

    pub fn contains(&self, e: &Element) -> bool {
        match (self, e) {
            (Ring::Base(b), Element::Scalar(s)) => b.contains(s),
            (Ring::Poly(r), Element::Poly(p)) => p.ring() == r,
            (Ring::Frac(b), Element::Frac(q)) => b.contains(&q.num) && b.contains(&q.den),
            _ => false,
        }
    }

    pub fn check(&self, e: &Element) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::RingMismatch { expected: self.name(), found: e.ring_name() })
        }
    }

    /// Embed a constant of the base.
    pub fn constant(&self, c: Scalar) -> Result<Element> {
        match self {
            Ring::Base(b) => {
                b.check(&c)?;
                Ok(Element::Scalar(c))
            }
            Ring::Poly(p) => Ok(Element::Poly(Poly::constant(p, c)?)),
            Ring::Frac(b) => {
                b.check(&c)?;
                Ok(Element::Frac(Fraction { num: c, den: b.one() }))
            }
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// An element `num / den` of a semifield of fractions, stored unreduced.
#[derive(Clone, Debug)]
pub struct Fraction {
    pub num: Scalar,
    pub den: Scalar,
}

impl Fraction {
    pub fn new(num: Scalar, den: Scalar) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        num.add(&den)?;
        Ok(Fraction { num, den })
    }

    pub fn add(&self, other: &Fraction) -> Result<Fraction> {
        Ok(Fraction {
            num: self.num.mul(&other.den)?.add(&other.num.mul(&self.den)?)?,
            den: self.den.mul(&other.den)?,
        })
    }

    pub fn mul(&self, other: &Fraction) -> Result<Fraction> {
        Ok(Fraction { num: self.num.mul(&other.num)?, den: self.den.mul(&other.den)? })
    }

    pub fn inverse(&self) -> Result<Fraction> {
        Fraction::new(self.den.clone(), self.num.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Cross-multiplication equality.
    pub fn equals(&self, other: &Fraction) -> Result<bool> {
        Ok(self.num.mul(&other.den)? == other.num.mul(&self.den)?)
    }
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other).unwrap_or(false)
    }
}

impl Eq for Fraction {}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.den.to_string();
        if den.contains('*') {
            write!(f, "{} / ({den})", self.num)
        } else {
            write!(f, "{} / {den}", self.num)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Scalar(Scalar),
    Poly(Poly),
    Frac(Fraction),
}

impl Element {
    pub fn ring(&self) -> Ring {
        match self {
            Element::Scalar(s) => Ring::Base(s.base()),
            Element::Poly(p) => Ring::Poly(p.ring().clone()),
            Element::Frac(q) => Ring::Frac(q.num.base()),
        }
    }

    pub fn ring_name(&self) -> String {
        self.ring().name()
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::Scalar(s) => s.is_zero(),
            Element::Poly(p) => p.is_zero(),
            Element::Frac(q) => q.is_zero(),
        }
    }

    fn mismatch(&self, other: &Element) -> Error {
        Error::RingMismatch { expected: self.ring_name(), found: other.ring_name() }
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        Ok(match (self, other) {
            (Element::Scalar(a), Element::Scalar(b)) => Element::Scalar(a.add(b)?),
            (Element::Poly(a), Element::Poly(b)) => Element::Poly(a.add(b)?),
            (Element::Frac(a), Element::Frac(b)) => Element::Frac(a.add(b)?),
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        Ok(match (self, other) {
            (Element::Scalar(a), Element::Scalar(b)) => Element::Scalar(a.mul(b)?),
            (Element::Poly(a), Element::Poly(b)) => Element::Poly(a.mul(b)?),
            (Element::Frac(a), Element::Frac(b)) => Element::Frac(a.mul(b)?),
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn pow(&self, n: u32) -> Result<Element> {
        let mut acc = self.ring().one();
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `self <= other` in the natural order.
    pub fn leq(&self, other: &Element) -> Result<bool> {
        Ok(self.add(other)? == *other)
    }

    pub fn as_scalar(&self) -> Option<&Scalar> {
        match self {
            Element::Scalar(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match self {
            Element::Poly(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_frac(&self) -> Option<&Fraction> {
        match self {
            Element::Frac(q) => Some(q),
            _ => None,
        }
    }
}

impl From<Scalar> for Element {
    fn from(s: Scalar) -> Self {
        Element::Scalar(s)
    }
}

impl From<Poly> for Element {
    fn from(p: Poly) -> Self {
        Element::Poly(p)
    }
}

impl From<Fraction> for Element {
    fn from(q: Fraction) -> Self {
        Element::Frac(q)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Scalar(s) => write!(f, "{s}"),
            Element::Poly(p) => write!(f, "{p}"),
            Element::Frac(q) => write!(f, "{q}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialRing;
    use alloc::sync::Arc;

    fn lex2() -> Arc<MonomialRing> {
        Arc::new(MonomialRing::lex(2, false))
    }

    #[test]
    fn fraction_arithmetic() {
        let m = lex2();
        let x = Scalar::mono(&m, &[1, 0]);
        let y = Scalar::mono(&m, &[0, 1]);
        let zero = Base::Monomial(m.clone()).zero();
        let one = Base::Monomial(m.clone()).one();
        let a = Fraction::new(x.clone(), y.clone()).unwrap();
        let b = Fraction::new(y.clone(), x.clone()).unwrap();
        assert_eq!(a.mul(&b).unwrap(), Fraction::new(one.clone(), one.clone()).unwrap());
        let z = Fraction::new(zero.clone(), one.clone()).unwrap();
        assert_eq!(a.add(&z).unwrap(), a);
        assert_eq!(a.add(&a).unwrap(), a);
        assert!(a != b);
        let x2 = x.mul(&x).unwrap();
        let xy = x.mul(&y).unwrap();
        assert_eq!(a, Fraction::new(x2, xy).unwrap());
        assert!(matches!(Fraction::new(x, zero), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn fractions_need_cancellative_base() {
        let t3 = Base::Finite(Arc::new(crate::finite::t3()));
        assert!(matches!(Ring::fractions(t3), Err(Error::NotCancellative(_))));
        assert!(Ring::fractions(Base::Monomial(lex2())).is_ok());
    }
}

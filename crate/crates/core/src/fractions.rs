//! Semifields of fractions, principal congruences and archimedean classes.

use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::congruence::{class_not_dominant, Congruence, Family, Pair};
use crate::element::{Element, Fraction, Ring};
use crate::error::{Error, Result};
use crate::scalar::{Base, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FracOp {
    Add,
    Mul,
}

pub fn frac_arith(op: FracOp, a: &Fraction, b: &Fraction) -> Result<Fraction> {
    match op {
        FracOp::Add => a.add(b),
        FracOp::Mul => a.mul(b),
    }
}

pub fn frac_equal(a: &Fraction, b: &Fraction) -> Result<bool> {
    a.equals(b)
}

/// Archimedean class of `b / a` for two nonzero scalars.
fn scalar_ratio_class(a: &Scalar, b: &Scalar) -> Result<usize> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    match (a, b) {
        (Scalar::Bool(_), Scalar::Bool(_)) => Ok(0),
        (Scalar::Int(Some(x)), Scalar::Int(Some(y))) => Ok(usize::from(x != y)),
        (Scalar::Rat(Some(x)), Scalar::Rat(Some(y))) => Ok(usize::from(x != y)),
        (Scalar::Mono(m, Some(u)), Scalar::Mono(_, Some(v))) => {
            a.add(b)?;
            let d: Vec<BigInt> = v.iter().zip(u).map(|(v, u)| v - u).collect();
            Ok(m.arch_class(&d))
        }
        (Scalar::Finite(f, _), Scalar::Finite(..)) if f.is_boolean() => {
            a.add(b)?;
            Ok(0)
        }
        (Scalar::Finite(f, _), _) => Err(Error::UnsupportedFamily(f.name().into())),
        _ => Err(Error::TagMismatch { left: a.kind(), right: b.kind() }),
    }
}

/// Archimedean class of `b / a`: 0 when the ratio is a unit of the identity
/// class, otherwise the 1-based position of the dominant coordinate.
pub fn ratio_class(a: &Element, b: &Element) -> Result<usize> {
    match (a, b) {
        (Element::Scalar(a), Element::Scalar(b)) => scalar_ratio_class(a, b),
        (Element::Frac(a), Element::Frac(b)) => {
            if a.is_zero() || b.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            scalar_ratio_class(&b.den.mul(&a.num)?, &b.num.mul(&a.den)?)
        }
        _ => Err(Error::Unsupported(alloc::format!("archimedean class in {}", a.ring_name()))),
    }
}

/// Archimedean class of a nonzero element.
pub fn arch_class(x: &Element) -> Result<usize> {
    ratio_class(&x.ring().one(), x)
}

fn supported(base: &Base) -> Result<()> {
    match base {
        Base::Bool | Base::IntMax | Base::RatMax | Base::Monomial(_) => Ok(()),
        Base::Finite(f) if f.is_boolean() => Ok(()),
        _ => Err(Error::UnsupportedFamily(base.name())),
    }
}

/// `⟨(1, generator)⟩` in a registered semifield domain, or its restriction
/// to a registered monomial domain.
pub fn principal(ring: Ring, generator: Scalar) -> Result<Congruence> {
    match &ring {
        Ring::Base(b) | Ring::Frac(b) => {
            supported(b)?;
            b.check(&generator)?;
        }
        Ring::Poly(_) => return Err(Error::UnsupportedFamily(ring.name())),
    }
    if generator.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Congruence::raw(ring, Family::Principal(generator)))
}

/// Decide `(a, b) ∈ ⟨(1, x)⟩` directly from archimedean classes.
pub fn principal_member(x: &Element, p: &Pair) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    x.ring().check(&p.lhs)?;
    x.ring().check(&p.rhs)?;
    if p.lhs.is_zero() || p.rhs.is_zero() {
        return Ok(p.lhs.is_zero() && p.rhs.is_zero());
    }
    Ok(class_not_dominant(ratio_class(&p.lhs, &p.rhs)?, arch_class(x)?))
}

/// Extend a congruence with trivial kernel on a cancellative base to its
/// semifield of fractions.
pub fn extend(inner: Arc<Congruence>) -> Result<Congruence> {
    let Ring::Base(b) = inner.ring() else {
        return Err(Error::Unsupported(alloc::format!("fractions of {}", inner.ring().name())));
    };
    let ring = Ring::fractions(b.clone())?;
    if !inner.has_trivial_kernel()? {
        return Err(Error::NontrivialKernel(alloc::format!("{inner}")));
    }
    Ok(match inner.family() {
        Family::Trivial => Congruence::trivial(ring),
        _ => Congruence::raw(ring, Family::FracExtension(inner)),
    })
}

/// Membership in the extension of `inner` without building it.
pub fn extend_member(inner: &Arc<Congruence>, p: &Pair) -> Result<bool> {
    extend(inner.clone())?.member(p)
}

/// Restriction of a congruence on `Frac(R)` to `R`.
pub fn restrict_to_domain(outer: Arc<Congruence>) -> Result<Congruence> {
    let Ring::Frac(b) = outer.ring() else {
        return Err(Error::Invalid(alloc::format!("{} is not a semifield of fractions", outer.ring().name())));
    };
    let ring = Ring::Base(b.clone());
    Ok(match outer.family() {
        Family::Trivial => Congruence::trivial(ring),
        Family::Improper => Congruence::improper(ring),
        _ => Congruence::raw(ring, Family::Restriction { inner: outer, var: None }),
    })
}

/// Number of nontrivial archimedean classes.
pub fn semifield_dim(base: &Base) -> Result<usize> {
    supported(base)?;
    Ok(match base {
        Base::Bool | Base::Finite(_) => 0,
        Base::IntMax | Base::RatMax => 1,
        Base::Monomial(m) => m.rank(),
    })
}

/// A representative of each nontrivial archimedean class, most dominant
/// first. Generators of the principal congruences of the semifield.
pub fn class_representatives(base: &Base) -> Result<Vec<Scalar>> {
    supported(base)?;
    Ok(match base {
        Base::Bool | Base::Finite(_) => Vec::new(),
        Base::IntMax => alloc::vec![Scalar::int(1)],
        Base::RatMax => alloc::vec![Scalar::rat(1, 1)],
        Base::Monomial(m) => (0..m.rank())
            .map(|i| Scalar::Mono(m.clone(), Some(m.generator(i))))
            .collect(),
    })
}

/// The chain of congruences with trivial kernel, `Δ ⊂ ... ⊂ ⟨(1, g_1)⟩`,
/// on `ring` (a registered semifield or domain).
pub fn principal_chain(ring: &Ring) -> Result<Vec<Congruence>> {
    let base = ring.base().clone();
    let mut reps = class_representatives(&base)?;
    reps.reverse();
    let mut chain = alloc::vec![Congruence::trivial(ring.clone())];
    for g in reps {
        chain.push(principal(ring.clone(), g)?);
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialRing;

    fn lexsf2() -> Arc<MonomialRing> {
        Arc::new(MonomialRing::lex(2, true))
    }

    fn m(r: &Arc<MonomialRing>, u: &[i64]) -> Element {
        Element::Scalar(Scalar::mono(r, u))
    }

    /// Oracle: search for `n` with `x^-n <= y <= x^n`, `|n| <= bound`.
    fn brute(x: &Element, y: &Element, bound: u32) -> bool {
        let inv = match x {
            Element::Scalar(s) => Element::Scalar(s.inverse().unwrap()),
            _ => unreachable!(),
        };
        (0..=bound).any(|n| {
            let hi = x.pow(n).unwrap();
            let lo = inv.pow(n).unwrap();
            let (lo, hi) = if lo.leq(&hi).unwrap() { (lo, hi) } else { (hi, lo) };
            lo.leq(y).unwrap() && y.leq(&hi).unwrap()
        })
    }

    #[test]
    fn lex_semifield_principal() {
        let r = lexsf2();
        let ring = Ring::Base(Base::Monomial(r.clone()));
        let (x, y, one) = (m(&r, &[1, 0]), m(&r, &[0, 1]), ring.one());
        assert!(principal_member(&x, &Pair::new(one.clone(), y.clone())).unwrap());
        assert!(!principal_member(&y, &Pair::new(one.clone(), x.clone())).unwrap());
        assert!(brute(&x, &y, 50));
        assert!(!brute(&y, &x, 50));
        let c = principal(ring.clone(), Scalar::mono(&r, &[0, 1])).unwrap();
        assert!(c.contains(&one, &y).unwrap());
        assert!(!c.contains(&one, &x).unwrap());
    }

    #[test]
    fn unit_generator_is_trivial() {
        let r = lexsf2();
        let ring = Ring::Base(Base::Monomial(r.clone()));
        let c = principal(ring.clone(), Scalar::mono(&r, &[0, 0])).unwrap();
        assert!(c.contains(&m(&r, &[2, -1]), &m(&r, &[2, -1])).unwrap());
        assert!(!c.contains(&m(&r, &[2, -1]), &m(&r, &[2, 0])).unwrap());
    }

    #[test]
    fn qmax_nonunit_collapses() {
        let ring = Ring::Base(Base::RatMax);
        let x = Element::Scalar(Scalar::rat(1, 2));
        for q in [Scalar::rat(-7, 3), Scalar::rat(100, 1), Scalar::rat(0, 1)] {
            assert!(principal_member(&x, &Pair::new(ring.one(), Element::Scalar(q))).unwrap());
        }
        assert!(!principal_member(&x, &Pair::new(ring.one(), ring.zero())).unwrap());
    }

    #[test]
    fn dims() {
        assert_eq!(semifield_dim(&Base::Bool).unwrap(), 0);
        assert_eq!(semifield_dim(&Base::IntMax).unwrap(), 1);
        assert_eq!(semifield_dim(&Base::RatMax).unwrap(), 1);
        assert_eq!(semifield_dim(&Base::Monomial(lexsf2())).unwrap(), 2);
        let t3 = Base::Finite(Arc::new(crate::finite::t3()));
        assert!(matches!(semifield_dim(&t3), Err(Error::UnsupportedFamily(_))));
    }

    #[test]
    fn extension_of_trivial_is_fraction_equality() {
        let r = Arc::new(MonomialRing::lex(2, false));
        let base = Base::Monomial(r.clone());
        let c = Arc::new(Congruence::trivial(Ring::Base(base)));
        let (x, y) = (Scalar::mono(&r, &[1, 0]), Scalar::mono(&r, &[0, 1]));
        let a = Fraction::new(x.clone(), y.clone()).unwrap();
        let b = Fraction::new(x.mul(&x).unwrap(), x.mul(&y).unwrap()).unwrap();
        let e = Fraction::new(y, x).unwrap();
        assert!(extend_member(&c, &Pair::new(a.clone(), b)).unwrap());
        assert!(!extend_member(&c, &Pair::new(a, e)).unwrap());
    }

    #[test]
    fn extension_needs_trivial_kernel() {
        let t = Arc::new(crate::finite::t3());
        let p = crate::closure::Partition::from_labels(&[0, 1, 1]);
        let c = Arc::new(Congruence::finite(t, p).unwrap());
        assert!(extend(c).is_err());
    }

    #[test]
    fn round_trip_on_domain() {
        let r = Arc::new(MonomialRing::lex(2, false));
        let ring = Ring::Base(Base::Monomial(r.clone()));
        let c = Arc::new(principal(ring.clone(), Scalar::mono(&r, &[0, 1])).unwrap());
        let back = restrict_to_domain(Arc::new(extend(c.clone()).unwrap())).unwrap();
        for a in [[0, 0], [1, 0], [0, 3], [2, 5]] {
            for b in [[0, 0], [1, 0], [0, 1], [1, 7]] {
                let p = Pair::new(m(&r, &a), m(&r, &b));
                assert_eq!(back.member(&p).unwrap(), c.member(&p).unwrap());
            }
        }
    }
}

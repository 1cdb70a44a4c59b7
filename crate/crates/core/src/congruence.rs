//! Pairs, twisted products and the uniform congruence interface.
//!
//! A [`Congruence`] is a ring together with a [`Family`] whose membership
//! predicate is total and exact. Family/ring combinations without a decision
//! procedure are rejected when the congruence is built, never approximated.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::closure::Partition;
use crate::element::{Element, Fraction, Ring};
use crate::error::{Error, Result};
use crate::finite::FiniteSemiring;
use crate::fractions::ratio_class;
use crate::poly::{Poly, PolyRing};
use crate::scalar::{Base, Scalar};
use crate::weight::WeightMatrix;

/// An ordered pair of elements of one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pair {
    pub lhs: Element,
    pub rhs: Element,
}

impl Pair {
    pub fn new(lhs: impl Into<Element>, rhs: impl Into<Element>) -> Self {
        Pair { lhs: lhs.into(), rhs: rhs.into() }
    }

    pub fn swap(&self) -> Pair {
        Pair { lhs: self.rhs.clone(), rhs: self.lhs.clone() }
    }

    pub fn is_diagonal(&self) -> bool {
        self.lhs == self.rhs
    }

    /// Componentwise product `(a·c, b·c)`.
    pub fn scale(&self, c: &Element) -> Result<Pair> {
        Ok(Pair { lhs: self.lhs.mul(c)?, rhs: self.rhs.mul(c)? })
    }

    /// Twisted power `self^n`, with `self^0 = (1, 0)`.
    pub fn twisted_pow(&self, n: u32) -> Result<Pair> {
        let ring = self.lhs.ring();
        let mut acc = Pair { lhs: ring.one(), rhs: ring.zero() };
        for _ in 0..n {
            acc = twisted_product(&acc, self)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lhs, self.rhs)
    }
}

/// `(a1 b1 + a2 b2, a1 b2 + a2 b1)`.
pub fn twisted_product(a: &Pair, b: &Pair) -> Result<Pair> {
    Ok(Pair {
        lhs: a.lhs.mul(&b.lhs)?.add(&a.rhs.mul(&b.rhs)?)?,
        rhs: a.lhs.mul(&b.rhs)?.add(&a.rhs.mul(&b.lhs)?)?,
    })
}

/// A surjective homomorphism from a finite semiring onto a base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surjection {
    from: Arc<FiniteSemiring>,
    to: Base,
    images: Vec<Scalar>,
}

impl Surjection {
    pub fn new(from: Arc<FiniteSemiring>, to: Base, images: Vec<Scalar>) -> Result<Self> {
        let n = from.size();
        if images.len() != n {
            return Err(Error::NotAHomomorphism("one image per carrier element required".into()));
        }
        for s in &images {
            to.check(s)?;
        }
        if images[from.zero()] != to.zero() || images[from.one()] != to.one() {
            return Err(Error::NotAHomomorphism("zero and one must be preserved".into()));
        }
        for a in 0..n {
            for b in 0..n {
                if images[from.add(a, b)] != images[a].add(&images[b])?
                    || images[from.mul(a, b)] != images[a].mul(&images[b])?
                {
                    return Err(Error::NotAHomomorphism(alloc::format!(
                        "fails on ({}, {})",
                        from.label(a),
                        from.label(b)
                    )));
                }
            }
        }
        if let Some(all) = to.elements() {
            if let Some(missed) = all.iter().find(|t| !images.contains(t)) {
                return Err(Error::NotAHomomorphism(alloc::format!("{missed} is not hit")));
            }
        }
        Ok(Surjection { from, to, images })
    }

    /// The projection onto B determined by a congruence with exactly two
    /// classes whose quotient is B.
    pub fn onto_boolean(from: Arc<FiniteSemiring>, p: &Partition) -> Result<Self> {
        let images = (0..from.size())
            .map(|i| Scalar::Bool(!p.same(i, from.zero())))
            .collect();
        Surjection::new(from, Base::Bool, images)
    }

    pub fn from_base(&self) -> Base {
        Base::Finite(self.from.clone())
    }

    pub fn to_base(&self) -> &Base {
        &self.to
    }

    pub fn apply(&self, s: &Scalar) -> Result<Scalar> {
        match s {
            Scalar::Finite(f, i) if Arc::ptr_eq(f, &self.from) || **f == *self.from => Ok(self.images[*i].clone()),
            _ => Err(Error::RingMismatch { expected: self.from.name().into(), found: s.kind() }),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Family {
    /// The diagonal.
    Trivial,
    /// All of `R x R`.
    Improper,
    /// An explicit partition of a finite carrier.
    Finite(Partition),
    /// Identify polynomials over B whose leading weight values agree.
    Weight(WeightMatrix),
    /// Leading coefficient (in `var`) compared by `inner`, or, with `top`,
    /// only whether the polynomial vanishes modulo `inner`'s kernel.
    Lifted { var: usize, inner: Arc<Congruence>, top: bool },
    /// Pullback of `inner` along a substitution of base scalars.
    EvalPullback { assignment: Vec<Option<Scalar>>, inner: Arc<Congruence> },
    /// The congruence generated by `(1, generator)` in a semifield domain,
    /// or its restriction to a registered domain.
    Principal(Scalar),
    /// Congruence generated by `inner` in the semifield of fractions.
    FracExtension(Arc<Congruence>),
    /// Intersection of the weight primes for `(k, 1)`, `k >= n`, on `B[x,y]`.
    IntersectQc(u64),
    /// Pullback of `inner` along a coefficientwise surjection.
    QuotientPullback { map: Arc<Surjection>, inner: Arc<Congruence> },
    /// Restriction of `inner` to the subring obtained by dropping `var`, or
    /// with `None`, from a semifield of fractions to its base.
    Restriction { inner: Arc<Congruence>, var: Option<usize> },
}

#[derive(Clone, Debug)]
pub struct Congruence {
    ring: Ring,
    family: Family,
}

impl Congruence {
    pub(crate) fn raw(ring: Ring, family: Family) -> Self {
        Congruence { ring, family }
    }

    pub fn trivial(ring: Ring) -> Self {
        Congruence { ring, family: Family::Trivial }
    }

    pub fn improper(ring: Ring) -> Self {
        Congruence { ring, family: Family::Improper }
    }

    /// An explicit partition of a finite carrier; checked for closure.
    pub fn finite(f: Arc<FiniteSemiring>, p: Partition) -> Result<Self> {
        if p.size() != f.size() {
            return Err(Error::Invalid("partition size differs from the carrier".into()));
        }
        if !p.is_congruence(&f) {
            return Err(Error::Invalid(alloc::format!(
                "{} is not closed under the operations",
                p.display(&f)
            )));
        }
        let ring = Ring::Base(Base::Finite(f));
        Ok(if p.is_diagonal() {
            Congruence::trivial(ring)
        } else if p.is_full() {
            Congruence::improper(ring)
        } else {
            Congruence { ring, family: Family::Finite(p) }
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// The partition of a congruence on a finite carrier.
    pub fn partition(&self) -> Option<Partition> {
        let Ring::Base(Base::Finite(f)) = &self.ring else { return None };
        Some(match &self.family {
            Family::Trivial => Partition::diagonal(f.size()),
            Family::Improper => Partition::full(f.size()),
            Family::Finite(p) => p.clone(),
            _ => {
                let elems = Base::Finite(f.clone()).elements()?;
                let labels: Vec<usize> = elems
                    .iter()
                    .map(|a| {
                        elems
                            .iter()
                            .position(|b| self.member(&Pair::new(a.clone(), b.clone())).unwrap_or(false))
                            .unwrap()
                    })
                    .collect();
                Partition::from_labels(&labels)
            }
        })
    }

    fn check_pair(&self, p: &Pair) -> Result<()> {
        self.ring.check(&p.lhs)?;
        self.ring.check(&p.rhs)
    }

    /// Decide whether the pair belongs to the congruence.
    pub fn member(&self, p: &Pair) -> Result<bool> {
        self.check_pair(p)?;
        self.member_unchecked(&p.lhs, &p.rhs)
    }

    pub fn contains(&self, a: &Element, b: &Element) -> Result<bool> {
        self.member(&Pair { lhs: a.clone(), rhs: b.clone() })
    }

    pub fn kernel_member(&self, e: &Element) -> Result<bool> {
        self.member(&Pair { lhs: e.clone(), rhs: self.ring.zero() })
    }

    fn member_unchecked(&self, a: &Element, b: &Element) -> Result<bool> {
        match &self.family {
            Family::Trivial => Ok(a == b),
            Family::Improper => Ok(true),
            Family::Finite(part) => match (a, b) {
                (Element::Scalar(Scalar::Finite(_, i)), Element::Scalar(Scalar::Finite(_, j))) => Ok(part.same(*i, *j)),
                _ => Err(Error::RingMismatch { expected: self.ring.name(), found: a.ring_name() }),
            },
            Family::Weight(v) => Ok(weight_value(v, a)? == weight_value(v, b)?),
            Family::Lifted { var, inner, top } => {
                let (f, g) = (as_poly(a)?, as_poly(b)?);
                if *top {
                    Ok(vanishes_mod(f, *var, inner)? == vanishes_mod(g, *var, inner)?)
                } else {
                    match (leading_mod(f, *var, inner)?, leading_mod(g, *var, inner)?) {
                        (None, None) => Ok(true),
                        (Some((k1, c1)), Some((k2, c2))) => Ok(k1 == k2 && inner.contains(&c1, &c2)?),
                        _ => Ok(false),
                    }
                }
            }
            Family::EvalPullback { assignment, inner } => {
                let ea = apply_assignment(a, assignment, inner.ring())?;
                let eb = apply_assignment(b, assignment, inner.ring())?;
                inner.contains(&ea, &eb)
            }
            Family::Principal(generator) => {
                if a.is_zero() || b.is_zero() {
                    return Ok(a.is_zero() && b.is_zero());
                }
                let cg = ratio_class(&self.ring.one(), &principal_generator(&self.ring, generator)?)?;
                let cr = ratio_class(a, b)?;
                Ok(class_not_dominant(cr, cg))
            }
            Family::FracExtension(inner) => {
                let (p, q) = (as_frac(a)?, as_frac(b)?);
                let lhs = Element::Scalar(p.num.mul(&q.den)?);
                let rhs = Element::Scalar(q.num.mul(&p.den)?);
                inner.contains(&lhs, &rhs)
            }
            Family::IntersectQc(n) => intersect_qc_member(*n, as_poly(a)?, as_poly(b)?),
            Family::QuotientPullback { map, inner } => {
                let ea = map_element(a, map, inner.ring())?;
                let eb = map_element(b, map, inner.ring())?;
                inner.contains(&ea, &eb)
            }
            Family::Restriction { inner, var } => {
                let ea = embed(a, inner.ring(), *var)?;
                let eb = embed(b, inner.ring(), *var)?;
                inner.contains(&ea, &eb)
            }
        }
    }

    /// Kernel equals `{0}`.
    pub fn has_trivial_kernel(&self) -> Result<bool> {
        Ok(match &self.family {
            Family::Trivial => true,
            Family::Improper => false,
            Family::Finite(p) => {
                let Ring::Base(Base::Finite(f)) = &self.ring else { unreachable!() };
                (0..p.size()).all(|i| i == f.zero() || !p.same(i, f.zero()))
            }
            Family::Weight(_) | Family::Principal(_) | Family::FracExtension(_) | Family::IntersectQc(_) => true,
            Family::Lifted { inner, .. } => inner.has_trivial_kernel()?,
            Family::EvalPullback { assignment, inner } => {
                !assignment.iter().flatten().any(Scalar::is_zero)
                    && self.ring.base().is_domain()
                    && inner.has_trivial_kernel()?
            }
            Family::QuotientPullback { map, inner } => {
                let zero = map.to.zero();
                let zero_class = map.images.iter().filter(|s| **s == zero).count();
                zero_class == 1 && inner.has_trivial_kernel()?
            }
            Family::Restriction { inner, .. } => {
                if inner.has_trivial_kernel()? {
                    true
                } else {
                    return Err(Error::Unsupported("kernel of a restricted congruence".into()));
                }
            }
        })
    }

    pub fn is_proper(&self) -> bool {
        match &self.family {
            Family::Improper => false,
            Family::Lifted { inner, .. }
            | Family::EvalPullback { inner, .. }
            | Family::QuotientPullback { inner, .. }
            | Family::Restriction { inner, .. } => inner.is_proper(),
            _ => true,
        }
    }

    /// Primality guaranteed by the construction of the family. Explicit
    /// finite partitions are decided exhaustively.
    pub fn is_prime_by_contract(&self) -> Result<bool> {
        Ok(match &self.family {
            Family::Trivial => match &self.ring {
                Ring::Base(b) | Ring::Frac(b) => b.is_domain(),
                Ring::Poly(_) => false,
            },
            Family::Improper | Family::IntersectQc(_) => false,
            Family::Finite(_) => {
                let Ring::Base(Base::Finite(f)) = &self.ring else { unreachable!() };
                crate::primes::is_prime_finite(f, self)?
            }
            Family::Weight(_) | Family::Principal(_) => true,
            Family::Lifted { inner, .. }
            | Family::EvalPullback { inner, .. }
            | Family::FracExtension(inner)
            | Family::QuotientPullback { inner, .. }
            | Family::Restriction { inner, .. } => inner.is_prime_by_contract()?,
        })
    }

    /// The quotient is isomorphic to B.
    pub fn quotient_is_boolean(&self) -> Result<bool> {
        Ok(match &self.family {
            Family::Improper => false,
            Family::Trivial => match &self.ring {
                Ring::Base(b) => matches!(b, Base::Bool) || matches!(b, Base::Finite(f) if f.is_boolean()),
                _ => false,
            },
            Family::Finite(p) => {
                let Ring::Base(Base::Finite(f)) = &self.ring else { unreachable!() };
                p.num_classes() == 2 && f.quotient(p.classes())?.is_boolean()
            }
            Family::Weight(v) => v.is_zero(),
            Family::Lifted { top, .. } => *top,
            Family::Principal(g) => {
                let one = self.ring.one();
                let cg = ratio_class(&one, &principal_generator(&self.ring, g)?)?;
                cg == 1 || (cg == 0 && matches!(self.ring.base(), Base::Bool))
            }
            Family::QuotientPullback { inner, .. } | Family::Restriction { inner, .. } => inner.quotient_is_boolean()?,
            Family::FracExtension(inner) => inner.quotient_is_boolean()?,
            Family::IntersectQc(_) => false,
            Family::EvalPullback { .. } => {
                return Err(Error::Unsupported("quotient of an evaluation pullback".into()))
            }
        })
    }

    /// The restriction to the subring without variable `var`
    /// (to the base when the ring has one variable).
    pub fn restrict_to_subring(self: &Arc<Self>, var: usize) -> Result<Congruence> {
        let Ring::Poly(r) = &self.ring else {
            return Err(Error::Invalid(alloc::format!("{} has no variables", self.ring.name())));
        };
        if var >= r.nvars {
            return Err(Error::Invalid(alloc::format!("variable {var} out of range")));
        }
        let sub = if r.nvars == 1 { Ring::Base(r.base.clone()) } else { Ring::Poly(r.drop_var(var)) };
        Ok(match &self.family {
            Family::Trivial => Congruence::trivial(sub),
            Family::Improper => Congruence::improper(sub),
            Family::EvalPullback { assignment, inner }
                if r.nvars == 1 && assignment[0].is_some() && *inner.ring() == sub =>
            {
                (**inner).clone()
            }
            _ => Congruence { ring: sub, family: Family::Restriction { inner: self.clone(), var: Some(var) } },
        })
    }

    /// Restriction of a congruence on `A[x]` or `A(x)` to the constants `A`.
    pub fn restrict_to_base(self: &Arc<Self>) -> Result<Congruence> {
        let Ring::Poly(r) = &self.ring else {
            return Err(Error::Invalid(alloc::format!("{} is not a polynomial ring", self.ring.name())));
        };
        let mut c = self.clone();
        for var in (0..r.nvars).rev() {
            c = Arc::new(c.restrict_to_subring(var)?);
        }
        Ok(Arc::try_unwrap(c).unwrap_or_else(|c| (*c).clone()))
    }
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            Family::Trivial => f.write_str("trivial"),
            Family::Improper => f.write_str("improper"),
            Family::Finite(p) => match &self.ring {
                Ring::Base(Base::Finite(s)) => write!(f, "{}", p.display(s)),
                _ => f.write_str("partition"),
            },
            Family::Weight(v) => write!(f, "weight{v}"),
            Family::Lifted { inner, top: false, .. } => write!(f, "lift({inner})"),
            Family::Lifted { inner, top: true, .. } => write!(f, "top({inner})"),
            Family::EvalPullback { assignment, inner } => {
                let n = assignment.len();
                let parts: Vec<String> = assignment
                    .iter()
                    .enumerate()
                    .filter_map(|(i, s)| {
                        s.as_ref().map(|s| match &self.ring {
                            Ring::Base(Base::Monomial(_)) => alloc::format!("t{}={s}", i + 1),
                            _ => alloc::format!("{}={s}", crate::poly::var_name(n, i)),
                        })
                    })
                    .collect();
                write!(f, "evalpull({}; {inner})", parts.join(","))
            }
            Family::Principal(g) => write!(f, "principal({g})"),
            Family::FracExtension(inner) => write!(f, "fracext({inner})"),
            Family::IntersectQc(n) => write!(f, "iqc({n})"),
            Family::QuotientPullback { map, inner } => write!(f, "pull[{}->{}]({inner})", map.from.name(), map.to),
            Family::Restriction { inner, .. } => write!(f, "restrict({inner})"),
        }
    }
}

fn as_poly(e: &Element) -> Result<&Poly> {
    e.as_poly()
        .ok_or_else(|| Error::RingMismatch { expected: "a polynomial ring".into(), found: e.ring_name() })
}

fn as_frac(e: &Element) -> Result<&Fraction> {
    e.as_frac()
        .ok_or_else(|| Error::RingMismatch { expected: "a semifield of fractions".into(), found: e.ring_name() })
}

fn principal_generator(ring: &Ring, g: &Scalar) -> Result<Element> {
    match ring {
        Ring::Frac(b) => Ok(Element::Frac(Fraction::new(g.clone(), b.one())?)),
        _ => Ok(Element::Scalar(g.clone())),
    }
}

/// Class index 0 is the identity class; smaller positive indices dominate.
/// `ratio` is absorbed by the generator's class when it is not strictly
/// more dominant.
pub(crate) fn class_not_dominant(ratio: usize, generator: usize) -> bool {
    ratio == 0 || (generator != 0 && ratio >= generator)
}

/// Leading weight value of a polynomial over B or a monomial; `None` for zero.
pub(crate) fn weight_value(v: &WeightMatrix, e: &Element) -> Result<Option<Vec<BigRational>>> {
    match e {
        Element::Poly(p) => Ok(p.terms().keys().map(|u| v.value(u)).max()),
        Element::Scalar(Scalar::Mono(_, u)) => Ok(u.as_ref().map(|u| v.value(u))),
        _ => Err(Error::UnsupportedBase(alloc::format!("weight congruence on {}", e.ring_name()))),
    }
}

/// Convert a coefficient polynomial of the smaller ring into an element of
/// the ring the inner congruence lives on.
fn coefficient_element(c: Poly, inner_ring: &Ring) -> Result<Element> {
    match inner_ring {
        Ring::Base(_) => c
            .as_constant()
            .map(Element::Scalar)
            .ok_or_else(|| Error::Invalid("coefficient is not a constant".into())),
        _ => Ok(Element::Poly(c)),
    }
}

/// Highest power of `var` whose coefficient is not in the kernel of `inner`.
fn leading_mod(f: &Poly, var: usize, inner: &Congruence) -> Result<Option<(BigInt, Element)>> {
    for (k, c) in f.coefficients_in(var).into_iter().rev() {
        let c = coefficient_element(c, inner.ring())?;
        if !inner.kernel_member(&c)? {
            return Ok(Some((k, c)));
        }
    }
    Ok(None)
}

fn vanishes_mod(f: &Poly, var: usize, inner: &Congruence) -> Result<bool> {
    Ok(leading_mod(f, var, inner)?.is_none())
}

fn apply_assignment(e: &Element, assignment: &[Option<Scalar>], target: &Ring) -> Result<Element> {
    match e {
        Element::Poly(p) => {
            let v = p.evaluate(assignment)?;
            match target {
                Ring::Base(_) => v
                    .as_constant()
                    .map(Element::Scalar)
                    .ok_or_else(|| Error::Invalid("partial assignment into the base".into())),
                _ => Ok(Element::Poly(v)),
            }
        }
        Element::Scalar(Scalar::Mono(m, Some(u))) => {
            let killed = assignment
                .iter()
                .zip(u)
                .any(|(s, k)| s.as_ref().is_some_and(Scalar::is_zero) && k.is_positive());
            Ok(Element::Scalar(Scalar::Mono(m.clone(), if killed { None } else { Some(u.clone()) })))
        }
        Element::Scalar(s @ Scalar::Mono(_, None)) => Ok(Element::Scalar(s.clone())),
        _ => Err(Error::Unsupported(alloc::format!("evaluation on {}", e.ring_name()))),
    }
}

fn map_element(e: &Element, map: &Surjection, target: &Ring) -> Result<Element> {
    match (e, target) {
        (Element::Scalar(s), _) => Ok(Element::Scalar(map.apply(s)?)),
        (Element::Poly(p), Ring::Poly(r)) => Ok(Element::Poly(p.map_coefficients(r, |c| map.apply(c))?)),
        _ => Err(Error::RingMismatch { expected: target.name(), found: e.ring_name() }),
    }
}

fn embed(e: &Element, target: &Ring, var: Option<usize>) -> Result<Element> {
    let Some(var) = var else {
        return match e {
            Element::Scalar(s) => Ok(Element::Frac(Fraction::new(s.clone(), s.base().one())?)),
            _ => Err(Error::RingMismatch { expected: target.name(), found: e.ring_name() }),
        };
    };
    let Ring::Poly(r) = target else {
        return Err(Error::Invalid("restriction from a ring without variables".into()));
    };
    match e {
        Element::Scalar(s) => Ok(Element::Poly(Poly::constant(r, s.clone())?)),
        Element::Poly(p) => Ok(Element::Poly(Poly::embed(p, r, var, &BigInt::zero())?)),
        Element::Frac(_) => Err(Error::RingMismatch { expected: r.name(), found: e.ring_name() }),
    }
}

fn check_boolean_plane(p: &PolyRing) -> Result<()> {
    if p.base != Base::Bool || p.nvars != 2 {
        return Err(Error::UnsupportedBase(alloc::format!(
            "intersection family needs B[x,y] or B(x,y), not {}",
            p.name()
        )));
    }
    Ok(())
}

/// Value of `f` under the weight `(k, 1)`.
fn slope_value(f: &Poly, k: &BigInt) -> Option<BigInt> {
    f.terms().keys().map(|u| k * &u[0] + &u[1]).max()
}

/// Stabilization bound for [`Family::IntersectQc`]: past `n + S` both sides
/// are affine in `k`, since any two support lines cross at
/// `|Δy| / |Δx| <= spread_y`.
pub(crate) fn intersect_qc_bound(f: &Poly, g: &Poly) -> BigInt {
    let spread = |var: usize| -> BigInt {
        let ranges: Vec<(BigInt, BigInt)> = [f, g].iter().filter_map(|p| p.exponent_range(var)).collect();
        let lo = ranges.iter().map(|r| &r.0).min();
        let hi = ranges.iter().map(|r| &r.1).max();
        match (lo, hi) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => BigInt::zero(),
        }
    };
    BigInt::from(1) + spread(0) + spread(1)
}

fn intersect_qc_member(n: u64, f: &Poly, g: &Poly) -> Result<bool> {
    check_boolean_plane(f.ring())?;
    if f.is_zero() || g.is_zero() {
        return Ok(f.is_zero() && g.is_zero());
    }
    let start = BigInt::from(n);
    let end = &start + intersect_qc_bound(f, g);
    let mut k = start;
    while k <= end {
        if slope_value(f, &k) != slope_value(g, &k) {
            return Ok(false);
        }
        k += 1;
    }
    Ok(true)
}

/// Direct check of `(f, g) ∈ P_(k,1)` for a single `k`.
pub fn slope_prime_member(k: i64, f: &Poly, g: &Poly) -> Result<bool> {
    check_boolean_plane(f.ring())?;
    let k = BigInt::from(k);
    Ok(slope_value(f, &k).cmp(&slope_value(g, &k)) == Ordering::Equal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::t3;

    fn bx(n: usize, laurent: bool) -> PolyRing {
        PolyRing::new(Base::Bool, n, laurent)
    }

    fn var(r: &PolyRing, i: usize, e: i64) -> Element {
        Element::Poly(Poly::var_power(r, i, e).unwrap())
    }

    #[test]
    fn twisted_product_identities() {
        let r = bx(1, false);
        let ring = Ring::Poly(r.clone());
        let x = var(&r, 0, 1);
        let alpha = Pair::new(x.add(&ring.one()).unwrap(), x.clone());
        let unit = Pair::new(ring.one(), ring.zero());
        assert_eq!(twisted_product(&alpha, &unit).unwrap(), alpha);
        // (x, 0)(a, b) = (xa, xb)
        let xp = Pair::new(x.clone(), ring.zero());
        assert_eq!(twisted_product(&xp, &alpha).unwrap(), alpha.scale(&x).unwrap());
        let b1 = Pair::new(Scalar::Bool(true), Scalar::Bool(false));
        assert_eq!(twisted_product(&b1, &b1).unwrap(), b1);
        // symmetric in its arguments
        let beta = Pair::new(x.clone(), ring.one());
        assert_eq!(twisted_product(&alpha, &beta).unwrap(), twisted_product(&beta, &alpha).unwrap());
    }

    #[test]
    fn trivial_and_improper() {
        let r = bx(1, false);
        let ring = Ring::Poly(r.clone());
        let x1 = var(&r, 0, 1).add(&ring.one()).unwrap();
        let triv = Congruence::trivial(ring.clone());
        assert!(triv.contains(&x1, &x1).unwrap());
        assert!(!triv.contains(&x1, &var(&r, 0, 1)).unwrap());
        assert!(Congruence::improper(ring.clone()).contains(&x1, &ring.zero()).unwrap());
        assert!(triv.kernel_member(&ring.zero()).unwrap());
        assert!(!triv.kernel_member(&ring.one()).unwrap());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let triv = Congruence::trivial(Ring::Poly(bx(1, false)));
        let other = bx(2, false);
        assert!(matches!(
            triv.contains(&var(&other, 0, 1), &var(&other, 0, 1)),
            Err(Error::RingMismatch { .. })
        ));
    }

    #[test]
    fn finite_partition_must_be_closed() {
        let t = Arc::new(t3());
        // {0,1 | a} is not closed: 0 ~ 1 forces 0 = 0*a ~ 1*a = a
        let p = Partition::from_labels(&[0, 0, 2]);
        assert!(Congruence::finite(t, p).is_err());
    }

    #[test]
    fn surjection_checks() {
        let t = Arc::new(t3());
        let p = Partition::from_labels(&[0, 1, 1]);
        let s = Surjection::onto_boolean(t.clone(), &p).unwrap();
        assert_eq!(s.apply(&Scalar::Finite(t.clone(), 2)).unwrap(), Scalar::Bool(true));
        let bad = Partition::from_labels(&[0, 0, 2]);
        assert!(Surjection::onto_boolean(t, &bad).is_err());
    }

    #[test]
    fn restriction_of_trivial_is_trivial() {
        let c = Arc::new(Congruence::trivial(Ring::Poly(bx(1, true))));
        let r = c.restrict_to_base().unwrap();
        assert!(matches!(r.family(), Family::Trivial));
        assert_eq!(*r.ring(), Ring::Base(Base::Bool));
    }
}

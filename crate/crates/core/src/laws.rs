//! Sampled checks of structural laws satisfied by congruences and primes.
//!
//! Every check draws from a seeded [`Sampler`] and stops at the first
//! violation, which is returned as a printable counterexample.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::catalog::Example;
use crate::congruence::{twisted_product, Congruence, Pair};
use crate::element::{Element, Ring};
use crate::error::Result;
use crate::fractions::principal_member;
use crate::poly::Poly;
use crate::sample::Sampler;
use crate::scalar::{Base, Scalar};

/// Result of a sampled law check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    /// Samples on which the law's hypothesis held.
    pub exercised: usize,
    pub violation: Option<String>,
}

impl Outcome {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

struct Tally {
    exercised: usize,
}

impl Tally {
    fn new() -> Self {
        Tally { exercised: 0 }
    }

    fn done(self, violation: Option<String>) -> Outcome {
        Outcome { exercised: self.exercised, violation }
    }
}

/// A pair of `c` built from two samples: in a totally ordered quotient one
/// of `(a, a + b)` and `(b, a + b)` is a member.
fn member_pair(c: &Congruence, s: &mut Sampler) -> Result<core::result::Result<Pair, String>> {
    let ring = c.ring();
    let (a, b) = (s.element(ring), s.element(ring));
    let sum = a.add(&b)?;
    let p = Pair { lhs: a.clone(), rhs: sum.clone() };
    if c.member(&p)? {
        return Ok(Ok(p));
    }
    let q = Pair { lhs: b.clone(), rhs: sum };
    if c.member(&q)? {
        return Ok(Ok(q));
    }
    Ok(Err(alloc::format!("neither {p} nor {q} is a member: quotient not totally ordered")))
}

/// Quotients by primes are totally ordered.
pub fn total_order(c: &Congruence, s: &mut Sampler, n: usize) -> Result<Outcome> {
    let mut t = Tally::new();
    for _ in 0..n {
        if let Err(v) = member_pair(c, s)? {
            return Ok(t.done(Some(v)));
        }
        t.exercised += 1;
    }
    Ok(t.done(None))
}

/// `p ∈ C` implies `p·β ∈ C` for every pair `β`.
pub fn twisted_absorption(c: &Congruence, s: &mut Sampler, n: usize) -> Result<Outcome> {
    let mut t = Tally::new();
    for _ in 0..n {
        let p = match member_pair(c, s)? {
            Ok(p) => p,
            Err(v) => return Ok(t.done(Some(v))),
        };
        let beta = s.pair(c.ring());
        let prod = twisted_product(&p, &beta)?;
        t.exercised += 1;
        if !c.member(&prod)? {
            return Ok(t.done(Some(alloc::format!("{p} · {beta} = {prod} left the congruence"))));
        }
    }
    Ok(t.done(None))
}

/// An element below `e` in the natural order.
fn below(e: &Element, s: &mut Sampler) -> Result<Element> {
    match e {
        Element::Poly(p) => {
            let mut out = Poly::zero(p.ring());
            for (u, c) in p.terms() {
                if s.chance(0.5) {
                    let c = below_scalar(c, s)?;
                    out = out.add(&Poly::monomial(p.ring(), u.clone(), c)?)?;
                }
            }
            Ok(Element::Poly(out))
        }
        Element::Scalar(c) => Ok(Element::Scalar(below_scalar(c, s)?)),
        Element::Frac(_) => {
            let t = s.element(&e.ring());
            Ok(if t.leq(e)? { t } else { e.ring().zero() })
        }
    }
}

fn below_scalar(c: &Scalar, s: &mut Sampler) -> Result<Scalar> {
    let t = s.scalar(&c.base());
    Ok(if t.leq(c)? { t } else { c.clone() })
}

/// `(a, b) ∈ C` and `a ≤ c ≤ b` imply `(a, c), (b, c) ∈ C`.
pub fn convexity(c: &Congruence, s: &mut Sampler, n: usize) -> Result<Outcome> {
    let mut t = Tally::new();
    for _ in 0..n {
        let p = match member_pair(c, s)? {
            Ok(p) => p,
            Err(v) => return Ok(t.done(Some(v))),
        };
        // member_pair yields lhs ≤ rhs
        let (a, b) = (p.lhs, p.rhs);
        let mid = a.add(&below(&b, s)?)?;
        if !(a.leq(&mid)? && mid.leq(&b)?) {
            continue;
        }
        t.exercised += 1;
        if !c.contains(&a, &mid)? || !c.contains(&b, &mid)? {
            return Ok(t.done(Some(alloc::format!("({a}, {b}) is a member but {mid} between them is not related"))));
        }
    }
    Ok(t.done(None))
}

/// Strict order `a > b` in the quotient.
fn greater(c: &Congruence, a: &Element, b: &Element) -> Result<bool> {
    Ok(c.contains(&a.add(b)?, a)? && !c.contains(a, b)?)
}

/// `a > b` and `c > d` in the quotient imply `ac > bd`.
pub fn calc(c: &Congruence, s: &mut Sampler, n: usize) -> Result<Outcome> {
    let mut t = Tally::new();
    let ring = c.ring().clone();
    let mut attempts = 0;
    while t.exercised < n && attempts < 20 * n {
        attempts += 1;
        let (mut a, mut b) = (s.element(&ring), s.element(&ring));
        if !greater(c, &a, &b)? {
            core::mem::swap(&mut a, &mut b);
            if !greater(c, &a, &b)? {
                continue;
            }
        }
        let (mut x, mut y) = (s.element(&ring), s.element(&ring));
        if !greater(c, &x, &y)? {
            core::mem::swap(&mut x, &mut y);
            if !greater(c, &x, &y)? {
                continue;
            }
        }
        t.exercised += 1;
        let (ax, by) = (a.mul(&x)?, b.mul(&y)?);
        if !greater(c, &ax, &by)? {
            return Ok(t.done(Some(alloc::format!("{a} > {b} and {x} > {y} but not {ax} > {by}"))));
        }
    }
    Ok(t.done(None))
}

/// `(f^k, g^k) ∈ P` implies `(f, g) ∈ P`, checked for `k ≤ max_power` on
/// non-member pairs.
pub fn power(c: &Congruence, s: &mut Sampler, n: usize, max_power: u32) -> Result<Outcome> {
    let mut t = Tally::new();
    for _ in 0..n {
        let p = s.pair(c.ring());
        if c.member(&p)? {
            continue;
        }
        t.exercised += 1;
        for k in 2..=max_power {
            let q = Pair { lhs: p.lhs.pow(k)?, rhs: p.rhs.pow(k)? };
            if c.member(&q)? {
                return Ok(t.done(Some(alloc::format!("{p} is not a member but its {k}-th power is"))));
            }
        }
    }
    Ok(t.done(None))
}

/// Sampled transitivity over triples drawn from small products and sums of
/// a common element.
pub fn transitivity(c: &Congruence, s: &mut Sampler, n: usize) -> Result<Outcome> {
    let mut t = Tally::new();
    let ring = c.ring().clone();
    for _ in 0..n {
        let a = s.nonzero_element(&ring);
        let (e1, e2) = (s.element(&ring), s.element(&ring));
        let cands = [a.clone(), a.mul(&e1)?, a.mul(&e2)?, a.mul(&e1)?.mul(&e2)?, a.add(&e1)?, e2.clone()];
        for x in &cands {
            if !c.contains(&a, x)? {
                continue;
            }
            for y in &cands {
                if c.contains(x, y)? {
                    t.exercised += 1;
                    if !c.contains(&a, y)? {
                        return Ok(t.done(Some(alloc::format!("{a} ~ {x} ~ {y} but not {a} ~ {y}"))));
                    }
                }
            }
        }
    }
    Ok(t.done(None))
}

/// Primality on sampled pairs of pairs: `αβ ∈ P` implies `α ∈ P` or `β ∈ P`.
pub fn sampled_prime(c: &Congruence, s: &mut Sampler, n: usize) -> Result<Outcome> {
    let mut t = Tally::new();
    for _ in 0..n {
        let (alpha, beta) = (s.pair(c.ring()), s.pair(c.ring()));
        let prod = twisted_product(&alpha, &beta)?;
        if c.member(&prod)? {
            t.exercised += 1;
            if !c.member(&alpha)? && !c.member(&beta)? {
                return Ok(t.done(Some(alloc::format!("{alpha} · {beta} = {prod} is a member, neither factor is"))));
            }
        }
    }
    Ok(t.done(None))
}

/// Kernel dichotomy on a monomial domain: if `(1, x) ∈ ⟨(1, y/z)⟩` in the
/// fractions and `x ∈ ker P`, then `y` or `z` is in `ker P`.
pub fn sticky_kernels(domain: &Base, primes: &[Arc<Congruence>], s: &mut Sampler, n: usize) -> Result<Outcome> {
    let mut t = Tally::new();
    let ring = Ring::Base(domain.clone());
    let frac = Ring::fractions(domain.clone())?;
    for _ in 0..n {
        let (x, y, z) = (s.nonzero_element(&ring), s.nonzero_element(&ring), s.nonzero_element(&ring));
        let (Element::Scalar(xs), Element::Scalar(ys), Element::Scalar(zs)) = (&x, &y, &z) else { unreachable!() };
        let gen = Element::Frac(crate::element::Fraction::new(ys.clone(), zs.clone())?);
        let one = frac.one();
        let xf = frac.constant(xs.clone())?;
        if !principal_member(&gen, &Pair { lhs: one, rhs: xf })? {
            continue;
        }
        for p in primes {
            if p.kernel_member(&x)? {
                t.exercised += 1;
                if !p.kernel_member(&y)? && !p.kernel_member(&z)? {
                    return Ok(t.done(Some(alloc::format!("{x} in ker {p} but neither {y} nor {z}"))));
                }
            }
        }
    }
    Ok(t.done(None))
}

/// Run the order-theoretic laws on one example; returns `(law, outcome)`.
pub fn prime_laws(ex: &Example, seed: u64, n: usize) -> Result<Vec<(&'static str, Outcome)>> {
    let c = &ex.congruence;
    let mut s = Sampler::new(seed);
    Ok(alloc::vec![
        ("total-order", total_order(c, &mut s, n)?),
        ("twisted-absorption", twisted_absorption(c, &mut s, n)?),
        ("convexity", convexity(c, &mut s, n)?),
        ("calc", calc(c, &mut s, n)?),
        ("power", power(c, &mut s, n, 5)?),
        ("prime", sampled_prime(c, &mut s, n)?),
    ])
}

pub fn describe(o: &Outcome) -> String {
    match &o.violation {
        None => alloc::format!("{} exercised, no violation", o.exercised),
        Some(v) => v.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn catalog_primes_obey_the_laws() {
        for ex in catalog::primes().unwrap() {
            for (law, o) in prime_laws(&ex, 11, 60).unwrap() {
                assert!(o.holds(), "{}: {law}: {}", ex.name, describe(&o));
            }
        }
    }

    #[test]
    fn sticky_kernels_on_lex_domain() {
        let m = Arc::new(crate::monomial::MonomialRing::lex(2, false));
        let base = Base::Monomial(m.clone());
        let ring = Ring::Base(base.clone());
        let zero = Some(Scalar::Mono(m.clone(), None));
        let delta = Arc::new(Congruence::trivial(ring.clone()));
        let primes = [
            Arc::new(crate::primes::make_eval_pullback(ring.clone(), alloc::vec![zero.clone(), None], delta.clone()).unwrap()),
            Arc::new(crate::primes::make_eval_pullback(ring.clone(), alloc::vec![zero.clone(), zero], delta.clone()).unwrap()),
            delta,
        ];
        let o = sticky_kernels(&base, &primes, &mut Sampler::new(5), 300).unwrap();
        assert!(o.holds(), "{}", describe(&o));
        assert!(o.exercised > 0);
    }
}

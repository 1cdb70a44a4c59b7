//! Prime congruence families and exhaustive deciders on finite carriers.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::closure::Partition;
use crate::congruence::{Congruence, Family};
use crate::element::Ring;
use crate::error::{Error, Result};
use crate::finite::{FiniteSemiring, VALIDATION_CAP};
use crate::monomial::MonomialRing;
use crate::poly::PolyRing;
use crate::scalar::{Base, Scalar};
use crate::weight::WeightMatrix;

/// `P_V` on `B[x_1..x_n]` or `B(x_1..x_n)`, or on a monomial domain when `V`
/// is a row-prefix of its order (or zero).
pub fn make_weight_prime(v: WeightMatrix, ring: Ring) -> Result<Congruence> {
    match &ring {
        Ring::Poly(r) => {
            if r.base != Base::Bool {
                return Err(Error::UnsupportedBase(alloc::format!("weight prime over {}", r.base)));
            }
            if v.ncols() != r.nvars {
                return Err(Error::Invalid(alloc::format!(
                    "weight matrix has {} columns for {} variables",
                    v.ncols(),
                    r.nvars
                )));
            }
        }
        Ring::Base(Base::Monomial(m)) => {
            let prefix = v.nrows() <= m.rank() && m.order().prefix(v.nrows()) == v;
            if v.ncols() != m.rank() || !(prefix || v.is_zero()) {
                return Err(Error::Unsupported(alloc::format!(
                    "weight {v} on {}: only prefixes of the order",
                    m.name()
                )));
            }
        }
        _ => return Err(Error::UnsupportedBase(alloc::format!("weight prime over {}", ring.name()))),
    }
    Ok(Congruence::raw(ring, Family::Weight(v)))
}

/// Lift a prime of `A` (or of the ring without the last variable) to the
/// ring with one more variable, comparing leading terms in that variable.
/// With `top`, the lift collapses every element outside the kernel.
pub fn make_lifted_prime(inner: Arc<Congruence>, ring: PolyRing, top: bool) -> Result<Congruence> {
    if ring.nvars == 0 {
        return Err(Error::Invalid("lift into a ring without variables".into()));
    }
    let var = ring.nvars - 1;
    let expected = if ring.nvars == 1 { Ring::Base(ring.base.clone()) } else { Ring::Poly(ring.drop_var(var)) };
    if *inner.ring() != expected {
        return Err(Error::RingMismatch { expected: expected.name(), found: inner.ring().name() });
    }
    if !inner.is_proper() {
        return Err(Error::Invalid("lift of the improper congruence".into()));
    }
    if top && !inner.quotient_is_boolean()? {
        return Err(Error::NotADomainTop(alloc::format!("{inner}")));
    }
    Ok(Congruence::raw(Ring::Poly(ring), Family::Lifted { var, inner, top }))
}

/// `C_n`, the intersection of `P_(k,1)` over `k >= n`.
pub fn make_intersect_qc(n: u64, ring: PolyRing) -> Result<Congruence> {
    if ring.base != Base::Bool || ring.nvars != 2 {
        return Err(Error::UnsupportedBase(alloc::format!(
            "intersection family needs B[x,y] or B(x,y), not {}",
            ring.name()
        )));
    }
    if n == 0 {
        return Err(Error::Invalid("intersection index must be positive".into()));
    }
    Ok(Congruence::raw(Ring::Poly(ring), Family::IntersectQc(n)))
}

/// Pull `inner` back along a substitution of base scalars for some
/// variables. On a monomial domain only sending a prefix of the generators
/// of a lexicographic order to zero is a homomorphism.
pub fn make_eval_pullback(ring: Ring, assignment: Vec<Option<Scalar>>, inner: Arc<Congruence>) -> Result<Congruence> {
    match &ring {
        Ring::Poly(r) => {
            if assignment.len() != r.nvars {
                return Err(Error::Invalid(alloc::format!(
                    "assignment has {} entries for {} variables",
                    assignment.len(),
                    r.nvars
                )));
            }
            for s in assignment.iter().flatten() {
                r.base.check(s)?;
                if r.laurent && s.is_zero() {
                    return Err(Error::Unsupported("sending a Laurent variable to zero".into()));
                }
            }
            let expected = if assignment.iter().all(Option::is_some) { Ring::Base(r.base.clone()) } else { ring.clone() };
            if *inner.ring() != expected && *inner.ring() != ring {
                return Err(Error::RingMismatch { expected: expected.name(), found: inner.ring().name() });
            }
        }
        Ring::Base(Base::Monomial(m)) => {
            let lex = MonomialRing::lex(m.rank(), false);
            let zeros = assignment.iter().take_while(|s| s.as_ref().is_some_and(Scalar::is_zero)).count();
            let ok = !m.is_semifield()
                && m.order() == lex.order()
                && assignment.len() == m.rank()
                && assignment[zeros..].iter().all(Option::is_none);
            if !ok {
                return Err(Error::Unsupported(alloc::format!(
                    "on {} only a prefix of the generators may be sent to zero",
                    m.name()
                )));
            }
            for s in assignment.iter().flatten() {
                ring.base().check(s)?;
            }
            if *inner.ring() != ring {
                return Err(Error::RingMismatch { expected: ring.name(), found: inner.ring().name() });
            }
        }
        _ => return Err(Error::Unsupported(alloc::format!("evaluation on {}", ring.name()))),
    }
    Ok(Congruence::raw(ring, Family::EvalPullback { assignment, inner }))
}

fn carrier_partition(f: &FiniteSemiring, c: &Congruence) -> Result<Partition> {
    if f.size() > VALIDATION_CAP {
        return Err(Error::CarrierCap { size: f.size(), cap: VALIDATION_CAP });
    }
    match c.ring() {
        Ring::Base(Base::Finite(g)) if **g == *f => {}
        r => return Err(Error::RingMismatch { expected: f.name().into(), found: r.name() }),
    }
    c.partition().ok_or_else(|| Error::Invalid("not a finite congruence".into()))
}

/// Exhaustive primality over all pairs of pairs.
pub fn is_prime_partition(f: &FiniteSemiring, p: &Partition) -> bool {
    if p.is_full() {
        return false;
    }
    let n = f.size();
    let twisted = |a1: usize, a2: usize, b1: usize, b2: usize| {
        (f.add(f.mul(a1, b1), f.mul(a2, b2)), f.add(f.mul(a1, b2), f.mul(a2, b1)))
    };
    for a1 in 0..n {
        for a2 in 0..n {
            if p.same(a1, a2) {
                continue;
            }
            for b1 in 0..n {
                for b2 in 0..n {
                    if p.same(b1, b2) {
                        continue;
                    }
                    let (l, r) = twisted(a1, a2, b1, b2);
                    if p.same(l, r) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The quotient is cancellative.
pub fn is_qc_partition(f: &FiniteSemiring, p: &Partition) -> bool {
    let n = f.size();
    (0..n).filter(|&c| !p.same(c, f.zero())).all(|c| {
        (0..n).all(|a| (0..n).all(|b| !p.same(f.mul(c, a), f.mul(c, b)) || p.same(a, b)))
    })
}

/// No two strictly larger members of `lattice` meet in `p`.
pub fn is_irreducible_partition(p: &Partition, lattice: &[Partition]) -> bool {
    let above: Vec<&Partition> =
        lattice.iter().filter(|q| *q != p && p.is_finer_than(q)).collect();
    above
        .iter()
        .enumerate()
        .all(|(i, a)| above[i + 1..].iter().all(|b| a.meet(b) != *p))
}

pub fn is_prime_finite(f: &FiniteSemiring, c: &Congruence) -> Result<bool> {
    Ok(is_prime_partition(f, &carrier_partition(f, c)?))
}

pub fn is_qc_finite(f: &FiniteSemiring, c: &Congruence) -> Result<bool> {
    Ok(is_qc_partition(f, &carrier_partition(f, c)?))
}

pub fn is_irreducible_finite(f: &FiniteSemiring, c: &Congruence, lattice: &[Partition]) -> Result<bool> {
    Ok(is_irreducible_partition(&carrier_partition(f, c)?, lattice))
}

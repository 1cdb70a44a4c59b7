//! Representative prime congruences of every implemented family.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::chain::base_chain;
use crate::congruence::{Congruence, Family, Surjection};
use crate::element::Ring;
use crate::error::Result;
use crate::finite::t3;
use crate::fractions::{extend, principal};
use crate::monomial::MonomialRing;
use crate::poly::PolyRing;
use crate::primes::{make_eval_pullback, make_lifted_prime, make_weight_prime};
use crate::scalar::{Base, Scalar};
use crate::weight::WeightMatrix;

#[derive(Clone, Debug)]
pub struct Example {
    pub name: String,
    pub congruence: Arc<Congruence>,
}

fn ex(c: Congruence) -> Example {
    Example { name: alloc::format!("{} on {}", c, c.ring()), congruence: Arc::new(c) }
}

fn poly(base: Base, n: usize, laurent: bool) -> PolyRing {
    PolyRing::new(base, n, laurent)
}

/// One or more primes from each family, over a spread of rings.
pub fn primes() -> Result<Vec<Example>> {
    let mut out = Vec::new();
    let bxy = Ring::Poly(poly(Base::Bool, 2, true));
    let bxy_poly = Ring::Poly(poly(Base::Bool, 2, false));
    out.push(ex(make_weight_prime(WeightMatrix::from_ints(&[&[1, 0]])?, bxy.clone())?));
    out.push(ex(make_weight_prime(WeightMatrix::identity(2), bxy_poly)?));
    out.push(ex(make_weight_prime(WeightMatrix::zero(2), bxy.clone())?));
    let half = WeightMatrix::new(
        alloc::vec![alloc::vec![
            num_rational::BigRational::new(1.into(), 2.into()),
            num_rational::BigRational::from_integer((-1).into())
        ]],
        2,
    )?;
    out.push(ex(make_weight_prime(half, bxy)?));

    let zx = poly(Base::IntMax, 1, true);
    let (zchain, _) = base_chain(&Base::IntMax)?;
    out.push(ex(make_lifted_prime(zchain[0].clone(), zx.clone(), false)?));
    out.push(ex(make_lifted_prime(zchain[1].clone(), zx.clone(), true)?));
    let (qchain, _) = base_chain(&Base::RatMax)?;
    out.push(ex(make_lifted_prime(qchain[1].clone(), poly(Base::RatMax, 1, false), false)?));
    let inner = Arc::new(make_lifted_prime(zchain[1].clone(), zx, true)?);
    out.push(ex(make_lifted_prime(inner, poly(Base::IntMax, 2, true), false)?));

    let lexsf = Arc::new(MonomialRing::lex(2, true));
    out.push(ex(principal(Ring::Base(Base::Monomial(lexsf.clone())), Scalar::mono(&lexsf, &[0, 1]))?));
    let lex = Arc::new(MonomialRing::lex(2, false));
    let dom = Ring::Base(Base::Monomial(lex.clone()));
    out.push(ex(principal(dom.clone(), Scalar::mono(&lex, &[0, 1]))?));
    let wp = Arc::new(make_weight_prime(lex.order().prefix(1), dom.clone())?);
    out.push(ex((*wp).clone()));
    out.push(ex(extend(wp)?));
    let delta = Arc::new(Congruence::trivial(dom.clone()));
    out.push(ex(make_eval_pullback(dom, alloc::vec![Some(Scalar::Mono(lex.clone(), None)), None], delta)?));

    let zpoly = Ring::Poly(poly(Base::IntMax, 1, false));
    let zdelta = Arc::new(Congruence::trivial(Ring::Base(Base::IntMax)));
    out.push(ex(make_eval_pullback(zpoly, alloc::vec![Some(Scalar::int(2))], zdelta)?));

    let t = Arc::new(t3());
    let map = Arc::new(Surjection::new(
        t.clone(),
        Base::Bool,
        alloc::vec![Scalar::Bool(false), Scalar::Bool(true), Scalar::Bool(true)],
    )?);
    let bx = Ring::Poly(poly(Base::Bool, 1, false));
    let inner = Arc::new(make_weight_prime(WeightMatrix::identity(1), bx)?);
    let tx = Ring::Poly(poly(Base::Finite(t), 1, false));
    out.push(ex(Congruence::raw(tx, Family::QuotientPullback { map, inner })));

    out.push(ex(Congruence::trivial(Ring::Base(Base::RatMax))));
    Ok(out)
}

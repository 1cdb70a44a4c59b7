use std::sync::Arc;

use idemdim_core::chain::{build_polynomial_chain, verify_chain, Effort};
use idemdim_core::closure::ENUMERATION_CAP;
use idemdim_core::congruence::Pair;
use idemdim_core::element::Ring;
use idemdim_core::finite::{b_times_b, t3};
use idemdim_core::monomial::MonomialRing;
use idemdim_core::poly::{Poly, PolyRing};
use idemdim_core::primes::{make_intersect_qc, make_weight_prime};
use idemdim_core::sample::Sampler;
use idemdim_core::scalar::Base;
use idemdim_core::weight::WeightMatrix;

#[test]
fn every_constructed_chain_verifies() {
    let bases = [
        Base::Bool,
        Base::IntMax,
        Base::RatMax,
        Base::Finite(Arc::new(t3())),
        Base::Finite(Arc::new(b_times_b())),
        Base::Monomial(Arc::new(MonomialRing::lex(2, false))),
    ];
    for base in &bases {
        for laurent in [false, true] {
            let chain = build_polynomial_chain(base, 1, laurent, ENUMERATION_CAP).unwrap();
            let r = verify_chain(&chain, Effort { seed: 3, samples: 100 });
            assert!(r.passed(), "{r}");
        }
    }
    for n in 2..=4 {
        let chain = build_polynomial_chain(&Base::Bool, n, true, ENUMERATION_CAP).unwrap();
        assert_eq!(chain.len(), n);
        assert!(verify_chain(&chain, Effort { seed: 3, samples: 100 }).passed());
    }
}

#[test]
fn intersections_are_reducible() {
    let r = PolyRing::new(Base::Bool, 2, true);
    let ring = Ring::Poly(r.clone());
    let x = Poly::var_power(&r, 0, 1).unwrap();
    let mut s = Sampler::new(21);
    for n in 1..=6u64 {
        let c = make_intersect_qc(n, r.clone()).unwrap();
        let next = make_intersect_qc(n + 1, r.clone()).unwrap();
        let v = WeightMatrix::from_ints(&[&[n as i64, 1]]).unwrap();
        let p = make_weight_prime(v, ring.clone()).unwrap();
        let yn = Poly::var_power(&r, 1, n as i64 + 1).unwrap();
        // strictly larger on both sides
        let in_p = Pair::new(x.add(&yn).unwrap(), yn.clone());
        assert!(p.member(&in_p).unwrap() && !c.member(&in_p).unwrap());
        let in_next = Pair::new(x.add(&yn).unwrap(), x.clone());
        assert!(next.member(&in_next).unwrap() && !c.member(&in_next).unwrap());
        for _ in 0..200 {
            let q = s.pair(&ring);
            let meet = p.member(&q).unwrap() && next.member(&q).unwrap();
            assert_eq!(c.member(&q).unwrap(), meet, "{q}");
        }
    }
}

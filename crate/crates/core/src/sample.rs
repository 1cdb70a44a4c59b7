//! Seeded random elements for property checks.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::congruence::Pair;
use crate::element::{Element, Fraction, Ring};
use crate::poly::{Poly, PolyRing};
use crate::scalar::{Base, Scalar};

pub const DEFAULT_SEED: u64 = 0x1d3d_1a;

/// Small random elements; the same seed always yields the same stream.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
    max_terms: usize,
    max_exponent: i64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), max_terms: 3, max_exponent: 3 }
    }

    pub fn with_size(mut self, max_terms: usize, max_exponent: i64) -> Self {
        self.max_terms = max_terms.max(1);
        self.max_exponent = max_exponent.max(1);
        self
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    fn exponent(&mut self, signed: bool) -> i64 {
        let m = self.max_exponent;
        if signed {
            self.rng.gen_range(-m..=m)
        } else {
            self.rng.gen_range(0..=m)
        }
    }

    /// A scalar, zero with small probability.
    pub fn scalar(&mut self, base: &Base) -> Scalar {
        if self.chance(0.1) {
            return base.zero();
        }
        self.nonzero_scalar(base)
    }

    /// A nonzero scalar (any scalar for the one-element carrier).
    pub fn nonzero_scalar(&mut self, base: &Base) -> Scalar {
        match base {
            Base::Bool => Scalar::Bool(true),
            Base::IntMax => Scalar::Int(Some(BigInt::from(self.rng.gen_range(-6i64..=6)))),
            Base::RatMax => {
                let n = self.rng.gen_range(-12i64..=12);
                let d = self.rng.gen_range(1i64..=4);
                Scalar::Rat(Some(BigRational::new(n.into(), d.into())))
            }
            Base::Finite(f) => {
                let nonzero: Vec<usize> = (0..f.size()).filter(|&i| i != f.zero()).collect();
                if nonzero.is_empty() {
                    return base.zero();
                }
                Scalar::Finite(f.clone(), nonzero[self.below(nonzero.len())])
            }
            Base::Monomial(m) => {
                let signed = m.is_semifield();
                let u: Vec<BigInt> = (0..m.rank()).map(|_| BigInt::from(self.exponent(signed))).collect();
                Scalar::Mono(m.clone(), Some(u))
            }
        }
    }

    pub fn poly(&mut self, ring: &PolyRing) -> Poly {
        let terms = self.rng.gen_range(0..=self.max_terms);
        let mut out = Poly::zero(ring);
        for _ in 0..terms {
            let u: Vec<BigInt> = (0..ring.nvars).map(|_| BigInt::from(self.exponent(ring.laurent))).collect();
            let c = self.nonzero_scalar(&ring.base);
            out = out.add(&Poly::monomial(ring, u, c).expect("sampled exponent fits the ring")).expect("same ring");
        }
        out
    }

    pub fn nonzero_poly(&mut self, ring: &PolyRing) -> Poly {
        loop {
            let p = self.poly(ring);
            if !p.is_zero() {
                return p;
            }
        }
    }

    pub fn element(&mut self, ring: &Ring) -> Element {
        match ring {
            Ring::Base(b) => Element::Scalar(self.scalar(b)),
            Ring::Poly(r) => Element::Poly(self.poly(r)),
            Ring::Frac(b) => {
                let num = self.scalar(b);
                let den = self.nonzero_scalar(b);
                Element::Frac(Fraction::new(num, den).expect("nonzero denominator"))
            }
        }
    }

    pub fn nonzero_element(&mut self, ring: &Ring) -> Element {
        loop {
            let e = self.element(ring);
            if !e.is_zero() {
                return e;
            }
        }
    }

    pub fn pair(&mut self, ring: &Ring) -> Pair {
        Pair { lhs: self.element(ring), rhs: self.element(ring) }
    }
}

impl Default for Sampler {
    fn default() -> Self {
        Sampler::new(DEFAULT_SEED)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let ring = Ring::Poly(PolyRing::new(Base::IntMax, 2, true));
        let a: Vec<Element> = (0..20).map({
            let mut s = Sampler::new(7);
            move |_| s.element(&ring)
        }).collect();
        let ring = Ring::Poly(PolyRing::new(Base::IntMax, 2, true));
        let mut s = Sampler::new(7);
        let b: Vec<Element> = (0..20).map(|_| s.element(&ring)).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn elements_belong_to_their_ring() {
        let mut s = Sampler::new(1);
        let m = alloc::sync::Arc::new(crate::monomial::MonomialRing::lex(2, false));
        for ring in [
            Ring::Base(Base::RatMax),
            Ring::Poly(PolyRing::new(Base::Bool, 3, false)),
            Ring::Frac(Base::Monomial(m)),
        ] {
            for _ in 0..50 {
                assert!(ring.contains(&s.element(&ring)));
            }
        }
    }
}

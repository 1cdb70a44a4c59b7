//! Totally ordered monomial semirings over B.
//!
//! Elements are `0` and monomials `t^u`; the sum of two monomials is the one
//! whose weight `W·u` is lexicographically larger. With `W` square and of full
//! rank the order is total, so the semiring is cancellative and totally
//! ordered. The domain version uses `u ∈ N^k`, the semifield version `u ∈ Z^k`
//! (its semifield of fractions).

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::weight::WeightMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialRing {
    name: String,
    order: WeightMatrix,
    semifield: bool,
}

impl MonomialRing {
    pub fn new(name: &str, order: WeightMatrix, semifield: bool) -> Result<Self> {
        if order.nrows() != order.ncols() || order.rank() != order.ncols() {
            return Err(Error::Invalid(alloc::format!(
                "monomial order of {name} must be a square matrix of full rank"
            )));
        }
        Ok(MonomialRing { name: name.into(), order, semifield })
    }

    /// Lexicographic order with `t1` dominant and `1` as the largest element:
    /// a sum keeps the monomial with the lexicographically smaller exponent.
    pub fn lex(rank: usize, semifield: bool) -> Self {
        let rows = WeightMatrix::identity(rank)
            .rows()
            .iter()
            .map(|r| r.iter().map(|q| -q).collect())
            .collect();
        let order = WeightMatrix::new(rows, rank).expect("square");
        let name = if semifield {
            alloc::format!("lexsf{rank}")
        } else {
            alloc::format!("lex{rank}")
        };
        MonomialRing { name, order, semifield }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.order.ncols()
    }

    pub fn order(&self) -> &WeightMatrix {
        &self.order
    }

    pub fn is_semifield(&self) -> bool {
        self.semifield
    }

    /// The semifield of fractions (same order, integer exponents).
    pub fn fraction_semifield(&self) -> MonomialRing {
        if self.semifield {
            return self.clone();
        }
        let name = match self.name.strip_prefix("lex") {
            Some(rest) if rest.chars().all(|c| c.is_ascii_digit()) => alloc::format!("lexsf{rest}"),
            _ => alloc::format!("Frac({})", self.name),
        };
        MonomialRing { name, order: self.order.clone(), semifield: true }
    }

    pub fn contains(&self, u: &[BigInt]) -> bool {
        u.len() == self.rank() && (self.semifield || u.iter().all(|e| !e.is_negative()))
    }

    pub fn compare(&self, a: &[BigInt], b: &[BigInt]) -> Ordering {
        self.order.compare(a, b)
    }

    /// Archimedean class of `t^u` in the semifield: 0 for the identity,
    /// otherwise the position of the first nonzero weight coordinate.
    /// Larger indices are less dominant.
    pub fn arch_class(&self, u: &[BigInt]) -> usize {
        self.order.leading_position(u)
    }

    /// Generator `t_i` (0-based).
    pub fn generator(&self, i: usize) -> Vec<BigInt> {
        (0..self.rank()).map(|j| BigInt::from((i == j) as i64)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&a| a.into()).collect()
    }

    #[test]
    fn lex_domain_has_one_on_top() {
        let m = MonomialRing::lex(2, false);
        assert_eq!(m.compare(&v(&[0, 0]), &v(&[0, 3])), Ordering::Greater);
        assert_eq!(m.compare(&v(&[0, 9]), &v(&[1, 0])), Ordering::Greater);
        assert!(!m.contains(&v(&[-1, 0])));
        assert!(m.fraction_semifield().contains(&v(&[-1, 0])));
        assert_eq!(m.fraction_semifield().name(), "lexsf2");
    }

    #[test]
    fn classes() {
        let m = MonomialRing::lex(2, true);
        assert_eq!(m.arch_class(&v(&[0, 0])), 0);
        assert_eq!(m.arch_class(&v(&[3, -7])), 1);
        assert_eq!(m.arch_class(&v(&[0, -7])), 2);
    }

    #[test]
    fn rejects_degenerate_order() {
        let w = WeightMatrix::from_ints(&[&[1, 1], &[2, 2]]).unwrap();
        assert!(MonomialRing::new("bad", w, false).is_err());
    }
}

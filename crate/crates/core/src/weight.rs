//! Rational weight matrices applied lexicographically to exponent vectors.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Rows of rational weights. The value of a monomial `x^u` is the vector
/// `(row_1 · u, ..., row_r · u)`, compared lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightMatrix {
    rows: Vec<Vec<BigRational>>,
    ncols: usize,
}

impl WeightMatrix {
    pub fn new(rows: Vec<Vec<BigRational>>, ncols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Invalid(alloc::format!(
                "every weight row must have {ncols} entries"
            )));
        }
        Ok(WeightMatrix { rows, ncols })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        let ncols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&q| BigRational::from_integer(q.into())).collect())
            .collect();
        Self::new(rows, ncols)
    }

    /// The `n x n` identity: plain lexicographic order with `x1` dominant.
    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigRational::from_integer(BigInt::from((i == j) as i64)))
                    .collect()
            })
            .collect();
        WeightMatrix { rows, ncols: n }
    }

    /// A single all-zero row; every nonzero monomial gets the same value.
    pub fn zero(n: usize) -> Self {
        WeightMatrix { rows: alloc::vec![alloc::vec![BigRational::zero(); n]], ncols: n }
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// The first `k` rows.
    pub fn prefix(&self, k: usize) -> Self {
        WeightMatrix { rows: self.rows[..k].to_vec(), ncols: self.ncols }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    pub fn value(&self, exps: &[BigInt]) -> Vec<BigRational> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(exps)
                    .filter(|(w, _)| !w.is_zero())
                    .fold(BigRational::zero(), |acc, (w, e)| {
                        acc + w * BigRational::from_integer(e.clone())
                    })
            })
            .collect()
    }

    pub fn compare(&self, a: &[BigInt], b: &[BigInt]) -> Ordering {
        self.value(a).cmp(&self.value(b))
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigRational>> = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.ncols {
            let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot);
            let p = m[rank][col].clone();
            for r in 0..m.len() {
                if r != rank && !m[r][col].is_zero() {
                    let factor = &m[r][col] / &p;
                    for c in col..self.ncols {
                        let delta = &factor * &m[rank][c];
                        m[r][c] -= delta;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Position (1-based) of the first nonzero coordinate of the value of `u`,
    /// or 0 when the value vanishes.
    pub fn leading_position(&self, u: &[BigInt]) -> usize {
        self.value(u)
            .iter()
            .position(|v| !v.is_zero())
            .map_or(0, |p| p + 1)
    }

    /// Sign of the first nonzero coordinate of the value of `u`.
    pub fn sign(&self, u: &[BigInt]) -> Ordering {
        self.value(u)
            .iter()
            .find(|v| !v.is_zero())
            .map_or(Ordering::Equal, |v| if v.is_positive() { Ordering::Greater } else { Ordering::Less })
    }
}

impl fmt::Display for WeightMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            f.write_str("[")?;
            for (j, q) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{q}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

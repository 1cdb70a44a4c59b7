//! Congruence closure on finite carriers.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::finite::FiniteSemiring;

/// Default carrier cap for closure and lattice enumeration.
pub const ENUMERATION_CAP: usize = 6;

/// Disjoint-set forest with path halving; the smaller index becomes the root
/// so representatives are canonical.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    /// Returns true when two distinct classes were merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// An equivalence relation on `0..n`, stored as the smallest member of each
/// element's class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    classes: Vec<usize>,
}

impl Partition {
    pub fn diagonal(n: usize) -> Self {
        Partition { classes: (0..n).collect() }
    }

    pub fn full(n: usize) -> Self {
        Partition { classes: alloc::vec![0; n] }
    }

    /// From an arbitrary class labelling; relabels canonically.
    pub fn from_labels(labels: &[usize]) -> Self {
        let classes = labels
            .iter()
            .map(|l| labels.iter().position(|m| m == l).unwrap())
            .collect();
        Partition { classes }
    }

    fn from_union_find(uf: &mut UnionFind, n: usize) -> Self {
        Partition { classes: (0..n).map(|i| uf.find(i)).collect() }
    }

    pub fn size(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.classes[a] == self.classes[b]
    }

    pub fn num_classes(&self) -> usize {
        self.classes.iter().enumerate().filter(|(i, c)| *i == **c).count()
    }

    pub fn is_diagonal(&self) -> bool {
        self.num_classes() == self.size()
    }

    pub fn is_full(&self) -> bool {
        self.num_classes() == 1
    }

    /// `self ⊆ other` as relations.
    pub fn is_finer_than(&self, other: &Partition) -> bool {
        (0..self.size()).all(|i| other.same(i, self.classes[i]))
    }

    pub fn meet(&self, other: &Partition) -> Partition {
        let n = self.size();
        let classes = (0..n)
            .map(|i| (0..=i).find(|&j| self.same(i, j) && other.same(i, j)).unwrap())
            .collect();
        Partition { classes }
    }

    /// Non-diagonal generating pairs `(rep, member)`.
    pub fn generators(&self) -> Vec<(usize, usize)> {
        (0..self.size())
            .filter(|&i| self.classes[i] != i)
            .map(|i| (self.classes[i], i))
            .collect()
    }

    /// Members of each class, in carrier order.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        (0..self.size())
            .filter(|&i| self.classes[i] == i)
            .map(|r| (0..self.size()).filter(|&j| self.classes[j] == r).collect())
            .collect()
    }

    /// Closed under translations by every carrier element.
    pub fn is_congruence(&self, f: &FiniteSemiring) -> bool {
        let n = f.size();
        (0..n).all(|a| {
            let b = self.classes[a];
            (0..n).all(|c| self.same(f.add(a, c), f.add(b, c)) && self.same(f.mul(a, c), f.mul(b, c)))
        })
    }

    pub fn display<'a>(&'a self, f: &'a FiniteSemiring) -> impl fmt::Display + 'a {
        PartitionDisplay { p: self, f }
    }
}

struct PartitionDisplay<'a> {
    p: &'a Partition,
    f: &'a FiniteSemiring,
}

impl fmt::Display for PartitionDisplay<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        out.write_str("{")?;
        for (i, block) in self.p.blocks().iter().enumerate() {
            if i > 0 {
                out.write_str(" | ")?;
            }
            for (j, &e) in block.iter().enumerate() {
                if j > 0 {
                    out.write_str(",")?;
                }
                out.write_str(self.f.label(e))?;
            }
        }
        out.write_str("}")
    }
}

/// Least congruence of `f` containing every generator pair.
///
/// Each merged edge is pushed on a worklist and translated by `+c` and `*c`
/// for every carrier element `c`; new merges are enqueued until no class
/// changes. Translations generate all unary polynomial maps, so the fixpoint
/// is the generated congruence.
pub fn closure_finite(f: &FiniteSemiring, generators: &[(usize, usize)], cap: usize) -> Result<Partition> {
    let n = f.size();
    if n > cap {
        return Err(Error::CarrierCap { size: n, cap });
    }
    if let Some(&(a, b)) = generators.iter().find(|(a, b)| *a >= n || *b >= n) {
        return Err(Error::Invalid(alloc::format!("pair ({a},{b}) outside the carrier")));
    }
    let mut uf = UnionFind::new(n);
    let mut work: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in generators {
        if uf.union(a, b) {
            work.push((a, b));
        }
    }
    while let Some((a, b)) = work.pop() {
        for c in 0..n {
            for (x, y) in [(f.add(a, c), f.add(b, c)), (f.mul(a, c), f.mul(b, c))] {
                if uf.union(x, y) {
                    work.push((x, y));
                }
            }
        }
    }
    Ok(Partition::from_union_find(&mut uf, n))
}

/// Join of two congruences: closure of the union of their generators.
pub fn join(f: &FiniteSemiring, a: &Partition, b: &Partition, cap: usize) -> Result<Partition> {
    let mut gens = a.generators();
    gens.extend(b.generators());
    closure_finite(f, &gens, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{b_times_b, t3, FiniteSemiring};

    /// Oracle: iterate the rule set on the full relation matrix until stable.
    fn naive_closure(f: &FiniteSemiring, gens: &[(usize, usize)]) -> Partition {
        let n = f.size();
        let mut rel = alloc::vec![alloc::vec![false; n]; n];
        for i in 0..n {
            rel[i][i] = true;
        }
        for &(a, b) in gens {
            rel[a][b] = true;
            rel[b][a] = true;
        }
        loop {
            let mut changed = false;
            let snapshot = rel.clone();
            for a in 0..n {
                for b in 0..n {
                    if !snapshot[a][b] {
                        continue;
                    }
                    for c in 0..n {
                        for (x, y) in [(f.add(a, c), f.add(b, c)), (f.mul(a, c), f.mul(b, c)), (b, a)] {
                            if !rel[x][y] {
                                rel[x][y] = true;
                                changed = true;
                            }
                        }
                        if snapshot[b][c] && !rel[a][c] {
                            rel[a][c] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let labels: Vec<usize> = (0..n).map(|i| (0..n).find(|&j| rel[i][j]).unwrap()).collect();
        Partition::from_labels(&labels)
    }

    #[test]
    fn empty_generators_give_diagonal() {
        let p = closure_finite(&t3(), &[], ENUMERATION_CAP).unwrap();
        assert!(p.is_diagonal());
    }

    #[test]
    fn t3_one_a() {
        let t = t3();
        let p = closure_finite(&t, &[(1, 2)], ENUMERATION_CAP).unwrap();
        assert_eq!(p, naive_closure(&t, &[(1, 2)]));
        assert_eq!(alloc::format!("{}", p.display(&t)), "{0 | 1,a}");
    }

    #[test]
    fn b_one_zero_is_improper() {
        let b = FiniteSemiring::boolean();
        assert!(closure_finite(&b, &[(1, 0)], ENUMERATION_CAP).unwrap().is_full());
    }

    #[test]
    fn agrees_with_naive_closure_on_all_single_pairs() {
        for f in [t3(), b_times_b(), FiniteSemiring::boolean()] {
            let n = f.size();
            for a in 0..n {
                for b in 0..n {
                    let fast = closure_finite(&f, &[(a, b)], ENUMERATION_CAP).unwrap();
                    assert_eq!(fast, naive_closure(&f, &[(a, b)]));
                    assert!(fast.is_congruence(&f));
                }
            }
        }
    }

    #[test]
    fn cap_enforced() {
        let bb = b_times_b();
        assert!(matches!(closure_finite(&bb, &[], 3), Err(Error::CarrierCap { size: 4, cap: 3 })));
    }

    #[test]
    fn meet_and_refinement() {
        let bb = b_times_b();
        let i = |l: &str| bb.index_of(l).unwrap();
        // kernels of the two projections
        let p1 = closure_finite(&bb, &[(i("00"), i("01"))], ENUMERATION_CAP).unwrap();
        let p2 = closure_finite(&bb, &[(i("00"), i("10"))], ENUMERATION_CAP).unwrap();
        assert_eq!(p1.num_classes(), 2);
        assert!(p1.meet(&p2).is_diagonal());
        assert!(Partition::diagonal(4).is_finer_than(&p1));
        assert!(!p1.is_finer_than(&p2));
        assert!(join(&bb, &p1, &p2, ENUMERATION_CAP).unwrap().is_full());
    }
}

//! Congruence lattices and Krull dimension of finite semirings.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::closure::{closure_finite, join, Partition};
use crate::congruence::Congruence;
use crate::error::Result;
use crate::finite::FiniteSemiring;
use crate::primes::{is_irreducible_partition, is_prime_partition, is_qc_partition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeNode {
    pub partition: Partition,
    pub prime: bool,
    pub qc: bool,
    pub irreducible: bool,
}

#[derive(Clone, Debug)]
pub struct CongruenceLattice {
    semiring: Arc<FiniteSemiring>,
    nodes: Vec<LatticeNode>,
}

/// All congruences of `f`, from the diagonal upward: principal congruences
/// joined until no new partition appears.
pub fn enumerate_congruences_finite(f: Arc<FiniteSemiring>, cap: usize) -> Result<CongruenceLattice> {
    let n = f.size();
    let mut principals: Vec<Partition> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let p = closure_finite(&f, &[(a, b)], cap)?;
            if !principals.contains(&p) {
                principals.push(p);
            }
        }
    }
    let mut seen: BTreeSet<Partition> = BTreeSet::new();
    seen.insert(Partition::diagonal(n));
    let mut work: Vec<Partition> = Vec::new();
    for p in &principals {
        if seen.insert(p.clone()) {
            work.push(p.clone());
        }
    }
    while let Some(p) = work.pop() {
        for q in &principals {
            if q.is_finer_than(&p) {
                continue;
            }
            let j = join(&f, &p, q, cap)?;
            if seen.insert(j.clone()) {
                work.push(j);
            }
        }
    }
    let mut parts: Vec<Partition> = seen.into_iter().collect();
    parts.sort_by(|a, b| b.num_classes().cmp(&a.num_classes()).then_with(|| a.cmp(b)));
    let nodes = parts
        .iter()
        .map(|p| LatticeNode {
            partition: p.clone(),
            prime: is_prime_partition(&f, p),
            qc: is_qc_partition(&f, p),
            irreducible: is_irreducible_partition(p, &parts),
        })
        .collect();
    Ok(CongruenceLattice { semiring: f, nodes })
}

impl CongruenceLattice {
    pub fn semiring(&self) -> &Arc<FiniteSemiring> {
        &self.semiring
    }

    /// Nodes ordered by decreasing number of classes (diagonal first).
    pub fn nodes(&self) -> &[LatticeNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn partitions(&self) -> Vec<Partition> {
        self.nodes.iter().map(|n| n.partition.clone()).collect()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.nodes.iter().position(|n| n.partition == *p)
    }

    pub fn congruence(&self, i: usize) -> Result<Congruence> {
        Congruence::finite(self.semiring.clone(), self.nodes[i].partition.clone())
    }

    /// `i ⊊ j`.
    pub fn strictly_below(&self, i: usize, j: usize) -> bool {
        i != j && self.nodes[i].partition.is_finer_than(&self.nodes[j].partition)
    }

    /// Covering pairs `(i, j)` of the containment order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.strictly_below(i, j) && !(0..n).any(|k| self.strictly_below(i, k) && self.strictly_below(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn primes(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.nodes[i].prime).collect()
    }

    /// Longest chain of primes under strict inclusion, bottom first.
    pub fn longest_prime_chain(&self) -> Vec<usize> {
        let n = self.len();
        // nodes are sorted so anything strictly below `i` comes earlier
        let mut best: Vec<Option<(usize, Option<usize>)>> = alloc::vec![None; n];
        for j in 0..n {
            if !self.nodes[j].prime {
                continue;
            }
            let mut entry = (0, None);
            for i in 0..j {
                if let Some((len, _)) = best[i] {
                    if self.strictly_below(i, j) && len + 1 > entry.0 {
                        entry = (len + 1, Some(i));
                    }
                }
            }
            best[j] = Some(entry);
        }
        let Some(end) = (0..n).filter(|&j| best[j].is_some()).max_by_key(|&j| (best[j].unwrap().0, core::cmp::Reverse(j)))
        else {
            return Vec::new();
        };
        let mut chain = alloc::vec![end];
        let mut cur = end;
        while let Some((_, Some(prev))) = best[cur] {
            chain.push(prev);
            cur = prev;
        }
        chain.reverse();
        chain
    }

    /// Nodes whose quotient is isomorphic to B.
    pub fn boolean_quotients(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| {
                let p = &self.nodes[i].partition;
                p.num_classes() == 2 && self.semiring.quotient(p.classes()).is_ok_and(|q| q.is_boolean())
            })
            .collect()
    }
}

/// Krull dimension by enumeration.
pub fn dim_finite(f: Arc<FiniteSemiring>, cap: usize) -> Result<usize> {
    let lattice = enumerate_congruences_finite(f, cap)?;
    Ok(lattice.longest_prime_chain().len().saturating_sub(1))
}

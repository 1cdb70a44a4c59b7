//! Table-defined finite idempotent semirings.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest carrier accepted by [`FiniteSemiring::from_description`].
pub const VALIDATION_CAP: usize = 16;

/// Raw, unvalidated tables as read from a corpus file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableDescription {
    pub name: String,
    pub carrier: Vec<String>,
    pub add: Vec<Vec<String>>,
    pub mul: Vec<Vec<String>>,
    pub zero: String,
    pub one: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: &'static str,
    /// Carrier indices of the offending elements.
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A commutative semiring with idempotent addition on the carrier `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSemiring {
    name: String,
    labels: Vec<String>,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainReport {
    pub cancellative: bool,
    /// `(a, b, c)` with `a*b == a*c`, `a != 0`, `b != c`.
    pub cancellation_witness: Option<(usize, usize, usize)>,
    pub totally_ordered: bool,
    /// An incomparable pair.
    pub order_witness: Option<(usize, usize)>,
    pub is_domain: bool,
}

impl FiniteSemiring {
    /// Validates the tables and returns the structure, or an error carrying
    /// every violated axiom.
    pub fn from_description(desc: &TableDescription) -> Result<Self> {
        let n = desc.carrier.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty carrier".into()));
        }
        if n > VALIDATION_CAP {
            return Err(Error::CarrierCap { size: n, cap: VALIDATION_CAP });
        }
        for (i, l) in desc.carrier.iter().enumerate() {
            if desc.carrier[..i].contains(l) {
                return Err(Error::MalformedTable(alloc::format!("duplicate label {l:?}")));
            }
        }
        let index = |l: &str| -> Result<usize> {
            desc.carrier
                .iter()
                .position(|c| c == l)
                .ok_or_else(|| Error::MalformedTable(alloc::format!("unknown label {l:?}")))
        };
        let table = |name: &str, t: &[Vec<String>]| -> Result<Vec<usize>> {
            if t.len() != n || t.iter().any(|row| row.len() != n) {
                return Err(Error::MalformedTable(alloc::format!("{name} table is not {n}x{n}")));
            }
            t.iter().flatten().map(|l| index(l)).collect()
        };
        let s = FiniteSemiring {
            name: desc.name.clone(),
            labels: desc.carrier.clone(),
            add: table("add", &desc.add)?,
            mul: table("mul", &desc.mul)?,
            zero: index(&desc.zero)?,
            one: index(&desc.one)?,
        };
        let report = s.check_axioms();
        if report.passed() {
            Ok(s)
        } else {
            Err(Error::Axioms(report))
        }
    }

    /// Builds from index tables, validating the axioms.
    pub fn from_indices(
        name: &str,
        labels: Vec<String>,
        add: Vec<usize>,
        mul: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let n = labels.len();
        if add.len() != n * n || mul.len() != n * n || zero >= n || one >= n {
            return Err(Error::MalformedTable("index tables do not match the carrier".into()));
        }
        if add.iter().chain(&mul).any(|&v| v >= n) {
            return Err(Error::MalformedTable("table entry out of range".into()));
        }
        let s = FiniteSemiring { name: name.into(), labels, add, mul, zero, one };
        let report = s.check_axioms();
        if report.passed() {
            Ok(s)
        } else {
            Err(Error::Axioms(report))
        }
    }

    /// The two-element semifield.
    pub fn boolean() -> Self {
        FiniteSemiring {
            name: "B".into(),
            labels: alloc::vec!["0".into(), "1".into()],
            add: alloc::vec![0, 1, 1, 1],
            mul: alloc::vec![0, 0, 0, 1],
            zero: 0,
            one: 1,
        }
    }

    pub fn description(&self) -> TableDescription {
        let n = self.size();
        let tab = |t: &[usize]| {
            (0..n)
                .map(|i| (0..n).map(|j| self.labels[t[i * n + j]].clone()).collect())
                .collect()
        };
        TableDescription {
            name: self.name.clone(),
            carrier: self.labels.clone(),
            add: tab(&self.add),
            mul: tab(&self.mul),
            zero: self.labels[self.zero].clone(),
            one: self.labels[self.one].clone(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size() + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size() + b]
    }

    /// `a <= b` in the natural order, i.e. `a + b == b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.add(a, b) == b
    }

    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.size();
        let mut v = Vec::new();
        let mut push = |axiom: &'static str, w: &[usize]| {
            v.push(Violation { axiom, witness: w.to_vec() })
        };
        for a in 0..n {
            if self.add(a, a) != a {
                push("additive idempotence", &[a]);
            }
            if self.add(a, self.zero) != a {
                push("zero is the additive identity", &[a]);
            }
            if self.mul(a, self.zero) != self.zero {
                push("zero annihilates", &[a]);
            }
            if self.mul(a, self.one) != a {
                push("one is the multiplicative identity", &[a]);
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    push("additive commutativity", &[a, b]);
                }
                if self.mul(a, b) != self.mul(b, a) {
                    push("multiplicative commutativity", &[a, b]);
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        push("additive associativity", &[a, b, c]);
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        push("multiplicative associativity", &[a, b, c]);
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        push("distributivity", &[a, b, c]);
                    }
                }
            }
        }
        AxiomReport { violations: v }
    }

    pub fn domain_report(&self) -> DomainReport {
        let n = self.size();
        let mut cancellation_witness = None;
        'outer: for a in 0..n {
            if a == self.zero {
                continue;
            }
            for b in 0..n {
                for c in (b + 1)..n {
                    if self.mul(a, b) == self.mul(a, c) {
                        cancellation_witness = Some((a, b, c));
                        break 'outer;
                    }
                }
            }
        }
        let mut order_witness = None;
        'ord: for a in 0..n {
            for b in (a + 1)..n {
                let s = self.add(a, b);
                if s != a && s != b {
                    order_witness = Some((a, b));
                    break 'ord;
                }
            }
        }
        let cancellative = cancellation_witness.is_none();
        let totally_ordered = order_witness.is_none();
        DomainReport {
            cancellative,
            cancellation_witness,
            totally_ordered,
            order_witness,
            is_domain: cancellative && totally_ordered,
        }
    }

    /// Quotient by a partition given as a class representative per element.
    pub fn quotient(&self, classes: &[usize]) -> Result<Self> {
        let n = self.size();
        let reps: Vec<usize> = (0..n).filter(|&i| classes[i] == i).collect();
        let pos = |i: usize| reps.iter().position(|&r| r == classes[i]).unwrap();
        let m = reps.len();
        let mut add = Vec::with_capacity(m * m);
        let mut mul = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                add.push(pos(self.add(a, b)));
                mul.push(pos(self.mul(a, b)));
            }
        }
        let labels = reps
            .iter()
            .map(|&r| {
                let members: Vec<&str> =
                    (0..n).filter(|&i| classes[i] == r).map(|i| self.label(i)).collect();
                alloc::format!("[{}]", members.join(","))
            })
            .collect();
        Self::from_indices(
            &alloc::format!("{}/~", self.name),
            labels,
            add,
            mul,
            pos(self.zero),
            pos(self.one),
        )
    }

    /// True when this semiring is isomorphic to B.
    pub fn is_boolean(&self) -> bool {
        self.size() == 2 && self.add(self.one, self.one) == self.one && self.zero != self.one
    }

    /// Direct product with componentwise operations; labels are `a.b`.
    pub fn product(&self, other: &FiniteSemiring) -> Result<Self> {
        let (n, m) = (self.size(), other.size());
        let idx = |a: usize, b: usize| a * m + b;
        let mut labels = Vec::with_capacity(n * m);
        for a in 0..n {
            for b in 0..m {
                labels.push(alloc::format!("{}{}", self.label(a), other.label(b)));
            }
        }
        let size = n * m;
        let mut add = alloc::vec![0; size * size];
        let mut mul = alloc::vec![0; size * size];
        for a1 in 0..n {
            for b1 in 0..m {
                for a2 in 0..n {
                    for b2 in 0..m {
                        let i = idx(a1, b1) * size + idx(a2, b2);
                        add[i] = idx(self.add(a1, a2), other.add(b1, b2));
                        mul[i] = idx(self.mul(a1, a2), other.mul(b1, b2));
                    }
                }
            }
        }
        let name = alloc::format!("{}x{}", self.name, other.name);
        Self::from_indices(
            &name,
            labels,
            add,
            mul,
            idx(self.zero, other.zero),
            idx(self.one, other.one),
        )
    }
}

/// The three-element chain `0 < 1 < a` with `a * a = a`.
pub fn t3() -> FiniteSemiring {
    // carrier order: 0, 1, a
    FiniteSemiring::from_indices(
        "T3",
        alloc::vec!["0".to_string(), "1".to_string(), "a".to_string()],
        alloc::vec![0, 1, 2, 1, 1, 2, 2, 2, 2],
        alloc::vec![0, 0, 0, 0, 1, 2, 0, 2, 2],
        0,
        1,
    )
    .expect("T3 tables are valid")
}

/// `B x B` with carrier `00, 01, 10, 11`.
pub fn b_times_b() -> FiniteSemiring {
    let b = FiniteSemiring::boolean();
    let mut p = b.product(&b).expect("product of valid semirings");
    p.name = "BxB".into();
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t3_desc(aa: &str) -> TableDescription {
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        TableDescription {
            name: "T3".into(),
            carrier: s(&["0", "1", "a"]),
            add: alloc::vec![s(&["0", "1", "a"]), s(&["1", "1", "a"]), s(&["a", "a", "a"])],
            mul: alloc::vec![s(&["0", "0", "0"]), s(&["0", "1", "a"]), s(&["0", "a", aa])],
            zero: "0".into(),
            one: "1".into(),
        }
    }

    #[test]
    fn boolean_tables_validate() {
        let b = FiniteSemiring::boolean();
        assert!(b.check_axioms().passed());
        let again = FiniteSemiring::from_description(&b.description()).unwrap();
        assert_eq!(again, b);
    }

    #[test]
    fn t3_validates_and_mutation_fails() {
        let t = FiniteSemiring::from_description(&t3_desc("a")).unwrap();
        assert_eq!(t, t3());
        match FiniteSemiring::from_description(&t3_desc("1")) {
            Err(Error::Axioms(report)) => {
                assert!(!report.passed());
                let d = report.violations.iter().find(|v| v.axiom == "distributivity");
                // a * (1 + a) = a * a = 1, but a*1 + a*a = a + 1 = a
                assert!(d.is_some());
            }
            other => panic!("expected axiom failure, got {other:?}"),
        }
    }

    #[test]
    fn malformed_tables() {
        let mut d = t3_desc("a");
        d.add.pop();
        assert!(matches!(FiniteSemiring::from_description(&d), Err(Error::MalformedTable(_))));
        let mut d = t3_desc("a");
        d.mul[2][2] = "q".into();
        assert!(matches!(FiniteSemiring::from_description(&d), Err(Error::MalformedTable(_))));
    }

    #[test]
    fn domain_reports() {
        let b = FiniteSemiring::boolean().domain_report();
        assert!(b.cancellative && b.totally_ordered && b.is_domain);

        let t = t3().domain_report();
        assert!(!t.cancellative && t.totally_ordered && !t.is_domain);
        // a * 1 == a * a with a != 0 and 1 != a
        assert_eq!(t.cancellation_witness, Some((2, 1, 2)));

        let bb = b_times_b();
        let r = bb.domain_report();
        assert!(!r.totally_ordered && !r.is_domain);
        let (x, y) = r.order_witness.unwrap();
        assert!(!bb.leq(x, y) && !bb.leq(y, x));
        // (1,0) * (0,1) = 0 = (1,0) * 0: zero divisors, so not cancellative
        assert!(!r.cancellative);
    }

    #[test]
    fn natural_order_is_partial_order() {
        for s in [FiniteSemiring::boolean(), t3(), b_times_b()] {
            let n = s.size();
            for a in 0..n {
                assert!(s.leq(a, a));
                assert!(s.leq(s.zero(), a));
                for b in 0..n {
                    if s.leq(a, b) && s.leq(b, a) {
                        assert_eq!(a, b);
                    }
                    for c in 0..n {
                        if s.leq(a, b) && s.leq(b, c) {
                            assert!(s.leq(a, c));
                        }
                    }
                }
            }
        }
    }
}

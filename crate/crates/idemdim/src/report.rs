//! JSON forms of verification reports and lattices.

use idemdim_core::chain::VerificationReport;
use idemdim_core::lattice::CongruenceLattice;
use serde::Serialize;

#[derive(Serialize)]
pub struct CheckJson<'a> {
    pub name: &'a str,
    pub passed: bool,
    pub detail: &'a str,
}

#[derive(Serialize)]
pub struct ReportJson<'a> {
    pub claim: &'a str,
    pub status: String,
    pub ring: &'a str,
    pub expected: Option<usize>,
    pub observed: Option<usize>,
    pub chain: &'a [String],
    pub witnesses: &'a [String],
    pub checks: Vec<CheckJson<'a>>,
    pub counterexample: Option<&'a str>,
    pub notes: &'a [String],
}

impl<'a> From<&'a VerificationReport> for ReportJson<'a> {
    fn from(r: &'a VerificationReport) -> Self {
        ReportJson {
            claim: &r.claim,
            status: r.status.to_string(),
            ring: &r.ring,
            expected: r.expected,
            observed: r.observed,
            chain: &r.members,
            witnesses: &r.witnesses,
            checks: r
                .checks
                .iter()
                .map(|c| CheckJson { name: &c.name, passed: c.passed, detail: &c.detail })
                .collect(),
            counterexample: r.counterexample.as_deref(),
            notes: &r.notes,
        }
    }
}

pub fn report_json(r: &VerificationReport) -> serde_json::Value {
    serde_json::to_value(ReportJson::from(r)).expect("reports serialize")
}

#[derive(Serialize)]
pub struct NodeJson {
    pub index: usize,
    pub classes: String,
    pub prime: bool,
    pub qc: bool,
    pub irreducible: bool,
}

pub fn lattice_json(l: &CongruenceLattice) -> serde_json::Value {
    let f = l.semiring();
    let nodes: Vec<NodeJson> = l
        .nodes()
        .iter()
        .enumerate()
        .map(|(i, n)| NodeJson {
            index: i,
            classes: n.partition.display(f).to_string(),
            prime: n.prime,
            qc: n.qc,
            irreducible: n.irreducible,
        })
        .collect();
    let covers: Vec<[usize; 2]> = l.covers().into_iter().map(|(a, b)| [a, b]).collect();
    serde_json::json!({
        "semiring": f.name(),
        "size": f.size(),
        "congruences": nodes,
        "covers": covers,
        "primes": l.primes(),
        "longest_prime_chain": l.longest_prime_chain(),
    })
}

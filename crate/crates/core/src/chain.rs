//! Prime chains in polynomial and Laurent semirings and their verification.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::closure::ENUMERATION_CAP;
use crate::congruence::{Congruence, Family, Pair, Surjection};
use crate::element::{Element, Ring};
use crate::error::{Error, Result};
use crate::finite::FiniteSemiring;
use crate::fractions::{self, principal_chain, semifield_dim};
use crate::lattice::{dim_finite, enumerate_congruences_finite};
use crate::poly::{Poly, PolyRing};
use crate::primes::{make_lifted_prime, make_weight_prime};
use crate::sample::Sampler;
use crate::scalar::{Base, Scalar};
use crate::weight::WeightMatrix;

/// `P_0 ⊂ P_1 ⊂ ... ⊂ P_m` over one ring.
#[derive(Clone, Debug)]
pub struct PrimeChain {
    pub ring: Ring,
    pub members: Vec<Arc<Congruence>>,
    /// `witnesses[i] ∈ P_(i+1) \ P_i`.
    pub witnesses: Vec<Pair>,
    /// `None` for a trivial kernel, otherwise a nonzero kernel element.
    pub kernels: Vec<Option<Element>>,
    /// Variable dropped when restricting to the coefficient ring.
    pub restrict_var: Option<usize>,
    /// Pairs of the restricted ring used to tell restrictions apart.
    pub probes: Vec<Pair>,
}

impl PrimeChain {
    /// Number of strict inclusions.
    pub fn len(&self) -> usize {
        self.members.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.members.len() <= 1
    }

    pub fn top(&self) -> &Arc<Congruence> {
        self.members.last().expect("chains are nonempty")
    }

    fn finish(ring: Ring, members: Vec<Arc<Congruence>>, witnesses: Vec<Pair>, restrict_var: Option<usize>, probes: Vec<Pair>) -> Result<Self> {
        let kernels = members.iter().map(|c| kernel_witness(c)).collect::<Result<_>>()?;
        Ok(PrimeChain { ring, members, witnesses, kernels, restrict_var, probes })
    }

    /// The ring the restrictions live on.
    pub fn restricted_ring(&self) -> Option<Ring> {
        let (Ring::Poly(r), Some(v)) = (&self.ring, self.restrict_var) else { return None };
        Some(if r.nvars == 1 { Ring::Base(r.base.clone()) } else { Ring::Poly(r.drop_var(v)) })
    }
}

fn kernel_witness(c: &Congruence) -> Result<Option<Element>> {
    if c.has_trivial_kernel()? {
        return Ok(None);
    }
    if let Some(elems) = c.ring().base().elements() {
        for s in elems.into_iter().filter(|s| !s.is_zero()) {
            let e = c.ring().constant(s)?;
            if c.kernel_member(&e)? {
                return Ok(Some(e));
            }
        }
    }
    Err(Error::Unsupported(alloc::format!("no kernel witness for {c}")))
}

fn poly_var(r: &PolyRing, i: usize) -> Element {
    Element::Poly(Poly::var_power(r, i, 1).expect("variable in range"))
}

fn ring_of(base: &Base, nvars: usize, laurent: bool) -> Ring {
    if nvars == 0 {
        Ring::Base(base.clone())
    } else {
        Ring::Poly(PolyRing::new(base.clone(), nvars, laurent))
    }
}

/// Witnesses `(x_k, x_(k+1))`, ending with `(x_n, 1)`, for the row-prefix
/// chain on the variables `first..n`, in descending order of rows.
fn weight_witnesses(r: &PolyRing, first: usize) -> Vec<Pair> {
    let one = Element::Poly(Poly::one(r));
    (first..r.nvars)
        .rev()
        .map(|k| {
            let next = if k + 1 < r.nvars { poly_var(r, k + 1) } else { one.clone() };
            Pair { lhs: poly_var(r, k), rhs: next }
        })
        .collect()
}

/// Row-prefix chain `P_[e1..en] ⊂ ... ⊂ P_[e1] ⊂ P_0` over B.
pub fn build_weight_chain(nvars: usize, laurent: bool) -> Result<PrimeChain> {
    if nvars == 0 {
        return Err(Error::Invalid("a chain needs at least one variable".into()));
    }
    let r = PolyRing::new(Base::Bool, nvars, laurent);
    let ring = Ring::Poly(r.clone());
    let full = WeightMatrix::identity(nvars);
    let mut members = Vec::new();
    for k in (1..=nvars).rev() {
        members.push(Arc::new(make_weight_prime(full.prefix(k), ring.clone())?));
    }
    members.push(Arc::new(make_weight_prime(WeightMatrix::zero(nvars), ring.clone())?));
    let witnesses = weight_witnesses(&r, 0);
    let probes = if nvars == 1 {
        alloc::vec![Pair::new(Scalar::Bool(true), Scalar::Bool(false))]
    } else {
        weight_witnesses(&r.drop_var(0), 0)
    };
    PrimeChain::finish(ring, members, witnesses, Some(0), probes)
}

/// The chain of congruences of a base with trivial kernel, with witnesses.
pub fn base_chain(base: &Base) -> Result<(Vec<Arc<Congruence>>, Vec<Pair>)> {
    let ring = Ring::Base(base.clone());
    let members: Vec<Arc<Congruence>> = principal_chain(&ring)?.into_iter().map(Arc::new).collect();
    let witnesses = members[1..]
        .iter()
        .map(|c| match c.family() {
            Family::Principal(g) => Pair::new(base.one(), g.clone()),
            _ => unreachable!("principal chains hold principal congruences above the diagonal"),
        })
        .collect();
    Ok((members, witnesses))
}

fn embed_pair(p: &Pair, r: &PolyRing) -> Result<Pair> {
    let up = |e: &Element| -> Result<Element> {
        Ok(Element::Poly(match e {
            Element::Scalar(s) => Poly::constant(r, s.clone())?,
            Element::Poly(q) => Poly::embed(q, r, r.nvars - 1, &BigInt::zero())?,
            Element::Frac(_) => return Err(Error::RingMismatch { expected: r.name(), found: e.ring_name() }),
        }))
    };
    Ok(Pair { lhs: up(&p.lhs)?, rhs: up(&p.rhs)? })
}

/// Lift a chain of the base one variable at a time; each level adds the
/// collapse of the previous top.
pub fn build_lifted_chain(
    base: &Base,
    start: (Vec<Arc<Congruence>>, Vec<Pair>),
    nvars: usize,
    laurent: bool,
) -> Result<PrimeChain> {
    if nvars == 0 {
        return Err(Error::Invalid("a chain needs at least one variable".into()));
    }
    let (mut members, mut witnesses) = start;
    let mut probes = witnesses.clone();
    for level in 1..=nvars {
        let r = PolyRing::new(base.clone(), level, laurent);
        probes = witnesses.clone();
        let mut next = Vec::new();
        for c in &members {
            next.push(Arc::new(make_lifted_prime(c.clone(), r.clone(), false)?));
        }
        let top = members.last().expect("chains are nonempty").clone();
        next.push(Arc::new(make_lifted_prime(top, r.clone(), true)?));
        let mut w: Vec<Pair> = witnesses.iter().map(|p| embed_pair(p, &r)).collect::<Result<_>>()?;
        w.push(Pair { lhs: poly_var(&r, level - 1), rhs: Element::Poly(Poly::one(&r)) });
        members = next;
        witnesses = w;
    }
    let ring = ring_of(base, nvars, laurent);
    PrimeChain::finish(ring, members, witnesses, Some(nvars - 1), probes)
}

fn lift_coefficients(e: &Element, target: &Base) -> Result<Element> {
    let up = |c: &Scalar| -> Result<Scalar> {
        match c {
            Scalar::Bool(true) => Ok(target.one()),
            Scalar::Bool(false) => Ok(target.zero()),
            _ => Err(Error::UnsupportedBase(c.kind())),
        }
    };
    match e {
        Element::Scalar(s) => Ok(Element::Scalar(up(s)?)),
        Element::Poly(p) => {
            let r = PolyRing::new(target.clone(), p.ring().nvars, p.ring().laurent);
            Ok(Element::Poly(p.map_coefficients(&r, up)?))
        }
        Element::Frac(_) => Err(Error::Unsupported("fractions in a pulled-back chain".into())),
    }
}

fn lift_pair(p: &Pair, target: &Base) -> Result<Pair> {
    Ok(Pair { lhs: lift_coefficients(&p.lhs, target)?, rhs: lift_coefficients(&p.rhs, target)? })
}

/// Pull the B chain back along `A[x] ↠ (A/p)[x] ≅ B[x]`, where `p` is the
/// bottom of a longest prime chain of the finite semiring `A`.
pub fn build_pullback_chain(f: Arc<FiniteSemiring>, nvars: usize, laurent: bool, cap: usize) -> Result<PrimeChain> {
    let lattice = enumerate_congruences_finite(f.clone(), cap)?;
    let chain = lattice.longest_prime_chain();
    let Some(&bottom) = chain.first() else {
        return Err(Error::UnsupportedBase(alloc::format!("{} has no prime congruence", f.name())));
    };
    let p = &lattice.nodes()[bottom].partition;
    let map = Arc::new(Surjection::onto_boolean(f.clone(), p).map_err(|_| {
        Error::UnsupportedBase(alloc::format!("{}/{} is not B", f.name(), p.display(&f)))
    })?);
    let target = Base::Finite(f.clone());
    let b = build_weight_chain(nvars, laurent)?;
    let ring = Ring::Poly(PolyRing::new(target.clone(), nvars, laurent));
    let members = b
        .members
        .iter()
        .map(|inner| Arc::new(Congruence::raw(ring.clone(), Family::QuotientPullback { map: map.clone(), inner: inner.clone() })))
        .collect();
    let witnesses = b.witnesses.iter().map(|w| lift_pair(w, &target)).collect::<Result<_>>()?;
    let probes = b.probes.iter().map(|w| lift_pair(w, &target)).collect::<Result<_>>()?;
    PrimeChain::finish(ring, members, witnesses, b.restrict_var, probes)
}

/// A maximal-length chain of primes in `A[x_1..x_n]` or `A(x_1..x_n)`.
pub fn build_polynomial_chain(base: &Base, nvars: usize, laurent: bool, cap: usize) -> Result<PrimeChain> {
    match base {
        Base::Bool => build_weight_chain(nvars, laurent),
        Base::Finite(f) => build_pullback_chain(f.clone(), nvars, laurent, cap),
        Base::IntMax | Base::RatMax | Base::Monomial(_) => build_lifted_chain(base, base_chain(base)?, nvars, laurent),
    }
}

/// Krull dimension of a supported base.
pub fn base_dim(base: &Base, cap: usize) -> Result<usize> {
    match base {
        Base::Finite(f) => dim_finite(f.clone(), cap),
        Base::Monomial(m) if !m.is_semifield() => Ok(base_chain(base)?.0.len() - 1),
        _ => semifield_dim(base),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: String,
    pub status: Status,
    pub ring: String,
    pub expected: Option<usize>,
    pub observed: Option<usize>,
    pub members: Vec<String>,
    pub witnesses: Vec<String>,
    pub checks: Vec<Check>,
    pub counterexample: Option<String>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn new(claim: &str, ring: String) -> Self {
        VerificationReport {
            claim: claim.into(),
            status: Status::Pass,
            ring,
            expected: None,
            observed: None,
            members: Vec::new(),
            witnesses: Vec::new(),
            checks: Vec::new(),
            counterexample: None,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn check(&mut self, name: &str, passed: bool, detail: String) {
        if !passed {
            self.status = Status::Fail;
            if self.counterexample.is_none() {
                self.counterexample = Some(alloc::format!("{name}: {detail}"));
            }
        }
        self.checks.push(Check { name: name.into(), passed, detail });
    }

    fn absorb(&mut self, other: VerificationReport) {
        self.members = other.members;
        self.witnesses = other.witnesses;
        for c in other.checks {
            self.check(&c.name, c.passed, c.detail);
        }
        self.notes.extend(other.notes);
    }

    fn fail_with(&mut self, name: &str, e: &Error) {
        self.check(name, false, e.to_string());
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "claim: {}", self.claim)?;
        writeln!(f, "ring: {}", self.ring)?;
        if !self.members.is_empty() {
            writeln!(f, "chain:")?;
            for (i, m) in self.members.iter().enumerate() {
                writeln!(f, "  P{i} = {m}")?;
            }
        }
        if !self.witnesses.is_empty() {
            writeln!(f, "witnesses:")?;
            for (i, w) in self.witnesses.iter().enumerate() {
                writeln!(f, "  P{} \\ P{}: {w}", i + 1, i)?;
            }
        }
        for c in &self.checks {
            writeln!(f, "[{}] {}: {}", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail)?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        if let Some(ce) = &self.counterexample {
            writeln!(f, "counterexample: {ce}")?;
        }
        match self.observed {
            Some(d) => write!(f, "{} dim = {d}", self.status),
            None => write!(f, "{}", self.status),
        }
    }
}

/// Sampling effort for verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Effort {
    pub seed: u64,
    pub samples: usize,
}

impl Default for Effort {
    fn default() -> Self {
        Effort { seed: crate::sample::DEFAULT_SEED, samples: 200 }
    }
}

fn member_or(c: &Congruence, p: &Pair) -> core::result::Result<bool, String> {
    c.member(p).map_err(|e| e.to_string())
}

/// Indices `i` where the restrictions of `P_i` and `P_(i+1)` agree on every
/// probe pair.
fn restriction_equalities(chain: &PrimeChain, sampler: &mut Sampler, samples: usize) -> Result<Vec<usize>> {
    let Some(sub) = chain.restricted_ring() else { return Ok(Vec::new()) };
    let var = chain.restrict_var.expect("restricted ring implies a variable");
    let restricted: Vec<Congruence> =
        chain.members.iter().map(|c| c.restrict_to_subring(var)).collect::<Result<_>>()?;
    let mut probes = chain.probes.clone();
    for _ in 0..samples {
        probes.push(sampler.pair(&sub));
    }
    let mut equal = Vec::new();
    for i in 0..restricted.len().saturating_sub(1) {
        let mut same = true;
        for p in &probes {
            if restricted[i].member(p)? != restricted[i + 1].member(p)? {
                same = false;
                break;
            }
        }
        if same {
            equal.push(i);
        }
    }
    Ok(equal)
}

/// Strictness, primality, sampled inclusion, kernel annotations and
/// stabilization of restrictions. Failures are reported, never raised.
pub fn verify_chain(chain: &PrimeChain, effort: Effort) -> VerificationReport {
    let mut report = VerificationReport::new("chain", chain.ring.name());
    report.members = chain.members.iter().map(|c| c.to_string()).collect();
    report.witnesses = chain.witnesses.iter().map(|w| w.to_string()).collect();
    report.observed = Some(chain.len());
    let mut sampler = Sampler::new(effort.seed);

    let mut prime_ok = true;
    let mut detail = alloc::format!("{} members prime by construction", chain.members.len());
    for (i, c) in chain.members.iter().enumerate() {
        match c.is_prime_by_contract() {
            Ok(true) if c.is_proper() => {}
            Ok(_) => {
                prime_ok = false;
                detail = alloc::format!("P{i} = {c} is not prime");
                break;
            }
            Err(e) => {
                prime_ok = false;
                detail = alloc::format!("P{i}: {e}");
                break;
            }
        }
    }
    report.check("prime", prime_ok, detail);

    let mut strict_ok = true;
    let mut detail = alloc::format!("{} witnesses verified", chain.witnesses.len());
    for i in 0..chain.len() {
        let Some(w) = chain.witnesses.get(i) else {
            strict_ok = false;
            detail = alloc::format!("no witness for P{i} ⊂ P{}", i + 1);
            break;
        };
        match (member_or(&chain.members[i + 1], w), member_or(&chain.members[i], w)) {
            (Ok(true), Ok(false)) => {}
            (Ok(upper), Ok(lower)) => {
                strict_ok = false;
                detail = alloc::format!("witness {w}: in P{} = {upper}, in P{i} = {lower}", i + 1);
                break;
            }
            (Err(e), _) | (_, Err(e)) => {
                strict_ok = false;
                detail = e;
                break;
            }
        }
    }
    report.check("strict", strict_ok, detail);

    let ring = chain.ring.clone();
    let mut incl_ok = true;
    let mut tested = 0usize;
    let mut detail = String::new();
    'outer: for _ in 0..effort.samples {
        let mut cands = alloc::vec![sampler.pair(&ring)];
        if !chain.witnesses.is_empty() {
            let w = &chain.witnesses[sampler.below(chain.witnesses.len())];
            let (h, g) = (sampler.element(&ring), sampler.element(&ring));
            let moved = w.scale(&h).and_then(|p| Ok(Pair { lhs: p.lhs.add(&g)?, rhs: p.rhs.add(&g)? }));
            if let Ok(p) = moved {
                cands.push(p);
            }
        }
        for p in cands {
            for i in 0..chain.len() {
                match (member_or(&chain.members[i], &p), member_or(&chain.members[i + 1], &p)) {
                    (Ok(true), Ok(false)) => {
                        incl_ok = false;
                        detail = alloc::format!("{p} in P{i} but not in P{}", i + 1);
                        break 'outer;
                    }
                    (Ok(true), Ok(true)) => tested += 1,
                    (Err(e), _) | (_, Err(e)) => {
                        incl_ok = false;
                        detail = e;
                        break 'outer;
                    }
                    _ => {}
                }
            }
        }
    }
    if incl_ok {
        detail = alloc::format!("{tested} sampled member pairs stay in the next congruence");
    }
    report.check("inclusion", incl_ok, detail);

    let mut kern_ok = true;
    let mut detail = String::new();
    let probes: Vec<Element> = (0..effort.samples).map(|_| sampler.nonzero_element(&ring)).collect();
    for (i, (c, k)) in chain.members.iter().zip(&chain.kernels).enumerate() {
        let bad = match k {
            Some(e) => match c.kernel_member(e) {
                Ok(true) if !e.is_zero() => None,
                Ok(_) => Some(alloc::format!("P{i}: annotated kernel element {e} is not in the kernel")),
                Err(err) => Some(err.to_string()),
            },
            None => probes.iter().find_map(|e| match c.kernel_member(e) {
                Ok(false) => None,
                Ok(true) => Some(alloc::format!("P{i}: {e} lies in a kernel annotated trivial")),
                Err(err) => Some(err.to_string()),
            }),
        };
        if let Some(b) = bad {
            kern_ok = false;
            detail = b;
            break;
        }
    }
    let all_trivial = chain.kernels.iter().all(Option::is_none);
    let all_equal = all_trivial
        || chain.kernels.iter().all(|k| {
            k.as_ref()
                .is_some_and(|e| chain.members.iter().all(|c| c.kernel_member(e).unwrap_or(false)))
        });
    if kern_ok {
        detail = alloc::format!(
            "kernels {}",
            if all_trivial {
                "all trivial"
            } else if all_equal {
                "all equal"
            } else {
                "differ"
            }
        );
    }
    report.check("kernels", kern_ok, detail);

    if all_equal && chain.restricted_ring().is_some() {
        match restriction_equalities(chain, &mut sampler, effort.samples) {
            Ok(eq) => {
                let steps: Vec<String> = eq.iter().map(|i| alloc::format!("P{i}|=P{}|", i + 1)).collect();
                let detail = if eq.is_empty() {
                    "restrictions strictly increase".into()
                } else {
                    alloc::format!("equalities: {}", steps.join(", "))
                };
                report.check("stabilizes-once", eq.len() <= 1, detail);
            }
            Err(e) => report.fail_with("stabilizes-once", &e),
        }
    }
    report
}

/// `c·a = c·b` with `a ≠ b` in `A[x]`, so the diagonal is not prime.
fn diagonal_not_prime(r: &PolyRing) -> Result<Pair> {
    let x = |e: i64| Poly::var_power(r, 0, e);
    let one = Poly::one(r);
    let c = one.add(&x(1)?)?;
    let a = one.add(&x(2)?)?;
    let b = a.add(&x(1)?)?;
    let ca = c.mul(&a)?;
    let cb = c.mul(&b)?;
    if ca != cb || a == b {
        return Err(Error::Invalid("cancellation example failed".into()));
    }
    Ok(Pair::new(ca, cb))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    /// `dim A(x) = dim A[x] = dim A + 1`.
    DPlusOne,
    /// `dim A = dim Frac(A)` for domains.
    TrivKerChain,
    /// `dim F(x_1..x_n) = dim F + n` for semifields.
    LaurentDim,
}

impl Claim {
    pub fn id(self) -> &'static str {
        match self {
            Claim::DPlusOne => "dplusone",
            Claim::TrivKerChain => "trivkerchain",
            Claim::LaurentDim => "laurentdim",
        }
    }

    pub fn parse(s: &str) -> Option<Claim> {
        match s {
            "dplusone" => Some(Claim::DPlusOne),
            "trivkerchain" => Some(Claim::TrivKerChain),
            "laurentdim" => Some(Claim::LaurentDim),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct TheoremParams {
    pub base: Base,
    pub nvars: usize,
    pub laurent: bool,
    pub cap: usize,
    pub effort: Effort,
}

impl TheoremParams {
    pub fn new(base: Base) -> Self {
        TheoremParams { base, nvars: 1, laurent: true, cap: ENUMERATION_CAP, effort: Effort::default() }
    }
}

pub fn verify_theorems(claim: Claim, params: &TheoremParams) -> VerificationReport {
    let mut report = match claim {
        Claim::DPlusOne => verify_dplusone(params),
        Claim::TrivKerChain => verify_trivkerchain(params),
        Claim::LaurentDim => verify_laurentdim(params),
    };
    if params.base == Base::RatMax {
        report.notes.push("rational max-plus coefficients stand in for real ones".into());
    }
    report
}

fn verify_dplusone(params: &TheoremParams) -> VerificationReport {
    let base = &params.base;
    let ring = ring_of(base, 1, params.laurent);
    let mut report = VerificationReport::new(Claim::DPlusOne.id(), ring.name());
    let dim = match base_dim(base, params.cap) {
        Ok(d) => d,
        Err(e) => {
            report.fail_with("base-dimension", &e);
            return report;
        }
    };
    report.check("base-dimension", true, alloc::format!("dim {} = {dim}", base.name()));
    report.expected = Some(dim + 1);
    let chain = match build_polynomial_chain(base, 1, params.laurent, params.cap) {
        Ok(c) => c,
        Err(e) => {
            report.fail_with("construct", &e);
            return report;
        }
    };
    report.absorb(verify_chain(&chain, params.effort));
    report.observed = Some(chain.len());
    report.check(
        "length",
        chain.len() == dim + 1,
        alloc::format!("chain length {} against dim A + 1 = {}", chain.len(), dim + 1),
    );
    match chain.top().quotient_is_boolean() {
        Ok(b) => report.check("top-maximal", b, "quotient by the top is B, so only the improper congruence lies above".into()),
        Err(e) => report.fail_with("top-maximal", &e),
    }
    let Ring::Poly(r) = &chain.ring else { unreachable!("one-variable chains live on polynomial rings") };
    match diagonal_not_prime(r) {
        Ok(p) => {
            let trivial = Congruence::trivial(chain.ring.clone());
            let bottom_trivial = matches!(chain.members[0].family(), Family::Trivial);
            report.check(
                "bottom-minimal",
                !bottom_trivial && trivial.member(&p).unwrap_or(false),
                alloc::format!("(1 + x)(1 + x^2) = (1 + x)(1 + x + x^2) = {}, so the diagonal is not prime", p.lhs),
            );
        }
        Err(e) => report.fail_with("bottom-minimal", &e),
    }
    report.notes.push("lower bound only: the matching upper bound dim A + 1 is not recomputed".into());
    report
}

fn verify_trivkerchain(params: &TheoremParams) -> VerificationReport {
    let base = &params.base;
    let mut report = VerificationReport::new(Claim::TrivKerChain.id(), base.name());
    if !base.is_domain() {
        report.fail_with("domain", &Error::UnsupportedBase(alloc::format!("{} is not a domain", base.name())));
        return report;
    }
    let frac_base = match base {
        Base::Monomial(m) => Base::Monomial(Arc::new(m.fraction_semifield())),
        other => other.clone(),
    };
    let frac_dim = match semifield_dim(&frac_base) {
        Ok(d) => d,
        Err(e) => {
            report.fail_with("semifield-dimension", &e);
            return report;
        }
    };
    let (members, witnesses) = match base {
        Base::Finite(_) => (alloc::vec![Arc::new(Congruence::trivial(Ring::Base(base.clone())))], Vec::new()),
        _ => match base_chain(base) {
            Ok(c) => c,
            Err(e) => {
                report.fail_with("construct", &e);
                return report;
            }
        },
    };
    let chain = match PrimeChain::finish(Ring::Base(base.clone()), members, witnesses, None, Vec::new()) {
        Ok(c) => c,
        Err(e) => {
            report.fail_with("construct", &e);
            return report;
        }
    };
    report.absorb(verify_chain(&chain, params.effort));
    let dim = match base {
        Base::Finite(f) => dim_finite(f.clone(), params.cap),
        _ => Ok(chain.len()),
    };
    match dim {
        Ok(d) => {
            report.expected = Some(frac_dim);
            report.observed = Some(d);
            report.check(
                "dimension",
                d == frac_dim && chain.len() == d,
                alloc::format!("dim {} = {d}, dim Frac = {frac_dim}", base.name()),
            );
        }
        Err(e) => report.fail_with("dimension", &e),
    }
    let mut sampler = Sampler::new(params.effort.seed ^ 0x5eed);
    let ring = Ring::Base(base.clone());
    let mut ok = true;
    let mut detail = alloc::format!("each member extends to fractions and restricts back unchanged");
    'members: for (i, c) in chain.members.iter().enumerate() {
        let back = fractions::extend(c.clone()).and_then(|e| fractions::restrict_to_domain(Arc::new(e)));
        let back = match back {
            Ok(b) => b,
            Err(e) => {
                ok = false;
                detail = alloc::format!("P{i}: {e}");
                break;
            }
        };
        let mut probes: Vec<Pair> = chain.witnesses.clone();
        probes.extend((0..params.effort.samples).map(|_| sampler.pair(&ring)));
        for p in probes {
            if back.member(&p).ok() != c.member(&p).ok() {
                ok = false;
                detail = alloc::format!("P{i} differs after the round trip on {p}");
                break 'members;
            }
        }
    }
    report.check("round-trip", ok, detail);
    report
}

fn verify_laurentdim(params: &TheoremParams) -> VerificationReport {
    let base = &params.base;
    let ring = ring_of(base, params.nvars, true);
    let mut report = VerificationReport::new(Claim::LaurentDim.id(), ring.name());
    if !base.is_semifield() {
        report.fail_with("semifield", &Error::UnsupportedBase(alloc::format!("{} is not a semifield", base.name())));
        return report;
    }
    let dim = match semifield_dim(base) {
        Ok(d) => d,
        Err(e) => {
            report.fail_with("semifield-dimension", &e);
            return report;
        }
    };
    report.expected = Some(dim + params.nvars);
    let chain = base_chain(base).and_then(|start| build_lifted_chain(base, start, params.nvars, true));
    let chain = match chain {
        Ok(c) => c,
        Err(e) => {
            report.fail_with("construct", &e);
            return report;
        }
    };
    report.absorb(verify_chain(&chain, params.effort));
    report.observed = Some(chain.len());
    report.check(
        "length",
        chain.len() == dim + params.nvars,
        alloc::format!("chain length {} against dim F + n = {}", chain.len(), dim + params.nvars),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::{b_times_b, t3};
    use crate::monomial::MonomialRing;

    fn quick() -> Effort {
        Effort { seed: 3, samples: 40 }
    }

    #[test]
    fn weight_chain_over_b_xy() {
        let c = build_weight_chain(2, true).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.witnesses[0].to_string(), "(y, 1)");
        assert_eq!(c.witnesses[1].to_string(), "(x, y)");
        let r = verify_chain(&c, quick());
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn repeated_member_fails() {
        let mut c = build_weight_chain(2, false).unwrap();
        let dup = c.members[0].clone();
        c.members.insert(1, dup);
        c.kernels.insert(1, None);
        let r = verify_chain(&c, quick());
        assert!(!r.passed());
        assert!(r.counterexample.as_deref().unwrap().starts_with("strict"));
    }

    #[test]
    fn zmax_lifted_chain() {
        let c = build_polynomial_chain(&Base::IntMax, 1, true, ENUMERATION_CAP).unwrap();
        assert_eq!(c.len(), 2);
        let r = verify_chain(&c, quick());
        assert!(r.passed(), "{r}");
        let stab = r.checks.iter().find(|c| c.name == "stabilizes-once").unwrap();
        assert_eq!(stab.detail, "equalities: P1|=P2|");
    }

    #[test]
    fn finite_pullbacks() {
        for f in [t3(), b_times_b()] {
            let c = build_polynomial_chain(&Base::Finite(Arc::new(f)), 1, false, ENUMERATION_CAP).unwrap();
            assert_eq!(c.len(), 1);
            let r = verify_chain(&c, quick());
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn dplusone_small() {
        for base in [Base::Bool, Base::IntMax, Base::Monomial(Arc::new(MonomialRing::lex(2, false)))] {
            let mut p = TheoremParams::new(base);
            p.effort = quick();
            let r = verify_theorems(Claim::DPlusOne, &p);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn trivkerchain_lex2() {
        let mut p = TheoremParams::new(Base::Monomial(Arc::new(MonomialRing::lex(2, false))));
        p.effort = quick();
        let r = verify_theorems(Claim::TrivKerChain, &p);
        assert!(r.passed(), "{r}");
        assert_eq!(r.observed, Some(2));
    }

    #[test]
    fn laurentdim_two_variables() {
        let mut p = TheoremParams::new(Base::IntMax);
        p.nvars = 2;
        p.effort = quick();
        let r = verify_theorems(Claim::LaurentDim, &p);
        assert!(r.passed(), "{r}");
        assert_eq!(r.observed, Some(3));
    }
}

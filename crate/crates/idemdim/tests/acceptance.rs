//! One line per acceptance criterion; exits nonzero if any fails.

use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

use idemdim::core::catalog;
use idemdim::core::chain::{build_polynomial_chain, verify_chain, verify_theorems, Claim, Effort, TheoremParams};
use idemdim::core::closure::ENUMERATION_CAP;
use idemdim::core::congruence::{Congruence, Pair};
use idemdim::core::element::{Element, Ring};
use idemdim::core::fractions::{extend, principal, principal_member, restrict_to_domain, semifield_dim};
use idemdim::core::lattice::{dim_finite, enumerate_congruences_finite};
use idemdim::core::laws::{self, Outcome};
use idemdim::core::monomial::MonomialRing;
use idemdim::core::poly::{Poly, PolyRing};
use idemdim::core::primes::{make_eval_pullback, make_intersect_qc, make_weight_prime};
use idemdim::core::sample::Sampler;
use idemdim::core::scalar::{Base, Scalar};
use idemdim::core::weight::WeightMatrix;
use idemdim::core::FiniteSemiring;
use idemdim::corpus::load_dir;

const SEED: u64 = 0x5eed;

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict { passed, detail: detail.into() }
}

fn corpus() -> Vec<(PathBuf, FiniteSemiring)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    load_dir(&dir).expect("bundled corpus loads")
}

fn within(start: Instant, limit: Duration) -> (bool, String) {
    let t = start.elapsed();
    (t < limit, format!("{:.2}s of {}s", t.as_secs_f64(), limit.as_secs()))
}

fn finite_lattices() -> Verdict {
    let start = Instant::now();
    let tables = corpus();
    let sizes_ok = tables.len() >= 12 && tables.iter().all(|(_, f)| (2..=5).contains(&f.size()));
    let (mut nodes, mut bad) = (0, Vec::new());
    for (path, f) in &tables {
        let l = enumerate_congruences_finite(Arc::new(f.clone()), ENUMERATION_CAP).expect("within cap");
        for (i, n) in l.nodes().iter().enumerate() {
            nodes += 1;
            let proper = !n.partition.is_full();
            if n.prime != (proper && n.qc && n.irreducible) {
                bad.push(format!("{} C{i}", path.display()));
            }
        }
        if l.boolean_quotients().is_empty() {
            bad.push(format!("{}: no quotient isomorphic to B", path.display()));
        }
    }
    let (fast, t) = within(start, Duration::from_secs(60));
    verdict(
        sizes_ok && bad.is_empty() && fast,
        format!("{} tables, {nodes} congruences, prime iff proper QC irreducible, mismatches {bad:?}, {t}", tables.len()),
    )
}

fn small_dimensions() -> Verdict {
    let tables = corpus();
    let find = |stem: &str| {
        let (_, f) = tables.iter().find(|(p, _)| p.file_stem().is_some_and(|s| s == stem)).expect("bundled table");
        dim_finite(Arc::new(f.clone()), ENUMERATION_CAP).expect("within cap")
    };
    let got = [
        ("B", find("b")),
        ("T3", find("t3")),
        ("BxB", find("bxb")),
        ("Zmax", semifield_dim(&Base::IntMax).unwrap()),
        ("Qmax", semifield_dim(&Base::RatMax).unwrap()),
    ];
    let want = [0, 0, 0, 1, 1];
    let ok = got.iter().zip(want).all(|((_, g), w)| *g == w);
    verdict(ok, format!("{got:?}"))
}

fn boolean_weight_chains() -> Verdict {
    let start = Instant::now();
    let mut lens = Vec::new();
    let mut ok = true;
    for n in 1..=3 {
        for laurent in [false, true] {
            let chain = build_polynomial_chain(&Base::Bool, n, laurent, ENUMERATION_CAP).unwrap();
            let r = verify_chain(&chain, Effort { seed: SEED, samples: 200 });
            let strict = r.checks.iter().any(|c| c.name == "strict" && c.passed);
            ok &= r.passed() && strict && chain.len() == n && chain.witnesses.len() == n;
            lens.push(chain.len());
        }
    }
    let (fast, t) = within(start, Duration::from_secs(5));
    verdict(ok && fast, format!("lengths {lens:?} for n = 1, 2, 3 (poly, laurent), {t}"))
}

fn dplusone_bases() -> Vec<Base> {
    let tables = corpus();
    let table = |stem: &str| {
        let (_, f) = tables.iter().find(|(p, _)| p.file_stem().is_some_and(|s| s == stem)).unwrap();
        Base::Finite(Arc::new(f.clone()))
    };
    vec![
        Base::Bool,
        Base::IntMax,
        Base::RatMax,
        table("t3"),
        table("bxb"),
        Base::Monomial(Arc::new(MonomialRing::lex(2, false))),
    ]
}

fn main_theorem() -> Verdict {
    let start = Instant::now();
    let mut seen = Vec::new();
    let mut ok = true;
    for base in dplusone_bases() {
        for laurent in [false, true] {
            let mut p = TheoremParams::new(base.clone());
            p.laurent = laurent;
            p.effort = Effort { seed: SEED, samples: 200 };
            let r = verify_theorems(Claim::DPlusOne, &p);
            let exact = r.expected.is_some() && r.expected == r.observed;
            let stated = r.notes.iter().any(|n| n.contains("lower bound"));
            if !(r.passed() && exact && stated) {
                ok = false;
                seen.push(format!("{}: {}", r.ring, r.counterexample.unwrap_or_default()));
            } else {
                seen.push(format!("{}={}", r.ring, r.observed.unwrap()));
            }
        }
    }
    let (fast, t) = within(start, Duration::from_secs(30));
    verdict(ok && fast, format!("{}, {t}", seen.join(" ")))
}

fn slope_criterion() -> Verdict {
    let r = PolyRing::new(Base::Bool, 2, true);
    let (x, mut wrong, mut checks) = (Poly::var_power(&r, 0, 1).unwrap(), Vec::new(), 0);
    for k in 1..=10i64 {
        let p = make_weight_prime(WeightMatrix::from_ints(&[&[k, 1]]).unwrap(), Ring::Poly(r.clone())).unwrap();
        for j in 1..=10 {
            let f = x.add(&Poly::var_power(&r, 1, j).unwrap()).unwrap();
            checks += 1;
            let got = p.contains(&Element::Poly(f), &Element::Poly(x.clone())).unwrap();
            if got != (k >= j) {
                wrong.push((k, j));
            }
        }
    }
    verdict(wrong.is_empty(), format!("{checks} exact checks, disagreements {wrong:?}"))
}

/// `(ac, bc) ∈ C` with `c ≠ 0` implies `(a, b) ∈ C`.
fn sampled_qc(c: &Congruence, s: &mut Sampler, n: usize, near: &[Pair]) -> Outcome {
    let ring = c.ring().clone();
    let mut o = Outcome { exercised: 0, violation: None };
    for i in 0..n {
        let p = if i % 2 == 0 {
            let base = &near[s.below(near.len())];
            let h = s.nonzero_element(&ring);
            Pair { lhs: base.lhs.mul(&h).unwrap(), rhs: base.rhs.mul(&h).unwrap() }
        } else {
            s.pair(&ring)
        };
        let m = s.nonzero_element(&ring);
        let scaled = Pair { lhs: p.lhs.mul(&m).unwrap(), rhs: p.rhs.mul(&m).unwrap() };
        if c.member(&scaled).unwrap() {
            o.exercised += 1;
            if !c.member(&p).unwrap() {
                o.violation = Some(format!("{scaled} is a member but {p} is not"));
                return o;
            }
        }
    }
    o
}

fn intersect_chain() -> Verdict {
    let r = PolyRing::new(Base::Bool, 2, true);
    let x = Poly::var_power(&r, 0, 1).unwrap();
    let witness = |j: i64| {
        Pair::new(x.add(&Poly::var_power(&r, 1, j).unwrap()).unwrap(), x.clone())
    };
    let near: Vec<Pair> = (1..=12).map(witness).collect();
    let cs: Vec<Congruence> = (1..=11).map(|n| make_intersect_qc(n, r.clone()).unwrap()).collect();
    let mut ok = true;
    let mut exercised = 0;
    for n in 1..=10usize {
        let w = witness(n as i64 + 1);
        let strict = cs[n].member(&w).unwrap() && !cs[n - 1].member(&w).unwrap();
        let mut s = Sampler::new(SEED + n as u64);
        let o = sampled_qc(&cs[n - 1], &mut s, 1000, &near);
        exercised += o.exercised;
        ok &= strict && o.holds() && o.exercised > 0;
        // inclusion on the QC samples' pairs
        for p in &near {
            if cs[n - 1].member(p).unwrap() && !cs[n].member(p).unwrap() {
                ok = false;
            }
        }
    }
    verdict(ok, format!("C1 < ... < C11 witnessed by (x + y^(n+1), x); 1000 QC samples each, {exercised} exercised"))
}

fn fraction_round_trip() -> Verdict {
    let lex = Arc::new(MonomialRing::lex(2, false));
    let dom = Ring::Base(Base::Monomial(lex.clone()));
    let zero = Some(Scalar::Mono(lex.clone(), None));
    let mut cases: Vec<Arc<Congruence>> = vec![
        Arc::new(Congruence::trivial(dom.clone())),
        Arc::new(principal(dom.clone(), Scalar::mono(&lex, &[0, 1])).unwrap()),
        Arc::new(principal(dom.clone(), Scalar::mono(&lex, &[1, 0])).unwrap()),
        Arc::new(make_weight_prime(lex.order().prefix(1), dom.clone()).unwrap()),
        Arc::new(Congruence::trivial(Ring::Base(Base::Bool))),
    ];
    for (b, g) in [(Base::IntMax, Scalar::int(1)), (Base::RatMax, Scalar::rat(1, 2))] {
        let ring = Ring::Base(b);
        cases.push(Arc::new(Congruence::trivial(ring.clone())));
        cases.push(Arc::new(principal(ring, g).unwrap()));
    }
    // not a trivial kernel, so it has no extension
    let killed = make_eval_pullback(dom.clone(), vec![zero, None], cases[0].clone()).unwrap();
    let mut ok = extend(Arc::new(killed)).is_err();
    let (mut pairs, mut prime_hits) = (0, 0);
    for (i, c) in cases.iter().enumerate() {
        let mut s = Sampler::new(SEED + i as u64);
        let ext = Arc::new(extend(c.clone()).unwrap());
        let back = restrict_to_domain(ext.clone()).unwrap();
        for _ in 0..100 {
            let p = s.pair(c.ring());
            pairs += 1;
            ok &= back.member(&p).unwrap() == c.member(&p).unwrap();
        }
        let o = laws::sampled_prime(&ext, &mut s, 1000).unwrap();
        prime_hits += o.exercised;
        ok &= o.holds() && c.is_prime_by_contract().unwrap() == ext.is_prime_by_contract().unwrap();
    }
    verdict(ok && prime_hits > 0, format!("{} congruences, {pairs} round-trip pairs, {prime_hits} twisted products in extensions", cases.len()))
}

fn brute_principal(x: &Element, p: &Pair) -> bool {
    if p.lhs.is_zero() || p.rhs.is_zero() {
        return p.lhs.is_zero() && p.rhs.is_zero();
    }
    let (Element::Scalar(a), Element::Scalar(b), Element::Scalar(xs)) = (&p.lhs, &p.rhs, x) else { unreachable!() };
    let ratio = b.mul(&a.inverse().unwrap()).unwrap();
    (0..=50).any(|n| {
        let (u, v) = (xs.zpow(-n).unwrap(), xs.zpow(n).unwrap());
        let (lo, hi) = if u.leq(&v).unwrap() { (u, v) } else { (v, u) };
        lo.leq(&ratio).unwrap() && ratio.leq(&hi).unwrap()
    })
}

fn principal_oracle() -> Verdict {
    let mut disagreements = 0;
    let mut members = 0;
    let bases = [Base::Monomial(Arc::new(MonomialRing::lex(2, true))), Base::RatMax];
    for (i, base) in bases.iter().enumerate() {
        let ring = Ring::Base(base.clone());
        let mut s = Sampler::new(SEED + i as u64);
        for _ in 0..500 {
            let x = s.nonzero_element(&ring);
            let p = s.pair(&ring);
            let fast = principal_member(&x, &p).unwrap();
            members += fast as usize;
            disagreements += (fast != brute_principal(&x, &p)) as usize;
        }
    }
    verdict(disagreements == 0 && members > 0, format!("1000 pairs, {members} members, {disagreements} disagreements"))
}

fn property_suites() -> Verdict {
    let examples = catalog::primes().unwrap();
    let mut totals = [0usize; 5];
    let mut failures = Vec::new();
    let mut record = |slot: usize, name: &str, o: Outcome| {
        totals[slot] += o.exercised;
        if let Some(v) = o.violation {
            failures.push(format!("{name}: {v}"));
        }
    };
    for (i, ex) in examples.iter().enumerate() {
        let c = &ex.congruence;
        let mut s = Sampler::new(SEED + i as u64);
        record(0, &ex.name, laws::calc(c, &mut s, 1000).unwrap());
        record(1, &ex.name, laws::power(c, &mut s, 1000, 4).unwrap());
        record(2, &ex.name, laws::convexity(c, &mut s, 1000).unwrap());
    }
    let lex = Arc::new(MonomialRing::lex(2, false));
    let base = Base::Monomial(lex.clone());
    let dom = Ring::Base(base.clone());
    let zero = Some(Scalar::Mono(lex.clone(), None));
    let delta = Arc::new(Congruence::trivial(dom.clone()));
    let primes = [
        Arc::new(make_eval_pullback(dom.clone(), vec![zero.clone(), None], delta.clone()).unwrap()),
        Arc::new(make_eval_pullback(dom.clone(), vec![zero.clone(), zero], delta.clone()).unwrap()),
        delta,
    ];
    record(3, "sticky kernels", laws::sticky_kernels(&base, &primes, &mut Sampler::new(SEED), 1000).unwrap());
    for (i, b) in dplusone_bases().into_iter().enumerate() {
        for laurent in [false, true] {
            let chain = build_polynomial_chain(&b, 1, laurent, ENUMERATION_CAP).unwrap();
            let r = verify_chain(&chain, Effort { seed: SEED + i as u64, samples: 1000 });
            let st = r.checks.iter().find(|c| c.name == "stabilizes-once");
            match st {
                Some(c) if c.passed => totals[4] += 1000,
                Some(c) => failures.push(format!("{}: {}", r.ring, c.detail)),
                None => failures.push(format!("{}: no stabilization check", r.ring)),
            }
        }
    }
    for n in 2..=3 {
        let chain = build_polynomial_chain(&Base::Bool, n, true, ENUMERATION_CAP).unwrap();
        let r = verify_chain(&chain, Effort { seed: SEED, samples: 1000 });
        if !r.passed() {
            failures.push(format!("{}: {}", r.ring, r.counterexample.unwrap_or_default()));
        }
    }
    let all_hit = totals.iter().all(|&t| t > 0);
    verdict(
        failures.is_empty() && all_hit,
        format!(
            "calc {} / power {} / convexity {} / sticky kernels {} / stabilization {} exercised, violations {failures:?}",
            totals[0], totals[1], totals[2], totals[3], totals[4]
        ),
    )
}

fn real_coefficients() -> Verdict {
    let mut ok = true;
    for laurent in [false, true] {
        let mut p = TheoremParams::new(Base::RatMax);
        p.laurent = laurent;
        let r = verify_theorems(Claim::DPlusOne, &p);
        ok &= r.passed() && r.notes.iter().any(|n| n.contains("stand in for real"));
    }
    verdict(ok, "real max-plus not exact; rational substitute passes and the report states the substitution")
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("finite lattice suite", finite_lattices),
        ("dimensions of small semirings", small_dimensions),
        ("weight chains over B", boolean_weight_chains),
        ("dim A[x] = dim A(x) = dim A + 1", main_theorem),
        ("slope criterion k >= j", slope_criterion),
        ("ascending QC chain", intersect_chain),
        ("fraction round trip", fraction_round_trip),
        ("principal membership oracle", principal_oracle),
        ("property suites", property_suites),
        ("rational substitute for real max-plus", real_coefficients),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        println!("{} {:>2} {name}: {}", if v.passed { "PASS" } else { "FAIL" }, i + 1, v.detail);
        failed += !v.passed as usize;
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

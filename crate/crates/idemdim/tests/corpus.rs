use std::path::PathBuf;
use std::sync::Arc;

use idemdim::core::element::Ring;
use idemdim::core::monomial::MonomialRing;
use idemdim::core::poly::PolyRing;
use idemdim::core::sample::Sampler;
use idemdim::core::scalar::Base;
use idemdim::corpus::{generate, load_dir, table_json};
use idemdim::parse::{parse_element, Context};
use proptest::prelude::*;

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

#[test]
fn bundled_corpus_matches_generator() {
    let files = load_dir(&corpus_dir()).unwrap();
    let generated = generate(idemdim::core::sample::DEFAULT_SEED);
    assert_eq!(files.len(), generated.len());
    for (name, table) in generated {
        let path = corpus_dir().join(format!("{name}.json"));
        assert_eq!(std::fs::read_to_string(&path).unwrap(), table_json(&table), "{}", path.display());
    }
}

#[test]
fn domains_are_exactly_the_tables_with_prime_diagonal() {
    for (path, f) in load_dir(&corpus_dir()).unwrap() {
        let f = Arc::new(f);
        let delta = idemdim::core::Congruence::trivial(Ring::Base(Base::Finite(f.clone())));
        let prime = idemdim::core::primes::is_prime_finite(&f, &delta).unwrap();
        assert_eq!(f.domain_report().is_domain, prime, "{}", path.display());
    }
}

fn rings() -> Vec<Ring> {
    let t3 = Arc::new(idemdim::core::finite::t3());
    let lex = Arc::new(MonomialRing::lex(2, false));
    let lexsf = Arc::new(MonomialRing::lex(2, true));
    vec![
        Ring::Poly(PolyRing::new(Base::Bool, 2, false)),
        Ring::Poly(PolyRing::new(Base::Bool, 4, true)),
        Ring::Poly(PolyRing::new(Base::IntMax, 1, true)),
        Ring::Poly(PolyRing::new(Base::RatMax, 2, false)),
        Ring::Poly(PolyRing::new(Base::Finite(t3.clone()), 1, false)),
        Ring::Poly(PolyRing::new(Base::Monomial(lexsf.clone()), 1, true)),
        Ring::Base(Base::Finite(t3)),
        Ring::Base(Base::Monomial(lexsf)),
        Ring::Frac(Base::Monomial(lex)),
        Ring::Frac(Base::IntMax),
    ]
}

#[test]
fn fixed_expressions_round_trip() {
    let cases = [
        ("b,poly,2", "x + y^2 * x"),
        ("zmax,laurent,1", "3*x^-1 + -inf"),
        ("qmax,poly,2", "-1/2*x*y + 7/3 + x^4"),
        ("lexsf2,laurent,1", "t1^-1*t2*x + t2"),
        ("lex2,frac", "t1 / t2^3"),
        ("lex2,frac", "t1 / (t1^3*t2^2)"),
        ("zmax,frac", "4 / -2"),
        ("b,laurent,4", "x1*x4^-2 + x3"),
    ];
    for (spec, src) in cases {
        let ctx = Context { ring: idemdim::ring_spec::resolve(Some(spec), None).unwrap(), cap: 6 };
        let e = parse_element(src, &ctx).unwrap();
        let again = parse_element(&e.to_string(), &ctx).unwrap();
        assert_eq!(e, again, "{spec}: {src} printed as {e}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn printed_elements_reparse(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        for ring in rings() {
            let ctx = Context { ring: ring.clone(), cap: 6 };
            let e = s.element(&ring);
            let printed = e.to_string();
            let back = parse_element(&printed, &ctx);
            prop_assert!(back.is_ok(), "{} in {}: {:?}", printed, ring, back);
            prop_assert_eq!(back.unwrap(), e);
        }
    }
}


use idemdim::cli::run_from;

fn root() -> std::path::PathBuf {
    std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str]) -> idemdim::cli::Output {
    let t3 = root().join("corpus/t3.json");
    let bxb = root().join("corpus/bxb.json");
    let args: Vec<String> = args
        .iter()
        .map(|a| match *a {
            "@t3" => t3.display().to_string(),
            "@bxb" => bxb.display().to_string(),
            other => other.to_string(),
        })
        .collect();
    run_from(std::iter::once("idemdim".to_string()).chain(args))
}

#[test]
fn member_of_weight_prime() {
    let out = run(&["member", "--ring", "b,laurent,2", "--cong", "weight[[1,0]]", "(x+y, x)"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "member: true\n"));
    let out = run(&["member", "--ring", "b,laurent,2", "--cong", "weight[[1,0]]", "(y, 1)"]);
    assert_eq!(out.stdout, "member: true\n");
    let out = run(&["member", "--ring", "b,laurent,2", "--cong", "weight[[1,0];[0,1]]", "(y, 1)"]);
    assert_eq!(out.stdout, "member: false\n");
}

#[test]
fn dim_of_t3_table() {
    let out = run(&["dim", "--table", "@t3"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "dim = 0\n"));
    assert_eq!(run(&["dim", "--ring", "zmax"]).stdout, "dim = 1\n");
    assert_eq!(run(&["dim", "--ring", "lexsf2"]).stdout, "dim = 2\n");
    assert_eq!(run(&["dim", "--ring", "b,laurent,3"]).stdout, "dim = 3\n");
    assert_eq!(run(&["dim", "--ring", "lex2,frac"]).stdout, "dim = 2\n");
}

#[test]
fn verify_dplusone_over_zmax() {
    let out = run(&["verify", "dplusone", "--base", "zmax", "--mode", "laurent"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("chain:"));
    assert!(out.stdout.contains("witnesses:"));
    assert!(out.stdout.trim_end().ends_with("PASS dim = 2"));
    let t = run(&["verify", "dplusone", "--table", "@t3", "--mode", "poly"]);
    assert!(t.stdout.trim_end().ends_with("PASS dim = 1"), "{}", t.stdout);
    let k = run(&["verify", "trivkerchain", "--base", "lex2"]);
    assert!(k.stdout.trim_end().ends_with("PASS dim = 2"), "{}", k.stdout);
}

#[test]
fn json_reports() {
    let out = run(&["verify", "dplusone", "--base", "qmax", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["claim"], "dplusone");
    assert_eq!(v["status"], "PASS");
    assert_eq!(v["observed"], 2);
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 2);
    assert!(v["notes"].as_array().unwrap().iter().any(|n| n.as_str().unwrap().contains("rational")));
    let l = run(&["congruences", "--table", "@bxb", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&l.stdout).unwrap();
    assert_eq!(v["congruences"].as_array().unwrap().len(), 4);
    assert_eq!(v["primes"].as_array().unwrap().len(), 2);
}

#[test]
fn same_seed_same_bytes() {
    let a = run(&["chain", "--ring", "b,laurent,2", "--seed", "9"]);
    let b = run(&["chain", "--ring", "b,laurent,2", "--seed", "9"]);
    assert_eq!(a, b);
    assert_eq!(a.code, 0);
}

#[test]
fn predicates_on_tables_and_families() {
    assert_eq!(run(&["is-prime", "--table", "@t3", "--cong", "gen[(1,a)]"]).stdout, "prime: true\n");
    assert_eq!(run(&["is-prime", "--table", "@bxb", "--cong", "trivial"]).stdout, "prime: false\n");
    assert_eq!(run(&["is-qc", "--table", "@bxb", "--cong", "trivial"]).stdout, "qc: false\n");
    assert_eq!(run(&["is-irreducible", "--table", "@bxb", "--cong", "trivial"]).stdout, "irreducible: false\n");
    assert_eq!(run(&["is-prime", "--ring", "b,laurent,2", "--cong", "iqc(3)"]).stdout, "prime: false\n");
    assert_eq!(run(&["is-qc", "--ring", "b,laurent,2", "--cong", "iqc(3)"]).stdout, "qc: true\n");
    assert_eq!(run(&["is-prime", "--ring", "zmax,poly,1", "--cong", "lift(1)"]).stdout, "prime: true\n");
    assert_eq!(run(&["kernel", "--ring", "lex2", "--cong", "evalpull(t1=0; trivial)", "t1*t2"]).stdout, "kernel: true\n");
    assert_eq!(run(&["leq", "--ring", "zmax", "2", "3"]).stdout, "leq: true\n");
    assert_eq!(run(&["eval", "--ring", "zmax,poly,2", "--at", "x=1, y=-inf", "x^2 + y + 3"]).stdout, "3\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["member", "--ring", "b,poly,1", "(x, 1)"]).code, 2);
    let bad = run(&["eval", "--ring", "b,poly,1", "x + "]);
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.contains("column 4"), "{}", bad.stderr);
    assert_eq!(run(&["eval", "--ring", "b,poly,1", "x^-1"]).code, 2);
    assert_eq!(run(&["verify", "nosuchclaim", "--base", "b"]).code, 2);
    assert_eq!(run(&["dim", "--table", "/nonexistent.json"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn cap_flag_and_environment() {
    let out = run(&["congruences", "--table", "@bxb", "--cap", "3"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("cap"), "{}", out.stderr);
}

//! Argument handling and verb dispatch. [`run`] never panics on user input
//! and returns the exit code with everything that should be printed.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use idemdim_core::chain::{
    base_dim, build_polynomial_chain, verify_chain, verify_theorems, Claim, Effort, TheoremParams, VerificationReport,
};
use idemdim_core::closure::ENUMERATION_CAP;
use idemdim_core::congruence::{Congruence, Family};
use idemdim_core::element::Ring;
use idemdim_core::finite::FiniteSemiring;
use idemdim_core::fractions::semifield_dim;
use idemdim_core::lattice::enumerate_congruences_finite;
use idemdim_core::primes::{is_irreducible_finite, is_prime_finite, is_qc_finite};
use idemdim_core::sample::DEFAULT_SEED;
use idemdim_core::scalar::Base;
use serde_json::json;

use crate::corpus::load_table;
use crate::parse::{parse_assignment, parse_congruence, parse_element, parse_pair, Context};
use crate::report::{lattice_json, report_json};
use crate::ring_spec::{parse_base, resolve, Mode};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "idemdim", version, about = "Congruences and dimension of idempotent semirings")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    /// Ring as BASE[,MODE[,N]]: bases b, zmax, qmax, lexK, lexsfK, table; modes poly, laurent, frac.
    #[arg(long, global = true)]
    pub ring: Option<String>,
    /// Finite semiring table (JSON).
    #[arg(long, global = true)]
    pub table: Option<PathBuf>,
    /// Congruence literal.
    #[arg(long, global = true)]
    pub cong: Option<String>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest carrier for congruence enumeration.
    #[arg(long, global = true, env = "IDEMDIM_CAP")]
    pub cap: Option<usize>,
    /// Sampled pairs per verification check.
    #[arg(long, global = true, default_value_t = 200)]
    pub samples: usize,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Print the canonical form of an expression, optionally evaluated at an assignment.
    Eval {
        expr: String,
        /// e.g. "x=1, y=-inf"
        #[arg(long)]
        at: Option<String>,
    },
    /// Natural order: a <= b iff a + b = b.
    Leq { a: String, b: String },
    /// Is the pair in the congruence given by --cong?
    Member { pair: String },
    /// Is the element in the kernel of --cong?
    Kernel { expr: String },
    /// Is --cong prime?
    #[command(name = "is-prime")]
    IsPrime,
    /// Is the quotient by --cong cancellative?
    #[command(name = "is-qc")]
    IsQc,
    /// Is --cong not an intersection of two strictly larger congruences?
    #[command(name = "is-irreducible")]
    IsIrreducible,
    /// Enumerate the congruence lattice of a finite table.
    Congruences,
    /// Krull dimension.
    Dim,
    /// Build and verify the canonical prime chain of a polynomial ring.
    Chain,
    /// Verify a dimension claim: dplusone, trivkerchain or laurentdim.
    Verify {
        claim: String,
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        mode: Option<String>,
        #[arg(long, default_value_t = 1)]
        nvars: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { code: 0, stdout, stderr: String::new() }
    }
}

/// Parse `argv` (including the program name) and run.
pub fn run_from<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Output { code: 2, stdout: String::new(), stderr: text }
            } else {
                Output::ok(text)
            }
        }
    }
}

pub fn run(cli: &Cli) -> Output {
    match dispatch(cli) {
        Ok(out) => out,
        Err(e) => Output { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

struct Env {
    table: Option<Arc<FiniteSemiring>>,
    cap: usize,
}

impl Env {
    fn new(cli: &Cli) -> Result<Self, CliError> {
        let table = cli.table.as_deref().map(load_table).transpose()?.map(Arc::new);
        Ok(Env { table, cap: cli.cap.unwrap_or(ENUMERATION_CAP) })
    }

    fn context(&self, cli: &Cli) -> Result<Context, CliError> {
        Ok(Context { ring: resolve(cli.ring.as_deref(), self.table.as_ref())?, cap: self.cap })
    }

    fn congruence(&self, cli: &Cli, ctx: &Context) -> Result<Congruence, CliError> {
        let src = cli.cong.as_deref().ok_or_else(|| CliError::Usage("this verb needs --cong".into()))?;
        parse_congruence(src, ctx)
    }

    fn finite(&self) -> Result<Arc<FiniteSemiring>, CliError> {
        self.table.clone().ok_or_else(|| CliError::Usage("this verb needs --table".into()))
    }
}

fn emit(cli: &Cli, text: String, value: serde_json::Value) -> Output {
    match cli.format {
        Format::Text => Output::ok(text + "\n"),
        Format::Json => Output::ok(serde_json::to_string_pretty(&value).expect("json values serialize") + "\n"),
    }
}

fn flag(cli: &Cli, key: &str, value: bool) -> Output {
    emit(cli, format!("{key}: {value}"), json!({ key: value }))
}

fn emit_report(cli: &Cli, r: &VerificationReport) -> Output {
    let mut out = emit(cli, r.to_string(), report_json(r));
    if !r.passed() {
        out.code = 1;
    }
    out
}

fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    let env = Env::new(cli)?;
    let effort = Effort { seed: cli.seed, samples: cli.samples };
    match &cli.verb {
        Verb::Eval { expr, at } => {
            let ctx = env.context(cli)?;
            let mut e = parse_element(expr, &ctx)?;
            if let Some(at) = at {
                let p = e.as_poly().ok_or_else(|| CliError::Usage(format!("--at needs a polynomial ring, not {}", ctx.ring)))?;
                let asg = parse_assignment(at, &ctx)?;
                e = idemdim_core::Element::Poly(p.evaluate(&asg)?);
            }
            Ok(emit(cli, e.to_string(), json!({ "ring": ctx.ring.name(), "value": e.to_string() })))
        }
        Verb::Leq { a, b } => {
            let ctx = env.context(cli)?;
            let (a, b) = (parse_element(a, &ctx)?, parse_element(b, &ctx)?);
            Ok(flag(cli, "leq", a.leq(&b)?))
        }
        Verb::Member { pair } => {
            let ctx = env.context(cli)?;
            let c = env.congruence(cli, &ctx)?;
            let p = parse_pair(pair, &ctx)?;
            Ok(flag(cli, "member", c.member(&p)?))
        }
        Verb::Kernel { expr } => {
            let ctx = env.context(cli)?;
            let c = env.congruence(cli, &ctx)?;
            let e = parse_element(expr, &ctx)?;
            Ok(flag(cli, "kernel", c.kernel_member(&e)?))
        }
        Verb::IsPrime => {
            let ctx = env.context(cli)?;
            let c = env.congruence(cli, &ctx)?;
            let v = match &ctx.ring {
                Ring::Base(Base::Finite(f)) => is_prime_finite(f, &c)?,
                _ => c.is_prime_by_contract()?,
            };
            Ok(flag(cli, "prime", v))
        }
        Verb::IsQc => {
            let ctx = env.context(cli)?;
            let c = env.congruence(cli, &ctx)?;
            let v = match &ctx.ring {
                Ring::Base(Base::Finite(f)) => is_qc_finite(f, &c)?,
                _ => qc_by_contract(&c)?,
            };
            Ok(flag(cli, "qc", v))
        }
        Verb::IsIrreducible => {
            let ctx = env.context(cli)?;
            let c = env.congruence(cli, &ctx)?;
            let v = match &ctx.ring {
                Ring::Base(Base::Finite(f)) => {
                    let lattice = enumerate_congruences_finite(f.clone(), env.cap)?;
                    is_irreducible_finite(f, &c, &lattice.partitions())?
                }
                _ => {
                    if !matches!(c.family(), Family::Improper) && !c.is_prime_by_contract()? {
                        return Err(CliError::Core(idemdim_core::Error::Unsupported(format!(
                            "irreducibility of {c} is not decided"
                        ))));
                    }
                    true
                }
            };
            Ok(flag(cli, "irreducible", v))
        }
        Verb::Congruences => {
            let f = env.finite()?;
            let l = enumerate_congruences_finite(f.clone(), env.cap)?;
            let mut text = format!("{}: {} congruences\n", f.name(), l.len());
            for (i, n) in l.nodes().iter().enumerate() {
                let mut tags = Vec::new();
                if n.prime {
                    tags.push("prime");
                }
                if n.qc {
                    tags.push("qc");
                }
                if n.irreducible {
                    tags.push("irreducible");
                }
                text += &format!("  C{i} = {}  {}\n", n.partition.display(&f), tags.join(" "));
            }
            text += &format!("primes: {:?}\nlongest prime chain: {:?}", l.primes(), l.longest_prime_chain());
            Ok(emit(cli, text, lattice_json(&l)))
        }
        Verb::Dim => dim(cli, &env, effort),
        Verb::Chain => {
            let ctx = env.context(cli)?;
            let Ring::Poly(r) = &ctx.ring else {
                return Err(CliError::Usage(format!("chain needs a polynomial ring, not {}", ctx.ring)));
            };
            let chain = build_polynomial_chain(&r.base, r.nvars, r.laurent, env.cap)?;
            Ok(emit_report(cli, &verify_chain(&chain, effort)))
        }
        Verb::Verify { claim, base, mode, nvars } => {
            let id = Claim::parse(claim).ok_or_else(|| {
                CliError::Usage(format!("unknown claim {claim:?}; expected dplusone, trivkerchain or laurentdim"))
            })?;
            let base = match (base, &env.table) {
                (Some(b), t) => parse_base(b, t.as_ref())?,
                (None, Some(f)) => Base::Finite(f.clone()),
                (None, None) => return Err(CliError::Usage("verify needs --base or --table".into())),
            };
            let laurent = match mode.as_deref().map(Mode::parse).transpose()? {
                None | Some(Mode::Laurent) => true,
                Some(Mode::Poly) => false,
                Some(Mode::Frac) => return Err(CliError::Usage("verify takes --mode poly or laurent".into())),
            };
            let params = TheoremParams { base, nvars: *nvars, laurent, cap: env.cap, effort };
            Ok(emit_report(cli, &verify_theorems(id, &params)))
        }
    }
}

/// Quotient cancellativity where a family decides it.
fn qc_by_contract(c: &Congruence) -> Result<bool, CliError> {
    Ok(match c.family() {
        Family::Improper | Family::IntersectQc(_) => true,
        Family::Trivial => match c.ring() {
            Ring::Base(_) | Ring::Frac(_) => true,
            Ring::Poly(_) => false,
        },
        _ if c.is_prime_by_contract()? => true,
        _ => {
            return Err(CliError::Core(idemdim_core::Error::Unsupported(format!(
                "cancellativity of the quotient by {c} is not decided"
            ))))
        }
    })
}

fn dim(cli: &Cli, env: &Env, effort: Effort) -> Result<Output, CliError> {
    let ring = resolve(cli.ring.as_deref(), env.table.as_ref())?;
    let d = match &ring {
        Ring::Base(b) => base_dim(b, env.cap)?,
        Ring::Frac(b) => semifield_dim(b)?,
        Ring::Poly(r) => {
            let expected = base_dim(&r.base, env.cap)? + r.nvars;
            let chain = build_polynomial_chain(&r.base, r.nvars, r.laurent, env.cap)?;
            let report = verify_chain(&chain, effort);
            if !report.passed() || chain.len() != expected {
                let mut out = emit_report(cli, &report);
                out.code = 1;
                return Ok(out);
            }
            expected
        }
    };
    Ok(emit(cli, format!("dim = {d}"), json!({ "ring": ring.name(), "dim": d })))
}

//! The expression and congruence-literal language.
//!
//! Values are built directly while parsing; there is no syntax tree.
//! Precedence is `^` over `*` and `/` over `+`.

use std::sync::Arc;

use idemdim_core::chain::build_polynomial_chain;
use idemdim_core::closure::closure_finite;
use idemdim_core::congruence::{Congruence, Pair};
use idemdim_core::element::{Element, Fraction, Ring};
use idemdim_core::fractions::{extend, principal};
use idemdim_core::poly::{var_name, Poly};
use idemdim_core::primes::{make_eval_pullback, make_intersect_qc, make_weight_prime};
use idemdim_core::scalar::{Base, Scalar};
use idemdim_core::weight::WeightMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    /// Integer or `p/q` written without spaces.
    Num(String),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<Token>, CliError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let (mut last_line, mut last_end) = (1, 1);
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            Tok::Num(chars[start..i].iter().collect())
        } else if "+*^/(),;[]=-".contains(c) {
            i += 1;
            Tok::Sym(c)
        } else {
            return Err(CliError::Syntax { line, col, msg: format!("unexpected character {c:?}") });
        };
        let width = i - start;
        out.push(Token { tok, line, col });
        col += width;
        last_line = line;
        last_end = col;
    }
    out.push(Token { tok: Tok::End, line: last_line, col: last_end });
    Ok(out)
}

/// The ring expressions live in, and the enumeration cap for `gen[...]`
/// and `lift(i)` over finite bases.
#[derive(Clone, Debug)]
pub struct Context {
    pub ring: Ring,
    pub cap: usize,
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    ctx: &'a Context,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) | Tok::Num(s) => format!("{s:?}"),
        Tok::Sym(c) => format!("{:?}", c.to_string()),
        Tok::End => "end of input".into(),
    }
}

impl<'a> Parser<'a> {
    fn new(src: &str, ctx: &'a Context) -> Result<Self, CliError> {
        if src.trim().is_empty() {
            return Err(CliError::Syntax { line: 1, col: 1, msg: "empty input".into() });
        }
        Ok(Parser { toks: lex(src)?, pos: 0, ctx })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn error_here(&self, msg: impl Into<String>) -> CliError {
        let t = &self.toks[self.pos];
        CliError::Syntax { line: t.line, col: t.col, msg: msg.into() }
    }

    fn unexpected(&self, wanted: &str) -> CliError {
        let found = describe(self.peek());
        self.error_here(format!("expected {wanted}, found {found}"))
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), CliError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("{c:?}")))
        }
    }

    fn finish(&self) -> Result<(), CliError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    fn ident(&mut self) -> Result<String, CliError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.unexpected("a name")),
        }
    }

    fn integer(&mut self) -> Result<BigInt, CliError> {
        let neg = self.eat('-');
        match self.peek().clone() {
            Tok::Num(s) if !s.contains('/') => {
                self.pos += 1;
                let v: BigInt = s.parse().expect("lexer yields digits");
                Ok(if neg { -v } else { v })
            }
            _ => Err(self.unexpected("an integer")),
        }
    }

    fn rational(&mut self) -> Result<BigRational, CliError> {
        let neg = self.eat('-');
        match self.peek().clone() {
            Tok::Num(s) => {
                self.pos += 1;
                let v = parse_rational(&s).ok_or_else(|| CliError::Base(format!("{s} has a zero denominator")))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(self.unexpected("a number")),
        }
    }

    // expression := term ('+' term)*
    fn expr(&mut self, ring: &Ring) -> Result<Element, CliError> {
        let mut acc = self.term(ring)?;
        while self.eat('+') {
            let rhs = self.term(ring)?;
            acc = acc.add(&rhs)?;
        }
        Ok(acc)
    }

    // term := power (('*' | '/') power)*
    fn term(&mut self, ring: &Ring) -> Result<Element, CliError> {
        let mut acc = self.power(ring)?;
        loop {
            if self.eat('*') {
                let rhs = self.power(ring)?;
                acc = acc.mul(&rhs)?;
            } else if *self.peek() == Tok::Sym('/') {
                let at = self.pos;
                self.pos += 1;
                let rhs = self.power(ring)?;
                acc = divide(&acc, &rhs).map_err(|e| match e {
                    CliError::Mode(m) => {
                        let t = &self.toks[at];
                        CliError::Syntax { line: t.line, col: t.col, msg: m }
                    }
                    other => other,
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    // power := atom ('^' integer)?
    fn power(&mut self, ring: &Ring) -> Result<Element, CliError> {
        let base = self.atom(ring)?;
        if self.eat('^') {
            let k = self.integer()?;
            return raise(&base, &k, ring);
        }
        Ok(base)
    }

    fn atom(&mut self, ring: &Ring) -> Result<Element, CliError> {
        if self.eat('(') {
            let e = self.expr(ring)?;
            self.expect(')')?;
            return Ok(e);
        }
        if *self.peek() == Tok::Sym('-') {
            self.pos += 1;
            return match self.peek().clone() {
                Tok::Ident(s) if s == "inf" => {
                    self.pos += 1;
                    Ok(ring.zero())
                }
                Tok::Num(s) => {
                    self.pos += 1;
                    Ok(ring.constant(scalar_literal(ring.base(), &format!("-{s}"))?)?)
                }
                _ => Err(self.unexpected("a number or inf after '-'")),
            };
        }
        match self.peek().clone() {
            Tok::Num(s) => {
                self.pos += 1;
                Ok(ring.constant(scalar_literal(ring.base(), &s)?)?)
            }
            Tok::Ident(s) => {
                let at = self.pos;
                self.pos += 1;
                if let Some(e) = variable(ring, &s)? {
                    return Ok(e);
                }
                match named_scalar(ring.base(), &s) {
                    Some(c) => Ok(ring.constant(c)?),
                    None => {
                        let t = &self.toks[at];
                        Err(CliError::Syntax { line: t.line, col: t.col, msg: format!("unknown name {s:?} in {ring}") })
                    }
                }
            }
            _ => Err(self.unexpected("an operand")),
        }
    }

    fn pair(&mut self, ring: &Ring) -> Result<Pair, CliError> {
        self.expect('(')?;
        let lhs = self.expr(ring)?;
        self.expect(',')?;
        let rhs = self.expr(ring)?;
        self.expect(')')?;
        Ok(Pair { lhs, rhs })
    }

    fn congruence(&mut self, ring: &Ring) -> Result<Congruence, CliError> {
        let kw = self.ident()?;
        match kw.as_str() {
            "trivial" => Ok(Congruence::trivial(ring.clone())),
            "improper" => Ok(Congruence::improper(ring.clone())),
            "gen" => {
                let Ring::Base(Base::Finite(f)) = ring else {
                    return Err(CliError::Usage(format!("gen[...] needs a finite carrier, not {ring}")));
                };
                self.expect('[')?;
                let mut gens = Vec::new();
                if !self.eat(']') {
                    loop {
                        let p = self.pair(ring)?;
                        let idx = |e: &Element| match e {
                            Element::Scalar(Scalar::Finite(_, i)) => *i,
                            _ => unreachable!("elements of a finite base"),
                        };
                        gens.push((idx(&p.lhs), idx(&p.rhs)));
                        if !self.eat(';') {
                            break;
                        }
                    }
                    self.expect(']')?;
                }
                let part = closure_finite(f, &gens, self.ctx.cap)?;
                Ok(Congruence::finite(f.clone(), part)?)
            }
            "weight" => {
                self.expect('[')?;
                let mut rows = Vec::new();
                loop {
                    self.expect('[')?;
                    let mut row = vec![self.rational()?];
                    while self.eat(',') {
                        row.push(self.rational()?);
                    }
                    self.expect(']')?;
                    rows.push(row);
                    if !self.eat(';') {
                        break;
                    }
                }
                self.expect(']')?;
                let ncols = rows[0].len();
                Ok(make_weight_prime(WeightMatrix::new(rows, ncols)?, ring.clone())?)
            }
            "lift" => {
                self.expect('(')?;
                let i = self.integer()?;
                self.expect(')')?;
                let Ring::Poly(r) = ring else {
                    return Err(CliError::Usage(format!("lift(i) needs a polynomial ring, not {ring}")));
                };
                let chain = build_polynomial_chain(&r.base, r.nvars, r.laurent, self.ctx.cap)?;
                let idx = usize::try_from(i.clone())
                    .ok()
                    .filter(|&k| k < chain.members.len())
                    .ok_or_else(|| CliError::Usage(format!("lift({i}): the chain has members 0..={}", chain.len())))?;
                Ok((*chain.members[idx]).clone())
            }
            "evalpull" => {
                self.expect('(')?;
                let (names, n) = generator_names(ring)?;
                let mut asg: Vec<Option<Scalar>> = vec![None; n];
                let scalars = Ring::Base(ring.base().clone());
                loop {
                    let at = self.pos;
                    let v = self.ident()?;
                    let k = names.iter().position(|m| m.iter().any(|m| *m == v)).ok_or_else(|| {
                        let t = &self.toks[at];
                        CliError::Syntax { line: t.line, col: t.col, msg: format!("{v:?} is not a generator of {ring}") }
                    })?;
                    self.expect('=')?;
                    let Element::Scalar(s) = self.expr(&scalars)? else { unreachable!("base expressions are scalars") };
                    asg[k] = Some(s);
                    if !self.eat(',') {
                        break;
                    }
                }
                self.expect(';')?;
                let inner_ring = match ring {
                    Ring::Poly(r) if asg.iter().all(Option::is_some) => Ring::Base(r.base.clone()),
                    _ => ring.clone(),
                };
                let inner = self.congruence(&inner_ring)?;
                self.expect(')')?;
                Ok(make_eval_pullback(ring.clone(), asg, Arc::new(inner))?)
            }
            "principal" => {
                self.expect('(')?;
                let scalars = Ring::Base(ring.base().clone());
                let Element::Scalar(g) = self.expr(&scalars)? else { unreachable!("base expressions are scalars") };
                self.expect(')')?;
                Ok(principal(ring.clone(), g)?)
            }
            "fracext" => {
                let Ring::Frac(b) = ring else {
                    return Err(CliError::Usage(format!("fracext(...) needs a fraction semifield, not {ring}")));
                };
                self.expect('(')?;
                let inner = self.congruence(&Ring::Base(b.clone()))?;
                self.expect(')')?;
                Ok(extend(Arc::new(inner))?)
            }
            "iqc" => {
                self.expect('(')?;
                let n = self.integer()?;
                self.expect(')')?;
                let Ring::Poly(r) = ring else {
                    return Err(CliError::Usage(format!("iqc(n) needs a polynomial ring, not {ring}")));
                };
                let n = u64::try_from(n).map_err(|_| CliError::Usage("iqc(n) needs a positive n".into()))?;
                Ok(make_intersect_qc(n, r.clone())?)
            }
            other => Err(CliError::Syntax {
                line: self.toks[self.pos - 1].line,
                col: self.toks[self.pos - 1].col,
                msg: format!("unknown congruence {other:?}"),
            }),
        }
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.parse().ok()?;
            if q == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(p.parse().ok()?, q))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// A numeric literal read as a scalar of `base`.
fn scalar_literal(base: &Base, s: &str) -> Result<Scalar, CliError> {
    let bad = || CliError::Base(format!("{s} is not an element of {}", base.name()));
    match base {
        Base::Bool => match s {
            "0" => Ok(Scalar::Bool(false)),
            "1" => Ok(Scalar::Bool(true)),
            _ => Err(bad()),
        },
        Base::IntMax => {
            if s.contains('/') {
                return Err(bad());
            }
            Ok(Scalar::Int(Some(s.parse().map_err(|_| bad())?)))
        }
        Base::RatMax => Ok(Scalar::Rat(Some(parse_rational(s.trim_start_matches('-')).ok_or_else(bad).map(
            |v| if s.starts_with('-') { -v } else { v },
        )?))),
        Base::Finite(f) => f.index_of(s).map(|i| Scalar::Finite(f.clone(), i)).ok_or_else(bad),
        Base::Monomial(_) => match s {
            "0" => Ok(base.zero()),
            "1" => Ok(base.one()),
            _ => Err(bad()),
        },
    }
}

/// Scalars spelled as names: `b0`, `b1`, monomial generators and table labels.
fn named_scalar(base: &Base, s: &str) -> Option<Scalar> {
    match base {
        Base::Bool => match s {
            "b0" => Some(Scalar::Bool(false)),
            "b1" => Some(Scalar::Bool(true)),
            _ => None,
        },
        Base::Monomial(m) => {
            let k: usize = s.strip_prefix('t')?.parse().ok()?;
            if k == 0 || k > m.rank() {
                return None;
            }
            let mut u = vec![0i64; m.rank()];
            u[k - 1] = 1;
            Some(Scalar::mono(m, &u))
        }
        Base::Finite(f) => f.index_of(s).map(|i| Scalar::Finite(f.clone(), i)),
        _ => None,
    }
}

fn variable(ring: &Ring, s: &str) -> Result<Option<Element>, CliError> {
    let Ring::Poly(r) = ring else { return Ok(None) };
    for i in 0..r.nvars {
        if s == var_name(r.nvars, i) || s == format!("x{}", i + 1) {
            return Ok(Some(Element::Poly(Poly::var_power(r, i, 1)?)));
        }
    }
    Ok(None)
}

/// Names of the variables (or monomial generators) that `evalpull` may
/// assign, with aliases.
fn generator_names(ring: &Ring) -> Result<(Vec<Vec<String>>, usize), CliError> {
    match ring {
        Ring::Poly(r) => Ok((
            (0..r.nvars).map(|i| vec![var_name(r.nvars, i), format!("x{}", i + 1)]).collect(),
            r.nvars,
        )),
        Ring::Base(Base::Monomial(m)) => Ok(((1..=m.rank()).map(|i| vec![format!("t{i}")]).collect(), m.rank())),
        _ => Err(CliError::Usage(format!("evalpull needs variables, {ring} has none"))),
    }
}

fn raise(e: &Element, k: &BigInt, ring: &Ring) -> Result<Element, CliError> {
    if let Ok(n) = u32::try_from(k.clone()) {
        return Ok(e.pow(n)?);
    }
    let mode = |what: &str| CliError::Mode(format!("negative exponent on {what} in {ring}"));
    let n = i64::try_from(k.clone()).map_err(|_| CliError::Mode(format!("exponent {k} out of range")))?;
    match e {
        Element::Poly(p) => {
            let r = p.ring();
            if !r.laurent {
                return Err(mode("a variable outside Laurent mode"));
            }
            if p.len() != 1 {
                return Err(mode("a sum"));
            }
            let (u, c) = p.terms().iter().next().expect("one term");
            let inv = c.inverse().map_err(|_| mode("a non-invertible coefficient"))?;
            let u: Vec<BigInt> = u.iter().map(|x| -x).collect();
            let m = Poly::monomial(r, u, inv)?;
            Ok(Element::Poly(m).pow(n.unsigned_abs() as u32)?)
        }
        Element::Scalar(s) => Ok(Element::Scalar(s.zpow(n).map_err(|_| mode("a non-invertible scalar"))?)),
        Element::Frac(q) => Ok(Element::Frac(q.inverse()?).pow(n.unsigned_abs() as u32)?),
    }
}

fn divide(a: &Element, b: &Element) -> Result<Element, CliError> {
    match (a, b) {
        (Element::Frac(_), Element::Frac(q)) => Ok(a.mul(&Element::Frac(q.inverse()?))?),
        _ => Err(CliError::Mode(format!("'/' divides only in a fraction semifield, not {}", a.ring()))),
    }
}

pub fn parse_element(src: &str, ctx: &Context) -> Result<Element, CliError> {
    let mut p = Parser::new(src, ctx)?;
    let e = p.expr(&ctx.ring)?;
    p.finish()?;
    Ok(e)
}

pub fn parse_pair(src: &str, ctx: &Context) -> Result<Pair, CliError> {
    let mut p = Parser::new(src, ctx)?;
    let pair = p.pair(&ctx.ring)?;
    p.finish()?;
    Ok(pair)
}

pub fn parse_congruence(src: &str, ctx: &Context) -> Result<Congruence, CliError> {
    let mut p = Parser::new(src, ctx)?;
    let c = p.congruence(&ctx.ring)?;
    p.finish()?;
    Ok(c)
}

/// A fraction `num / den` of base expressions.
pub fn parse_fraction(src: &str, ctx: &Context) -> Result<Fraction, CliError> {
    match parse_element(src, ctx)? {
        Element::Frac(q) => Ok(q),
        e => Err(CliError::Usage(format!("{e} is not a fraction"))),
    }
}

/// Parse an assignment `x=1, y=-inf` for the variables of a polynomial ring.
pub fn parse_assignment(src: &str, ctx: &Context) -> Result<Vec<Option<Scalar>>, CliError> {
    let (names, n) = generator_names(&ctx.ring)?;
    let mut p = Parser::new(src, ctx)?;
    let scalars = Ring::Base(ctx.ring.base().clone());
    let mut asg = vec![None; n];
    loop {
        let v = p.ident()?;
        let k = names
            .iter()
            .position(|m| m.iter().any(|m| *m == v))
            .ok_or_else(|| CliError::Usage(format!("{v:?} is not a variable of {}", ctx.ring)))?;
        p.expect('=')?;
        let Element::Scalar(s) = p.expr(&scalars)? else { unreachable!("base expressions are scalars") };
        asg[k] = Some(s);
        if !p.eat(',') {
            break;
        }
    }
    p.finish()?;
    Ok(asg)
}

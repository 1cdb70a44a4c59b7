//! Ring specifications `BASE[,MODE[,N]]`.

use std::sync::Arc;

use idemdim_core::element::Ring;
use idemdim_core::finite::FiniteSemiring;
use idemdim_core::monomial::MonomialRing;
use idemdim_core::poly::PolyRing;
use idemdim_core::scalar::Base;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Poly,
    Laurent,
    Frac,
}

impl Mode {
    pub fn parse(s: &str) -> Result<Mode, CliError> {
        match s {
            "poly" => Ok(Mode::Poly),
            "laurent" => Ok(Mode::Laurent),
            "frac" => Ok(Mode::Frac),
            _ => Err(CliError::Usage(format!("unknown mode {s:?}; expected poly, laurent or frac"))),
        }
    }
}

/// `b`, `zmax`, `qmax`, `lexK`, `lexsfK`, or `table` for the loaded table.
pub fn parse_base(s: &str, table: Option<&Arc<FiniteSemiring>>) -> Result<Base, CliError> {
    let rank = |digits: &str| -> Result<usize, CliError> {
        digits
            .parse::<usize>()
            .ok()
            .filter(|&k| k > 0)
            .ok_or_else(|| CliError::Usage(format!("bad monomial rank in {s:?}")))
    };
    match s {
        "b" => Ok(Base::Bool),
        "zmax" => Ok(Base::IntMax),
        "qmax" => Ok(Base::RatMax),
        "table" => table
            .map(|f| Base::Finite(f.clone()))
            .ok_or_else(|| CliError::Usage("base `table` needs --table".into())),
        _ if s.starts_with("lexsf") => Ok(Base::Monomial(Arc::new(MonomialRing::lex(rank(&s[5..])?, true)))),
        _ if s.starts_with("lex") => Ok(Base::Monomial(Arc::new(MonomialRing::lex(rank(&s[3..])?, false)))),
        _ => Err(CliError::Usage(format!("unknown base {s:?}; expected b, zmax, qmax, lexK, lexsfK or table"))),
    }
}

pub fn build_ring(base: Base, mode: Option<Mode>, nvars: usize) -> Result<Ring, CliError> {
    match mode {
        None => Ok(Ring::Base(base)),
        Some(Mode::Frac) => Ok(Ring::fractions(base)?),
        Some(m) => {
            if nvars == 0 {
                return Err(CliError::Usage("a polynomial ring needs at least one variable".into()));
            }
            Ok(Ring::Poly(PolyRing::new(base, nvars, m == Mode::Laurent)))
        }
    }
}

/// Resolve `--ring` and `--table` into a ring. A table alone gives the
/// finite semiring itself.
pub fn resolve(spec: Option<&str>, table: Option<&Arc<FiniteSemiring>>) -> Result<Ring, CliError> {
    let Some(spec) = spec else {
        return table
            .map(|f| Ring::Base(Base::Finite(f.clone())))
            .ok_or_else(|| CliError::Usage("no ring given; pass --ring or --table".into()));
    };
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    if parts.len() > 3 {
        return Err(CliError::Usage(format!("ring spec {spec:?} has too many parts")));
    }
    let base = parse_base(parts[0], table)?;
    let mode = parts.get(1).map(|m| Mode::parse(m)).transpose()?;
    let nvars = match parts.get(2) {
        Some(n) => n.parse().map_err(|_| CliError::Usage(format!("bad variable count {n:?}")))?,
        None => 1,
    };
    if mode == Some(Mode::Frac) && parts.len() == 3 {
        return Err(CliError::Usage("frac mode takes no variable count".into()));
    }
    build_ring(base, mode, nvars)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_resolve() {
        assert_eq!(resolve(Some("b,laurent,2"), None).unwrap().name(), PolyRing::new(Base::Bool, 2, true).name());
        assert_eq!(resolve(Some("zmax"), None).unwrap(), Ring::Base(Base::IntMax));
        assert!(matches!(resolve(Some("lex2,frac"), None).unwrap(), Ring::Frac(_)));
        assert!(resolve(Some("lex0"), None).is_err());
        assert!(resolve(Some("nope"), None).is_err());
        assert!(resolve(Some("table,poly"), None).is_err());
        assert!(resolve(None, None).is_err());
    }

    #[test]
    fn non_cancellative_fractions_are_rejected() {
        let bb = Arc::new(idemdim_core::finite::b_times_b());
        assert!(resolve(Some("table,frac"), Some(&bb)).is_err());
    }
}

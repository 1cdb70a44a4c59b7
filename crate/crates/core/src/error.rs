use alloc::string::String;
use core::fmt;

/// Errors raised by the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two scalars of different kinds (or from different finite tables) were combined.
    TagMismatch { left: String, right: String },
    /// Two elements or a congruence and an element live in different rings.
    RingMismatch { expected: String, found: String },
    /// A finite table is not square or references an unknown label.
    MalformedTable(String),
    /// Well-formed tables that violate semiring axioms.
    Axioms(crate::finite::AxiomReport),
    /// A carrier is larger than the configured cap.
    CarrierCap { size: usize, cap: usize },
    /// A Laurent variable with a negative exponent was sent to zero.
    NegativeExponentAtZero { var: usize },
    /// Exponent vector does not match the ring (wrong length, negative in polynomial mode).
    BadExponent(String),
    /// The requested family/ring combination has no decision procedure.
    Unsupported(String),
    /// A congruence family requires the boolean base.
    UnsupportedBase(String),
    /// No archimedean-class theory is registered for this semifield.
    UnsupportedFamily(String),
    /// Fractions need a cancellative carrier.
    NotCancellative(String),
    /// Extending a congruence with nonzero kernel to the semifield of fractions.
    NontrivialKernel(String),
    /// The top of a lifted chain requires a base quotient isomorphic to B.
    NotADomainTop(String),
    /// A map between finite semirings is not a surjective homomorphism.
    NotAHomomorphism(String),
    /// Division by zero in a fraction or an inverse of the zero element.
    ZeroDenominator,
    /// Generic invalid argument.
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TagMismatch { left, right } => {
                write!(f, "scalar kinds differ: {left} vs {right}")
            }
            Error::RingMismatch { expected, found } => {
                write!(f, "ring mismatch: expected {expected}, found {found}")
            }
            Error::MalformedTable(msg) => write!(f, "malformed table: {msg}"),
            Error::Axioms(report) => {
                write!(f, "semiring axioms violated:")?;
                for v in &report.violations {
                    write!(f, " {} {:?};", v.axiom, v.witness)?;
                }
                Ok(())
            }
            Error::CarrierCap { size, cap } => {
                write!(f, "carrier of size {size} exceeds the cap of {cap}")
            }
            Error::NegativeExponentAtZero { var } => write!(
                f,
                "variable x{} occurs with a negative exponent and cannot be sent to zero",
                var + 1
            ),
            Error::BadExponent(msg) => write!(f, "bad exponent: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::UnsupportedBase(msg) => write!(f, "unsupported base: {msg}"),
            Error::UnsupportedFamily(msg) => write!(f, "unsupported semifield family: {msg}"),
            Error::NotCancellative(msg) => write!(f, "carrier is not cancellative: {msg}"),
            Error::NontrivialKernel(msg) => write!(f, "congruence has a nontrivial kernel: {msg}"),
            Error::NotADomainTop(msg) => write!(f, "top of the chain is not a B-quotient: {msg}"),
            Error::NotAHomomorphism(msg) => write!(f, "not a surjective homomorphism: {msg}"),
            Error::ZeroDenominator => write!(f, "zero denominator"),
            Error::Invalid(msg) => write!(f, "{msg}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

use core::fmt;

use alloc::string::String;

/// Errors raised by the exact and numerical kernels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `R_n(t)` was evaluated at one of its poles `t ∈ {0, -1, …, -n}`.
    Pole { n: usize, t: String },
    /// The evaluation point is outside the domain of the operation.
    Domain(String),
    /// A series or integral does not converge for the given parameters.
    Divergent(String),
    /// The working precision was exhausted by cancellation.
    InsufficientPrecision { needed_digits: u64, digits: u64 },
    /// A sequence is too short for the requested recurrence check.
    SequenceTooShort { needed: usize, got: usize },
    /// The leading recurrence coefficient vanished while extending.
    SingularLeading { n: usize },
    /// Unknown recurrence, constant or construction name.
    Unknown(String),
    /// A cancellation that must hold exactly did not.
    Cancellation(String),
    /// Malformed rational literal.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Pole { n, t } => write!(f, "R_{n}(t) has a pole at t = {t}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Divergent(msg) => write!(f, "divergent: {msg}"),
            Error::InsufficientPrecision {
                needed_digits,
                digits,
            } => write!(
                f,
                "insufficient precision: about {needed_digits} digits needed, {digits} given"
            ),
            Error::SequenceTooShort { needed, got } => {
                write!(f, "sequence too short: need {needed} terms, got {got}")
            }
            Error::SingularLeading { n } => {
                write!(f, "leading recurrence coefficient vanishes at n = {n}")
            }
            Error::Unknown(name) => write!(f, "unknown name `{name}`"),
            Error::Cancellation(msg) => write!(f, "expected cancellation failed: {msg}"),
            Error::Parse(msg) => write!(f, "cannot parse rational: {msg}"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

impl core::error::Error for Error {}

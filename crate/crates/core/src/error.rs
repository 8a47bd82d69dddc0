use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Family/rank pair outside the finite crystallographic list.
    InadmissibleType { family: char, rank: usize },
    /// Malformed input string; `pos` is a 0-based character offset.
    Parse { pos: usize, msg: String },
    NotARoot,
    DimensionMismatch { expected: usize, found: usize },
    /// Group enumeration exceeded the configured element cap.
    GroupTooLarge { cap: usize },
    InvalidCartan(String),
    /// A generator index outside `0..rank`.
    InvalidGenerator(usize),
    NotInLambdaIPlus,
    Singular,
    NotCosetRep(&'static str),
    InvalidParameter(String),
    UnknownTheorem(String),
    /// A computation contradicted an identity that must hold; signals a bug.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InadmissibleType { family, rank } => {
                write!(f, "inadmissible Cartan type {family}{rank}")
            }
            Error::Parse { pos, msg } => write!(f, "parse error at position {pos}: {msg}"),
            Error::NotARoot => f.write_str("vector is not a root"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::GroupTooLarge { cap } => {
                write!(f, "group has more than {cap} elements (size cap)")
            }
            Error::InvalidCartan(m) => write!(f, "invalid Cartan matrix: {m}"),
            Error::InvalidGenerator(i) => write!(f, "generator index {} out of range", i + 1),
            Error::NotInLambdaIPlus => f.write_str("λ ∉ Λ_I^+"),
            Error::Singular => f.write_str("λ singular"),
            Error::NotCosetRep(which) => write!(f, "{which} is not a minimal coset representative"),
            Error::InvalidParameter(m) => write!(f, "invalid parameter: {m}"),
            Error::UnknownTheorem(n) => write!(f, "unknown theorem name `{n}`"),
            Error::Internal(m) => write!(f, "internal consistency error: {m}"),
        }
    }
}

impl core::error::Error for Error {}

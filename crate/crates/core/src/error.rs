use core::fmt;

/// Errors raised by the algebraic and combinatorial operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two objects live in polynomial rings with different numbers of variables.
    DimensionMismatch { expected: usize, found: usize },
    /// A ring needs at least one variable.
    EmptyRing,
    /// The operation is not defined for this input (zero ideal, unit ideal,
    /// non-primary ideal, ...).
    Domain(&'static str),
    /// A documented precondition was violated.
    Precondition(&'static str),
    /// A bound was requested for a shape outside its hypotheses.
    NotApplicable(&'static str),
    /// An exhaustive routine refused an input above its size guard.
    TooLarge { size: usize, limit: usize },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => write!(
                f,
                "dimension mismatch: expected {expected} variables, found {found}"
            ),
            Error::EmptyRing => f.write_str("a polynomial ring needs at least one variable"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::NotApplicable(msg) => write!(f, "not applicable: {msg}"),
            Error::TooLarge { size, limit } => {
                write!(f, "instance too large: {size} exceeds the limit {limit}")
            }
        }
    }
}

impl core::error::Error for Error {}

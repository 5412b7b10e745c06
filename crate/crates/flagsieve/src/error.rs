use std::fmt;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A point index is not smaller than the degree it is used with.
    IndexOutOfRange { index: u32, degree: usize },
    /// Two objects that must share a degree do not.
    DegreeMismatch { expected: usize, found: usize },
    /// An operation requiring a transitive group was given an intransitive one.
    NotTransitive,
    /// A breadth-first closure exceeded its configured image budget.
    BudgetExceeded { budget: usize },
    /// A permutation fed in as a design automorphism does not preserve the block set.
    NotAutomorphism,
    /// A quotient that must be exact was not.
    NonIntegralQuotient { numerator: u128, denominator: u128 },
    /// Exact integer arithmetic left the supported range.
    Overflow,
    /// Anything rejected before computation starts (bad parameters, unsupported combinations).
    InvalidArgument(String),
    /// A text input failed to parse; `line` is 1-based.
    Parse { line: usize, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IndexOutOfRange { index, degree } => {
                write!(f, "point {index} out of range for degree {degree}")
            }
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::NotTransitive => write!(f, "group is not transitive"),
            Error::BudgetExceeded { budget } => {
                write!(f, "orbit budget of {budget} images exceeded")
            }
            Error::NotAutomorphism => {
                write!(f, "permutation does not preserve the block multiset")
            }
            Error::NonIntegralQuotient {
                numerator,
                denominator,
            } => {
                write!(f, "{numerator} is not divisible by {denominator}")
            }
            Error::Overflow => write!(f, "exact integer arithmetic overflowed"),
            Error::InvalidArgument(msg) => write!(f, "{msg}"),
            Error::Parse { line, message } => write!(f, "line {line}: {message}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

use core::fmt;

/// Errors produced by the semigroup computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// No generators were supplied.
    EmptyInput,
    /// A generator was zero.
    ZeroGenerator,
    /// The generators share a common divisor greater than one.
    GcdNotOne { gcd: u64 },
    /// A checked 64-bit operation overflowed.
    Overflow,
    /// The requested Apery modulus is not an element of the semigroup.
    ModulusNotInSemigroup { modulus: u64 },
    /// The invariant is undefined for the semigroup of all non-negative integers.
    UndefinedForN,
    /// An operation restricted to embedding dimension three got something else.
    NotEmbeddingDim3 { embedding_dimension: usize },
    /// The semigroup does not have a monotone Apery set.
    NotMans,
    /// The `(m, a, b, t)` tuple violates the admissibility conditions.
    InvalidParams { m: u64, a: u64, b: u64, t: u64 },
    /// The candidate generator is not suitably monotone for the semigroup.
    NotSuitablyMonotone { candidate: u64 },
    /// The semigroup is the root of its tree and has no parent.
    IsRoot,
    /// Two formulas for the same invariant disagreed.
    InternalFormulaMismatch { what: &'static str },
    /// The Apery table does not match the semigroup it was passed with.
    AperyMismatch,
    /// The exhaustive search would visit more candidates than allowed.
    SearchSpaceTooLarge { limit: usize },
    /// An argument is outside the operation's domain.
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyInput => write!(f, "no generators given"),
            Error::ZeroGenerator => write!(f, "generators must be positive"),
            Error::GcdNotOne { gcd } => {
                write!(f, "generators have gcd {gcd}, not a numerical semigroup")
            }
            Error::Overflow => write!(f, "64-bit arithmetic overflow"),
            Error::ModulusNotInSemigroup { modulus } => {
                write!(f, "modulus {modulus} is not an element of the semigroup")
            }
            Error::UndefinedForN => write!(f, "undefined for the semigroup of all naturals"),
            Error::NotEmbeddingDim3 { embedding_dimension } => write!(
                f,
                "expected embedding dimension 3, got {embedding_dimension}"
            ),
            Error::NotMans => write!(f, "semigroup does not have a monotone Apery set"),
            Error::InvalidParams { m, a, b, t } => write!(
                f,
                "invalid parameters (m={m}, a={a}, b={b}, t={t}): need m>=3, a>=1, 2<=t<=m-1, (t-1)(am+1) < bm+t < t(am+1)"
            ),
            Error::NotSuitablyMonotone { candidate } => {
                write!(f, "{candidate} is not suitably monotone for the semigroup")
            }
            Error::IsRoot => write!(f, "semigroup is a tree root and has no parent"),
            Error::InternalFormulaMismatch { what } => {
                write!(f, "internal formula mismatch: {what}")
            }
            Error::AperyMismatch => write!(f, "Apery table does not belong to the semigroup"),
            Error::SearchSpaceTooLarge { limit } => {
                write!(f, "search space exceeds the configured limit of {limit} candidates")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

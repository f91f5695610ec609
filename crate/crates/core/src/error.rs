use std::fmt;

use crate::quadform::Reason;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("value out of supported range: {0}")]
    OutOfRange(String),

    #[error("invalid discriminant {0}: must be negative and congruent to 0 or 1 mod 4")]
    InvalidDiscriminant(i64),

    #[error("[{a},{b},{c}] is not a primitive positive definite form")]
    InvalidForm { a: i64, b: i64, c: i64 },

    #[error("form [{a},{b},{c}] is not reduced")]
    NotReduced { a: i64, b: i64, c: i64 },

    #[error("({a}, {b}, {c}) is not a reduced norm-one element for D = {d}")]
    NotOnConic { d: u64, a: i128, b: i128, c: i128 },

    #[error("({a}, {b}, {c}) is not a normalized solution for D = {d}")]
    InvalidTriple { d: u64, a: i128, b: i128, c: i128 },

    #[error("elements belong to different groups: D = {0} and D = {1}")]
    MismatchedD(u64, u64),

    #[error("trivial point has no normalized positive triple")]
    TrivialPoint,

    #[error("D must be at least 1")]
    ZeroD,

    #[error("c must be greater than 1, got {0}")]
    InvalidDenominator(u64),

    #[error("D = {d} is outside the theorem hypotheses: {}", ReasonList(.reasons))]
    NotApplicable { d: u64, reasons: Vec<Reason> },

    #[error("prime {p} is outside the theorem hypotheses for D = {d} (Kronecker symbol {symbol})")]
    OutsideHypotheses { d: u64, p: u64, symbol: i8 },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("lemma violated: found {found} normalized solutions of a^2 + {d} b^2 = {p}^2, expected exactly one")]
    LemmaViolated { d: u64, p: u64, found: usize },

    #[error("factorization failed: stripping zeta_{p} reduced the exponent in neither direction")]
    FactorizationFailed { p: u64 },

    #[error("element carries the unit ±i and is not ± a product of generators")]
    ImaginaryUnit,

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("generator cache entry for D = {d}, p = {p} is invalid: ({a}, {b})")]
    BadGenerator { d: u64, p: u64, a: i128, b: i128 },
}

struct ReasonList<'a>(&'a [Reason]);

impl fmt::Display for ReasonList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

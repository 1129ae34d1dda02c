//! Crate-wide error type.
//!
//! Every fallible operation returns [`Result`]. Arithmetic is checked 64-bit
//! throughout the crate, so overflow is a reported error, never a wraparound.

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An intermediate value left the 64-bit range.
    #[error("arithmetic overflow beyond the 64-bit range")]
    Overflow,

    /// Cyclic factor orders must be at least 2.
    #[error("invalid cyclic factor order {0}; every factor must be at least 2")]
    InvalidFactorOrder(i64),

    /// A residue tuple does not match the group's factor count.
    #[error("character tuple has {got} residues but the group has {expected} cyclic factors")]
    CharacterShape { expected: usize, got: usize },

    /// A vector has the wrong length for the ambient dimension.
    #[error("vector has length {got} but expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    /// All characters reduced away, so the action is trivial and no bound exists.
    #[error("support is empty after reduction; the action is trivial")]
    TrivialSupport,

    /// Shell enumeration requires a full-rank lattice.
    #[error("lattice has rank {rank} in dimension {dim}; enumeration needs full rank")]
    NotFullRank { rank: usize, dim: usize },

    /// Enumeration degrees must be non-negative.
    #[error("degree must be non-negative, got {0}")]
    NegativeDegree(i64),

    /// The configurable cap on enumerated points was hit.
    #[error("point budget of {budget} exceeded while enumerating degree {degree}")]
    BudgetExceeded { budget: u64, degree: i64 },

    /// An index was requested for a pair of lattices without containment.
    #[error("sublattice is not contained in the target lattice; witness vector {witness:?}")]
    NotSublattice { witness: Vec<i64> },

    /// The points up to the requested degree do not generate the target lattice.
    #[error("points of degree at most {degree} do not generate the target lattice")]
    InsufficientDegree { degree: i64 },

    /// Monomial exponents must be non-negative.
    #[error("monomial exponents must be non-negative, found {0}")]
    NegativeExponent(i64),

    /// Ratio decompositions need monomials of one shared weight.
    #[error("monomial weights disagree: {0:?} versus {1:?}")]
    WeightMismatch(Vec<i64>, Vec<i64>),

    /// Both monomial lists of a ratio decomposition must be non-empty.
    #[error("need at least one numerator and one denominator monomial")]
    EmptyMonomialList,

    /// A prime argument failed its primality check.
    #[error("{0} is not prime")]
    NotPrime(i64),

    /// Family parameters outside the valid domain.
    #[error("invalid family parameters n={n}, m={m}: {reason}")]
    InvalidFamily { n: i64, m: i64, reason: String },

    /// A guaranteed inequality or structure theorem failed on computed data.
    /// Reaching this means a bug, not a property of the input.
    #[error("theoretical guarantee violated: {0}")]
    TheoryViolation(String),

    /// An internal invariant of the implementation failed.
    #[error("internal error: {0}")]
    Internal(String),
}

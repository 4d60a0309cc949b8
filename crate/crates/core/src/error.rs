use thiserror::Error;

/// Errors raised by the polynomial constructions and operator applications.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An exact division left a nonzero remainder.
    #[error("exact division failed: {0}")]
    NonDivisible(String),

    /// A vector-valued polynomial was expected to satisfy `P2 = s·P1`.
    #[error("vector is not S2-invariant")]
    NotInvariant,

    /// The operation needs the other arithmetic mode (exact vs float).
    #[error("mode error: {0}")]
    Mode(String),

    /// Multiplicity parameters violate the mode's constraints.
    #[error("invalid multiplicity: {0}")]
    InvalidMultiplicity(String),

    /// Gram-Schmidt hit a vanishing self-pairing.
    #[error("degenerate Gram matrix at exponent {0}")]
    DegenerateGram(i64),

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    /// No scalar makes the Jacobi decomposition of E(n,k) hold.
    #[error("decomposition mismatch: {0}")]
    DecompositionMismatch(String),

    /// Parity or invariance preconditions of a spherical operator failed.
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Crate-wide error type.

use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Inverting a series whose constant coefficient is zero.
    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,
    /// Exponentiating a series (or graded polynomial) with a nonzero
    /// constant term.
    #[error("exp requires zero constant term, found {0}")]
    NonzeroConstantTerm(Rational),
    /// The sequence generator and series log require constant term 1.
    #[error("series must be normalized with constant term 1, found {0}")]
    NotNormalized(Rational),
    /// A truncation order too small for the requested computation.
    #[error("BadOrder: {0}")]
    BadOrder(String),
    /// An invalid k parameter for the A_k family.
    #[error("BadK: {0}")]
    BadK(String),
    /// A series with nonzero odd coefficients cannot define a
    /// Pontrjagin-graded sequence.
    #[error("series with nonzero odd coefficients cannot generate a Pontrjagin-graded sequence")]
    OddSeriesInPontrjaginGrading,
    #[error("WeightMismatch: {0}")]
    WeightMismatch(String),
    /// A characteristic table is missing a monomial needed for evaluation.
    #[error("MissingMonomial: table has no entry for {0}")]
    MissingMonomial(String),
    /// Mixed evaluation on a table without a distinguished degree-2 class.
    #[error("table has no distinguished degree-2 class x")]
    NoDistinguishedClass,
    #[error("ParseError: {0}")]
    ParseError(String),
    #[error("InvariantViolation: {0}")]
    InvariantViolation(String),
    /// |k0| is too small to supply enough admissible k values.
    #[error("InsufficientBound: {0}")]
    InsufficientBound(String),
    /// The vanishing engine requires manifold dimension 2n with n >= 2.
    #[error("DimensionTooSmall: need half-dimension n >= 2, got n = {0}")]
    DimensionTooSmall(usize),
    /// A constraint matrix with zero determinant; cannot occur for a valid
    /// admissible-k selection.
    #[error("constraint matrix is singular")]
    SingularMatrix,
}

pub type Result<T> = std::result::Result<T, Error>;

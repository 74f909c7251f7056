use core::fmt;

/// Failure modes shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain where the operation is defined.
    Domain(&'static str),
    /// A linear-fractional expression was evaluated at its pole.
    Pole,
    /// A circle objective evaluated to a non-finite value.
    ObjectiveSingular,
    /// Bracket widening for the structured singular value ran out of doublings.
    Bracket,
    /// The first target matrix must not be a scalar multiple of the identity.
    NonscalarRequired,
    /// The derivative target must have a nonzero off-diagonal entry.
    NondiagonalRequired,
    /// No unimodular parameter satisfies the boundary interpolation condition.
    NoSolution,
    /// The reduced interior interpolation target is unimodular and the
    /// boundary condition is inconsistent with the forced constant.
    DegenerateData,
    /// The interpolation problem was decided unsolvable (or out of scope).
    NotSolvable,
    /// A rational function has a pole at a requested sample point.
    Evaluation,
    /// Two routes to the same decision disagree away from the boundary band.
    InternalInconsistency { criterion_margin: f64, cross_check: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::Pole => f.write_str("pole: denominator vanishes"),
            Error::ObjectiveSingular => {
                f.write_str("objective is singular (non-finite) on the unit circle")
            }
            Error::Bracket => f.write_str("could not bracket the structured singular value"),
            Error::NonscalarRequired => f.write_str("matrix must be nonscalar"),
            Error::NondiagonalRequired => f.write_str("matrix must be nondiagonal"),
            Error::NoSolution => f.write_str("no inner function meets the boundary condition"),
            Error::DegenerateData => {
                f.write_str("degenerate interpolation data: forced constant violates boundary condition")
            }
            Error::NotSolvable => f.write_str("interpolation problem is not solvable"),
            Error::Evaluation => f.write_str("rational function has a pole at a sample point"),
            Error::InternalInconsistency {
                criterion_margin,
                cross_check,
            } => write!(
                f,
                "internal inconsistency: criterion margin {criterion_margin:e} disagrees with cross-check {cross_check:e}"
            ),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

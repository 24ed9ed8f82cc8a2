use thiserror::Error;

use super::PointSet;

/// Structural violations reported by the validators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("carrier size {0} outside 1..=16")]
    CarrierSize(usize),
    #[error("lattice of {0} elements exceeds the 64-element cap")]
    LatticeTooLarge(usize),
    #[error("expected a {expected}x{expected} matrix, found a row or row count of length {found}")]
    Dimension { expected: usize, found: usize },
    #[error("set {0} is not a subset of the carrier")]
    OutOfCarrier(PointSet),
    #[error("value {value} at position {position} is outside the target carrier")]
    ValueOutOfRange { position: usize, value: usize },
    #[error("family is missing the empty set")]
    MissingEmpty,
    #[error("family is missing the full carrier")]
    MissingFull,
    #[error("union of {0} and {1} is not in the family")]
    NotUnionClosed(PointSet, PointSet),
    #[error("intersection of {0} and {1} is not in the family")]
    NotIntersectionClosed(PointSet, PointSet),
    #[error("set {0} occurs twice")]
    Duplicate(PointSet),
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not transitive: {0} <= {1} <= {2} but not {0} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("order is not antisymmetric: {0} and {1} are distinct but equivalent")]
    NotAntisymmetric(usize, usize),
    #[error("elements {0} and {1} have no meet")]
    NoMeet(usize, usize),
    #[error("elements {0} and {1} have no join")]
    NoJoin(usize, usize),
}

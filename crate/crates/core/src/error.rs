use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("cannot parse `{0}` as an exact rational")]
    Rational(String),
    #[error("expected {expected} coordinates, got {got}")]
    Length { expected: usize, got: usize },
}

/// Failures of the classification and cohomology pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompError {
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("not in Λ̃: no positive integer root of q(t) for λ = {0}")]
    NotInLambdaTilde(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("vector is not a unit vector: squared norm is {0}")]
    NotUnit(String),
    #[error("element does not lie in the spin ideal: stray monomial {0:#b}")]
    OutsideSpinIdeal(u32),
}

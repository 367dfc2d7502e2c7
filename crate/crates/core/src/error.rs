use thiserror::Error;

use crate::report::CheckReport;
use crate::tensor::FieldSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid field {0:?}; expected Q, F<p> or GF(<p>)")]
    InvalidField(String),
    #[error("invalid scalar {0:?}: {1}")]
    InvalidScalar(String, String),
    #[error("invalid space: {0}")]
    InvalidSpace(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("leg mismatch: {0}")]
    LegMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("{0} is singular")]
    Singular(String),
    #[error("input has not been verified: {0}")]
    NotVerified(String),
    #[error("F is not congruent: F13^-1 F12^-1 F23 F12 is not of the form I (x) Phi")]
    NotCongruent,
    #[error("coproduct is not a unital algebra homomorphism")]
    NotUnitalHom(CheckReport),
    #[error("coproduct is not coassociative")]
    NotCoassociative(CheckReport),
    #[error("evaluation map V (x) M -> V (x) V is singular (intertwiner space has dim {intertwiners}, dim V = {dim})")]
    EvaluationSingular { dim: usize, intertwiners: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
    #[error("the Sweedler algebra degenerates in characteristic 2")]
    CharTwoUnsupported,
    #[error("Cayley table is not a group: {0}")]
    NotAGroup(String),
    #[error("invalid group action: {0}")]
    NotAnAction(String),
    #[error("module coalgebra is not Galois: F_L has rank {rank}, needs {needed}")]
    NotGalois { rank: usize, needed: usize },
    #[error("F_V is singular")]
    SingularFv,
    #[error("rho(omega) = I has no solution")]
    CounitUnsolvable,
    #[error("span violation in {0}")]
    SpanViolation(String),
    #[error("minimal polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("action law violated: {0}")]
    ActionLawViolation(CheckReport),
    #[error("modules live over different pentagon solutions")]
    BaseMismatch,
    #[error("multiplicity must be positive")]
    ZeroMultiplicity,
    #[error("check failed: {}", .0.name)]
    CheckFailed(CheckReport),
}

impl Error {
    /// True when the error certifies that a mathematical property fails for
    /// well-formed input, as opposed to malformed input or usage.
    pub fn is_check_failure(&self) -> bool {
        matches!(
            self,
            Error::Singular(_)
                | Error::NotVerified(_)
                | Error::NotCongruent
                | Error::NotUnitalHom(_)
                | Error::NotCoassociative(_)
                | Error::EvaluationSingular { .. }
                | Error::DimensionMismatch(_)
                | Error::AntipodeNotInvertible
                | Error::NotGalois { .. }
                | Error::SingularFv
                | Error::CounitUnsolvable
                | Error::SpanViolation(_)
                | Error::ZeroConstantTerm
                | Error::ActionLawViolation(_)
                | Error::CheckFailed(_)
        )
    }

    /// The failing check carried by the error, if any.
    pub fn report(&self) -> Option<&CheckReport> {
        match self {
            Error::NotUnitalHom(r)
            | Error::NotCoassociative(r)
            | Error::ActionLawViolation(r)
            | Error::CheckFailed(r) => Some(r),
            _ => None,
        }
    }
}

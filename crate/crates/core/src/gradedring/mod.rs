//! Truncated graded-commutative cohomology rings over Z, Z/2 and Z/4, the
//! coefficient maps relating them, and the operations built on top
//! (Bockstein, Sq¹, integral lifts, division, Pontryagin square).

mod map;
mod ops;
mod presentation;
mod ring;

use thiserror::Error;

pub use map::CoefficientMap;
pub use ops::{CohomologyRings, LiftSearch};
pub use presentation::{Coefficients, Generator, Monomial, RewriteRule, RingPresentation};
pub use ring::{GradedRing, Piece, RingElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("invalid rewrite rule: {0}")]
    InvalidRule(String),
    #[error("rewrite system is not confluent at {0}")]
    NonConfluent(String),
    #[error("rewriting does not terminate at {0}")]
    NonTerminating(String),
    #[error("graded-commutativity violated: {0}")]
    SignRuleViolation(String),
    #[error("product is not associative on {0}")]
    NonAssociative(String),
    #[error("degree {degree} exceeds the cutoff {cutoff}")]
    DegreeOverflow { degree: usize, cutoff: usize },
    #[error("expected degree {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("degree {degree}: expected {expected} coefficients, got {got}")]
    WrongLength {
        degree: usize,
        expected: usize,
        got: usize,
    },
    #[error("element of the {got} ring used where the {expected} ring is required")]
    WrongRing {
        expected: Coefficients,
        got: Coefficients,
    },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("malformed monomial {0:?}")]
    BadMonomial(String),
    #[error("{0:?} is not a basis monomial")]
    NotABasisMonomial(String),
    #[error("map {map} is undefined in degree {degree}")]
    MapUndefined { map: String, degree: usize },
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("Bockstein undefined in degree {0}")]
    BetaUndefined(usize),
    #[error("class {0} has no integral lift")]
    NoIntegralLift(String),
    #[error("rings of one space disagree: {0}")]
    Incompatible(String),
    #[error("identity {identity} fails on {element}")]
    IdentityViolation { identity: String, element: String },
    #[error("enumeration of {0} candidates exceeds the budget")]
    EnumerationTooLarge(String),
}

//! Obstructions to reducing an oriented real vector bundle of rank 2n from
//! SO(2n) to U(n), computed from characteristic-class data.
//!
//! The pipeline checks W₃, the classes W₄ₖ₊₃ = ℓ(k)·o below the top degree,
//! and the top-degree relation selected by the rank (4·o expressed through
//! candidate Chern classes). Verdicts are three-valued: `Zero` only when the
//! group structure forces it.

mod bundle;
mod classes;
mod pipeline;
mod tables;
mod verdict;

use thiserror::Error;

use crate::gradedring::RingError;

pub use bundle::{BundleClasses, BundleData, Pairing, WuCheck};
pub use classes::{
    chern_candidate, chern_square_class, construct_w4m_lift, first_obstruction, integral_sw,
    rank6_second_obstruction, theorem1_obstruction, theorem2_class, validate_wu_formula,
    wu_dim4_obstruction,
};
pub use pipeline::{
    acs_verdict, acs_verdict_with_cap, evaluate_candidate, search_candidates,
    search_vanishing_lifts, CandidateSearch, DEFAULT_BOUND, DEFAULT_CANDIDATE_CAP,
};
pub use tables::{homotopy_group, obstruction_denominator, stable_homotopy_group};
pub use verdict::{
    CandidateResult, ChernCandidate, Conclusion, ObstructionReport, Status, Verdict,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("invalid bundle data: {0}")]
    InvalidBundle(String),
    #[error("validation failed for {check}: discrepancy {discrepancy}")]
    Validation { check: String, discrepancy: String },
    #[error("invalid Chern candidate: {0}")]
    InvalidCandidate(String),
    #[error("q = {0} is not zero mod 4; the input data is inconsistent")]
    Divisibility(String),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("{candidates} candidates exceed the cap of {cap}")]
    Budget { candidates: u64, cap: u64 },
    #[error("out of range: {0}")]
    OutOfRange(String),
}

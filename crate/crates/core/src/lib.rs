//! Exact computation of the obstructions to complex structures on oriented
//! real vector bundles, from characteristic-class data.
//!
//! * [`intlin`]: Smith normal form, integer solving, abelian group invariants.
//! * [`gradedring`]: truncated graded-commutative cohomology rings over
//!   Z, Z/2 and Z/4 with the coefficient maps between them.
//! * [`obstruct`]: integral Stiefel–Whitney classes, Pontryagin squares and
//!   the obstruction pipeline.
//! * [`cli`]: the JSON space-file format, bundled corpus and report rendering
//!   used by the `acso` binary.

pub(crate) mod bigint_serde;
pub mod cli;
pub mod gradedring;
pub mod intlin;
pub mod obstruct;

pub use num_bigint::BigInt;

//! Exact scalars: Gaussian rationals and formal eigenvalue generators.

mod basis;
mod gaussrat;
mod lattice;
mod rat;
mod record;
mod scalar;

pub use basis::{EigenBasis, DEFAULT_SEARCH_BOUND};
pub use gaussrat::GaussRat;
pub use lattice::{q, Exponent, RelationLattice, Q};
pub use rat::Rat;
pub use record::{ExponentParseError, ScalarRecord, TermRecord};
pub use scalar::Scalar;

pub(crate) use scalar::same_basis;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("scalars live over different eigenvalue bases")]
    BasisMismatch,
    #[error("scalar is not invertible in the ring")]
    NotInvertible,
    #[error("eigenvalue witness must be finite and nonzero")]
    ZeroWitness,
    #[error("numeric witness violates relation {0:?}")]
    WitnessViolatesRelation([i64; 2]),
}

//! Exact dense linear algebra over Q(i): matrices with deterministic
//! Gauss–Jordan reduction, canonical subspaces, and quotient presentations.

mod matrix;
mod subspace;

pub use matrix::{Matrix, Rref};
pub use subspace::{QuotientPresentation, Subspace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is singular")]
    Singular,
    #[error("denominator is not contained in the total space")]
    NotASubspace,
}

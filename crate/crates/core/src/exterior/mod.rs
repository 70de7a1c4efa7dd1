//! Exact multilinear algebra on the exterior algebra Λ•(R^n)* with
//! coefficients in Q(i): scalars, wedge monomial indexing, and sparse forms.

mod form;
mod multi_index;
mod scalar;

pub use form::{wedge_all, Form};
pub use multi_index::MultiIndex;
pub use scalar::{parse_rational, Rational, Scalar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExteriorError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u8, right: u8 },
    #[error("invalid multi-index {indices:?}: indices must be strictly increasing and ≥ 1")]
    BadMultiIndex { indices: Vec<u8> },
}

/// Binomial coefficient, used for basis sizes.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = 1usize;
    for i in 0..k {
        num = num * (n - i) / (i + 1);
    }
    num
}

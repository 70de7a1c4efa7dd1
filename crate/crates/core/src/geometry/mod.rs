//! Geometric structures on a Lie algebra: almost-complex structures with
//! their bidegree decompositions, symplectic forms with the canonical
//! (symplectic-star) operator, inner products with the Hodge star, and
//! compatible almost-Kähler triples.

mod almost_complex;
mod bidegree;
mod metric;
mod symplectic;
mod triple;

pub use almost_complex::AlmostComplexStructure;
pub use bidegree::BidegreeSplit;
pub use metric::Metric;
pub use symplectic::SymplecticForm;
pub use triple::AlmostKahlerTriple;

use crate::exterior::Rational;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeometryError {
    #[error("coframe image for e{index} {reason}")]
    CoframeImageShape { index: u8, reason: String },
    #[error("J does not square to minus the identity")]
    FrameNotAntiInvolution,
    #[error("not a symplectic form: {reason}")]
    NotSymplectic { reason: String },
    #[error("metric tensor is not symmetric")]
    NotSymmetric,
    #[error("metric tensor is not positive definite")]
    NotPositiveDefinite,
    #[error("metric determinant {det} is not the square of a rational")]
    NonSquareVolume { det: Rational },
    #[error("the 2-form is not J-invariant")]
    NotJInvariant,
    #[error("explicit metric differs from omega(., J.)")]
    IncompatibleMetric,
    #[error("structures live in different dimensions")]
    DimensionMismatch,
}

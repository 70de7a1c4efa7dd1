//! Exact-arithmetic toolkit for the cohomology of finite-dimensional Lie
//! algebras carrying almost-complex, symplectic, and metric structures.
//!
//! Everything is computed over the field Q(i) of Gaussian rationals with
//! arbitrary-precision integers — there is no floating point and no rounding
//! anywhere. The layers, bottom to top:
//!
//! * [`exterior`]: sparse exterior algebra (scalars, multi-indices, forms).
//! * [`linalg`]: dense exact matrices, RREF, and the subspace lattice.
//! * [`cealgebra`]: Lie algebras given by structure equations, their
//!   Chevalley–Eilenberg complex, cohomology, cup and Massey products.
//! * [`geometry`]: almost-complex structures and bidegrees, symplectic
//!   forms with the canonical (symplectic-star) operator, metrics with the
//!   Hodge star, and compatible triples.
//! * [`analysis`]: invariant-type cohomology subgroups, pure/full
//!   decompositions, harmonic spaces, Lefschetz-type properties, geometric
//!   formality, and report assembly.

pub mod analysis;
pub mod cealgebra;
pub mod exterior;
pub mod geometry;
pub mod linalg;

#[cfg(test)]
pub(crate) mod test_fixtures;

pub use analysis::{analyze, AnalysisError, AnalysisOptions, AnalysisReport, StructureInput};
pub use cealgebra::{CeComplex, LieAlgebra, MasseyTriple, SolvabilityHint, ValidationReport};
pub use exterior::{parse_rational, Form, MultiIndex, Rational, Scalar};
pub use geometry::{
    AlmostComplexStructure, AlmostKahlerTriple, BidegreeSplit, Metric, SymplecticForm,
};
pub use linalg::{Matrix, QuotientPresentation, Subspace};

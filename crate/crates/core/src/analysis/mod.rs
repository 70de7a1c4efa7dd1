//! The headline computations: invariant-type cohomology subgroups and
//! pure/full verdicts, harmonic spaces, the Lefschetz-type property on
//! 2-forms, the Hard Lefschetz Condition, geometric formality, balanced
//! candidates, dimension bounds, and assembly of everything into a
//! serializable report.

mod analyze;
mod checks;
mod harmonic;
mod lefschetz;
mod report;
mod subgroups;
mod typeset;

pub use analyze::{analyze, AnalysisOptions, StructureInput};
pub use checks::{balanced_check, bounds_check, BalancedVerdict, BoundsCheck};
pub use harmonic::{
    geometric_formality, harmonic_basis, harmonic_space, pure_type_harmonic_basis,
    FormalityVerdict,
};
pub use lefschetz::{hard_lefschetz, lefschetz_type_property, LefschetzVerdict};
pub use report::{
    AnalysisReport, BalancedReport, BoundsReport, DegreeReport, DegreeStructureReport,
    FlagsReport, FormalityReport, HarmonicPureBasisReport, MasseyReport, StructureReport,
    SubgroupDimReport,
};
pub use subgroups::{pure_full, subgroup, PureFullResult, PureTypeSubgroup};
pub use typeset::TypeSet;

use crate::cealgebra::AlgebraError;
use crate::geometry::GeometryError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AnalysisError {
    #[error("type ({p},{q}) does not have total degree {degree}")]
    TypeDegreeMismatch { p: usize, q: usize, degree: usize },
    #[error("balanced candidate must be a real 2-form of pure type (1,1)")]
    NotTypeOneOne,
    #[error("balanced candidate does not induce a positive-definite metric")]
    NotPositive,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

//! Lie algebras given by structure equations and their Chevalley–Eilenberg
//! cohomology: differentials, Betti numbers, cup and Massey products, and
//! structural validation (Jacobi, unimodularity, nilpotency, solvability).

mod algebra;
mod complex;
mod poly;

pub use algebra::{LieAlgebra, SolvabilityHint, ValidationReport};
pub use complex::{CeComplex, MasseyTriple};
pub use poly::{char_poly, Poly};

use crate::exterior::Form;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AlgebraError {
    #[error("expected {expected} structure equations, got {got}")]
    EquationCount { expected: usize, got: usize },
    #[error("structure equation for e{generator} {reason}")]
    EquationShape { generator: u8, reason: String },
    #[error("Jacobi identity fails: d(d e{generator}) = {defect}, expected 0")]
    Jacobi { generator: u8, defect: Form },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum MasseyError {
    #[error("argument {which} is not closed")]
    NotClosed { which: char },
    #[error("cup product of pair {pair} does not vanish in cohomology")]
    CupNonzero { pair: &'static str },
}

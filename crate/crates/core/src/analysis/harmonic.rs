use super::TypeSet;
use crate::cealgebra::CeComplex;
use crate::exterior::Form;
use crate::geometry::{AlmostComplexStructure, BidegreeSplit, Metric};
use crate::linalg::{Matrix, Subspace};

/// Harmonic k-forms with respect to `metric`: ker d ∩ ker δ inside Λ^k.
/// Finite-dimensional Hodge theory makes this isomorphic to H^k.
pub fn harmonic_space(complex: &CeComplex, metric: &Metric, k: usize) -> Subspace {
    if k == 0 {
        return complex.d_matrix(0).kernel();
    }
    let stacked = complex.d_matrix(k).vstack(&metric.codifferential_matrix(complex, k));
    stacked.kernel()
}

/// A basis of harmonic k-forms.
pub fn harmonic_basis(complex: &CeComplex, metric: &Metric, k: usize) -> Vec<Form> {
    let dim = complex.algebra().dim();
    harmonic_space(complex, metric, k)
        .basis_rows()
        .map(|row| Form::from_coordinates(dim, k, row))
        .collect()
}

/// A basis of harmonic k-forms each of pure type for the given partition,
/// if one exists. Exists iff the harmonic space splits as the direct sum of
/// its intersections with the type components.
pub fn pure_type_harmonic_basis(
    complex: &CeComplex,
    metric: &Metric,
    j: &AlmostComplexStructure,
    parts: &[TypeSet],
) -> Option<Vec<Form>> {
    assert!(!parts.is_empty(), "need at least one type set");
    let k = parts[0].degree();
    assert!(parts.iter().all(|s| s.degree() == k), "mixed degrees");

    let h = harmonic_space(complex, metric, k);
    let split = BidegreeSplit::new(j, k);
    let dim = complex.algebra().dim();

    let mut basis = Vec::new();
    let mut covered = 0usize;
    for s in parts {
        let proj = split.projection_matrix(&s.pairs());
        let fixed = Matrix::identity(proj.rows()).sub(&proj).kernel();
        let piece = h.intersect(&fixed);
        covered += piece.dim();
        basis.extend(piece.basis_rows().map(|row| Form::from_coordinates(dim, k, row)));
    }
    (covered == h.dim()).then_some(basis)
}

/// Outcome of the geometric-formality test for one metric.
#[derive(Clone, Debug)]
pub struct FormalityVerdict {
    holds: bool,
    /// First (in degree-lex order) pair of harmonic forms whose product
    /// fails to be harmonic.
    witness: Option<(Form, Form)>,
}

impl FormalityVerdict {
    pub fn holds(&self) -> bool {
        self.holds
    }

    pub fn witness(&self) -> Option<(&Form, &Form)> {
        self.witness.as_ref().map(|(a, b)| (a, b))
    }
}

/// The metric is geometrically formal when the wedge of any two harmonic
/// forms is again harmonic. Products of harmonic forms are closed whenever
/// the harmonic forms themselves are (true here since harmonics are closed
/// and d is a derivation), so only coclosedness needs checking.
pub fn geometric_formality(complex: &CeComplex, metric: &Metric) -> FormalityVerdict {
    let n = complex.algebra().dim() as usize;
    let bases: Vec<Vec<Form>> =
        (0..=n).map(|k| harmonic_basis(complex, metric, k)).collect();

    for j in 0..=n {
        for k in j..=n {
            if j + k > n {
                break;
            }
            for a in &bases[j] {
                for b in &bases[k] {
                    let prod = a.wedge(b).expect("dimensions agree");
                    if prod.is_zero() {
                        continue;
                    }
                    debug_assert!(complex.d(&prod).is_zero());
                    if !metric.codifferential(complex, &prod).is_zero() {
                        return FormalityVerdict {
                            holds: false,
                            witness: Some((a.clone(), b.clone())),
                        };
                    }
                }
            }
        }
    }
    FormalityVerdict { holds: true, witness: None }
}

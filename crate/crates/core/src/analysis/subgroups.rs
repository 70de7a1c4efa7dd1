use super::TypeSet;
use crate::cealgebra::CeComplex;
use crate::exterior::Form;
use crate::geometry::{AlmostComplexStructure, BidegreeSplit};
use crate::linalg::{Matrix, Subspace};

/// The classes in H^r representable by real closed forms whose bidegree
/// components all lie in a fixed swap-closed type set.
#[derive(Clone, Debug)]
pub struct PureTypeSubgroup {
    type_set: TypeSet,
    /// Subspace of H^r in the cohomology section coordinates.
    space: Subspace,
    /// Real closed pure-type forms whose classes form a basis of `space`.
    representatives: Vec<Form>,
}

impl PureTypeSubgroup {
    pub fn type_set(&self) -> &TypeSet {
        &self.type_set
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn representatives(&self) -> &[Form] {
        &self.representatives
    }
}

/// Closed forms supported on the type set, as a subspace of Λ^r.
fn closed_pure_forms(
    complex: &CeComplex,
    j: &AlmostComplexStructure,
    s: &TypeSet,
) -> Subspace {
    let r = s.degree();
    let split = BidegreeSplit::new(j, r);
    let proj = split.projection_matrix(&s.pairs());
    let n = proj.rows();
    // α closed and π_S α = α
    let stacked = complex.d_matrix(r).vstack(&Matrix::identity(n).sub(&proj));
    stacked.kernel()
}

/// H^S_J in degree `s.degree()`: push the closed pure-type forms forward
/// along Z^r → H^r. Swap-closure of `s` makes the projector rational, so the
/// kernel computation stays over the reals and the representatives are real.
pub fn subgroup(
    complex: &CeComplex,
    j: &AlmostComplexStructure,
    s: &TypeSet,
) -> PureTypeSubgroup {
    let r = s.degree();
    let z = closed_pure_forms(complex, j, s);
    let cohom = complex.cohomology(r);
    let rows: Vec<Vec<_>> = z.basis_rows().map(|row| row.to_vec()).collect();
    let space = cohom.project_span(&rows);

    // deterministic representatives: greedy scan of the Z^S basis keeping
    // the forms whose classes enlarge the projected span
    let mut representatives = Vec::new();
    let mut kept_coords: Vec<Vec<_>> = Vec::new();
    for row in &rows {
        if representatives.len() == space.dim() {
            break;
        }
        let coords = cohom.project(row).expect("basis row is closed");
        let acc = Subspace::from_spanning(space.ambient(), kept_coords.clone());
        if !acc.contains(&coords) {
            kept_coords.push(coords);
            representatives.push(Form::from_coordinates(complex.algebra().dim(), r, row));
        }
    }
    debug_assert_eq!(representatives.len(), space.dim());

    PureTypeSubgroup { type_set: s.clone(), space, representatives }
}

/// Purity and fullness of a family of type sets in a fixed degree.
#[derive(Clone, Debug)]
pub struct PureFullResult {
    degree: usize,
    subgroups: Vec<PureTypeSubgroup>,
    pure: bool,
    full: bool,
    /// A representative of a nonzero class in some pairwise intersection.
    intersection_witness: Option<Form>,
    /// A representative of a class outside the sum of the subgroups.
    complement_witness: Option<Form>,
}

impl PureFullResult {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn subgroups(&self) -> &[PureTypeSubgroup] {
        &self.subgroups
    }

    pub fn is_pure(&self) -> bool {
        self.pure
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn intersection_witness(&self) -> Option<&Form> {
        self.intersection_witness.as_ref()
    }

    pub fn complement_witness(&self) -> Option<&Form> {
        self.complement_witness.as_ref()
    }
}

/// pure ⟺ the subgroups intersect pairwise in zero; full ⟺ they sum to all
/// of H^r. Witnesses are produced for whichever part fails.
pub fn pure_full(
    complex: &CeComplex,
    j: &AlmostComplexStructure,
    parts: &[TypeSet],
) -> PureFullResult {
    assert!(!parts.is_empty(), "need at least one type set");
    let degree = parts[0].degree();
    assert!(parts.iter().all(|s| s.degree() == degree), "mixed degrees");

    let subgroups: Vec<_> = parts.iter().map(|s| subgroup(complex, j, s)).collect();
    let cohom = complex.cohomology(degree);

    let mut pure = true;
    let mut intersection_witness = None;
    'outer: for (i, a) in subgroups.iter().enumerate() {
        for b in &subgroups[i + 1..] {
            let meet = a.space.intersect(&b.space);
            if meet.dim() > 0 {
                pure = false;
                let coords = meet.basis_rows().next().expect("nonzero").to_vec();
                intersection_witness =
                    Some(complex.class_representative(degree, &coords));
                break 'outer;
            }
        }
    }

    let mut total = Subspace::zero(cohom.dim());
    for g in &subgroups {
        total = total.sum(&g.space);
    }
    let full = total.dim() == cohom.dim();
    let complement_witness = if full {
        None
    } else {
        // some coordinate vector of the section basis lies outside the sum
        (0..cohom.dim())
            .map(|i| {
                let mut v = vec![crate::exterior::Scalar::zero(); cohom.dim()];
                v[i] = crate::exterior::Scalar::one();
                v
            })
            .find(|v| !total.contains(v))
            .map(|v| complex.class_representative(degree, &v))
    };

    PureFullResult { degree, subgroups, pure, full, intersection_witness, complement_witness }
}

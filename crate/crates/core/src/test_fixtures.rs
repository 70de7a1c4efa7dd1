//! Lie-algebra and geometric-structure fixtures shared by unit tests
//! across modules.

use crate::cealgebra::LieAlgebra;
use crate::exterior::{Form, Rational, Scalar};
use crate::geometry::AlmostComplexStructure;

pub fn mono(dim: u8, idx: &[u8], num: i64, den: i64) -> Form {
    Form::monomial(dim, idx, Scalar::from_ratio(num, den))
}

fn zeros(dim: u8, count: usize) -> Vec<Form> {
    (0..count).map(|_| Form::zero(dim, 2)).collect()
}

/// dim 6 nilpotent: d e5 = -e13 + e24, d e6 = -e14 - e23.
pub fn iwasawa() -> LieAlgebra {
    let mut diffs = zeros(6, 4);
    diffs.push(&mono(6, &[1, 3], -1, 1) + &mono(6, &[2, 4], 1, 1));
    diffs.push(&mono(6, &[1, 4], -1, 1) + &mono(6, &[2, 3], -1, 1));
    LieAlgebra::new("iwasawa", 6, diffs).unwrap()
}

/// Same as [`iwasawa`] but with d e2 = e12 injected, which breaks Jacobi
/// first at generator 5 with defect d(d e5) = e124.
pub fn iwasawa_with_bad_e2() -> LieAlgebra {
    let mut diffs = zeros(6, 4);
    diffs[1] = mono(6, &[1, 2], 1, 1);
    diffs.push(&mono(6, &[1, 3], -1, 1) + &mono(6, &[2, 4], 1, 1));
    diffs.push(&mono(6, &[1, 4], -1, 1) + &mono(6, &[2, 3], -1, 1));
    LieAlgebra::new("iwasawa-bad", 6, diffs).unwrap()
}

/// dim 6 solvable, not nilpotent: d e3 = e13, d e4 = -e14, d e5 = e15,
/// d e6 = -e16.
pub fn nakamura() -> LieAlgebra {
    let mut diffs = zeros(6, 2);
    diffs.push(mono(6, &[1, 3], 1, 1));
    diffs.push(mono(6, &[1, 4], -1, 1));
    diffs.push(mono(6, &[1, 5], 1, 1));
    diffs.push(mono(6, &[1, 6], -1, 1));
    LieAlgebra::new("nakamura", 6, diffs).unwrap()
}

pub fn torus6() -> LieAlgebra {
    LieAlgebra::abelian("torus6", 6)
}

/// dim 6 nilpotent one-parameter family (alpha not in {0, 1}):
/// d e4 = 1/(a(a-1)) e23, d e5 = 1/(a-1) e13, d e6 = 1/a e12.
pub fn nilmanifold_n(alpha: Rational) -> LieAlgebra {
    let one = Rational::from_integer(1.into());
    let c4 = (&alpha * (&alpha - &one)).recip();
    let c5 = (&alpha - &one).recip();
    let c6 = alpha.recip();
    let mut diffs = zeros(6, 3);
    diffs.push(Form::monomial(6, &[2, 3], Scalar::from_rational(c4)));
    diffs.push(Form::monomial(6, &[1, 3], Scalar::from_rational(c5)));
    diffs.push(Form::monomial(6, &[1, 2], Scalar::from_rational(c6)));
    LieAlgebra::new("nilmanifold-n", 6, diffs).unwrap()
}

pub fn alpha2() -> Rational {
    Rational::from_integer(2.into())
}

/// Heisenberg: d e3 = e12.
pub fn heisenberg3() -> LieAlgebra {
    let diffs = vec![Form::zero(3, 2), Form::zero(3, 2), mono(3, &[1, 2], 1, 1)];
    LieAlgebra::new("heisenberg3", 3, diffs).unwrap()
}

/// Affine line aff(1): d e2 = e12, i.e. [e1, e2] = -e2.
pub fn affine2() -> LieAlgebra {
    let diffs = vec![Form::zero(2, 2), mono(2, &[1, 2], 1, 1)];
    LieAlgebra::new("affine2", 2, diffs).unwrap()
}

/// sl(2) in the basis (h, e, f): d e1 = -e23, d e2 = -2 e12, d e3 = 2 e13.
pub fn sl2() -> LieAlgebra {
    let diffs = vec![mono(3, &[2, 3], -1, 1), mono(3, &[1, 2], -2, 1), mono(3, &[1, 3], 2, 1)];
    LieAlgebra::new("sl2", 3, diffs).unwrap()
}

/// Pair-type almost-complex structure: for each (a, b), J* e^a = -e^b and
/// J* e^b = e^a, so e^a + i e^b is a (1,0)-form.
pub fn j_pairs(dim: u8, pairs: &[(u8, u8)]) -> AlmostComplexStructure {
    let mut images = vec![Form::zero(dim, 1); dim as usize];
    for &(a, b) in pairs {
        images[(a - 1) as usize] = mono(dim, &[b], -1, 1);
        images[(b - 1) as usize] = mono(dim, &[a], 1, 1);
    }
    AlmostComplexStructure::from_coframe_images(images).unwrap()
}

pub fn torus6_j() -> AlmostComplexStructure {
    j_pairs(6, &[(1, 4), (2, 5), (3, 6)])
}

pub fn torus6_omega() -> Form {
    &(&mono(6, &[1, 4], 1, 1) + &mono(6, &[2, 5], 1, 1)) + &mono(6, &[3, 6], 1, 1)
}

/// The non-integrable almost-Kähler J on the Iwasawa algebra.
pub fn iwasawa_j() -> AlmostComplexStructure {
    j_pairs(6, &[(1, 6), (2, 5), (3, 4)])
}

pub fn iwasawa_omega() -> Form {
    &(&mono(6, &[1, 6], 1, 1) + &mono(6, &[2, 5], 1, 1)) + &mono(6, &[3, 4], 1, 1)
}

/// The integrable complex structure on the Nakamura algebra, with
/// (1,0)-coframe spanned by e1 + i e2, e3 + i e5, e4 + i e6.
pub fn nakamura_complex_j() -> AlmostComplexStructure {
    j_pairs(6, &[(1, 2), (3, 5), (4, 6)])
}

/// The non-integrable almost-Kähler J' on the Nakamura algebra.
pub fn nakamura_j_prime() -> AlmostComplexStructure {
    j_pairs(6, &[(1, 2), (3, 4), (5, 6)])
}

pub fn nakamura_omega() -> Form {
    &(&mono(6, &[1, 2], 1, 1) + &mono(6, &[3, 4], 1, 1)) + &mono(6, &[5, 6], 1, 1)
}

/// Non-closed positive (1,1)-form on the Nakamura algebra whose square is
/// closed (a balanced candidate).
pub fn nakamura_balanced_candidate() -> Form {
    &(&mono(6, &[1, 2], 1, 4) + &mono(6, &[3, 5], 1, 1)) + &mono(6, &[4, 6], 1, 1)
}

pub fn nilmanifold_j() -> AlmostComplexStructure {
    j_pairs(6, &[(1, 4), (2, 5), (3, 6)])
}

pub fn nilmanifold_omega() -> Form {
    torus6_omega()
}

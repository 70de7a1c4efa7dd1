//! Finite-dimensional real Lie algebras presented dually: a structure
//! equation `d e^k` (a real 2-form) for each generator of the dual basis.
//! Brackets are recovered from `d e^k (e_i, e_j) = -e^k([e_i, e_j])`.

use super::poly::char_poly;
use super::AlgebraError;
use crate::exterior::{Form, Rational, Scalar};
use crate::linalg::{Matrix, Subspace};

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    name: String,
    dim: u8,
    /// diffs[k-1] = d e^k, a real 2-form.
    diffs: Vec<Form>,
}

/// Verdict of the sampled complete-solvability test. `Yes` is exact for
/// nilpotent algebras and a (strong) necessary-condition pass otherwise;
/// `No` is always an exact refutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolvabilityHint {
    Yes,
    No,
    Unknown,
}

impl std::fmt::Display for SolvabilityHint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SolvabilityHint::Yes => "yes",
            SolvabilityHint::No => "no",
            SolvabilityHint::Unknown => "unknown",
        })
    }
}

/// Structural facts established by [`LieAlgebra::validate`]. `jacobi_ok` is
/// always true on the `Ok` path; a Jacobi failure is reported as an error
/// carrying the offending generator and the nonzero defect d(d e^k).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub jacobi_ok: bool,
    pub unimodular: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub completely_solvable: SolvabilityHint,
}

impl LieAlgebra {
    /// `diffs[k-1]` is d e^k; each must be a real 2-form in the right
    /// dimension. The Jacobi identity is *not* checked here — call
    /// [`check_jacobi`](Self::check_jacobi) or [`validate`](Self::validate).
    pub fn new(name: impl Into<String>, dim: u8, diffs: Vec<Form>) -> Result<Self, AlgebraError> {
        if diffs.len() != dim as usize {
            return Err(AlgebraError::EquationCount { expected: dim as usize, got: diffs.len() });
        }
        for (k, f) in diffs.iter().enumerate() {
            let generator = (k + 1) as u8;
            if f.dim() != dim {
                return Err(AlgebraError::EquationShape {
                    generator,
                    reason: format!("lives in dimension {}, algebra has {}", f.dim(), dim),
                });
            }
            if f.degree() != 2 {
                return Err(AlgebraError::EquationShape {
                    generator,
                    reason: format!("has degree {}, expected 2", f.degree()),
                });
            }
            if !f.is_real() {
                return Err(AlgebraError::EquationShape {
                    generator,
                    reason: "has non-real coefficients".into(),
                });
            }
        }
        Ok(LieAlgebra { name: name.into(), dim, diffs })
    }

    pub fn abelian(name: impl Into<String>, dim: u8) -> Self {
        let diffs = (0..dim).map(|_| Form::zero(dim, 2)).collect();
        LieAlgebra { name: name.into(), dim, diffs }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    /// d e^k (1-based).
    pub fn structure_equation(&self, k: u8) -> &Form {
        &self.diffs[(k - 1) as usize]
    }

    pub fn structure_equations(&self) -> &[Form] {
        &self.diffs
    }

    /// Chevalley–Eilenberg differential, extended from the structure
    /// equations by the graded Leibniz rule.
    pub fn differential(&self, form: &Form) -> Form {
        assert_eq!(form.dim(), self.dim, "form/algebra dimension mismatch");
        let k = form.degree();
        let mut out = Form::zero(self.dim, k + 1);
        for (mi, c) in form.terms() {
            let idx = mi.indices();
            for a in 0..idx.len() {
                let left = Form::monomial(self.dim, &idx[..a], Scalar::one());
                let right = Form::monomial(self.dim, &idx[a + 1..], Scalar::one());
                let mid = &self.diffs[(idx[a] - 1) as usize];
                let term =
                    left.wedge(mid).expect("same dim").wedge(&right).expect("same dim").scale(c);
                out = if a % 2 == 0 { &out + &term } else { &out - &term };
            }
        }
        out
    }

    /// Coordinates of [e_i, e_j] in the basis (e_1, ..., e_n).
    pub fn bracket_basis(&self, i: u8, j: u8) -> Vec<Scalar> {
        (0..self.dim as usize).map(|k| -self.diffs[k].eval_pair(i, j)).collect()
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(u.len(), self.dim as usize);
        assert_eq!(v.len(), self.dim as usize);
        (0..self.dim as usize)
            .map(|k| {
                let mut acc = Scalar::zero();
                for (mi, c) in self.diffs[k].terms() {
                    let (i, j) = (mi.indices()[0] as usize - 1, mi.indices()[1] as usize - 1);
                    let pair = &(&u[i] * &v[j]) - &(&u[j] * &v[i]);
                    acc += &(c * &pair);
                }
                -acc
            })
            .collect()
    }

    /// Matrix of ad_{e_i} = [e_i, ·] (1-based).
    pub fn ad_basis(&self, i: u8) -> Matrix {
        let n = self.dim as usize;
        let cols: Vec<Vec<Scalar>> = (1..=self.dim).map(|j| self.bracket_basis(i, j)).collect();
        Matrix::from_fn(n, n, |r, c| cols[c][r].clone())
    }

    /// Matrix of ad_X for X given in coordinates.
    pub fn ad(&self, v: &[Scalar]) -> Matrix {
        let n = self.dim as usize;
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|j| {
                let mut unit = vec![Scalar::zero(); n];
                unit[j] = Scalar::one();
                self.bracket(v, &unit)
            })
            .collect();
        Matrix::from_fn(n, n, |r, c| cols[c][r].clone())
    }

    /// d² = 0 on generators, which by the Leibniz rule is equivalent to the
    /// Jacobi identity. On failure, reports the first offending generator
    /// together with the defect d(d e^k).
    pub fn check_jacobi(&self) -> Result<(), AlgebraError> {
        for k in 1..=self.dim {
            let defect = self.differential(self.structure_equation(k));
            if !defect.is_zero() {
                return Err(AlgebraError::Jacobi { generator: k, defect });
            }
        }
        Ok(())
    }

    /// Span of all brackets [u, v], u ranging over a basis of `s1` and v
    /// over a basis of `s2`.
    fn bracket_span(&self, s1: &Subspace, s2: &Subspace) -> Subspace {
        let mut gens = Vec::new();
        for u in s1.basis_rows() {
            for v in s2.basis_rows() {
                gens.push(self.bracket(u, v));
            }
        }
        Subspace::from_spanning(self.dim as usize, gens)
    }

    fn is_nilpotent(&self) -> bool {
        let full = Subspace::full(self.dim as usize);
        let mut c = self.bracket_span(&full, &full);
        loop {
            let next = self.bracket_span(&full, &c);
            if next.dim() == c.dim() {
                return c.dim() == 0;
            }
            c = next;
        }
    }

    fn is_solvable(&self) -> bool {
        let full = Subspace::full(self.dim as usize);
        let mut d = self.bracket_span(&full, &full);
        loop {
            let next = self.bracket_span(&d, &d);
            if next.dim() == d.dim() {
                return d.dim() == 0;
            }
            d = next;
        }
    }

    /// Sampled test for complete solvability (all ad_X with real spectrum):
    /// checks every basis element plus the Vandermonde combinations
    /// X_t = sum_i t^{i-1} e_i for t = 1..=20. Any non-real eigenvalue
    /// refutes exactly; a full pass on a solvable algebra is reported as
    /// `Yes` (exact when nilpotent).
    fn complete_solvability_hint(&self, nilpotent: bool, solvable: bool) -> SolvabilityHint {
        if nilpotent {
            return SolvabilityHint::Yes;
        }
        if !solvable {
            return SolvabilityHint::No;
        }
        let n = self.dim as usize;
        let mut samples: Vec<Matrix> = (1..=self.dim).map(|i| self.ad_basis(i)).collect();
        for t in 1..=20i64 {
            let v: Vec<Scalar> = (0..n as u32)
                .map(|i| Scalar::from_rational(Rational::from_integer(t.pow(i).into())))
                .collect();
            samples.push(self.ad(&v));
        }
        if samples.iter().all(|m| char_poly(m).all_roots_real()) {
            SolvabilityHint::Yes
        } else {
            SolvabilityHint::No
        }
    }

    pub fn validate(&self) -> Result<ValidationReport, AlgebraError> {
        self.check_jacobi()?;
        let unimodular = (1..=self.dim).all(|i| self.ad_basis(i).trace().is_zero());
        let nilpotent = self.is_nilpotent();
        let solvable = nilpotent || self.is_solvable();
        let completely_solvable = self.complete_solvability_hint(nilpotent, solvable);
        Ok(ValidationReport {
            jacobi_ok: true,
            unimodular,
            nilpotent,
            solvable,
            completely_solvable,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_fixtures as fx;

    #[test]
    fn rejects_malformed_structure_equations() {
        let err = LieAlgebra::new("bad", 3, vec![Form::zero(3, 2)]).unwrap_err();
        assert!(matches!(err, AlgebraError::EquationCount { expected: 3, got: 1 }));

        let err = LieAlgebra::new(
            "bad",
            3,
            vec![Form::zero(3, 2), Form::zero(3, 1), Form::zero(3, 2)],
        )
        .unwrap_err();
        assert!(matches!(err, AlgebraError::EquationShape { generator: 2, .. }));

        let i_form = Form::monomial(3, &[1, 2], Scalar::i());
        let err =
            LieAlgebra::new("bad", 3, vec![Form::zero(3, 2), Form::zero(3, 2), i_form]).unwrap_err();
        assert!(matches!(err, AlgebraError::EquationShape { generator: 3, .. }));
    }

    #[test]
    fn brackets_recovered_from_structure_equations() {
        // d e^3 = e^{12} means [e_1, e_2] = -e_3
        let heis = fx::heisenberg3();
        let b = heis.bracket_basis(1, 2);
        assert_eq!(b, vec![Scalar::zero(), Scalar::zero(), Scalar::from_int(-1)]);
        let b = heis.bracket_basis(2, 1);
        assert_eq!(b, vec![Scalar::zero(), Scalar::zero(), Scalar::from_int(1)]);
        assert!(heis.bracket_basis(1, 3).iter().all(Scalar::is_zero));

        // coordinate-vector bracket agrees and is bilinear
        let u = [Scalar::from_int(2), Scalar::from_int(1), Scalar::zero()];
        let v = [Scalar::zero(), Scalar::from_int(3), Scalar::from_int(5)];
        let w = heis.bracket(&u, &v);
        assert_eq!(w, vec![Scalar::zero(), Scalar::zero(), Scalar::from_int(-6)]);
    }

    #[test]
    fn differential_satisfies_leibniz() {
        let iw = fx::iwasawa();
        let a = Form::monomial(6, &[1, 2], Scalar::one());
        let b = Form::monomial(6, &[5], Scalar::one());
        let ab = a.wedge(&b).unwrap();
        let lhs = iw.differential(&ab);
        // d(a ∧ b) = da ∧ b + (-1)^2 a ∧ db
        let rhs = &iw.differential(&a).wedge(&b).unwrap() + &a.wedge(&iw.differential(&b)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobi_failure_pinpoints_generator_and_defect() {
        let alg = fx::iwasawa_with_bad_e2();
        let err = alg.check_jacobi().unwrap_err();
        match err {
            AlgebraError::Jacobi { generator, defect } => {
                assert_eq!(generator, 5);
                assert_eq!(defect, Form::monomial(6, &[1, 2, 4], Scalar::one()));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn iwasawa_validation_flags() {
        let report = fx::iwasawa().validate().unwrap();
        assert!(report.jacobi_ok);
        assert!(report.unimodular);
        assert!(report.nilpotent);
        assert!(report.solvable);
        assert_eq!(report.completely_solvable, SolvabilityHint::Yes);
    }

    #[test]
    fn nakamura_validation_flags() {
        let report = fx::nakamura().validate().unwrap();
        assert!(report.unimodular);
        assert!(!report.nilpotent);
        assert!(report.solvable);
        assert_eq!(report.completely_solvable, SolvabilityHint::Yes);
    }

    #[test]
    fn affine_line_is_solvable_not_nilpotent_not_unimodular() {
        let report = fx::affine2().validate().unwrap();
        assert!(!report.unimodular);
        assert!(!report.nilpotent);
        assert!(report.solvable);
        assert_eq!(report.completely_solvable, SolvabilityHint::Yes);
    }

    #[test]
    fn sl2_is_not_solvable() {
        let report = fx::sl2().validate().unwrap();
        assert!(report.unimodular);
        assert!(!report.nilpotent);
        assert!(!report.solvable);
        assert_eq!(report.completely_solvable, SolvabilityHint::No);
    }

    #[test]
    fn ad_matrices_match_brackets() {
        let sl2 = fx::sl2();
        // ad_{e_1} in the (h, e, f) presentation: [h, e] = 2e, [h, f] = -2f
        let ad1 = sl2.ad_basis(1);
        let e2 = [Scalar::zero(), Scalar::one(), Scalar::zero()];
        assert_eq!(ad1.mul_vec(&e2), sl2.bracket_basis(1, 2));
        assert!(ad1.trace().is_zero());
    }
}

//! Symplectic (non-degenerate closed 2-form) structure with the canonical
//! pairing, the symplectic star, and the symplectic codifferential.

use super::GeometryError;
use crate::cealgebra::{CeComplex, LieAlgebra};
use crate::exterior::{Form, MultiIndex, Rational, Scalar};
use crate::linalg::Matrix;

#[derive(Clone, Debug)]
pub struct SymplecticForm {
    form: Form,
    /// gram[i][j] = ω(e_i, e_j), invertible and antisymmetric.
    gram: Matrix,
    gram_inv: Matrix,
    /// Coefficient c with ω^m/m! = c · e^{1…n}; nonzero, but either sign.
    top_coeff: Rational,
}

fn factorial(k: usize) -> Rational {
    let mut acc = Rational::from_integer(1.into());
    for i in 2..=k {
        acc *= Rational::from_integer(i.into());
    }
    acc
}

impl SymplecticForm {
    pub fn new(algebra: &LieAlgebra, form: Form) -> Result<Self, GeometryError> {
        let n = algebra.dim();
        if form.dim() != n {
            return Err(GeometryError::DimensionMismatch);
        }
        if form.degree() != 2 || !form.is_real() {
            return Err(GeometryError::NotSymplectic {
                reason: "must be a real 2-form".into(),
            });
        }
        if !algebra.differential(&form).is_zero() {
            return Err(GeometryError::NotSymplectic { reason: "not closed".into() });
        }
        let gram =
            Matrix::from_fn(n as usize, n as usize, |i, j| form.eval_pair(i as u8 + 1, j as u8 + 1));
        let gram_inv = gram
            .inverse()
            .map_err(|_| GeometryError::NotSymplectic { reason: "degenerate".into() })?;

        let m = n as usize / 2;
        let mut top = Form::constant(n, Scalar::one());
        for _ in 0..m {
            top = top.wedge(&form).expect("same dimension");
        }
        let top = top.scale(&Scalar::from_rational(factorial(m).recip()));
        let full = MultiIndex::from_slice(&(1..=n).collect::<Vec<_>>()).unwrap();
        let top_coeff = top.coeff(&full).re().clone();
        debug_assert!(!top_coeff.is_integer() || top_coeff != Rational::from_integer(0.into()));
        Ok(SymplecticForm { form, gram, gram_inv, top_coeff })
    }

    pub fn dim(&self) -> u8 {
        self.form.dim()
    }

    pub fn half(&self) -> usize {
        self.form.dim() as usize / 2
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn gram_inv(&self) -> &Matrix {
        &self.gram_inv
    }

    pub fn top_coefficient(&self) -> &Rational {
        &self.top_coeff
    }

    /// ω^m/m! = c · e^{1…n}, the symplectic volume form.
    pub fn volume_form(&self) -> Form {
        let top: Vec<u8> = (1..=self.dim()).collect();
        Form::monomial(self.dim(), &top, Scalar::from_rational(self.top_coeff.clone()))
    }

    /// ω^k (not normalized).
    pub fn power(&self, k: usize) -> Form {
        let mut acc = Form::constant(self.dim(), Scalar::one());
        for _ in 0..k {
            acc = acc.wedge(&self.form).expect("same dimension");
        }
        acc
    }

    /// Bilinear pairing of two k-forms induced by ω: the extension of
    /// ⟨e^I, e^J⟩_ω = det[(G_ω^{-1})_{i_a j_b}]. Antisymmetry of the Gram
    /// matrix makes this symmetric in even degrees and antisymmetric in odd
    /// ones.
    pub fn pairing(&self, a: &Form, b: &Form) -> Scalar {
        assert_eq!(a.degree(), b.degree(), "degree mismatch in symplectic pairing");
        assert_eq!(a.dim(), self.dim());
        assert_eq!(b.dim(), self.dim());
        let mut acc = Scalar::zero();
        for (i_set, ca) in a.terms() {
            let rows: Vec<usize> = i_set.indices().iter().map(|&i| i as usize - 1).collect();
            for (j_set, cb) in b.terms() {
                let cols: Vec<usize> =
                    j_set.indices().iter().map(|&j| j as usize - 1).collect();
                let minor = self.gram_inv.submatrix(&rows, &cols).det();
                acc += &(&(ca * cb) * &minor);
            }
        }
        acc
    }

    /// Symplectic star: β ∧ ⋆α = ⟨α, β⟩_ω · ω^m/m! for all β. An involution
    /// on every degree.
    pub fn star(&self, form: &Form) -> Form {
        assert_eq!(form.dim(), self.dim());
        let k = form.degree();
        let n = self.dim() as usize;
        assert!(k <= n, "star of a degree-{k} form in dimension {n}");
        let vol = Scalar::from_rational(self.top_coeff.clone());
        let mut terms = Vec::new();
        for j_set in MultiIndex::enumerate(self.dim(), k) {
            let pairing =
                self.pairing(form, &Form::monomial(self.dim(), j_set.indices(), Scalar::one()));
            if pairing.is_zero() {
                continue;
            }
            let (complement, sign) = j_set.complement(self.dim());
            terms.push((complement, &(&pairing * &Scalar::from_int(sign as i64)) * &vol));
        }
        Form::from_terms(self.dim(), n - k, terms).expect("complements are valid monomials")
    }

    /// Symplectic codifferential δ_ω = (-1)^{k+1} ⋆ d ⋆ on k-forms; satisfies
    /// [L_ω, δ_ω] = d where L_ω is the Lefschetz operator ω ∧ ·.
    pub fn codifferential(&self, complex: &CeComplex, form: &Form) -> Form {
        let k = form.degree();
        if k == 0 {
            return Form::zero(self.dim(), 0);
        }
        if k > self.dim() as usize {
            // degrees above the dimension carry only the zero form
            return Form::zero(self.dim(), k - 1);
        }
        let sign = if k % 2 == 0 { -1 } else { 1 };
        self.star(&complex.d(&self.star(form))).scale(&Scalar::from_int(sign))
    }
}

//! Rational inner products: Gram-minor pairings on every exterior power,
//! the Hodge star, and the codifferential. The volume form uses the lex
//! orientation e^{1...n} and requires det(gram) to be the square of a
//! rational, so that everything stays inside Q.

use num::traits::Signed;

use super::GeometryError;
use crate::cealgebra::CeComplex;
use crate::exterior::{Form, MultiIndex, Rational, Scalar};
use crate::linalg::Matrix;

#[derive(Clone, Debug)]
pub struct Metric {
    dim: u8,
    gram: Matrix,
    gram_inv: Matrix,
    /// sqrt(det gram) as a positive rational.
    vol: Rational,
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let sn = r.numer().sqrt();
    let sd = r.denom().sqrt();
    if &(&sn * &sn) == r.numer() && &(&sd * &sd) == r.denom() {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

impl Metric {
    /// `gram[i][j] = g(e_i, e_j)`: must be real symmetric positive definite
    /// with det a perfect rational square (so the volume form is rational).
    pub fn new(gram: Matrix) -> Result<Self, GeometryError> {
        if !gram.is_real() || !gram.is_symmetric() {
            return Err(GeometryError::NotSymmetric);
        }
        if !gram.is_positive_definite() {
            return Err(GeometryError::NotPositiveDefinite);
        }
        let n = gram.rows();
        let det = gram.det().re().clone();
        let vol = rational_sqrt(&det).ok_or(GeometryError::NonSquareVolume { det })?;
        let gram_inv = gram.inverse().expect("positive definite");
        Ok(Metric { dim: n as u8, gram, gram_inv, vol })
    }

    pub fn orthonormal(dim: u8) -> Self {
        Metric::new(Matrix::identity(dim as usize)).expect("identity gram")
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn gram_inv(&self) -> &Matrix {
        &self.gram_inv
    }

    pub fn volume_form(&self) -> Form {
        let top: Vec<u8> = (1..=self.dim).collect();
        Form::monomial(self.dim, &top, Scalar::from_rational(self.vol.clone()))
    }

    /// Pairing of two k-forms, the bilinear (no conjugation) extension of
    /// ⟨e^I, e^J⟩ = det[(g^{-1})_{i_a j_b}].
    pub fn inner(&self, a: &Form, b: &Form) -> Scalar {
        assert_eq!(a.degree(), b.degree(), "degree mismatch in inner product");
        assert_eq!(a.dim(), self.dim);
        assert_eq!(b.dim(), self.dim);
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

    /// Gram matrix of the pairing on the lex monomial basis of Λ^k.
    pub fn gram_on(&self, k: usize) -> Matrix {
        let basis = MultiIndex::enumerate(self.dim, k);
        Matrix::from_fn(basis.len(), basis.len(), |r, c| {
            let rows: Vec<usize> = basis[r].indices().iter().map(|&i| i as usize - 1).collect();
            let cols: Vec<usize> = basis[c].indices().iter().map(|&j| j as usize - 1).collect();
            self.gram_inv.submatrix(&rows, &cols).det()
        })
    }

    /// Hodge star for the lex orientation: β ∧ ⋆α = ⟨α, β⟩ vol for all β.
    pub fn hodge_star(&self, form: &Form) -> Form {
        assert_eq!(form.dim(), self.dim);
        let k = form.degree();
        let n = self.dim as usize;
        let vol = Scalar::from_rational(self.vol.clone());
        let mut terms = Vec::new();
        for j_set in MultiIndex::enumerate(self.dim, k) {
            let pairing =
                self.inner(form, &Form::monomial(self.dim, j_set.indices(), Scalar::one()));
            if pairing.is_zero() {
                continue;
            }
            let (complement, sign) = j_set.complement(self.dim);
            terms.push((complement, &(&pairing * &Scalar::from_int(sign as i64)) * &vol));
        }
        Form::from_terms(self.dim, n - k, terms).expect("complements are valid monomials")
    }

    /// Matrix of the codifferential δ: Λ^k → Λ^{k-1}, the adjoint of d with
    /// respect to the Gram pairings: δ = G_{k-1}^{-1} D_{k-1}ᵀ G_k.
    pub fn codifferential_matrix(&self, complex: &CeComplex, k: usize) -> Matrix {
        assert!(k >= 1 && k <= self.dim as usize, "degree out of range");
        let gk1 = self.gram_on(k - 1);
        let gk = self.gram_on(k);
        let d = complex.d_matrix(k - 1);
        gk1.inverse().expect("positive definite").mul(&d.transpose()).mul(&gk)
    }

    pub fn codifferential(&self, complex: &CeComplex, form: &Form) -> Form {
        let k = form.degree();
        if k == 0 {
            return Form::zero(self.dim, 0);
        }
        let m = self.codifferential_matrix(complex, k);
        Form::from_coordinates(self.dim, k - 1, &m.mul_vec(&form.coordinates()))
    }
}

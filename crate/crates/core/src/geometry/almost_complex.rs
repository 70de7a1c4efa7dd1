//! Almost-complex structures J with J² = -Id, acting on frames, coframes
//! and arbitrary forms (as the pullback algebra homomorphism).

use super::bidegree::BidegreeSplit;
use super::GeometryError;
use crate::cealgebra::CeComplex;
use crate::exterior::{Form, Scalar};
use crate::linalg::Matrix;

/// Stored as the frame matrix A with J e_j = Σ_i A_ij e_i. The same matrix
/// read by rows gives the coframe (pullback) action J* e^i = Σ_j A_ij e^j,
/// since (J* e^i)(e_j) = e^i(J e_j) = A_ij.
#[derive(Clone, Debug)]
pub struct AlmostComplexStructure {
    dim: u8,
    frame: Matrix,
    images: Vec<Form>,
}

impl AlmostComplexStructure {
    /// From the pullback images J* e^i, one real 1-form per generator.
    pub fn from_coframe_images(images: Vec<Form>) -> Result<Self, GeometryError> {
        let dim = images.len() as u8;
        for (k, f) in images.iter().enumerate() {
            let index = (k + 1) as u8;
            if f.dim() != dim {
                return Err(GeometryError::CoframeImageShape {
                    index,
                    reason: format!("lives in dimension {}, expected {}", f.dim(), dim),
                });
            }
            if f.degree() != 1 {
                return Err(GeometryError::CoframeImageShape {
                    index,
                    reason: format!("has degree {}, expected 1", f.degree()),
                });
            }
            if !f.is_real() {
                return Err(GeometryError::CoframeImageShape {
                    index,
                    reason: "has non-real coefficients".into(),
                });
            }
        }
        let n = dim as usize;
        let frame = Matrix::from_fn(n, n, |i, j| {
            images[i].coeff(&crate::exterior::MultiIndex::new(vec![j as u8 + 1]).unwrap())
        });
        Self::validated(dim, frame, images)
    }

    /// From the frame matrix A (columns = J e_j).
    pub fn from_frame_matrix(frame: Matrix) -> Result<Self, GeometryError> {
        if frame.rows() != frame.cols() {
            return Err(GeometryError::DimensionMismatch);
        }
        let dim = frame.rows() as u8;
        if !frame.is_real() {
            return Err(GeometryError::CoframeImageShape {
                index: 0,
                reason: "frame matrix has non-real entries".into(),
            });
        }
        let images = (0..dim as usize)
            .map(|i| {
                let mut f = Form::zero(dim, 1);
                for j in 0..dim as usize {
                    f = &f + &Form::monomial(dim, &[j as u8 + 1], frame.get(i, j).clone());
                }
                f
            })
            .collect();
        Self::validated(dim, frame, images)
    }

    fn validated(dim: u8, frame: Matrix, images: Vec<Form>) -> Result<Self, GeometryError> {
        let n = dim as usize;
        let minus_id = Matrix::identity(n).scale(&Scalar::from_int(-1));
        if frame.mul(&frame) != minus_id {
            return Err(GeometryError::FrameNotAntiInvolution);
        }
        Ok(AlmostComplexStructure { dim, frame, images })
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn frame_matrix(&self) -> &Matrix {
        &self.frame
    }

    /// J* e^i (1-based).
    pub fn coframe_image(&self, i: u8) -> &Form {
        &self.images[(i - 1) as usize]
    }

    pub fn coframe_images(&self) -> &[Form] {
        &self.images
    }

    /// Frame action on a coordinate vector: A v.
    pub fn apply_vector(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.frame.mul_vec(v)
    }

    /// Pullback action on a form: the multiplicative substitution
    /// e^i ↦ J* e^i. On 2-forms this is α(J·, J·).
    pub fn apply(&self, form: &Form) -> Form {
        assert_eq!(form.dim(), self.dim, "form/structure dimension mismatch");
        form.substitute(&self.images)
    }

    /// Basis of (1,0)-forms: the i-eigenspace of J* on complex 1-forms,
    /// i.e. the kernel of (Aᵀ - i·Id) acting on coordinate columns. The
    /// basis is the canonical (RREF) one, so it is deterministic.
    pub fn onezero_coframe(&self) -> Vec<Form> {
        let n = self.dim as usize;
        let m = self.frame.transpose().sub(&Matrix::identity(n).scale(&Scalar::i()));
        let kernel = m.kernel();
        let forms: Vec<Form> = kernel
            .basis_rows()
            .map(|row| Form::from_coordinates(self.dim, 1, row))
            .collect();
        assert_eq!(forms.len(), n / 2, "J* must have an n/2-dimensional i-eigenspace");
        forms
    }

    /// J is integrable iff d maps (1,0)-forms into Λ^{2,0} ⊕ Λ^{1,1},
    /// i.e. no dφ has a (0,2)-component (the invariant Nijenhuis test).
    pub fn is_integrable(&self, complex: &CeComplex) -> bool {
        let split = BidegreeSplit::new(self, 2);
        self.onezero_coframe().iter().all(|phi| {
            let dphi = complex.d(phi);
            split.component(&dphi, 0, 2).is_zero()
        })
    }
}

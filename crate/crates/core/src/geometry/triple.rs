//! Compatible (J, ω, g) triples: ω a J-invariant symplectic form with
//! g = ω(·, J·) positive definite.

use super::{AlmostComplexStructure, GeometryError, Metric, SymplecticForm};
use crate::cealgebra::LieAlgebra;
use crate::exterior::Form;

#[derive(Clone, Debug)]
pub struct AlmostKahlerTriple {
    j: AlmostComplexStructure,
    omega: SymplecticForm,
    metric: Metric,
}

impl AlmostKahlerTriple {
    /// Builds the triple from J and ω, deriving g = ω(·, J·). Fails if ω is
    /// not symplectic, not J-invariant, or does not tame J positively.
    pub fn new(
        algebra: &LieAlgebra,
        j: AlmostComplexStructure,
        omega: Form,
    ) -> Result<Self, GeometryError> {
        if j.dim() != algebra.dim() || omega.dim() != algebra.dim() {
            return Err(GeometryError::DimensionMismatch);
        }
        if j.apply(&omega) != omega {
            return Err(GeometryError::NotJInvariant);
        }
        let omega = SymplecticForm::new(algebra, omega)?;
        // g(e_i, e_j) = ω(e_i, J e_j), so the Gram matrix is G_ω · A
        let gram = omega.gram().mul(j.frame_matrix());
        let metric = Metric::new(gram)?;
        Ok(AlmostKahlerTriple { j, omega, metric })
    }

    /// Like `new`, but checks the supplied metric against the derived one.
    pub fn with_metric(
        algebra: &LieAlgebra,
        j: AlmostComplexStructure,
        omega: Form,
        metric: Metric,
    ) -> Result<Self, GeometryError> {
        let triple = AlmostKahlerTriple::new(algebra, j, omega)?;
        if metric.gram() != triple.metric.gram() {
            return Err(GeometryError::IncompatibleMetric);
        }
        Ok(triple)
    }

    pub fn dim(&self) -> u8 {
        self.j.dim()
    }

    pub fn j(&self) -> &AlmostComplexStructure {
        &self.j
    }

    pub fn omega(&self) -> &SymplecticForm {
        &self.omega
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::Scalar;
    use crate::linalg::Matrix;
    use crate::test_fixtures as fx;

    #[test]
    fn paired_structures_derive_the_standard_metric() {
        let cases = [
            (fx::torus6(), fx::torus6_j(), fx::torus6_omega()),
            (fx::iwasawa(), fx::iwasawa_j(), fx::iwasawa_omega()),
            (fx::nilmanifold_n(fx::alpha2()), fx::nilmanifold_j(), fx::nilmanifold_omega()),
            (fx::nakamura(), fx::nakamura_j_prime(), fx::nakamura_omega()),
        ];
        for (alg, j, omega) in cases {
            let triple = AlmostKahlerTriple::new(&alg, j, omega).unwrap();
            assert_eq!(triple.metric().gram(), &Matrix::identity(6), "{}", alg.name());
        }
    }

    #[test]
    fn rejects_non_invariant_form() {
        let torus = fx::torus6();
        let omega = &(&fx::mono(6, &[1, 3], 1, 1) + &fx::mono(6, &[4, 6], 2, 1))
            + &fx::mono(6, &[2, 5], 1, 1);
        assert_eq!(
            AlmostKahlerTriple::new(&torus, fx::torus6_j(), omega).unwrap_err(),
            GeometryError::NotJInvariant
        );
    }

    #[test]
    fn rejects_non_taming_form() {
        let torus = fx::torus6();
        let omega = &(&fx::mono(6, &[1, 4], -1, 1) + &fx::mono(6, &[2, 5], 1, 1))
            + &fx::mono(6, &[3, 6], 1, 1);
        assert_eq!(
            AlmostKahlerTriple::new(&torus, fx::torus6_j(), omega).unwrap_err(),
            GeometryError::NotPositiveDefinite
        );
    }

    #[test]
    fn explicit_metric_must_match_derived_one() {
        let torus = fx::torus6();
        let scaled = Matrix::from_fn(6, 6, |i, j| {
            if i == j {
                Scalar::from_int(if i == 0 { 4 } else { 1 })
            } else {
                Scalar::zero()
            }
        });
        let metric = Metric::new(scaled).unwrap();
        assert_eq!(
            AlmostKahlerTriple::with_metric(&torus, fx::torus6_j(), fx::torus6_omega(), metric)
                .unwrap_err(),
            GeometryError::IncompatibleMetric
        );
        let ok = AlmostKahlerTriple::with_metric(
            &torus,
            fx::torus6_j(),
            fx::torus6_omega(),
            Metric::orthonormal(6),
        );
        assert!(ok.is_ok());
    }
}

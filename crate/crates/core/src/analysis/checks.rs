use super::{subgroup, AnalysisError, TypeSet};
use crate::cealgebra::CeComplex;
use crate::exterior::Form;
use crate::geometry::{AlmostComplexStructure, BidegreeSplit};

/// Dimensions of the degree-2 invariant/anti-invariant subgroups together
/// with their general upper bounds n² and n(n-1) for dim 𝔤 = 2n.
#[derive(Clone, Copy, Debug)]
pub struct BoundsCheck {
    pub h_plus: usize,
    pub h_plus_bound: usize,
    pub h_minus: usize,
    pub h_minus_bound: usize,
}

impl BoundsCheck {
    pub fn ok(&self) -> bool {
        self.h_plus <= self.h_plus_bound && self.h_minus <= self.h_minus_bound
    }
}

pub fn bounds_check(complex: &CeComplex, j: &AlmostComplexStructure) -> BoundsCheck {
    let n = complex.algebra().dim() as usize / 2;
    BoundsCheck {
        h_plus: subgroup(complex, j, &TypeSet::invariant2()).dim(),
        h_plus_bound: n * n,
        h_minus: subgroup(complex, j, &TypeSet::anti_invariant2()).dim(),
        h_minus_bound: n * (n - 1),
    }
}

/// Verdict on one candidate h for the balanced condition: h must be a real
/// positive (1,1)-form; the structure is balanced-like when h is not closed
/// but h^{m-1} is.
#[derive(Clone, Debug)]
pub struct BalancedVerdict {
    pub d_nonzero: bool,
    pub d_power_zero: bool,
}

impl BalancedVerdict {
    pub fn ok(&self) -> bool {
        self.d_nonzero && self.d_power_zero
    }
}

pub fn balanced_check(
    complex: &CeComplex,
    j: &AlmostComplexStructure,
    h: &Form,
) -> Result<BalancedVerdict, AnalysisError> {
    if h.degree() != 2
        || !h.is_real()
        || !BidegreeSplit::new(j, 2).has_only_types(h, &[(1, 1)])
    {
        return Err(AnalysisError::NotTypeOneOne);
    }
    // positivity of h(·, J·): the associated symmetric matrix is G_h · A
    let n = h.dim() as usize;
    let eval = crate::linalg::Matrix::from_fn(n, n, |i, j| h.eval_pair(i as u8 + 1, j as u8 + 1));
    let sym = eval.mul(j.frame_matrix());
    if !sym.is_positive_definite() {
        return Err(AnalysisError::NotPositive);
    }
    let m = n / 2;
    let mut power = h.clone();
    for _ in 1..m - 1 {
        power = power.wedge(h).expect("same algebra");
    }
    Ok(BalancedVerdict {
        d_nonzero: !complex.d(h).is_zero(),
        d_power_zero: complex.d(&power).is_zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_fixtures as fx;

    #[test]
    fn bounds_hold_and_torus_saturates_them() {
        let cx = CeComplex::new(fx::torus6()).unwrap();
        let b = bounds_check(&cx, &fx::torus6_j());
        assert_eq!((b.h_plus, b.h_plus_bound), (9, 9));
        assert_eq!((b.h_minus, b.h_minus_bound), (6, 6));
        assert!(b.ok());

        let cx = CeComplex::new(fx::iwasawa()).unwrap();
        let b = bounds_check(&cx, &fx::iwasawa_j());
        assert_eq!((b.h_plus, b.h_minus), (4, 3));
        assert!(b.ok());
    }

    #[test]
    fn nakamura_candidate_is_balanced_for_the_complex_structure() {
        let cx = CeComplex::new(fx::nakamura()).unwrap();
        let j = fx::nakamura_complex_j();
        let h = fx::nakamura_balanced_candidate();
        let verdict = balanced_check(&cx, &j, &h).unwrap();
        assert!(verdict.d_nonzero);
        assert!(verdict.d_power_zero);
        assert!(verdict.ok());
    }

    #[test]
    fn closed_taming_forms_are_rejected_as_balanced_only_by_flags() {
        // ω' itself is (1,1) and positive for J' but closed, so d_nonzero
        // fails while the power stays closed
        let cx = CeComplex::new(fx::nakamura()).unwrap();
        let verdict =
            balanced_check(&cx, &fx::nakamura_j_prime(), &fx::nakamura_omega()).unwrap();
        assert!(!verdict.d_nonzero);
        assert!(verdict.d_power_zero);
        assert!(!verdict.ok());
    }

    #[test]
    fn wrong_type_and_non_positive_candidates_error() {
        let cx = CeComplex::new(fx::nakamura()).unwrap();
        let j = fx::nakamura_complex_j();
        // e3 ∧ e4 is not (1,1) for this J (3 pairs with 5, 4 with 6)
        let err = balanced_check(&cx, &j, &fx::mono(6, &[3, 4], 1, 1)).unwrap_err();
        assert!(matches!(err, AnalysisError::NotTypeOneOne));
        // right type, wrong sign
        let neg = &(&fx::mono(6, &[1, 2], -1, 1) + &fx::mono(6, &[3, 5], 1, 1))
            + &fx::mono(6, &[4, 6], 1, 1);
        let err = balanced_check(&cx, &j, &neg).unwrap_err();
        assert!(matches!(err, AnalysisError::NotPositive));
    }
}

//! Decomposition of Λ^k ⊗ C into bidegree components Λ^{p,q} with respect
//! to an almost-complex structure, via the monomial basis φ^I ∧ φ̄^J built
//! from the (1,0)-coframe. J* acts on Λ^{p,q} as multiplication by i^{p-q}.

use super::AlmostComplexStructure;
use crate::exterior::{binomial, Form, MultiIndex, Scalar};
use crate::linalg::Matrix;

pub struct BidegreeSplit {
    dim: u8,
    degree: usize,
    /// Bidegrees (p, q) with p+q = degree, p descending.
    types: Vec<(usize, usize)>,
    /// Column range of each bidegree block in `t`.
    blocks: Vec<std::ops::Range<usize>>,
    /// Columns = coordinates of the monomials φ^I ∧ φ̄^J (I, J lex).
    t: Matrix,
    t_inv: Matrix,
}

fn product(factors: &[Form], picks: &MultiIndex, dim: u8) -> Form {
    let mut acc = Form::constant(dim, Scalar::one());
    for &i in picks.indices() {
        acc = acc.wedge(&factors[(i - 1) as usize]).expect("same dim");
    }
    acc
}

impl BidegreeSplit {
    pub fn new(j: &AlmostComplexStructure, degree: usize) -> Self {
        let dim = j.dim();
        let m = (dim / 2) as usize;
        assert!(degree <= dim as usize, "degree out of range");
        let phis = j.onezero_coframe();
        let bars: Vec<Form> = phis.iter().map(Form::conjugate).collect();
        let mut types = Vec::new();
        let mut blocks = Vec::new();
        let mut cols: Vec<Vec<Scalar>> = Vec::new();
        for p in (0..=degree).rev() {
            let q = degree - p;
            if p > m || q > m {
                continue;
            }
            let start = cols.len();
            for i_set in MultiIndex::enumerate(m as u8, p) {
                let phi_part = product(&phis, &i_set, dim);
                for j_set in MultiIndex::enumerate(m as u8, q) {
                    let monomial =
                        phi_part.wedge(&product(&bars, &j_set, dim)).expect("same dim");
                    cols.push(monomial.coordinates());
                }
            }
            types.push((p, q));
            blocks.push(start..cols.len());
        }
        let size = binomial(dim as usize, degree);
        assert_eq!(cols.len(), size);
        let t = Matrix::from_fn(size, size, |r, c| cols[c][r].clone());
        let t_inv = t.inverse().expect("bidegree monomials form a basis");
        BidegreeSplit { dim, degree, types, blocks, t, t_inv }
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn types(&self) -> &[(usize, usize)] {
        &self.types
    }

    fn block_of(&self, p: usize, q: usize) -> Option<&std::ops::Range<usize>> {
        self.types.iter().position(|&t| t == (p, q)).map(|i| &self.blocks[i])
    }

    /// The Λ^{p,q}-component of a form of the right degree.
    pub fn component(&self, form: &Form, p: usize, q: usize) -> Form {
        assert_eq!(form.degree(), self.degree, "degree mismatch");
        assert_eq!(form.dim(), self.dim, "dimension mismatch");
        let Some(block) = self.block_of(p, q) else {
            return Form::zero(self.dim, self.degree);
        };
        let mut y = self.t_inv.mul_vec(&form.coordinates());
        for (i, v) in y.iter_mut().enumerate() {
            if !block.contains(&i) {
                *v = Scalar::zero();
            }
        }
        Form::from_coordinates(self.dim, self.degree, &self.t.mul_vec(&y))
    }

    /// All nonzero bidegree components, in type order.
    pub fn decompose(&self, form: &Form) -> Vec<((usize, usize), Form)> {
        self.types
            .iter()
            .map(|&(p, q)| ((p, q), self.component(form, p, q)))
            .filter(|(_, f)| !f.is_zero())
            .collect()
    }

    /// Does the form lie in the direct sum of the selected bidegrees?
    pub fn has_only_types(&self, form: &Form, select: &[(usize, usize)]) -> bool {
        self.types
            .iter()
            .filter(|t| !select.contains(t))
            .all(|&(p, q)| self.component(form, p, q).is_zero())
    }

    /// Matrix (on Λ^degree coordinates) of the projection onto the direct
    /// sum of the selected bidegrees. For a selection closed under
    /// (p,q) ↦ (q,p) the projector commutes with conjugation and is a real
    /// matrix, which is what makes invariant-type subgroup computations
    /// rational.
    pub fn projection_matrix(&self, select: &[(usize, usize)]) -> Matrix {
        let size = self.t.rows();
        let mut masked = self.t.clone();
        for (ti, block) in self.blocks.iter().enumerate() {
            if !select.contains(&self.types[ti]) {
                for c in block.clone() {
                    for r in 0..size {
                        masked.set(r, c, Scalar::zero());
                    }
                }
            }
        }
        masked.mul(&self.t_inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_fixtures as fx;

    #[test]
    fn block_layout_in_middle_degree() {
        let split = BidegreeSplit::new(&fx::torus6_j(), 2);
        assert_eq!(split.types(), &[(2, 0), (1, 1), (0, 2)]);
        let sizes: Vec<usize> = split.blocks.iter().map(|b| b.len()).collect();
        assert_eq!(sizes, vec![3, 9, 3]);

        let split3 = BidegreeSplit::new(&fx::torus6_j(), 3);
        assert_eq!(split3.types(), &[(3, 0), (2, 1), (1, 2), (0, 3)]);
        let sizes: Vec<usize> = split3.blocks.iter().map(|b| b.len()).collect();
        assert_eq!(sizes, vec![1, 9, 9, 1]);
    }

    #[test]
    fn components_sum_to_the_form_and_have_right_eigenvalue() {
        let j = fx::iwasawa_j();
        let split = BidegreeSplit::new(&j, 2);
        let form = &(&fx::mono(6, &[1, 2], 1, 1) + &fx::mono(6, &[3, 6], -2, 1))
            + &fx::mono(6, &[4, 5], 1, 3);
        let mut sum = Form::zero(6, 2);
        for &(p, q) in split.types() {
            let comp = split.component(&form, p, q);
            // J* acts on Λ^{p,q} by i^{p-q}
            let mut eig = Scalar::one();
            for _ in 0..p {
                eig = &eig * &Scalar::i();
            }
            for _ in 0..q {
                eig = &eig * &Scalar::i().conj();
            }
            assert_eq!(j.apply(&comp), comp.scale(&eig));
            sum = &sum + &comp;
        }
        assert_eq!(sum, form);
    }

    #[test]
    fn invariant_two_forms_of_pair_structures() {
        // e^{ab} for a J-pair (a, b) is (1,1); products of generators from
        // different pairs mix (2,0)+(0,2) and (1,1)
        let split = BidegreeSplit::new(&fx::torus6_j(), 2);
        let e14 = fx::mono(6, &[1, 4], 1, 1);
        assert_eq!(split.component(&e14, 1, 1), e14);
        assert!(split.has_only_types(&e14, &[(1, 1)]));

        let e12 = fx::mono(6, &[1, 2], 1, 1);
        assert!(!split.has_only_types(&e12, &[(1, 1)]));
        assert!(!split.component(&e12, 2, 0).is_zero());
        assert!(!split.component(&e12, 0, 2).is_zero());
    }

    #[test]
    fn iwasawa_degree_four_witness_components() {
        // e3456 + e1234 is of real type (3,1)+(1,3), e3456 - e1234 is (2,2)
        let split = BidegreeSplit::new(&fx::iwasawa_j(), 4);
        let plus = &fx::mono(6, &[3, 4, 5, 6], 1, 1) + &fx::mono(6, &[1, 2, 3, 4], 1, 1);
        let minus = &fx::mono(6, &[3, 4, 5, 6], 1, 1) - &fx::mono(6, &[1, 2, 3, 4], 1, 1);
        assert!(split.has_only_types(&plus, &[(3, 1), (1, 3)]));
        assert!(split.has_only_types(&minus, &[(2, 2)]));
    }

    #[test]
    fn projections_are_idempotent_complementary_and_real_when_symmetric() {
        let split = BidegreeSplit::new(&fx::iwasawa_j(), 2);
        let all = split.projection_matrix(&[(2, 0), (1, 1), (0, 2)]);
        assert_eq!(all, Matrix::identity(15));

        let anti = split.projection_matrix(&[(2, 0), (0, 2)]);
        let inv = split.projection_matrix(&[(1, 1)]);
        assert!(anti.is_real(), "swap-closed projector must be rational");
        assert!(inv.is_real());
        assert_eq!(anti.mul(&anti), anti);
        assert_eq!(inv.mul(&inv), inv);
        assert_eq!(anti.add(&inv), Matrix::identity(15));
        assert!(anti.mul(&inv).is_zero());

        // a non-swap-closed selection is a legitimate complex projector
        let half = split.projection_matrix(&[(2, 0)]);
        assert!(!half.is_real());
        assert_eq!(half.mul(&half), half);
    }
}

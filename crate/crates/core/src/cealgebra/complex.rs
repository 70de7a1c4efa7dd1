//! The Chevalley–Eilenberg complex (Λ• g*, d) of a Lie algebra, with exact
//! cohomology in every degree, cup products and triple Massey products.

use super::{AlgebraError, LieAlgebra, MasseyError};
use crate::exterior::{binomial, Form, MultiIndex, Scalar};
use crate::linalg::{Matrix, QuotientPresentation, Subspace};

#[derive(Debug)]
pub struct CeComplex {
    algebra: LieAlgebra,
    /// bases[k] = lex-ordered monomial basis of Λ^k, k = 0..=n.
    bases: Vec<Vec<MultiIndex>>,
    /// d_mats[k]: matrix of d: Λ^k → Λ^{k+1} (the top one has 0 rows).
    d_mats: Vec<Matrix>,
    /// cohomology[k] = Z^k / B^k with a preferred section basis.
    cohomology: Vec<QuotientPresentation>,
}

impl CeComplex {
    /// Builds the full complex; fails if the structure equations violate
    /// the Jacobi identity (d² ≠ 0).
    pub fn new(algebra: LieAlgebra) -> Result<Self, AlgebraError> {
        algebra.check_jacobi()?;
        let n = algebra.dim();
        let bases: Vec<Vec<MultiIndex>> =
            (0..=n as usize).map(|k| MultiIndex::enumerate(n, k)).collect();
        let mut d_mats = Vec::with_capacity(n as usize + 1);
        for k in 0..=n as usize {
            let rows = if k < n as usize { binomial(n as usize, k + 1) } else { 0 };
            let cols = bases[k].len();
            let mut m = Matrix::zero(rows, cols);
            for (j, mi) in bases[k].iter().enumerate() {
                let basis_form = Form::monomial(n, mi.indices(), Scalar::one());
                let image = algebra.differential(&basis_form);
                for (r, c) in image.coordinates().into_iter().enumerate() {
                    m.set(r, j, c);
                }
            }
            d_mats.push(m);
        }
        for k in 0..n as usize {
            debug_assert!(d_mats[k + 1].mul(&d_mats[k]).is_zero(), "d² ≠ 0 at degree {k}");
        }
        let mut cohomology = Vec::with_capacity(n as usize + 1);
        for k in 0..=n as usize {
            let cycles = d_mats[k].kernel();
            let boundaries =
                if k == 0 { Subspace::zero(1) } else { d_mats[k - 1].image() };
            let q = cycles.quotient(&boundaries).expect("d² = 0 makes B ⊆ Z");
            cohomology.push(q);
        }
        Ok(CeComplex { algebra, bases, d_mats, cohomology })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> u8 {
        self.algebra.dim()
    }

    /// Lex-ordered monomial basis of Λ^k.
    pub fn basis(&self, k: usize) -> &[MultiIndex] {
        &self.bases[k]
    }

    /// Matrix of d: Λ^k → Λ^{k+1} in the monomial bases.
    pub fn d_matrix(&self, k: usize) -> &Matrix {
        &self.d_mats[k]
    }

    pub fn d(&self, form: &Form) -> Form {
        self.algebra.differential(form)
    }

    pub fn cohomology(&self, k: usize) -> &QuotientPresentation {
        &self.cohomology[k]
    }

    pub fn betti(&self, k: usize) -> usize {
        if k <= self.dim() as usize {
            self.cohomology[k].dim()
        } else {
            0
        }
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        (0..=self.dim() as usize).map(|k| self.betti(k)).collect()
    }

    pub fn is_closed(&self, form: &Form) -> bool {
        self.d(form).is_zero()
    }

    /// A k-form is exact if it is d of some (k-1)-form; 0-forms only if zero.
    pub fn is_exact(&self, form: &Form) -> bool {
        if form.degree() == 0 {
            return form.is_zero();
        }
        if form.degree() > self.dim() as usize {
            return form.is_zero();
        }
        self.primitive(form).is_some()
    }

    /// Least-lex primitive: a form x with d x = `form`, free coordinates of
    /// the underlying linear system set to zero. None for 0-forms and for
    /// non-exact forms.
    pub fn primitive(&self, form: &Form) -> Option<Form> {
        let k = form.degree();
        if k == 0 || k > self.dim() as usize {
            return None;
        }
        let sol = self.d_mats[k - 1].solve(&form.coordinates())?;
        Some(Form::from_coordinates(self.dim(), k - 1, &sol))
    }

    /// Coordinates of [form] in the section basis of H^k; None if not closed.
    pub fn class_coords(&self, form: &Form) -> Option<Vec<Scalar>> {
        if !self.is_closed(form) {
            return None;
        }
        let k = form.degree();
        if k > self.dim() as usize {
            return Some(Vec::new());
        }
        Some(self.cohomology[k].project(&form.coordinates()).expect("closed forms are cycles"))
    }

    /// The section representative with the given H^k coordinates.
    pub fn class_representative(&self, k: usize, coords: &[Scalar]) -> Form {
        let ambient = self.cohomology[k].lift(coords);
        Form::from_coordinates(self.dim(), k, &ambient)
    }

    /// Forms of the preferred section basis of H^k (empty above top degree).
    pub fn section_representatives(&self, k: usize) -> Vec<Form> {
        if k > self.dim() as usize {
            return Vec::new();
        }
        self.cohomology[k]
            .section()
            .iter()
            .map(|v| Form::from_coordinates(self.dim(), k, v))
            .collect()
    }

    pub fn same_class(&self, a: &Form, b: &Form) -> bool {
        self.is_exact(&(a - b))
    }

    /// Cup product [a] ⌣ [b] as coordinates in H^{|a|+|b|}; None if either
    /// argument is not closed.
    pub fn cup(&self, a: &Form, b: &Form) -> Option<Vec<Scalar>> {
        if !self.is_closed(a) || !self.is_closed(b) {
            return None;
        }
        self.class_coords(&a.wedge(b).expect("same algebra"))
    }

    /// Matrix of [α] ↦ [w ∧ α]: H^from_degree → H^{from_degree + |w|} in the
    /// section bases. `w` must be closed.
    pub fn induced_wedge_map(&self, w: &Form, from_degree: usize) -> Matrix {
        assert!(self.is_closed(w), "inducing form must be closed");
        let to_degree = from_degree + w.degree();
        let rows = self.betti(to_degree);
        let cols = self.betti(from_degree);
        let mut m = Matrix::zero(rows, cols);
        for (j, rep) in self.section_representatives(from_degree).iter().enumerate() {
            let image = w.wedge(rep).expect("same algebra");
            let coords = self.class_coords(&image).expect("product of closed forms is closed");
            for (r, c) in coords.into_iter().enumerate() {
                m.set(r, j, c);
            }
        }
        m
    }

    /// Triple Massey product ⟨[a], [b], [c]⟩. Requires all three closed and
    /// both cup products [a][b], [b][c] zero in cohomology. The result is a
    /// coset: `class` is one value in H^{|a|+|b|+|c|-1}, `indeterminacy` the
    /// subgroup [a] ⌣ H^{|b|+|c|-1} + H^{|a|+|b|-1} ⌣ [c].
    pub fn massey_triple(
        &self,
        a: &Form,
        b: &Form,
        c: &Form,
    ) -> Result<MasseyTriple, MasseyError> {
        for (f, which) in [(a, 'a'), (b, 'b'), (c, 'c')] {
            if !self.is_closed(f) {
                return Err(MasseyError::NotClosed { which });
            }
        }
        let ab = a.wedge(b).expect("same algebra");
        let bc = b.wedge(c).expect("same algebra");
        let x = self.primitive(&ab).ok_or(MasseyError::CupNonzero { pair: "ab" })?;
        let y = self.primitive(&bc).ok_or(MasseyError::CupNonzero { pair: "bc" })?;
        // ⟨a, b, c⟩ := [x ∧ c − (−1)^{|a|} a ∧ y]
        let xc = x.wedge(c).expect("same algebra");
        let ay = a.wedge(&y).expect("same algebra");
        let representative = if a.degree() % 2 == 0 { &xc - &ay } else { &xc + &ay };
        debug_assert!(self.is_closed(&representative));
        let degree = a.degree() + b.degree() + c.degree() - 1;
        let class = self.class_coords(&representative).expect("closed");
        let mut gens = Vec::new();
        for h in self.section_representatives(b.degree() + c.degree() - 1) {
            gens.push(self.cup(a, &h).expect("closed"));
        }
        for h in self.section_representatives(a.degree() + b.degree() - 1) {
            gens.push(self.cup(&h, c).expect("closed"));
        }
        let indeterminacy = Subspace::from_spanning(self.betti(degree), gens);
        let vanishes = indeterminacy.contains(&class);
        Ok(MasseyTriple { degree, class, representative, indeterminacy, vanishes })
    }
}

/// Value of a defined triple Massey product, as a coset of the
/// indeterminacy subgroup in H^degree.
#[derive(Clone, Debug)]
pub struct MasseyTriple {
    pub degree: usize,
    /// Coordinates of one value in the section basis of H^degree.
    pub class: Vec<Scalar>,
    /// The chosen representative form x ∧ c − (−1)^{|a|} a ∧ y.
    pub representative: Form,
    /// [a] ⌣ H^{|b|+|c|-1} + H^{|a|+|b|-1} ⌣ [c], in H^degree coordinates.
    pub indeterminacy: Subspace,
    /// Whether the coset contains 0, i.e. the product vanishes.
    pub vanishes: bool,
}

impl MasseyTriple {
    /// Does the coset contain the class with the given H^degree coordinates?
    pub fn coset_contains(&self, class: &[Scalar]) -> bool {
        assert_eq!(class.len(), self.class.len());
        let diff: Vec<Scalar> = self.class.iter().zip(class).map(|(u, v)| u - v).collect();
        self.indeterminacy.contains(&diff)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_fixtures as fx;

    fn scal(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn torus_betti_numbers_are_binomials() {
        let cx = CeComplex::new(fx::torus6()).unwrap();
        assert_eq!(cx.betti_numbers(), vec![1, 6, 15, 20, 15, 6, 1]);
    }

    #[test]
    fn iwasawa_betti_numbers() {
        let cx = CeComplex::new(fx::iwasawa()).unwrap();
        assert_eq!(cx.betti_numbers(), vec![1, 4, 8, 10, 8, 4, 1]);
        // closed 1-forms: e1..e4
        assert_eq!(cx.d_matrix(1).kernel().dim(), 4);
    }

    #[test]
    fn nakamura_betti_numbers() {
        let cx = CeComplex::new(fx::nakamura()).unwrap();
        assert_eq!(cx.betti_numbers(), vec![1, 2, 5, 8, 5, 2, 1]);
    }

    #[test]
    fn nilmanifold_n_betti_numbers_independent_of_alpha() {
        for alpha in [fx::alpha2(), "5/2".parse().unwrap(), "3".parse().unwrap()] {
            let cx = CeComplex::new(fx::nilmanifold_n(alpha)).unwrap();
            assert_eq!(cx.betti_numbers(), vec![1, 3, 8, 12, 8, 3, 1]);
        }
    }

    #[test]
    fn jacobi_violation_rejected_at_construction() {
        let err = CeComplex::new(fx::iwasawa_with_bad_e2()).unwrap_err();
        assert!(matches!(err, AlgebraError::Jacobi { generator: 5, .. }));
    }

    #[test]
    fn exactness_and_primitives() {
        let cx = CeComplex::new(fx::iwasawa()).unwrap();
        // d e5 = -e13 + e24 is exact; its least-lex primitive is e5 itself
        let de5 = cx.algebra().structure_equation(5).clone();
        assert!(cx.is_exact(&de5));
        let p = cx.primitive(&de5).unwrap();
        assert_eq!(cx.d(&p), de5);
        // e12 is closed but not exact
        let e12 = fx::mono(6, &[1, 2], 1, 1);
        assert!(cx.is_closed(&e12));
        assert!(!cx.is_exact(&e12));
        // e5 is not closed
        assert!(!cx.is_closed(&Form::generator(6, 5)));
        assert_eq!(cx.class_coords(&Form::generator(6, 5)), None);
    }

    #[test]
    fn class_projection_kills_exact_terms() {
        let cx = CeComplex::new(fx::iwasawa()).unwrap();
        let e12 = fx::mono(6, &[1, 2], 1, 1);
        let de5 = cx.algebra().structure_equation(5);
        let shifted = &e12 + &de5.scale(&scal(7));
        assert!(cx.same_class(&e12, &shifted));
        assert_eq!(cx.class_coords(&e12), cx.class_coords(&shifted));
        // and the projection of a pure boundary is zero
        assert!(cx.class_coords(de5).unwrap().iter().all(Scalar::is_zero));
    }

    #[test]
    fn cup_product_graded_commutative_on_classes() {
        let cx = CeComplex::new(fx::iwasawa()).unwrap();
        let a = Form::generator(6, 1);
        let b = &Form::generator(6, 2) + &Form::generator(6, 3);
        // odd · odd: [a][b] = -[b][a]
        let ab = cx.cup(&a, &b).unwrap();
        let ba = cx.cup(&b, &a).unwrap();
        let neg: Vec<Scalar> = ba.iter().map(|v| -v).collect();
        assert_eq!(ab, neg);
    }

    #[test]
    fn induced_wedge_map_shape_and_linearity() {
        let cx = CeComplex::new(fx::iwasawa()).unwrap();
        let omega = &(&fx::mono(6, &[1, 6], 1, 1) + &fx::mono(6, &[2, 5], 1, 1))
            + &fx::mono(6, &[3, 4], 1, 1);
        assert!(cx.is_closed(&omega));
        let m = cx.induced_wedge_map(&omega, 2);
        assert_eq!((m.rows(), m.cols()), (cx.betti(4), cx.betti(2)));
        // column j is the class of omega ∧ (j-th section representative)
        let reps = cx.section_representatives(2);
        let img = cx.cup(&omega, &reps[0]).unwrap();
        assert_eq!(m.col_vec(0), img);
    }

    #[test]
    fn massey_on_torus_is_always_zero() {
        let cx = CeComplex::new(fx::torus6()).unwrap();
        // on an abelian algebra a triple is defined only when both wedges
        // vanish on the nose; then the product is zero
        let a = Form::generator(6, 1);
        let b = a.scale(&scal(3));
        let t = cx.massey_triple(&a, &b, &a).unwrap();
        assert!(t.vanishes);
        assert!(t.class.iter().all(Scalar::is_zero));
        // e1 ∧ e2 is not exact here: product not defined
        let err = cx.massey_triple(&a, &Form::generator(6, 2), &a).unwrap_err();
        assert!(matches!(err, MasseyError::CupNonzero { .. }));
    }

    #[test]
    fn massey_rejects_non_closed_arguments() {
        let cx = CeComplex::new(fx::iwasawa()).unwrap();
        let e5 = Form::generator(6, 5);
        let e1 = Form::generator(6, 1);
        let err = cx.massey_triple(&e1, &e5, &e1).unwrap_err();
        assert!(matches!(err, MasseyError::NotClosed { which: 'b' }));
    }

    #[test]
    fn nilmanifold_n_massey_product_matches_closed_formula() {
        // ⟨[e1], [e3], [e2]⟩ = -(α-1) [e25 + α e14], indeterminacy zero
        for alpha_str in ["2", "3", "5/2"] {
            let alpha: crate::exterior::Rational = alpha_str.parse().unwrap();
            let cx = CeComplex::new(fx::nilmanifold_n(alpha.clone())).unwrap();
            let t = cx
                .massey_triple(&Form::generator(6, 1), &Form::generator(6, 3), &Form::generator(6, 2))
                .unwrap();
            assert_eq!(t.degree, 2);
            assert_eq!(t.indeterminacy.dim(), 0);
            assert!(!t.vanishes);
            let neg_a1 = Scalar::from_rational(-(&alpha - &crate::exterior::Rational::from_integer(1.into())));
            let expected = &fx::mono(6, &[2, 5], 1, 1).scale(&neg_a1)
                + &fx::mono(6, &[1, 4], 1, 1).scale(&(&neg_a1 * &Scalar::from_rational(alpha)));
            assert!(cx.is_closed(&expected));
            let coords = cx.class_coords(&expected).unwrap();
            assert!(t.coset_contains(&coords));
            // the opposite sign is NOT in the coset (indeterminacy is zero)
            let neg: Vec<Scalar> = coords.iter().map(|v| -v).collect();
            assert!(!t.coset_contains(&neg));
            // and the representative literally equals the formula here
            assert_eq!(t.representative, expected);
        }
    }

    #[test]
    fn massey_representative_is_closed_and_consistent() {
        let cx = CeComplex::new(fx::nilmanifold_n(fx::alpha2())).unwrap();
        let t = cx
            .massey_triple(&Form::generator(6, 1), &Form::generator(6, 3), &Form::generator(6, 2))
            .unwrap();
        assert!(cx.is_closed(&t.representative));
        assert_eq!(cx.class_coords(&t.representative).unwrap(), t.class);
    }

    #[test]
    fn poincare_duality_on_unimodular_examples() {
        for alg in [fx::iwasawa(), fx::nakamura(), fx::torus6()] {
            let cx = CeComplex::new(alg).unwrap();
            let b = cx.betti_numbers();
            for k in 0..=6usize {
                assert_eq!(b[k], b[6 - k], "b_{k} vs b_{}", 6 - k);
            }
            // top class pairs nondegenerately: H^k ⊗ H^{n-k} → H^n in the
            // sense that the pairing matrix has full rank
            for k in 1..=2usize {
                let reps_k = cx.section_representatives(k);
                let reps_nk = cx.section_representatives(6 - k);
                let pairing = Matrix::from_fn(reps_k.len(), reps_nk.len(), |r, c| {
                    let prod = reps_k[r].wedge(&reps_nk[c]).unwrap();
                    cx.class_coords(&prod).unwrap().first().cloned().unwrap_or_else(Scalar::zero)
                });
                assert_eq!(pairing.rank(), b[k]);
            }
        }
    }
}

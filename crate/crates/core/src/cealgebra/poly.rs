//! Rational polynomials: characteristic polynomials of rational matrices
//! (Faddeev–LeVerrier) and exact real-root counting (Sturm sequences).
//! Used only for the complete-solvability hint, which asks whether sampled
//! adjoint operators have all-real spectra.

use num::traits::{One, Signed, Zero};

use crate::exterior::{Rational, Scalar};
use crate::linalg::Matrix;

/// Dense polynomial over Q, coefficients ascending, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly(Vec<Rational>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn derivative(&self) -> Poly {
        if self.0.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    fn sub_scaled(&self, other: &Poly, factor: &Rational, shift: usize) -> Poly {
        // self − factor · x^shift · other
        let n = self.0.len().max(other.0.len() + shift);
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] = c.clone();
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i + shift] = &out[i + shift] - &(factor * c);
        }
        Poly::new(out)
    }

    /// Remainder of Euclidean division by a nonzero polynomial.
    pub fn rem(&self, divisor: &Poly) -> Poly {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut r = self.clone();
        let dlead = divisor.leading();
        while !r.is_zero() && r.degree() >= divisor.degree() {
            let shift = r.degree() - divisor.degree();
            let factor = &r.leading() / &dlead;
            r = r.sub_scaled(divisor, &factor, shift);
        }
        r
    }

    /// Make monic (no-op on the zero polynomial).
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lead = self.leading();
        Poly::new(self.0.iter().map(|c| c / &lead).collect())
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// p / gcd(p, p′): same distinct roots, all simple.
    pub fn squarefree_part(&self) -> Poly {
        if self.degree() == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            return self.monic();
        }
        // exact division p / g via repeated subtraction of leading terms
        let mut q = Vec::new();
        let mut r = self.clone();
        let glead = g.leading();
        while !r.is_zero() && r.degree() >= g.degree() {
            let shift = r.degree() - g.degree();
            let factor = &r.leading() / &glead;
            r = r.sub_scaled(&g, &factor, shift);
            if q.len() <= shift {
                q.resize(shift + 1, Rational::zero());
            }
            q[shift] = factor;
        }
        debug_assert!(r.is_zero(), "gcd must divide exactly");
        Poly::new(q).monic()
    }

    /// Number of distinct real roots, by Sturm's theorem over (−∞, ∞).
    pub fn distinct_real_roots(&self) -> usize {
        let q = self.squarefree_part();
        if q.degree() == 0 {
            return 0;
        }
        let mut chain = vec![q.clone(), q.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let next = chain[n - 2].rem(&chain[n - 1]);
            let neg = Poly::new(next.0.iter().map(|c| -c).collect());
            chain.push(neg);
        }
        let variations = |at_plus_infinity: bool| -> usize {
            let signs: Vec<i8> = chain
                .iter()
                .filter(|p| !p.is_zero())
                .map(|p| {
                    let mut s: i8 = if p.leading().is_positive() { 1 } else { -1 };
                    if !at_plus_infinity && p.degree() % 2 == 1 {
                        s = -s;
                    }
                    s
                })
                .collect();
            signs.windows(2).filter(|w| w[0] != w[1]).count()
        };
        variations(false) - variations(true)
    }

    /// All complex roots real, counted with multiplicity — equivalently the
    /// squarefree part has as many distinct real roots as its degree.
    pub fn all_roots_real(&self) -> bool {
        let q = self.squarefree_part();
        q.degree() == 0 || self.distinct_real_roots() == q.degree()
    }
}

/// Characteristic polynomial of a square rational matrix (imaginary parts
/// must vanish), monic of degree n, by the Faddeev–LeVerrier recursion.
pub fn char_poly(a: &Matrix) -> Poly {
    assert_eq!(a.rows(), a.cols(), "characteristic polynomial of square matrices only");
    assert!(a.is_real(), "char_poly expects a real matrix");
    let n = a.rows();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = Matrix::identity(n);
    for k in 1..=n {
        if k > 1 {
            // M_k = A·M_{k−1} + c_{n−k+1}·I
            let c = Scalar::from_rational(coeffs[n - k + 1].clone());
            m = a.mul(&m).add(&Matrix::identity(n).scale(&c));
        }
        let t = a.mul(&m).trace();
        debug_assert!(t.is_real());
        coeffs[n - k] = -(t.re() / &Rational::from_integer(k.into()));
    }
    Poly::new(coeffs)
}

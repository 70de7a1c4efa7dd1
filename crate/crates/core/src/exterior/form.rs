//! Sparse homogeneous forms: finitely many wedge monomials with Q(i)
//! coefficients. Zero coefficients are dropped on every operation, so
//! structural equality is semantic equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::{ExteriorError, MultiIndex, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Form {
    dim: u8,
    degree: usize,
    terms: BTreeMap<MultiIndex, Scalar>,
}

impl Form {
    pub fn zero(dim: u8, degree: usize) -> Self {
        Form { dim, degree, terms: BTreeMap::new() }
    }

    /// Degree-0 form (a constant).
    pub fn constant(dim: u8, c: Scalar) -> Self {
        let mut f = Form::zero(dim, 0);
        f.insert(MultiIndex::empty(), c);
        f
    }

    /// The coframe generator `e^i` (1-based).
    pub fn generator(dim: u8, i: u8) -> Self {
        assert!(i >= 1 && i <= dim, "generator e{i} out of range 1..={dim}");
        let mut f = Form::zero(dim, 1);
        f.insert(MultiIndex::new(vec![i]).unwrap(), Scalar::one());
        f
    }

    /// `c · e^{indices}` where `indices` may be in any order; sorting signs
    /// are applied, repeated indices give the zero form.
    pub fn monomial(dim: u8, indices: &[u8], c: Scalar) -> Self {
        let mut word = indices.to_vec();
        let mut sign = 1i32;
        // insertion sort, counting transpositions
        for i in 1..word.len() {
            let mut j = i;
            while j > 0 && word[j - 1] > word[j] {
                word.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if word.windows(2).any(|w| w[0] == w[1]) {
            return Form::zero(dim, indices.len());
        }
        let mi = MultiIndex::new(word).expect("sorted word");
        assert!(mi.max_index() <= dim, "monomial index out of range");
        let mut f = Form::zero(dim, indices.len());
        let coeff = if sign == 1 { c } else { -c };
        f.insert(mi, coeff);
        f
    }

    pub fn from_terms(
        dim: u8,
        degree: usize,
        terms: impl IntoIterator<Item = (MultiIndex, Scalar)>,
    ) -> Result<Self, ExteriorError> {
        let mut f = Form::zero(dim, degree);
        for (mi, c) in terms {
            if mi.degree() != degree || mi.max_index() > dim {
                return Err(ExteriorError::BadMultiIndex { indices: mi.indices().to_vec() });
            }
            f.add_term(&mi, &c);
        }
        Ok(f)
    }

    fn insert(&mut self, mi: MultiIndex, c: Scalar) {
        if !c.is_zero() {
            self.terms.insert(mi, c);
        }
    }

    fn add_term(&mut self, mi: &MultiIndex, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(mi) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(mi);
                }
            }
            None => {
                self.terms.insert(mi.clone(), c.clone());
            }
        }
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Scalar)> {
        self.terms.iter()
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coeff(&self, mi: &MultiIndex) -> Scalar {
        self.terms.get(mi).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, c: &Scalar) -> Form {
        if c.is_zero() {
            return Form::zero(self.dim, self.degree);
        }
        let mut out = Form::zero(self.dim, self.degree);
        for (mi, v) in &self.terms {
            out.insert(mi.clone(), v * c);
        }
        out
    }

    pub fn conjugate(&self) -> Form {
        let mut out = Form::zero(self.dim, self.degree);
        for (mi, v) in &self.terms {
            out.insert(mi.clone(), v.conj());
        }
        out
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.is_real())
    }

    /// Wedge product. Dimension mismatch is a structural error; the result
    /// degree may exceed `dim`, in which case the form is zero.
    pub fn wedge(&self, other: &Form) -> Result<Form, ExteriorError> {
        if self.dim != other.dim {
            return Err(ExteriorError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        let degree = self.degree + other.degree;
        let mut out = Form::zero(self.dim, degree);
        if degree > self.dim as usize {
            return Ok(out);
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((merged, sign)) = ma.merge(mb) {
                    let mut c = ca * cb;
                    if sign < 0 {
                        c = -c;
                    }
                    out.add_term(&merged, &c);
                }
            }
        }
        Ok(out)
    }

    /// For a 2-form `ω`, the value `ω(e_i, e_j)` on frame vectors.
    pub fn eval_pair(&self, i: u8, j: u8) -> Scalar {
        assert_eq!(self.degree, 2, "eval_pair needs a 2-form");
        if i == j {
            return Scalar::zero();
        }
        let (mi, sign) = if i < j {
            (MultiIndex::new(vec![i, j]).unwrap(), 1)
        } else {
            (MultiIndex::new(vec![j, i]).unwrap(), -1)
        };
        let c = self.coeff(&mi);
        if sign < 0 {
            -c
        } else {
            c
        }
    }

    /// Coordinates in the lexicographic monomial basis of Λ^degree,
    /// length C(dim, degree).
    pub fn coordinates(&self) -> Vec<Scalar> {
        MultiIndex::enumerate(self.dim, self.degree)
            .into_iter()
            .map(|mi| self.coeff(&mi))
            .collect()
    }

    pub fn from_coordinates(dim: u8, degree: usize, coords: &[Scalar]) -> Form {
        let basis = MultiIndex::enumerate(dim, degree);
        assert_eq!(basis.len(), coords.len(), "coordinate length mismatch");
        let mut f = Form::zero(dim, degree);
        for (mi, c) in basis.into_iter().zip(coords) {
            f.insert(mi, c.clone());
        }
        f
    }

    /// Extend the linear map `e^i ↦ images[i-1]` on generators to an algebra
    /// map of the exterior algebra and apply it. Each image must be a 1-form
    /// of the same dimension.
    pub fn substitute(&self, images: &[Form]) -> Form {
        assert_eq!(images.len(), self.dim as usize, "one image per generator");
        let mut out = Form::zero(self.dim, self.degree);
        for (mi, c) in &self.terms {
            let mut prod = Form::constant(self.dim, c.clone());
            for &i in mi.indices() {
                prod = prod.wedge(&images[i as usize - 1]).expect("same dim");
            }
            out = &out + &prod;
        }
        out
    }
}

impl Add for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in +");
        assert_eq!(self.degree, rhs.degree, "degree mismatch in +");
        let mut out = self.clone();
        for (mi, c) in &rhs.terms {
            out.add_term(mi, c);
        }
        out
    }
}

impl Sub for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        self + &-rhs
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        let mut out = Form::zero(self.dim, self.degree);
        for (mi, c) in &self.terms {
            out.insert(mi.clone(), -c);
        }
        out
    }
}

impl Neg for Form {
    type Output = Form;
    fn neg(self) -> Form {
        -&self
    }
}

impl fmt::Display for Form {
    /// Renders in the surface syntax (`e1^e3`, coefficients prefixed,
    /// `1` coefficients omitted): `- e1^e3 + 2/3 e2^e4`. Complex
    /// coefficients are parenthesized. The zero form prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mi, c) in &self.terms {
            let (neg, mag) = if c.is_real() && c.re() < &num::BigRational::from_integer(0.into())
            {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let coeff_str = if mag.is_one() && mi.degree() > 0 {
                String::new()
            } else if mag.is_real() {
                format!("{mag} ")
            } else {
                format!("({mag}) ")
            };
            write!(f, "{coeff_str}")?;
            let word: Vec<String> = mi.indices().iter().map(|i| format!("e{i}")).collect();
            write!(f, "{}", word.join("^"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Wedge a slice of forms left to right; `forms` must be nonempty.
pub fn wedge_all(forms: &[Form]) -> Result<Form, ExteriorError> {
    let mut it = forms.iter();
    let first = it.next().expect("wedge_all of empty slice").clone();
    it.try_fold(first, |acc, f| acc.wedge(f))
}

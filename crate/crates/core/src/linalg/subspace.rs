//! Subspaces of Q(i)^n in canonical form (RREF basis rows), the lattice
//! operations on them, and quotient presentations with deterministic coset
//! representatives.

use crate::exterior::Scalar;

use super::{LinalgError, Matrix};

/// A subspace held by its canonical basis: the nonzero rows of the RREF of
/// any spanning set. Equality of subspaces is therefore structural equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix, // RREF, no zero rows
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zero(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_spanning(ambient: usize, rows: Vec<Vec<Scalar>>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), ambient, "spanning vector length mismatch");
        }
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        let red = Matrix::from_rows(rows).rref();
        let rank = red.rank();
        let basis = Matrix::from_fn(rank, ambient, |i, j| red.matrix.get(i, j).clone());
        Subspace { ambient, basis, pivots: red.pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.basis.rows()).map(|i| self.basis.row(i))
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the basis; the remainder is zero iff `v` lies in
    /// the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for j in 0..self.ambient {
                let adj = &factor * self.basis.get(i, j);
                out[j] = &out[j] - &adj;
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_rows().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch in sum");
        let mut rows: Vec<Vec<Scalar>> = self.basis_rows().map(|r| r.to_vec()).collect();
        rows.extend(other.basis_rows().map(|r| r.to_vec()));
        Subspace::from_spanning(self.ambient, rows)
    }

    /// Intersection via the kernel of `[Aᵀ | −Bᵀ]`: a vector lies in both row
    /// spaces iff it is `Aᵀa = Bᵀb` for some coefficient vectors `a, b`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch in intersect");
        let (p, q) = (self.dim(), other.dim());
        if p == 0 || q == 0 {
            return Subspace::zero(self.ambient);
        }
        let at = self.basis.transpose();
        let bt = other.basis.transpose().scale(&-Scalar::one());
        let stacked = at.hstack(&bt); // ambient × (p+q)
        let ker = stacked.kernel();
        let mut rows = Vec::new();
        for k in ker.basis_rows() {
            let a = &k[0..p];
            rows.push(at.mul_vec(a));
        }
        Subspace::from_spanning(self.ambient, rows)
    }

    /// Quotient `self / denominator`; requires `denominator ⊆ self`.
    /// Section vectors are the basis rows of `self` reduced modulo the
    /// denominator (their coordinates vanish on the denominator's pivot
    /// columns), taken greedily while independent — a deterministic choice.
    pub fn quotient(&self, denominator: &Subspace) -> Result<QuotientPresentation, LinalgError> {
        assert_eq!(self.ambient, denominator.ambient, "ambient mismatch in quotient");
        if !self.contains_subspace(denominator) {
            return Err(LinalgError::NotASubspace);
        }
        let mut acc = denominator.clone();
        let mut section = Vec::new();
        for row in self.basis_rows() {
            let reduced = denominator.reduce(row);
            if !acc.contains(&reduced) {
                acc = acc.sum(&Subspace::from_spanning(self.ambient, vec![reduced.clone()]));
                section.push(reduced);
            }
        }
        debug_assert_eq!(section.len(), self.dim() - denominator.dim());
        Ok(QuotientPresentation {
            total: self.clone(),
            denominator: denominator.clone(),
            section,
        })
    }
}

/// A quotient `total / denominator` presented by explicit section vectors:
/// coset representatives forming a basis of a complement of the denominator
/// inside the total space.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    total: Subspace,
    denominator: Subspace,
    section: Vec<Vec<Scalar>>,
}

impl QuotientPresentation {
    pub fn dim(&self) -> usize {
        self.section.len()
    }

    pub fn total(&self) -> &Subspace {
        &self.total
    }

    pub fn denominator(&self) -> &Subspace {
        &self.denominator
    }

    pub fn section(&self) -> &[Vec<Scalar>] {
        &self.section
    }

    /// Coordinates of the coset of `v` in the section basis, or `None` when
    /// `v` is not in the total space.
    pub fn project(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.total.contains(v) {
            return None;
        }
        if self.section.is_empty() {
            return Some(Vec::new());
        }
        // Solve v = Σ cᵢ sᵢ + (denominator part): stack section and
        // denominator basis as columns.
        let k = self.section.len();
        let d = self.denominator.dim();
        let cols = Matrix::from_fn(self.total.ambient(), k + d, |i, j| {
            if j < k {
                self.section[j][i].clone()
            } else {
                self.denominator.basis_matrix().get(j - k, i).clone()
            }
        });
        let sol = cols.solve(v).expect("v in total implies solvable");
        Some(sol[0..k].to_vec())
    }

    /// The canonical representative of the coset with the given section
    /// coordinates.
    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.section.len(), "coordinate length mismatch");
        let n = self.total.ambient();
        let mut out = vec![Scalar::zero(); n];
        for (c, s) in coords.iter().zip(&self.section) {
            for j in 0..n {
                out[j] = &out[j] + &(c * &s[j]);
            }
        }
        out
    }

    /// The subspace of section-coordinate space cut out by the image of a
    /// set of ambient vectors.
    pub fn project_span(&self, vectors: &[Vec<Scalar>]) -> Subspace {
        let rows: Vec<Vec<Scalar>> =
            vectors.iter().filter_map(|v| self.project(v)).collect();
        Subspace::from_spanning(self.dim(), rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn sp(ambient: usize, rows: &[&[i64]]) -> Subspace {
        Subspace::from_spanning(
            ambient,
            rows.iter().map(|r| r.iter().map(|&v| s(v)).collect()).collect(),
        )
    }

    #[test]
    fn canonical_equality() {
        let a = sp(3, &[&[1, 1, 0], &[0, 0, 1]]);
        let b = sp(3, &[&[2, 2, 2], &[0, 0, -5], &[1, 1, 3]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn membership() {
        let a = sp(3, &[&[1, 0, 1], &[0, 1, 1]]);
        assert!(a.contains(&[s(2), s(3), s(5)]));
        assert!(!a.contains(&[s(1), s(0), s(0)]));
    }

    #[test]
    fn modular_law_examples() {
        // dim(U+V) + dim(U∩V) = dim U + dim V
        let u = sp(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let v = sp(4, &[&[0, 1, 0, 0], &[0, 0, 1, 0]]);
        let sum = u.sum(&v);
        let inter = u.intersect(&v);
        assert_eq!(sum.dim() + inter.dim(), u.dim() + v.dim());
        assert_eq!(inter, sp(4, &[&[0, 1, 0, 0]]));
        assert!(sum.contains_subspace(&u));
        assert!(sum.contains_subspace(&v));
    }

    #[test]
    fn intersect_nontrivial() {
        let u = sp(3, &[&[1, 1, 0], &[0, 0, 1]]); // x = y plane
        let v = sp(3, &[&[1, 0, 0], &[0, 1, 1]]);
        let w = u.intersect(&v);
        for r in w.basis_rows() {
            assert!(u.contains(r) && v.contains(r));
        }
        assert_eq!(w.dim(), 1);
    }

    #[test]
    fn quotient_section_properties() {
        let total = sp(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]);
        let denom = sp(4, &[&[0, 1, 0, 0]]);
        let q = total.quotient(&denom).unwrap();
        assert_eq!(q.dim(), 2);
        // section vectors vanish on the denominator's pivot columns
        for v in q.section() {
            for &p in denom.pivots() {
                assert!(v[p].is_zero());
            }
        }
        // project ∘ lift = id
        let coords = vec![s(2), s(-3)];
        assert_eq!(q.project(&q.lift(&coords)).unwrap(), coords);
        // denominator projects to zero
        assert_eq!(q.project(&[s(0), s(5), s(0), s(0)]).unwrap(), vec![s(0), s(0)]);
        // vectors outside the total space project to None
        assert!(q.project(&[s(0), s(0), s(0), s(1)]).is_none());
    }

    #[test]
    fn quotient_requires_containment() {
        let total = sp(3, &[&[1, 0, 0]]);
        let denom = sp(3, &[&[0, 1, 0]]);
        assert!(matches!(total.quotient(&denom), Err(LinalgError::NotASubspace)));
    }
}

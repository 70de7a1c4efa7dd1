use std::collections::BTreeSet;
use std::fmt;

use super::AnalysisError;

/// A set of bidegree types (p, q) of a fixed total degree, closed under the
/// conjugation swap (p, q) ↔ (q, p) so that the associated projector — and
/// hence the real subspace of forms supported on the set — is defined over
/// the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeSet {
    degree: usize,
    pairs: BTreeSet<(usize, usize)>,
}

impl TypeSet {
    /// Closes the given pairs under swap; every pair must sum to `degree`.
    pub fn new(degree: usize, pairs: &[(usize, usize)]) -> Result<Self, AnalysisError> {
        let mut set = BTreeSet::new();
        for &(p, q) in pairs {
            if p + q != degree {
                return Err(AnalysisError::TypeDegreeMismatch { p, q, degree });
            }
            set.insert((p, q));
            set.insert((q, p));
        }
        Ok(TypeSet { degree, pairs: set })
    }

    /// The J-invariant types in degree 2.
    pub fn invariant2() -> Self {
        TypeSet::new(2, &[(1, 1)]).unwrap()
    }

    /// The J-anti-invariant types in degree 2.
    pub fn anti_invariant2() -> Self {
        TypeSet::new(2, &[(2, 0)]).unwrap()
    }

    /// The standard swap-closed partition of degree `k` on a `2m`-dimensional
    /// space: {(p, k−p), (k−p, p)} for each admissible p ≥ k−p.
    pub fn partition(degree: usize, half_dim: usize) -> Vec<TypeSet> {
        let lo = degree.div_ceil(2).max(degree.saturating_sub(half_dim));
        let hi = degree.min(half_dim);
        (lo..=hi).map(|p| TypeSet::new(degree, &[(p, degree - p)]).unwrap()).collect()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.pairs.iter().copied().collect()
    }

    pub fn contains(&self, p: usize, q: usize) -> bool {
        self.pairs.contains(&(p, q))
    }
}

impl fmt::Display for TypeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.pairs.iter().map(|(p, q)| format!("({p},{q})")).collect();
        write!(f, "{}", parts.join("+"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_closure_and_validation() {
        let s = TypeSet::new(4, &[(3, 1)]).unwrap();
        assert_eq!(s.pairs(), vec![(1, 3), (3, 1)]);
        assert!(s.contains(1, 3));
        assert_eq!(s.to_string(), "(1,3)+(3,1)");
        assert_eq!(
            TypeSet::new(2, &[(2, 1)]).unwrap_err(),
            AnalysisError::TypeDegreeMismatch { p: 2, q: 1, degree: 2 }
        );
    }

    #[test]
    fn degree_partitions() {
        let p2 = TypeSet::partition(2, 3);
        assert_eq!(p2, vec![TypeSet::invariant2(), TypeSet::anti_invariant2()]);
        let p4 = TypeSet::partition(4, 3);
        assert_eq!(
            p4,
            vec![
                TypeSet::new(4, &[(2, 2)]).unwrap(),
                TypeSet::new(4, &[(3, 1)]).unwrap(),
            ]
        );
        let p6 = TypeSet::partition(6, 3);
        assert_eq!(p6, vec![TypeSet::new(6, &[(3, 3)]).unwrap()]);
    }
}

//! Strictly increasing index tuples labelling wedge monomials
//! `e^{i1} ∧ … ∧ e^{ik}` (1-based indices). Lexicographic `Ord` on the
//! underlying sequence gives the basis order used for coordinates.

use std::fmt;

use super::ExteriorError;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<u8>);

impl MultiIndex {
    /// The empty index (degree 0 monomial, i.e. the constant 1).
    pub fn empty() -> Self {
        MultiIndex(Vec::new())
    }

    /// Requires strictly increasing indices ≥ 1.
    pub fn new(indices: Vec<u8>) -> Result<Self, ExteriorError> {
        for w in indices.windows(2) {
            if w[0] >= w[1] {
                return Err(ExteriorError::BadMultiIndex { indices: indices.clone() });
            }
        }
        if indices.first().is_some_and(|&i| i == 0) {
            return Err(ExteriorError::BadMultiIndex { indices });
        }
        Ok(MultiIndex(indices))
    }

    pub fn from_slice(indices: &[u8]) -> Result<Self, ExteriorError> {
        MultiIndex::new(indices.to_vec())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn indices(&self) -> &[u8] {
        &self.0
    }

    pub fn max_index(&self) -> u8 {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn contains(&self, idx: u8) -> bool {
        self.0.binary_search(&idx).is_ok()
    }

    /// Merge two strictly increasing sequences, tracking the sign of the
    /// permutation that sorts their concatenation. A shared index kills the
    /// wedge monomial: `None`.
    pub fn merge(&self, other: &MultiIndex) -> Option<(MultiIndex, i32)> {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut sign = 1i32;
        while i < a.len() && j < b.len() {
            if a[i] == b[j] {
                return None;
            } else if a[i] < b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                // b[j] crosses the a.len()-i elements still waiting in `a`.
                if (a.len() - i) % 2 == 1 {
                    sign = -sign;
                }
                out.push(b[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Some((MultiIndex(out), sign))
    }

    /// Complementary index set within `1..=dim`, together with the sign of
    /// the permutation `(self, complement)` relative to `(1, …, dim)`, i.e.
    /// the sign ε with `e^self ∧ e^complement = ε · e^{1…dim}`.
    pub fn complement(&self, dim: u8) -> (MultiIndex, i32) {
        let comp: Vec<u8> = (1..=dim).filter(|i| !self.contains(*i)).collect();
        let mut inversions = 0usize;
        for &x in &self.0 {
            inversions += comp.iter().take_while(|&&y| y < x).count();
        }
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        (MultiIndex(comp), sign)
    }

    /// All degree-`k` multi-indices on `1..=dim` in lexicographic order.
    pub fn enumerate(dim: u8, k: usize) -> Vec<MultiIndex> {
        if k > dim as usize {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(k);
        fn rec(dim: u8, k: usize, start: u8, current: &mut Vec<u8>, out: &mut Vec<MultiIndex>) {
            if current.len() == k {
                out.push(MultiIndex(current.clone()));
                return;
            }
            let remaining = k - current.len();
            for i in start..=(dim + 1 - remaining as u8) {
                current.push(i);
                rec(dim, k, i + 1, current, out);
                current.pop();
            }
        }
        rec(dim, k, 1, &mut current, &mut out);
        out
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e")?;
        for i in &self.0 {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

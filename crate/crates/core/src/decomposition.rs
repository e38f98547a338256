//! Multisets of irreducibles `[λ]` of `S_N = S_{N_1} × … × S_{N_n}`, read
//! either as symmetric-group representations or, through padding and the
//! syzygy correspondence, as Schur functors.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::partitions::NPartition;

/// Irreducible constituents with positive multiplicities, in canonical
/// (lexicographic) order of n-partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decomposition {
    sizes: Vec<u32>,
    terms: BTreeMap<NPartition, u64>,
}

impl Decomposition {
    pub fn new(sizes: Vec<u32>) -> Self {
        Decomposition {
            sizes,
            terms: BTreeMap::new(),
        }
    }

    /// Collects terms, summing repeated partitions and dropping zero
    /// multiplicities. Every partition must have the given sizes.
    pub fn from_terms(sizes: Vec<u32>, terms: impl IntoIterator<Item = (NPartition, u64)>) -> Result<Self> {
        let mut d = Decomposition::new(sizes);
        for (lambda, m) in terms {
            d.insert(lambda, m)?;
        }
        Ok(d)
    }

    pub fn insert(&mut self, lambda: NPartition, m: u64) -> Result<()> {
        if lambda.sizes() != self.sizes {
            return Err(Error::SizeMismatch {
                expected: format!("{:?}", self.sizes),
                found: format!("{:?}", lambda.sizes()),
            });
        }
        if m > 0 {
            *self.terms.entry(lambda).or_insert(0) += m;
        }
        Ok(())
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NPartition, u64)> + '_ {
        self.terms.iter().map(|(k, v)| (k, *v))
    }

    pub fn multiplicity(&self, lambda: &NPartition) -> u64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct constituents.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Number of constituents counted with multiplicity.
    pub fn total_multiplicity(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Dimension as a symmetric-group representation.
    pub fn dimension(&self) -> u128 {
        self.terms.iter().map(|(l, &m)| l.dimension() * u128::from(m)).sum()
    }

    /// Dimension of `⊕ S_λ(K^{dims})^{m_λ}`.
    pub fn weyl_dimension(&self, dims: &[u32]) -> u128 {
        self.terms.iter().map(|(l, &m)| l.weyl_dim(dims) * u128::from(m)).sum()
    }

    /// Relabels by swapping two coordinates.
    pub fn swapped(&self, i: usize, j: usize) -> Decomposition {
        let mut sizes = self.sizes.clone();
        sizes.swap(i, j);
        Decomposition {
            sizes,
            terms: self.terms.iter().map(|(l, &m)| (l.swapped(i, j), m)).collect(),
        }
    }

    /// Adds the terms of `other`, which must have the same sizes.
    pub fn merge(&mut self, other: &Decomposition) -> Result<()> {
        for (l, m) in other.terms() {
            self.insert(l.clone(), m)?;
        }
        Ok(())
    }

    /// Strips the first row of every component in `coords`, keeping the
    /// multiplicities. The result is keyed by the stripped n-partitions.
    pub fn unpad_coords(&self, coords: &[usize]) -> BTreeMap<NPartition, u64> {
        let mut out = BTreeMap::new();
        for (l, &m) in &self.terms {
            *out.entry(l.unpad_coords(coords)).or_insert(0) += m;
        }
        out
    }

    /// `[λ] ↦ [λ[N]]` on the given coordinates; constituents whose padding is
    /// undefined are dropped.
    pub fn padded(&self, coords: &[usize], sizes: &[u32]) -> Decomposition {
        let mut out = Decomposition::new(sizes.to_vec());
        for (l, &m) in &self.terms {
            if let Some(p) = l.pad_coords(coords, sizes) {
                out.insert(p, m).expect("padded sizes match");
            }
        }
        out
    }

    /// One line per constituent: `m  λ¹xλ²…`.
    pub fn to_lines(&self) -> Vec<String> {
        self.terms.iter().map(|(l, m)| format!("{m}  {l}")).collect()
    }
}

impl fmt::Display for Decomposition {
    /// `[λ] + 2[μ]`, or `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, &m)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m > 1 {
                write!(f, "{m}")?;
            }
            write!(f, "[{l}]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn np(s: &str) -> NPartition {
        s.parse().unwrap()
    }

    #[test]
    fn insert_and_render() {
        let mut d = Decomposition::new(vec![3, 3]);
        d.insert(np("(2,1)x(1,1,1)"), 1).unwrap();
        d.insert(np("(1,1,1)x(2,1)"), 1).unwrap();
        assert_eq!(d.to_string(), "[(1,1,1)x(2,1)] + [(2,1)x(1,1,1)]");
        assert_eq!(d.dimension(), 4);
        assert_eq!(d.swapped(0, 1), d);
        assert!(d.insert(np("(2)x(1)"), 1).is_err());
    }

    #[test]
    fn zero_multiplicity_is_dropped() {
        let d = Decomposition::from_terms(vec![2], [(np("(2)"), 0)]).unwrap();
        assert!(d.is_empty());
        assert_eq!(d.to_string(), "0");
    }

    #[test]
    fn weyl_dimension_counts_minors() {
        let d = Decomposition::from_terms(vec![2, 2], [(np("(1,1)x(1,1)"), 1)]).unwrap();
        assert_eq!(d.weyl_dimension(&[2, 2]), 1);
        assert_eq!(d.weyl_dimension(&[3, 3]), 9);
    }
}

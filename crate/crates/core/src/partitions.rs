//! Young-diagram combinatorics.
//!
//! Partitions index irreducible representations of symmetric groups and
//! Schur functors alike; n-partitions index those of products of such
//! groups. Everything here is a plain value type.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A partition stored as its weakly decreasing list of positive parts.
///
/// Ordering is lexicographic on the part lists, which is the canonical
/// order used for every deterministic output.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(r)`; empty when `r == 0`.
    pub fn row(r: u32) -> Self {
        if r == 0 {
            Self::empty()
        } else {
            Partition(vec![r])
        }
    }

    /// The one-column partition `(1^r)`.
    pub fn column(r: u32) -> Self {
        Partition(vec![1; r as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of the first row, zero for the empty partition.
    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Part `i` (zero-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first() as usize;
        let mut out = vec![0u32; cols];
        for &p in &self.0 {
            for c in out.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(out)
    }

    /// Sum over boxes of (column - row), zero-based.
    pub fn content(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let p = i64::from(p);
                let i = i as i64;
                // sum_{j<p} (j - i)
                p * (p - 1) / 2 - i * p
            })
            .sum()
    }

    /// Hook lengths, row by row.
    pub fn hooks(&self) -> Vec<Vec<u32>> {
        let conj = self.conjugate();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                (0..p as usize)
                    .map(|j| p - j as u32 + conj.0[j] - i as u32 - 1)
                    .collect()
            })
            .collect()
    }

    /// Dimension of the irreducible symmetric-group representation `[self]`
    /// (number of standard Young tableaux), by the hook length formula.
    pub fn dimension(&self) -> u128 {
        let n = self.size();
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        let mut k = 1u128;
        for h in self.hooks().into_iter().flatten() {
            num = num.checked_mul(k).expect("dimension overflows u128");
            den = den.checked_mul(u128::from(h)).expect("dimension overflows u128");
            let g = gcd(num, den);
            num /= g;
            den /= g;
            k += 1;
        }
        debug_assert_eq!(k - 1, u128::from(n));
        debug_assert_eq!(den, 1);
        num / den
    }

    /// `dim S_λ(K^m)` via the content/hook product; zero when λ has more than
    /// `m` parts.
    pub fn weyl_dim(&self, m: u32) -> u128 {
        if self.len() > m as usize {
            return 0;
        }
        let hooks = self.hooks();
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for (i, row) in hooks.iter().enumerate() {
            for (j, &h) in row.iter().enumerate() {
                let factor = (i64::from(m) + j as i64 - i as i64) as u128;
                num = num.checked_mul(factor).expect("weyl_dim overflows u128");
                den = den.checked_mul(u128::from(h)).expect("weyl_dim overflows u128");
                let g = gcd(num, den);
                num /= g;
                den /= g;
            }
        }
        debug_assert_eq!(den, 1);
        num / den
    }

    /// `(m - |δ|, δ_1, δ_2, ...)`, or `None` when `m - |δ| < δ_1`.
    pub fn pad(&self, m: u32) -> Option<Partition> {
        let size = self.size();
        if m < size || m - size < self.first() {
            return None;
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(m - size);
        parts.extend_from_slice(&self.0);
        Some(Partition::new(parts).expect("padding preserves monotonicity"))
    }

    /// Strips the first row.
    pub fn unpad(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// All partitions obtained by adding a horizontal strip of `k` boxes.
    pub fn pieri_row(&self, k: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = self.0.clone();
        cur.push(0);
        pieri_rec(&self.0, 0, k, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All partitions `ν` such that `self / ν` is a horizontal strip of size `k`.
    pub fn remove_horizontal_strips(&self, k: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = self.0.clone();
        remove_strip_rec(&self.0, 0, k, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Dominance partial order on partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0u32;
        let mut b = 0u32;
        let len = self.len().max(other.len());
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All partitions of `n` in ascending canonical order.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        partitions_rec(n, n, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All partitions of `n` with at most `rows` parts.
    pub fn all_with_rows(n: u32, rows: usize) -> Vec<Partition> {
        Self::all(n).into_iter().filter(|p| p.len() <= rows).collect()
    }

    /// Multiplicities of each part size, `m[k-1]` = number of parts equal to `k`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.first() as usize];
        for &p in &self.0 {
            m[p as usize - 1] += 1;
        }
        m
    }

    /// Rows of unicode boxes, one line per part.
    pub fn young_diagram(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        let rows: Vec<String> = self.0.iter().map(|&p| "□".repeat(p as usize)).collect();
        rows.join("\n")
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

fn partitions_rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=n.min(max)).rev() {
        cur.push(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop();
    }
}

// Row i of the result lies in [base_i, base_{i-1}] (first row unbounded).
fn pieri_rec(base: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if i == cur.len() {
        if left == 0 {
            out.push(Partition::new(cur.clone()).expect("horizontal strip keeps shape"));
        }
        return;
    }
    let lo = base.get(i).copied().unwrap_or(0);
    let hi = if i == 0 { lo + left } else { base[i - 1].min(lo + left) };
    for v in lo..=hi {
        cur[i] = v;
        pieri_rec(base, i + 1, left - (v - lo), cur, out);
    }
    cur[i] = lo;
}

// Row i of the result lies in [base_{i+1}, base_i].
fn remove_strip_rec(base: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if i == base.len() {
        if left == 0 {
            out.push(Partition::new(cur.clone()).expect("strip removal keeps shape"));
        }
        return;
    }
    let hi = base[i];
    let lo = base.get(i + 1).copied().unwrap_or(0).max(hi.saturating_sub(left));
    for v in (lo..=hi).rev() {
        cur[i] = v;
        remove_strip_rec(base, i + 1, left - (hi - v), cur, out);
    }
    cur[i] = hi;
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(4,3,1)`, `4,3,1`, `()` and `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('(').unwrap_or(t);
        let t = t.strip_suffix(')').unwrap_or(t).trim();
        if t.is_empty() || t == "∅" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("partition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl From<&[u32]> for Partition {
    /// Panics on a non-partition; intended for literals.
    fn from(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec()).expect("not a partition")
    }
}

/// An ordered tuple of partitions, one per factor group.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NPartition(Vec<Partition>);

impl NPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        NPartition(components)
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn into_components(self) -> Vec<Partition> {
        self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn sizes(&self) -> Vec<u32> {
        self.0.iter().map(Partition::size).collect()
    }

    /// `λ[N]`: pads every component, `None` if any padding is undefined.
    pub fn pad(&self, sizes: &[u32]) -> Option<NPartition> {
        if sizes.len() != self.0.len() {
            return None;
        }
        self.0
            .iter()
            .zip(sizes)
            .map(|(p, &m)| p.pad(m))
            .collect::<Option<Vec<_>>>()
            .map(NPartition)
    }

    /// Pads only the listed coordinates, leaving the others as they are.
    pub fn pad_coords(&self, coords: &[usize], sizes: &[u32]) -> Option<NPartition> {
        let mut out = self.0.clone();
        for &c in coords {
            out[c] = self.0[c].pad(sizes[c])?;
        }
        Some(NPartition(out))
    }

    pub fn unpad(&self) -> NPartition {
        NPartition(self.0.iter().map(Partition::unpad).collect())
    }

    /// Strips the first row on the listed coordinates only.
    pub fn unpad_coords(&self, coords: &[usize]) -> NPartition {
        let mut out = self.0.clone();
        for &c in coords {
            out[c] = self.0[c].unpad();
        }
        NPartition(out)
    }

    /// Dimension of `[λ¹]⊗…⊗[λⁿ]` as a representation of the product group.
    pub fn dimension(&self) -> u128 {
        self.0.iter().map(Partition::dimension).product()
    }

    /// Dimension of `S_λ¹(K^m₁)⊗…⊗S_λⁿ(K^mₙ)`.
    pub fn weyl_dim(&self, dims: &[u32]) -> u128 {
        self.0.iter().zip(dims).map(|(p, &m)| p.weyl_dim(m)).product()
    }

    /// Swaps two components.
    pub fn swapped(&self, i: usize, j: usize) -> NPartition {
        let mut out = self.0.clone();
        out.swap(i, j);
        NPartition(out)
    }

    /// Every n-partition of the given sizes, in canonical order.
    pub fn all(sizes: &[u32]) -> Vec<NPartition> {
        let lists: Vec<Vec<Partition>> = sizes.iter().map(|&n| Partition::all(n)).collect();
        cartesian(&lists).into_iter().map(NPartition).collect()
    }

    /// Young diagrams side by side, joined by `⊗`.
    pub fn young_diagram(&self) -> String {
        let blocks: Vec<Vec<String>> = self
            .0
            .iter()
            .map(|p| p.young_diagram().lines().map(ToString::to_string).collect())
            .collect();
        let height = blocks.iter().map(Vec::len).max().unwrap_or(0);
        let widths: Vec<usize> = blocks
            .iter()
            .map(|b| b.iter().map(|l| l.chars().count()).max().unwrap_or(0))
            .collect();
        let mut lines = Vec::with_capacity(height);
        for r in 0..height {
            let mut line = String::new();
            for (k, b) in blocks.iter().enumerate() {
                if k > 0 {
                    line.push_str(if r == 0 { " ⊗ " } else { "   " });
                }
                let cell = b.get(r).map(String::as_str).unwrap_or("");
                line.push_str(cell);
                for _ in cell.chars().count()..widths[k] {
                    line.push(' ');
                }
            }
            lines.push(String::from(line.trim_end()));
        }
        lines.join("\n")
    }
}

/// Cartesian product of lists, first list most significant.
pub fn cartesian<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for prefix in &out {
            for item in list {
                let mut v = prefix.clone();
                v.push(item.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

impl fmt::Display for NPartition {
    /// Compact bracket form `(4,3,1)x(2,2,2,1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for NPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(['x', '⊗'])
            .map(Partition::from_str)
            .collect::<Result<Vec<_>>>()
            .map(NPartition)
    }
}

/// An n-tuple of integers such as `N`, `d`, `b` or `a`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tuple(pub Vec<i64>);

impl Tuple {
    pub fn new(entries: Vec<i64>) -> Self {
        Tuple(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &Tuple) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// True when `self` differs from `other` by +1 in exactly one coordinate.
    pub fn is_successor_of(&self, other: &Tuple) -> bool {
        self.0.len() == other.0.len()
            && self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count() == 1
            && self.0.iter().zip(&other.0).all(|(a, b)| *a == *b || *a == *b + 1)
    }

    /// The entries as sizes, `None` if any is negative.
    pub fn to_sizes(&self) -> Option<Vec<u32>> {
        self.0.iter().map(|&x| u32::try_from(x).ok()).collect()
    }
}

impl From<&[u32]> for Tuple {
    fn from(v: &[u32]) -> Self {
        Tuple(v.iter().map(|&x| i64::from(x)).collect())
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Tuple {
    type Err = Error;

    /// Comma-separated integers.
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("tuple {s:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(Tuple)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::from(v)
    }

    #[test]
    fn pad_examples() {
        let lambda = NPartition::new(vec![p(&[3, 1]), p(&[2, 2, 1])]);
        assert_eq!(
            lambda.pad(&[8, 7]),
            Some(NPartition::new(vec![p(&[4, 3, 1]), p(&[2, 2, 2, 1])]))
        );
        assert_eq!(lambda.pad(&[8, 6]), None);
        let empty = NPartition::new(vec![Partition::empty()]);
        assert_eq!(empty.pad(&[5]), Some(NPartition::new(vec![p(&[5])])));
    }

    #[test]
    fn unpad_examples() {
        let mu = NPartition::new(vec![p(&[4, 3, 1]), p(&[2, 2, 2, 1])]);
        assert_eq!(mu.unpad(), NPartition::new(vec![p(&[3, 1]), p(&[2, 2, 1])]));
        assert_eq!(NPartition::new(vec![p(&[5])]).unpad(), NPartition::new(vec![Partition::empty()]));
        assert_eq!(NPartition::new(vec![p(&[2, 2])]).unpad(), NPartition::new(vec![p(&[2])]));
    }

    #[test]
    fn content_examples() {
        assert_eq!(p(&[6, 3, 3, 1]).content(), 9);
        assert_eq!(p(&[1]).content(), 0);
        assert_eq!(p(&[2, 1]).content(), 0);
        assert_eq!(Partition::empty().content(), 0);
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(p(&[1, 1]).pieri_row(1), vec![p(&[1, 1, 1]), p(&[2, 1])]);
        assert_eq!(Partition::empty().pieri_row(3), vec![p(&[3])]);
        assert_eq!(p(&[2]).pieri_row(2), vec![p(&[2, 2]), p(&[3, 1]), p(&[4])]);
        assert_eq!(p(&[2, 1]).pieri_row(0), vec![p(&[2, 1])]);
    }

    #[test]
    fn weyl_dim_examples() {
        assert_eq!(p(&[1, 1]).weyl_dim(2), 1);
        assert_eq!(p(&[1, 1]).weyl_dim(3), 3);
        assert_eq!(p(&[2, 1]).weyl_dim(3), 8);
        assert_eq!(p(&[1, 1, 1]).weyl_dim(2), 0);
        assert_eq!(Partition::empty().weyl_dim(0), 1);
        assert_eq!(p(&[3]).weyl_dim(2), 4);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(p(&[2, 1]).dimension(), 2);
        assert_eq!(p(&[3, 2]).dimension(), 5);
        assert_eq!(p(&[4, 2, 1]).dimension(), 35);
        assert_eq!(Partition::empty().dimension(), 1);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn parse_and_render() {
        let lam: NPartition = "(4,3,1)x(2,2,2,1)".parse().unwrap();
        assert_eq!(lam.to_string(), "(4,3,1)x(2,2,2,1)");
        let e: NPartition = "()x(1)".parse().unwrap();
        assert_eq!(e.components()[0], Partition::empty());
        assert_eq!(p(&[2, 1]).young_diagram(), "□□\n□");
        assert_eq!("3,-1,0".parse::<Tuple>().unwrap(), Tuple(vec![3, -1, 0]));
    }

    #[test]
    fn tuple_order() {
        let a = Tuple(vec![2, 3]);
        assert!(Tuple(vec![3, 3]).is_successor_of(&a));
        assert!(!Tuple(vec![3, 4]).is_successor_of(&a));
        assert!(a.le(&Tuple(vec![2, 5])));
    }
}

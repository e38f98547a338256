//! Torus-weight oracle for the plethysms `Λ^p(V_1 ⊗ … ⊗ V_n)`,
//! `Sym^p(Sym^e V)` and `Λ^p(Sym^d V)`.
//!
//! A representation is given by the multiset of its weights; its Schur
//! decomposition is recovered by unitriangular elimination against Kostka
//! numbers on dominant weights, largest first.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::characters::CharacterTables;
use crate::error::{Error, Result};
use crate::partitions::{cartesian, NPartition, Partition};

/// Weights of a representation of `GL_{m_1} × … × GL_{m_n}`: one exponent
/// vector per factor, with multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    dims: Vec<usize>,
    weights: BTreeMap<Vec<Vec<u32>>, u64>,
}

impl WeightMultiset {
    pub fn new(dims: Vec<usize>) -> Self {
        WeightMultiset {
            dims,
            weights: BTreeMap::new(),
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn insert(&mut self, weight: Vec<Vec<u32>>, mult: u64) -> Result<()> {
        if weight.len() != self.dims.len() || weight.iter().zip(&self.dims).any(|(w, &m)| w.len() != m) {
            return Err(Error::SizeMismatch {
                expected: format!("exponent vectors of lengths {:?}", self.dims),
                found: format!("{weight:?}"),
            });
        }
        if mult > 0 {
            *self.weights.entry(weight).or_insert(0) += mult;
        }
        Ok(())
    }

    pub fn weights(&self) -> impl Iterator<Item = (&Vec<Vec<u32>>, u64)> + '_ {
        self.weights.iter().map(|(w, &m)| (w, m))
    }

    /// Dimension of the representation.
    pub fn total(&self) -> u64 {
        self.weights.values().sum()
    }

    /// `Λ^p(V_1 ⊗ … ⊗ V_n)` with `dim V_i = dims[i]`.
    pub fn wedge_of_tensor(p: u32, dims: &[usize]) -> Self {
        let basis: Vec<Vec<Vec<u32>>> = cartesian(&dims.iter().map(|&m| (0..m).collect::<Vec<_>>()).collect::<Vec<_>>())
            .into_iter()
            .map(|idx| idx.iter().zip(dims).map(|(&i, &m)| unit(m, i)).collect())
            .collect();
        Self::from_subsets(dims.to_vec(), &basis, p, false)
    }

    /// `Sym^p(Sym^e K^m)`.
    pub fn sym_of_sym(p: u32, e: u32, m: usize) -> Self {
        Self::from_subsets(vec![m], &wrap(monomials(m, e)), p, true)
    }

    /// `Λ^p(Sym^d K^m)`.
    pub fn wedge_of_sym(p: u32, d: u32, m: usize) -> Self {
        Self::from_subsets(vec![m], &wrap(monomials(m, d)), p, false)
    }

    // Weights of Sym^p or Λ^p of the span of `basis`.
    fn from_subsets(dims: Vec<usize>, basis: &[Vec<Vec<u32>>], p: u32, repeat: bool) -> Self {
        let mut out = WeightMultiset::new(dims.clone());
        let zero: Vec<Vec<u32>> = dims.iter().map(|&m| vec![0; m]).collect();
        let mut idx: Vec<usize> = Vec::with_capacity(p as usize);
        subsets_rec(basis, p as usize, 0, repeat, &mut idx, &zero, &mut out);
        out
    }
}

fn wrap(v: Vec<Vec<u32>>) -> Vec<Vec<Vec<u32>>> {
    v.into_iter().map(|x| vec![x]).collect()
}

fn unit(m: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; m];
    v[i] = 1;
    v
}

/// Exponent vectors of degree `deg` in `m` variables.
pub fn monomials(m: usize, deg: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; m];
    monomials_rec(0, deg, &mut cur, &mut out);
    out
}

fn monomials_rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if i + 1 >= cur.len() {
        if let Some(last) = cur.len().checked_sub(1) {
            cur[last] = left;
            out.push(cur.clone());
            cur[last] = 0;
        } else if left == 0 {
            out.push(Vec::new());
        }
        return;
    }
    for a in (0..=left).rev() {
        cur[i] = a;
        monomials_rec(i + 1, left - a, cur, out);
    }
    cur[i] = 0;
}

fn subsets_rec(
    basis: &[Vec<Vec<u32>>],
    p: usize,
    start: usize,
    repeat: bool,
    idx: &mut Vec<usize>,
    zero: &[Vec<u32>],
    out: &mut WeightMultiset,
) {
    if idx.len() == p {
        let mut w = zero.to_vec();
        for &i in idx.iter() {
            for (acc, b) in w.iter_mut().zip(&basis[i]) {
                for (x, y) in acc.iter_mut().zip(b) {
                    *x += y;
                }
            }
        }
        *out.weights.entry(w).or_insert(0) += 1;
        return;
    }
    for i in start..basis.len() {
        idx.push(i);
        subsets_rec(basis, p, if repeat { i } else { i + 1 }, repeat, idx, zero, out);
        idx.pop();
    }
}

/// Memoised Kostka numbers `K_{λμ}`, the number of semistandard tableaux of
/// shape `λ` and content `μ`.
#[derive(Clone, Debug, Default)]
pub struct Kostka {
    memo: BTreeMap<(Partition, Vec<u32>), u64>,
}

impl Kostka {
    pub fn new() -> Self {
        Self::default()
    }

    /// `K_{λμ}` for a content vector `μ` (any order, zeros allowed).
    pub fn get(&mut self, lambda: &Partition, mu: &[u32]) -> u64 {
        let content: Vec<u32> = mu.iter().copied().filter(|&x| x > 0).collect();
        if content.iter().sum::<u32>() != lambda.size() {
            return 0;
        }
        self.rec(lambda, &content)
    }

    fn rec(&mut self, lambda: &Partition, mu: &[u32]) -> u64 {
        let Some((&last, rest)) = mu.split_last() else {
            return u64::from(lambda.is_empty());
        };
        let key = (lambda.clone(), mu.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let total = lambda
            .remove_horizontal_strips(last)
            .iter()
            .map(|nu| self.rec(nu, rest))
            .sum();
        self.memo.insert(key, total);
        total
    }
}

/// `K_{λμ}`.
pub fn kostka(lambda: &Partition, mu: &[u32]) -> u64 {
    Kostka::new().get(lambda, mu)
}

fn as_dominant(w: &[Vec<u32>]) -> Option<Vec<Partition>> {
    w.iter().map(|v| Partition::new(v.clone()).ok()).collect()
}

/// Schur decomposition of a weight multiset: `c_λ` with
/// `w = Σ c_λ · weights(S_{λ¹} ⊗ … ⊗ S_{λⁿ})`.
pub fn schur_expand(w: &WeightMultiset) -> Result<BTreeMap<NPartition, u64>> {
    let mut dominant: BTreeMap<Vec<Partition>, i128> = BTreeMap::new();
    let mut orbit_totals: BTreeMap<Vec<Vec<u32>>, u128> = BTreeMap::new();
    for (weight, m) in w.weights() {
        let sorted: Vec<Vec<u32>> = weight
            .iter()
            .map(|v| {
                let mut s = v.clone();
                s.sort_unstable_by(|a, b| b.cmp(a));
                s
            })
            .collect();
        if w.weights.get(&sorted).copied().unwrap_or(0) != m {
            return Err(Error::NotARepresentation(format!("multiplicities are not symmetric at {weight:?}")));
        }
        *orbit_totals.entry(sorted).or_insert(0) += u128::from(m);
        if let Some(d) = as_dominant(weight) {
            *dominant.entry(d).or_insert(0) += i128::from(m);
        }
    }
    for (sorted, total) in &orbit_totals {
        let m = w.weights.get(sorted).copied().unwrap_or(0);
        if *total != u128::from(m) * orbit_size(sorted) {
            return Err(Error::NotARepresentation(format!("incomplete orbit at {sorted:?}")));
        }
    }
    let Some(first) = dominant.keys().next() else {
        return Ok(BTreeMap::new());
    };
    let sizes: Vec<u32> = first.iter().map(Partition::size).collect();
    if dominant.keys().any(|k| k.iter().map(Partition::size).collect::<Vec<_>>() != sizes) {
        return Err(Error::NotARepresentation("weights of different degrees".into()));
    }
    let candidates: Vec<Vec<Partition>> = cartesian(
        &sizes
            .iter()
            .zip(w.dims())
            .map(|(&s, &m)| Partition::all_with_rows(s, m))
            .collect::<Vec<_>>(),
    );
    let mut kostka = Kostka::new();
    let mut out = BTreeMap::new();
    while let Some((top, &c)) = dominant.iter().next_back() {
        let top = top.clone();
        if c < 0 {
            return Err(Error::NotARepresentation(format!("negative coefficient {c} at {}", NPartition::new(top))));
        }
        for nu in &candidates {
            if nu.iter().zip(&top).any(|(n, t)| !t.dominates(n)) {
                continue;
            }
            let k: u64 = top.iter().zip(nu).map(|(t, n)| kostka.get(t, n.parts())).product();
            if k == 0 {
                continue;
            }
            let e = dominant.entry(nu.clone()).or_insert(0);
            *e -= c * i128::from(k);
            if *e == 0 {
                dominant.remove(nu);
            }
        }
        out.insert(NPartition::new(top), c as u64);
    }
    Ok(out)
}

/// Number of distinct rearrangements of each factor of a weight, multiplied.
fn orbit_size(weight: &[Vec<u32>]) -> u128 {
    weight
        .iter()
        .map(|v| {
            let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
            for &x in v {
                *counts.entry(x).or_insert(0) += 1;
            }
            let mut acc: u128 = 1;
            let mut seen: u32 = 0;
            for &c in counts.values() {
                for i in 1..=c {
                    seen += 1;
                    acc = acc * u128::from(seen) / u128::from(i);
                }
            }
            acc
        })
        .product()
}

fn single_factor(map: BTreeMap<NPartition, u64>) -> BTreeMap<Partition, u64> {
    map.into_iter()
        .map(|(k, v)| (k.into_components().pop().expect("one factor"), v))
        .collect()
}

/// Multiplicities `m_λ` of `S_{λ¹}V₁ ⊗ … ⊗ S_{λⁿ}Vₙ` in `Λ^p(V₁ ⊗ … ⊗ Vₙ)`
/// from the sign-twisted character sum. For `n = 2` the weight oracle is run
/// as well and any disagreement is an error.
pub fn wedge_tensor_multiplicities(p: u32, n: usize, tables: &CharacterTables) -> Result<BTreeMap<NPartition, u64>> {
    if n == 0 {
        return Err(Error::Precondition("at least one tensor factor is required".into()));
    }
    let mut out = BTreeMap::new();
    for lambda in NPartition::all(&vec![p; n]) {
        let m = tables.sign_kronecker_multiplicity(lambda.components())?;
        if m > 0 {
            out.insert(lambda, m);
        }
    }
    if n == 2 {
        let rows = p as usize + 1;
        let by_weights = schur_expand(&WeightMultiset::wedge_of_tensor(p, &[rows, rows]))?;
        if by_weights != out {
            return Err(Error::Consistency(format!(
                "Λ^{p}(V⊗W): character sum and weight oracle disagree"
            )));
        }
    }
    Ok(out)
}

/// Multiplicities of `S_λ V` in `Sym^p(Sym^e V)`, computed with `p + 1`
/// variables; constituents have at most `p` rows, so the extra row must stay
/// empty.
pub fn sym_sym_multiplicities(p: u32, e: u32) -> Result<BTreeMap<Partition, u64>> {
    let rows = p as usize + 1;
    let out = single_factor(schur_expand(&WeightMultiset::sym_of_sym(p, e, rows))?);
    check_rows(&out, p)?;
    Ok(out)
}

/// Multiplicities of `S_λ V` in `Λ^p(Sym^d V)`, with `p + 1` variables.
pub fn wedge_sym_multiplicities(p: u32, d: u32) -> Result<BTreeMap<Partition, u64>> {
    let rows = p as usize + 1;
    let out = single_factor(schur_expand(&WeightMultiset::wedge_of_sym(p, d, rows))?);
    check_rows(&out, p)?;
    Ok(out)
}

fn check_rows(map: &BTreeMap<Partition, u64>, p: u32) -> Result<()> {
    if let Some(l) = map.keys().find(|l| l.len() > p.max(1) as usize) {
        return Err(Error::Consistency(format!("constituent {l} has more than {p} rows")));
    }
    Ok(())
}

/// `λ̄ = (1 + λ_1, …, 1 + λ_p)`, with `λ` padded by zeros to `p` entries.
pub fn add_column(lambda: &Partition, height: usize) -> Option<Partition> {
    if lambda.len() > height {
        return None;
    }
    let parts = (0..height).map(|i| 1 + lambda.part(i)).collect();
    Partition::new(parts).ok()
}

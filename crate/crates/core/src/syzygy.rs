//! Equivariant Betti tables `K_{p,q}^d(b)` of line bundles on Segre-Veronese
//! varieties, read off from the homology of packing complexes, together with
//! the closed-form linear strands, the vanishing predicates and a direct
//! Koszul-complex dimension count.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::characters::CharacterTables;
use crate::complex::{PackingComplex, DEFAULT_MAX_SIMPLICES};
use crate::decomposition::Decomposition;
use crate::equivariant::EquivariantComplex;
use crate::error::{Error, Result};
use crate::linalg::{laplacian, symmetric_integer_spectrum, Echelon};
use crate::partitions::{NPartition, Partition};
use crate::plethysm::{add_column, monomials, sym_sym_multiplicities, wedge_sym_multiplicities, wedge_tensor_multiplicities};

/// Default cap on the number of nonzero entries of one Koszul matrix.
pub const DEFAULT_MAX_ORACLE_ENTRIES: u64 = 20_000_000;

/// The indices of `K_{p,q}^d(b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SyzygyQuery {
    pub p: u32,
    pub q: u32,
    pub d: Vec<u32>,
    pub b: Vec<i64>,
}

impl SyzygyQuery {
    pub fn new(p: u32, q: u32, d: Vec<u32>, b: Vec<i64>) -> Result<Self> {
        if d.len() != b.len() {
            return Err(Error::SizeMismatch {
                expected: format!("{} entries of b", d.len()),
                found: format!("{}", b.len()),
            });
        }
        if d.is_empty() || d.contains(&0) {
            return Err(Error::Precondition("d must be a nonempty tuple of positive integers".into()));
        }
        Ok(SyzygyQuery { p, q, d, b })
    }

    /// `N_i = (p + q) d_i + b_i`.
    pub fn n_tuple(&self) -> Vec<i64> {
        self.d
            .iter()
            .zip(&self.b)
            .map(|(&d, &b)| i64::from(self.p + self.q) * i64::from(d) + b)
            .collect()
    }

    /// `N` as sizes, `None` when some `N_i` is negative.
    pub fn sizes(&self) -> Option<Vec<u32>> {
        self.n_tuple().into_iter().map(|x| u32::try_from(x).ok()).collect()
    }

    /// The homology degree `p - 1`.
    pub fn homology_degree(&self) -> i32 {
        self.p as i32 - 1
    }
}

impl fmt::Display for SyzygyQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K_{{{},{}}} d={:?} b={:?}", self.p, self.q, self.d, self.b)
    }
}

/// Supplies `H̃_k(C_N^d)` decompositions, possibly from a cache.
pub trait HomologySource {
    fn decomposition(&mut self, sizes: &[u32], subset_sizes: &[u32], k: i32) -> Result<Decomposition>;
}

/// Computes every request directly and memoizes it in memory.
#[derive(Clone, Debug)]
pub struct DirectHomology {
    max_simplices: u64,
    memo: BTreeMap<(Vec<u32>, Vec<u32>, i32), Decomposition>,
}

impl DirectHomology {
    pub fn new() -> Self {
        Self::with_cap(DEFAULT_MAX_SIMPLICES)
    }

    pub fn with_cap(max_simplices: u64) -> Self {
        DirectHomology {
            max_simplices,
            memo: BTreeMap::new(),
        }
    }
}

impl Default for DirectHomology {
    fn default() -> Self {
        Self::new()
    }
}

impl HomologySource for DirectHomology {
    fn decomposition(&mut self, sizes: &[u32], subset_sizes: &[u32], k: i32) -> Result<Decomposition> {
        let key = (sizes.to_vec(), subset_sizes.to_vec(), k);
        if let Some(d) = self.memo.get(&key) {
            return Ok(d.clone());
        }
        let d = compute_homology(sizes, subset_sizes, k, self.max_simplices)?;
        self.memo.insert(key, d.clone());
        Ok(d)
    }
}

/// `H̃_k(C_N^d)` with a cap on the number of simplices.
pub fn compute_homology(sizes: &[u32], subset_sizes: &[u32], k: i32, max_simplices: u64) -> Result<Decomposition> {
    let tables = CharacterTables::for_sizes(sizes)?;
    let mut e = EquivariantComplex::build_capped(sizes, subset_sizes, max_simplices)?;
    e.homology_decomposition(k, &tables)
}

/// `K_{p,q}^d(b)`: the multiplicity of `S_λ` is that of `[λ]` in
/// `H̃_{p-1}(C_N^d)`. Empty when some `N_i` is negative.
pub fn betti_entry_with(source: &mut impl HomologySource, qy: &SyzygyQuery) -> Result<Decomposition> {
    match qy.sizes() {
        Some(sizes) => source.decomposition(&sizes, &qy.d, qy.homology_degree()),
        None => Ok(Decomposition::new(qy.n_tuple().iter().map(|&x| x.max(0) as u32).collect())),
    }
}

/// [`betti_entry_with`] computed directly.
pub fn betti_entry(qy: &SyzygyQuery) -> Result<Decomposition> {
    betti_entry_with(&mut DirectHomology::new(), qy)
}

/// Grid of `K_{p,q}^d(b)` for `0 ≤ p ≤ pmax`, `0 ≤ q ≤ qmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub pmax: u32,
    pub qmax: u32,
    pub d: Vec<u32>,
    pub b: Vec<i64>,
    entries: BTreeMap<(u32, u32), Decomposition>,
}

impl BettiTable {
    pub fn entry(&self, p: u32, q: u32) -> Option<&Decomposition> {
        self.entries.get(&(p, q))
    }

    /// Entries in `(p, q)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32), &Decomposition)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    /// Rows `q`, columns `p`, `-` for zero entries and `K` for the trivial
    /// representation of the trivial group.
    pub fn render_text(&self) -> String {
        let mut grid: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::from("q\\p")];
        header.extend((0..=self.pmax).map(|p| format!("{p}")));
        grid.push(header);
        for q in 0..=self.qmax {
            let mut row = vec![format!("{q}")];
            for p in 0..=self.pmax {
                row.push(self.entries.get(&(p, q)).map(render_cell).unwrap_or_else(|| "-".into()));
            }
            grid.push(row);
        }
        let widths: Vec<usize> = (0..grid[0].len())
            .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &grid {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
                .collect();
            out.push_str(cells.join(" | ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// One table cell: constituents in decreasing order joined by ` + `.
pub fn render_cell(d: &Decomposition) -> String {
    if d.is_empty() {
        return "-".into();
    }
    let terms: Vec<(&NPartition, u64)> = d.terms().collect();
    terms
        .iter()
        .rev()
        .map(|(l, m)| {
            let body = if l.components().iter().all(Partition::is_empty) {
                String::from("K")
            } else {
                format!("{l}")
            };
            if *m > 1 {
                format!("{m} {body}")
            } else {
                body
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// [`BettiTable`] over the given source.
pub fn betti_table_with(source: &mut impl HomologySource, pmax: u32, qmax: u32, d: &[u32], b: &[i64]) -> Result<BettiTable> {
    let mut entries = BTreeMap::new();
    for p in 0..=pmax {
        for q in 0..=qmax {
            let qy = SyzygyQuery::new(p, q, d.to_vec(), b.to_vec())?;
            entries.insert((p, q), betti_entry_with(source, &qy)?);
        }
    }
    Ok(BettiTable {
        pmax,
        qmax,
        d: d.to_vec(),
        b: b.to_vec(),
        entries,
    })
}

/// [`betti_table_with`] computed directly.
pub fn betti_table(pmax: u32, qmax: u32, d: &[u32], b: &[i64]) -> Result<BettiTable> {
    betti_table_with(&mut DirectHomology::new(), pmax, qmax, d, b)
}

/// Which known bounds force `K_{p,q}^d(b) = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VanishingPredicates {
    /// `N_i ≥ p (d_i + 1) + d_i` for every `i`.
    pub athanasiadis: bool,
    /// `q = 2` and `p ≤ min(d_i + b_i)`.
    pub np_bound: bool,
}

pub fn vanishing_predicates(qy: &SyzygyQuery) -> VanishingPredicates {
    let p = i64::from(qy.p);
    let athanasiadis = qy
        .n_tuple()
        .iter()
        .zip(&qy.d)
        .all(|(&n, &d)| n >= p * (i64::from(d) + 1) + i64::from(d));
    let np_bound = qy.q == 2 && qy.d.iter().zip(&qy.b).all(|(&d, &b)| p <= i64::from(d) + b);
    VanishingPredicates { athanasiadis, np_bound }
}

/// `K_{p,0}(a)` for the Segre embedding of `n` factors and `B = O(a,0,…,0)`:
/// `⊕ S_{λ¹[p+a]} ⊗ S_{λ²} ⊗ … ⊗ S_{λⁿ}` with the multiplicities of
/// `Λ^p(V₁ ⊗ … ⊗ Vₙ)`; terms with `λ¹_1 > a` vanish. For `n = 1` the same
/// formula gives the `p`-th syzygies `(a, 1^p)` of the `a`-th power of the
/// maximal ideal.
pub fn linear_strand_segre(p: u32, a: u32, n: usize, tables: &CharacterTables) -> Result<Decomposition> {
    if n == 0 {
        return Err(Error::Precondition("at least one factor is required".into()));
    }
    let mut sizes = vec![p; n];
    sizes[0] = p + a;
    let mults = wedge_tensor_multiplicities(p, n, tables)?;
    let mut out = Decomposition::new(sizes.clone());
    for (lambda, m) in mults {
        if let Some(padded) = lambda.pad_coords(&[0], &sizes) {
            out.insert(padded, m)?;
        }
    }
    Ok(out)
}

/// `K_{p,0}^d(1)` on `PV`: `⊕ S_{λ̃}` over `λ ⊢ p(d-1)` with the
/// multiplicities of `Sym^p(Sym^{d-1} V)`, where `λ̃` adds a first column of
/// height `p + 1`.
pub fn linear_strand_veronese(p: u32, d: u32) -> Result<Decomposition> {
    if d == 0 {
        return Err(Error::Precondition("d must be positive".into()));
    }
    let mut out = Decomposition::new(vec![p * d + 1]);
    for (lambda, m) in sym_sym_multiplicities(p, d - 1)? {
        let tilde = add_column(&lambda, p as usize + 1)
            .ok_or_else(|| Error::Consistency(format!("{lambda} has more than {p} rows")))?;
        out.insert(NPartition::new(vec![tilde]), m)?;
    }
    Ok(out)
}

/// Partitions `λ ⊢ p(d-1)` where the multiplicity of `λ̃` in the Veronese
/// linear strand differs from that of `λ̄ = (1+λ_1, …, 1+λ_p)` in
/// `Λ^p(Sym^d V)`, with both multiplicities.
pub fn veronese_newell_mismatches(p: u32, d: u32) -> Result<Vec<(Partition, u64, u64)>> {
    let strand = linear_strand_veronese(p, d)?;
    let wedge = wedge_sym_multiplicities(p, d)?;
    let mut out = Vec::new();
    for lambda in Partition::all_with_rows(p * (d - 1), p as usize) {
        let tilde = add_column(&lambda, p as usize + 1).expect("at most p rows");
        let bar = add_column(&lambda, p as usize).expect("at most p rows");
        let a = strand.multiplicity(&NPartition::new(vec![tilde]));
        let b = wedge.get(&bar).copied().unwrap_or(0);
        if a != b {
            out.push((lambda, a, b));
        }
    }
    Ok(out)
}

/// Shapes `(a, 1^p)` for `p = 0..=pmax` of the minimal resolution of the
/// `a`-th power of the maximal ideal.
pub fn mpower_resolution(a: u32, pmax: u32) -> Vec<Partition> {
    (0..=pmax)
        .map(|p| {
            let mut parts = vec![a];
            parts.extend(core::iter::repeat_n(1, p as usize));
            Partition::new(parts).expect("a hook")
        })
        .collect()
}

/// Dimension of `K_{p,q}^d(b)` for `dim V_i = dims_i`, computed as the
/// homology of `Λ^{p+1}W ⊗ S_{(q-1)d+b} → Λ^p W ⊗ S_{qd+b} → Λ^{p-1}W ⊗ S_{(q+1)d+b}`
/// with `W = S_d` and `S_e` the multihomogeneous polynomials of multidegree `e`.
pub fn koszul_dimension_oracle(qy: &SyzygyQuery, dims: &[u32], max_entries: u64) -> Result<u64> {
    if dims.len() != qy.d.len() {
        return Err(Error::SizeMismatch {
            expected: format!("{} dimensions", qy.d.len()),
            found: format!("{}", dims.len()),
        });
    }
    let d: Vec<i64> = qy.d.iter().map(|&x| i64::from(x)).collect();
    let degree = |m: i64| -> Vec<i64> { d.iter().zip(&qy.b).map(|(&di, &bi)| m * di + bi).collect() };
    let w = multigraded_basis(dims, &d);
    let q = i64::from(qy.q);
    let middle_poly = multigraded_basis(dims, &degree(q));
    let middle_dim = binomial(w.len(), qy.p as usize) * middle_poly.len() as u64;
    if middle_dim == 0 {
        return Ok(0);
    }
    let rank_out = koszul_rank(&w, qy.p as usize, &middle_poly, &multigraded_basis(dims, &degree(q + 1)), max_entries)?;
    let rank_in = koszul_rank(&w, qy.p as usize + 1, &multigraded_basis(dims, &degree(q - 1)), &middle_poly, max_entries)?;
    Ok(middle_dim - rank_out as u64 - rank_in as u64)
}

/// Exponent vectors of the monomials of multidegree `deg`, blocks of sizes
/// `dims` concatenated. Empty when some degree is negative.
fn multigraded_basis(dims: &[u32], deg: &[i64]) -> Vec<Vec<u32>> {
    let mut lists = Vec::with_capacity(dims.len());
    for (&m, &e) in dims.iter().zip(deg) {
        let Ok(e) = u32::try_from(e) else {
            return Vec::new();
        };
        lists.push(monomials(m as usize, e));
    }
    crate::partitions::cartesian(&lists).into_iter().map(|blocks| blocks.concat()).collect()
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = (0..k as u32).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| (cur[i] as usize) < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Rank of `Λ^k W ⊗ S_source → Λ^{k-1} W ⊗ S_target`,
/// `w_1∧…∧w_k ⊗ f ↦ Σ (-1)^{j-1} w_1∧…ŵ_j…∧w_k ⊗ w_j f`.
fn koszul_rank(w: &[Vec<u32>], k: usize, source: &[Vec<u32>], target: &[Vec<u32>], max_entries: u64) -> Result<usize> {
    if k == 0 || source.is_empty() || target.is_empty() || k > w.len() {
        return Ok(0);
    }
    let rows = binomial(w.len(), k) * source.len() as u64;
    let needed = rows * k as u64;
    if needed > max_entries {
        return Err(Error::ResourceCap {
            what: "Koszul matrix entries",
            needed,
            cap: max_entries,
        });
    }
    let lower: BTreeMap<Vec<u32>, usize> = subsets(w.len(), k - 1).into_iter().enumerate().map(|(i, s)| (s, i)).collect();
    let poly: BTreeMap<&[u32], usize> = target.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let mut matrix = Vec::with_capacity(rows as usize);
    let mut face = Vec::with_capacity(k);
    let mut product = vec![0u32; source.first().map_or(0, Vec::len)];
    for s in subsets(w.len(), k) {
        for f in source {
            let mut row: Vec<(u32, i64)> = Vec::with_capacity(k);
            for j in 0..k {
                face.clear();
                face.extend(s.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, &x)| x));
                for (slot, (a, b)) in product.iter_mut().zip(f.iter().zip(&w[s[j] as usize])) {
                    *slot = a + b;
                }
                let col = lower[&face] * target.len() + poly[product.as_slice()];
                row.push((col as u32, if j % 2 == 0 { 1 } else { -1 }));
            }
            row.sort_unstable_by_key(|&(c, _)| c);
            matrix.push(row);
        }
    }
    Ok(Echelon::from_i64_rows(matrix, lower.len() * target.len()).rank())
}

/// Top Laplacian `∂ᵀ∂` on the chains of `C_{(p+a,p,…,p)}` with all `d_i = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub p: u32,
    pub a: u32,
    pub n: usize,
    /// Number of top simplices.
    pub dimension: usize,
    /// Eigenvalues with multiplicities; `None` if some eigenvalue is not an
    /// integer.
    pub spectrum: Option<BTreeMap<i64, usize>>,
    /// `C_{λ¹} - C_{μ¹} + p - C(a,2)` over `μ¹ ⊢ p` and `λ¹` a horizontal
    /// `a`-strip extension of `μ¹`.
    pub allowed: BTreeSet<i64>,
    /// Nullity of the top boundary map.
    pub cycle_dim: usize,
    /// Dimension of the closed-form `K_{p,0}(a)` as a symmetric-group
    /// representation.
    pub expected_kernel_dim: u128,
}

impl SpectrumReport {
    pub fn kernel_dim(&self) -> Option<usize> {
        self.spectrum.as_ref().map(|s| s.get(&0).copied().unwrap_or(0))
    }

    pub fn passed(&self) -> bool {
        let Some(spec) = &self.spectrum else {
            return false;
        };
        spec.keys().all(|e| *e >= 0 && self.allowed.contains(e))
            && self.kernel_dim() == Some(self.cycle_dim)
            && self.cycle_dim as u128 == self.expected_kernel_dim
    }
}

/// Eigenvalues predicted for the top Laplacian of `C_{(p+a,p,…,p)}`.
pub fn allowed_eigenvalues(p: u32, a: u32) -> BTreeSet<i64> {
    let shift = i64::from(p) - i64::from(a) * (i64::from(a) - 1) / 2;
    let mut out = BTreeSet::new();
    for mu in Partition::all(p) {
        for lambda in mu.pieri_row(a) {
            out.insert(lambda.content() - mu.content() + shift);
        }
    }
    out
}

pub fn top_laplacian_spectrum(p: u32, a: u32, n: usize, max_simplices: u64) -> Result<SpectrumReport> {
    let tables = CharacterTables::new(p + a)?;
    let expected_kernel_dim = linear_strand_segre(p, a, n, &tables)?.dimension();
    let mut sizes = vec![p; n];
    sizes[0] = p + a;
    let cx = PackingComplex::build_capped(&sizes, &vec![1; n], max_simplices)?;
    let k = p as i32 - 1;
    let bk = cx.boundary(k);
    let lap = laplacian(&bk, &cx.boundary(k + 1))?;
    let spectrum = symmetric_integer_spectrum(&lap).map(|roots| {
        let mut m = BTreeMap::new();
        for r in roots {
            *m.entry(r).or_insert(0) += 1;
        }
        m
    });
    let cycle_dim = Echelon::of(&bk).nullity();
    Ok(SpectrumReport {
        p,
        a,
        n,
        dimension: cx.count(k),
        spectrum,
        allowed: allowed_eigenvalues(p, a),
        cycle_dim,
        expected_kernel_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn np(s: &str) -> NPartition {
        s.parse().unwrap()
    }

    fn q(p: u32, q: u32, d: &[u32], b: &[i64]) -> SyzygyQuery {
        SyzygyQuery::new(p, q, d.to_vec(), b.to_vec()).unwrap()
    }

    #[test]
    fn entries_from_homology() {
        assert_eq!(betti_entry(&q(1, 1, &[1, 1], &[0, 0])).unwrap().to_string(), "[(1,1)x(1,1)]");
        assert_eq!(
            betti_entry(&q(2, 1, &[1, 1], &[0, 0])).unwrap().to_string(),
            "[(1,1,1)x(2,1)] + [(2,1)x(1,1,1)]"
        );
        assert_eq!(betti_entry(&q(0, 0, &[1, 1], &[0, 0])).unwrap().to_string(), "[()x()]");
        assert!(betti_entry(&q(1, 0, &[1, 1], &[0, 0])).unwrap().is_empty());
        assert!(betti_entry(&q(0, 0, &[1, 1], &[-1, 0])).unwrap().is_empty());
    }

    #[test]
    fn shift_identity() {
        for (p, qq) in [(1, 0), (1, 1), (2, 0)] {
            let a = betti_entry(&q(p, qq, &[1, 1], &[1, 1])).unwrap();
            let b = betti_entry(&q(p, qq + 1, &[1, 1], &[0, 0])).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn table_rendering() {
        let t = betti_table(2, 1, &[1, 1], &[0, 0]).unwrap();
        let text = t.render_text();
        assert!(text.contains("| K"));
        assert!(text.contains("(2,1)x(1,1,1) + (1,1,1)x(2,1)"));
        assert_eq!(render_cell(&Decomposition::new(vec![1])), "-");
    }

    #[test]
    fn predicates() {
        let v = vanishing_predicates(&q(1, 2, &[2, 2], &[0, 0]));
        assert!(v.np_bound);
        let v = vanishing_predicates(&q(3, 0, &[1, 1], &[12, 12]));
        assert!(v.athanasiadis);
        assert!(!vanishing_predicates(&q(3, 2, &[1, 1], &[0, 0])).np_bound);
    }

    #[test]
    fn segre_strand_examples() {
        let t = CharacterTables::new(6).unwrap();
        let s = linear_strand_segre(2, 2, 2, &t).unwrap();
        assert_eq!(s.to_string(), "[(2,1,1)x(2)] + [(2,2)x(1,1)]");
        assert!(linear_strand_segre(2, 0, 2, &t).unwrap().is_empty());
        assert_eq!(linear_strand_segre(0, 3, 3, &t).unwrap().to_string(), "[(3)x()x()]");
    }

    #[test]
    fn veronese_strand_examples() {
        assert_eq!(linear_strand_veronese(3, 2).unwrap().to_string(), "[(4,1,1,1)]");
        assert_eq!(linear_strand_veronese(2, 1).unwrap().to_string(), "[(1,1,1)]");
        assert_eq!(linear_strand_veronese(2, 3).unwrap().to_string(), "[(3,3,1)] + [(5,1,1)]");
        assert!(veronese_newell_mismatches(2, 3).unwrap().is_empty());
    }

    #[test]
    fn veronese_strand_matches_homology() {
        for (p, d) in [(1u32, 2u32), (2, 2), (1, 3)] {
            let h = betti_entry(&q(p, 0, &[d], &[1])).unwrap();
            assert_eq!(h, linear_strand_veronese(p, d).unwrap(), "p={p} d={d}");
        }
    }

    #[test]
    fn mpower_shapes() {
        let r = mpower_resolution(2, 2);
        assert_eq!(r.iter().map(|p| p.to_string()).collect::<Vec<_>>(), ["(2)", "(2,1)", "(2,1,1)"]);
        let t = CharacterTables::new(6).unwrap();
        for a in 1..=3 {
            for (p, shape) in mpower_resolution(a, 3).into_iter().enumerate() {
                let s = linear_strand_segre(p as u32, a, 1, &t).unwrap();
                assert_eq!(s.to_string(), alloc::format!("[{shape}]"));
            }
        }
    }

    #[test]
    fn koszul_minors() {
        let qy = q(1, 1, &[1, 1], &[0, 0]);
        assert_eq!(koszul_dimension_oracle(&qy, &[2, 2], DEFAULT_MAX_ORACLE_ENTRIES).unwrap(), 1);
        assert_eq!(koszul_dimension_oracle(&qy, &[3, 3], DEFAULT_MAX_ORACLE_ENTRIES).unwrap(), 9);
        assert_eq!(koszul_dimension_oracle(&q(0, 0, &[1, 1], &[0, 0]), &[2, 2], 10).unwrap(), 1);
        assert!(matches!(
            koszul_dimension_oracle(&q(2, 1, &[1, 1], &[0, 0]), &[3, 3], 10),
            Err(Error::ResourceCap { .. })
        ));
    }

    #[test]
    fn koszul_matches_weyl_dimension() {
        let qy = q(2, 1, &[1, 1], &[0, 0]);
        let dec = betti_entry(&qy).unwrap();
        let k = koszul_dimension_oracle(&qy, &[3, 3], DEFAULT_MAX_ORACLE_ENTRIES).unwrap();
        assert_eq!(u128::from(k), dec.weyl_dimension(&[3, 3]));
        assert_eq!(dec.multiplicity(&np("(2,1)x(1,1,1)")), 1);
    }

    #[test]
    fn spectrum_small() {
        let r = top_laplacian_spectrum(2, 1, 2, DEFAULT_MAX_SIMPLICES).unwrap();
        assert!(r.passed(), "{r:?}");
        let r = top_laplacian_spectrum(0, 2, 2, DEFAULT_MAX_SIMPLICES).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}

//! Packing complexes `C_N^d`, their oriented simplices, boundary matrices and
//! the signed simplicial action of `S_N = S_{N_1} × … × S_{N_n}`.
//!
//! Vertices are n-tuples of subsets `α_i ⊂ {1..N_i}` with `|α_i| = d_i`; a set
//! of vertices spans a simplex when the vertices are pairwise disjoint in every
//! coordinate. Orientation comes from the canonical vertex order
//! (lexicographic on the tuple of sorted subsets).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::SparseMat;
use crate::partitions::Partition;

/// Default cap on the total number of stored simplices.
pub const DEFAULT_MAX_SIMPLICES: u64 = 5_000_000;

/// A vertex: one `d_i`-subset per coordinate, stored as bitmasks over
/// zero-based elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    masks: Vec<u64>,
}

impl Vertex {
    /// Builds a vertex from one-based element lists.
    pub fn from_subsets(subsets: &[Vec<u32>]) -> Result<Self> {
        let mut masks = Vec::with_capacity(subsets.len());
        for s in subsets {
            let mut m = 0u64;
            for &e in s {
                if e == 0 || e > 64 || m & (1 << (e - 1)) != 0 {
                    return Err(Error::Precondition(format!("bad vertex subset {s:?}")));
                }
                m |= 1 << (e - 1);
            }
            masks.push(m);
        }
        Ok(Vertex { masks })
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    /// Sorted one-based elements of coordinate `i`.
    pub fn subset(&self, i: usize) -> Vec<u32> {
        mask_elements(self.masks[i]).map(|e| e + 1).collect()
    }

    pub fn arity(&self) -> usize {
        self.masks.len()
    }

    /// True when the two vertices can share a simplex.
    pub fn is_disjoint_from(&self, other: &Vertex) -> bool {
        self.masks.iter().zip(&other.masks).all(|(a, b)| a & b == 0)
    }

    fn canonical_cmp(&self, other: &Vertex) -> Ordering {
        for (a, b) in self.masks.iter().zip(&other.masks) {
            let o = mask_elements(*a).cmp(mask_elements(*b));
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Vertex {
    /// Canonical order: lexicographic on the tuple of sorted subsets.
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

impl fmt::Display for Vertex {
    /// `(a,b,…|c,d,…)` with one-based elements.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for i in 0..self.masks.len() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (k, e) in mask_elements(self.masks[i]).enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", e + 1)?;
            }
        }
        f.write_str(")")
    }
}

fn mask_elements(mut m: u64) -> impl Iterator<Item = u32> {
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let e = m.trailing_zeros();
            m &= m - 1;
            Some(e)
        }
    })
}

/// A permutation of `{0..n-1}`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u32).collect())
    }

    /// Validates that `images` is a bijection.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let x = x as usize;
            if x >= images.len() || seen[x] {
                return Err(Error::Precondition(format!("not a permutation: {images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    /// Canonical representative of a cycle type: cycles on consecutive points,
    /// longest cycles first, each cycle `a → a+1 → … → a`.
    pub fn from_cycle_type(rho: &Partition) -> Self {
        let mut images = Vec::with_capacity(rho.size() as usize);
        let mut start = 0u32;
        for &len in rho.parts() {
            for k in 0..len {
                images.push(start + (k + 1) % len);
            }
            start += len;
        }
        Permutation(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.0[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation(inv)
    }

    /// Cycle type of the permutation.
    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.0.len()];
        let mut parts = Vec::new();
        for s in 0..self.0.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted cycle lengths")
    }

    fn apply_mask(&self, m: u64) -> u64 {
        mask_elements(m).fold(0u64, |acc, e| acc | (1 << self.0[e as usize]))
    }
}

/// A signed permutation matrix: basis vector `j` maps to
/// `sign[j] * e_{target[j]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    pub target: Vec<u32>,
    pub sign: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            target: (0..n as u32).collect(),
            sign: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.target.len()
    }

    pub fn is_empty(&self) -> bool {
        self.target.is_empty()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let target = other.target.iter().map(|&t| self.target[t as usize]).collect();
        let sign = other
            .target
            .iter()
            .zip(&other.sign)
            .map(|(&t, &s)| s * self.sign[t as usize])
            .collect();
        SignedPermutation { target, sign }
    }

    /// Preimage data: for each basis index `i`, the `j` with `target[j] = i`
    /// together with the sign of that entry.
    pub fn inverse_entries(&self) -> Vec<(u32, i8)> {
        let mut inv = vec![(0u32, 0i8); self.target.len()];
        for (j, (&t, &s)) in self.target.iter().zip(&self.sign).enumerate() {
            inv[t as usize] = (j as u32, s);
        }
        inv
    }

    /// Trace of the matrix: signed count of fixed basis vectors.
    pub fn trace(&self) -> i64 {
        self.target
            .iter()
            .zip(&self.sign)
            .enumerate()
            .filter(|(j, (&t, _))| *j as u32 == t)
            .map(|(_, (_, &s))| i64::from(s))
            .sum()
    }

    /// Applies the matrix to a dense vector.
    pub fn apply(&self, v: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); v.len()];
        for (j, x) in v.iter().enumerate() {
            let t = self.target[j] as usize;
            out[t] = if self.sign[j] > 0 { x.clone() } else { -x.clone() };
        }
        out
    }

    /// The matrix as a sparse rational matrix.
    pub fn to_matrix(&self) -> SparseMat {
        let n = self.target.len();
        let triples = self
            .target
            .iter()
            .zip(&self.sign)
            .enumerate()
            .map(|(j, (&t, &s))| (t as usize, j, BigRational::from_integer(i64::from(s).into())))
            .collect();
        SparseMat::from_triples(n, n, triples).expect("signed permutation entries are in range")
    }
}

// All simplices of one size, flattened with stride `size`, in lex order of
// vertex ordinals.
#[derive(Clone, Debug)]
struct Level {
    size: usize,
    flat: Vec<u32>,
}

impl Level {
    fn count(&self) -> usize {
        self.flat.len().checked_div(self.size).unwrap_or(1)
    }

    fn get(&self, i: usize) -> &[u32] {
        &self.flat[i * self.size..(i + 1) * self.size]
    }

    fn index_of(&self, simplex: &[u32]) -> Option<usize> {
        if self.size == 0 {
            return simplex.is_empty().then_some(0);
        }
        let (mut lo, mut hi) = (0usize, self.count());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(simplex) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return Some(mid),
            }
        }
        None
    }
}

/// The packing complex `C_N^d`, including the empty simplex in dimension -1.
#[derive(Clone, Debug)]
pub struct PackingComplex {
    sizes: Vec<u32>,
    subset_sizes: Vec<u32>,
    vertices: Vec<Vertex>,
    // per coordinate, (mask, rank) sorted by mask
    ranks: Vec<Vec<(u64, u32)>>,
    // mixed-radix weights turning coordinate ranks into a vertex ordinal
    radix: Vec<u64>,
    levels: Vec<Level>,
}

impl PackingComplex {
    /// Builds the full complex with the default simplex cap.
    pub fn build(sizes: &[u32], subset_sizes: &[u32]) -> Result<Self> {
        Self::build_capped(sizes, subset_sizes, DEFAULT_MAX_SIMPLICES)
    }

    pub fn build_capped(sizes: &[u32], subset_sizes: &[u32], max_simplices: u64) -> Result<Self> {
        if sizes.len() != subset_sizes.len() || sizes.is_empty() {
            return Err(Error::SizeMismatch {
                expected: format!("{} subset sizes", sizes.len()),
                found: format!("{}", subset_sizes.len()),
            });
        }
        if subset_sizes.contains(&0) {
            return Err(Error::Precondition("subset sizes must be positive".into()));
        }
        if sizes.iter().any(|&n| n > 64) {
            return Err(Error::Precondition("ground sets are limited to 64 elements".into()));
        }

        let per_coord: Vec<Vec<u64>> = sizes
            .iter()
            .zip(subset_sizes)
            .map(|(&n, &d)| combinations_lex(n, d))
            .collect();
        let vertex_count = per_coord
            .iter()
            .try_fold(1u64, |acc, c| acc.checked_mul(c.len() as u64))
            .unwrap_or(u64::MAX);
        if vertex_count > max_simplices {
            return Err(Error::ResourceCap {
                what: "vertex set",
                needed: vertex_count,
                cap: max_simplices,
            });
        }

        let mut radix = vec![1u64; sizes.len()];
        for i in (0..sizes.len().saturating_sub(1)).rev() {
            radix[i] = radix[i + 1] * per_coord[i + 1].len() as u64;
        }
        let ranks = per_coord
            .iter()
            .map(|c| {
                let mut r: Vec<(u64, u32)> = c.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
                r.sort_unstable();
                r
            })
            .collect();

        let mut vertices = Vec::with_capacity(vertex_count as usize);
        if vertex_count > 0 {
            let mut idx = vec![0usize; sizes.len()];
            loop {
                vertices.push(Vertex {
                    masks: idx.iter().zip(&per_coord).map(|(&i, c)| c[i]).collect(),
                });
                let mut k = sizes.len();
                loop {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                    idx[k] += 1;
                    if idx[k] < per_coord[k].len() {
                        break;
                    }
                    idx[k] = 0;
                    if k == 0 {
                        k = usize::MAX;
                        break;
                    }
                }
                if k == usize::MAX {
                    break;
                }
            }
        }

        let top = sizes
            .iter()
            .zip(subset_sizes)
            .map(|(&n, &d)| (n / d) as usize)
            .min()
            .unwrap_or(0);
        let mut levels: Vec<Level> = (0..=top).map(|s| Level { size: s, flat: Vec::new() }).collect();
        let mut total = 1u64;
        let mut stack: Vec<u32> = Vec::with_capacity(top);
        let mut used = vec![0u64; sizes.len()];
        enumerate_simplices(&vertices, 0, &mut stack, &mut used, &mut levels, &mut total, max_simplices)?;
        while levels.len() > 1 && levels.last().map(Level::count) == Some(0) {
            levels.pop();
        }

        Ok(PackingComplex {
            sizes: sizes.to_vec(),
            subset_sizes: subset_sizes.to_vec(),
            vertices,
            ranks,
            radix,
            levels,
        })
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    pub fn subset_sizes(&self) -> &[u32] {
        &self.subset_sizes
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Largest `k` with a `k`-simplex; `-1` for the empty complex.
    pub fn top_dim(&self) -> i32 {
        self.levels.len() as i32 - 2
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Number of `k`-simplices; `count(-1) == 1` (the empty simplex).
    pub fn count(&self, k: i32) -> usize {
        self.level(k).map_or(0, Level::count)
    }

    /// Counts for `k = -1 ..= top_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.levels.iter().map(Level::count).collect()
    }

    pub fn total_simplices(&self) -> usize {
        self.levels.iter().map(Level::count).sum()
    }

    /// Vertex ordinals of the `i`-th `k`-simplex, increasing.
    pub fn simplex(&self, k: i32, i: usize) -> &[u32] {
        self.level(k).expect("dimension in range").get(i)
    }

    /// Ordinal of a `k`-simplex given by increasing vertex ordinals.
    pub fn simplex_index(&self, simplex: &[u32]) -> Option<usize> {
        self.level(simplex.len() as i32 - 1)?.index_of(simplex)
    }

    /// Ordinal of a vertex in the canonical order.
    pub fn vertex_index(&self, v: &Vertex) -> Option<usize> {
        if v.masks.len() != self.sizes.len() {
            return None;
        }
        let mut idx = 0u64;
        for (i, &m) in v.masks.iter().enumerate() {
            let r = self.ranks[i].binary_search_by_key(&m, |&(mask, _)| mask).ok()?;
            idx += self.ranks[i][r].1 as u64 * self.radix[i];
        }
        Some(idx as usize)
    }

    fn level(&self, k: i32) -> Option<&Level> {
        if k < -1 {
            return None;
        }
        self.levels.get((k + 1) as usize)
    }

    /// `∂_k` from `k`-chains to `(k-1)`-chains; `∂_0` is the augmentation.
    /// Outside `0 ..= top_dim + 1` the matrix has a zero side.
    pub fn boundary(&self, k: i32) -> SparseMat {
        let rows = self.boundary_rows(k);
        let triples = rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |&(c, v)| (r, c as usize, BigRational::from_integer(v.into()))))
            .collect();
        SparseMat::from_triples(self.count(k - 1), self.count(k), triples).expect("boundary entries are distinct")
    }

    /// Rows of `∂_k` as sorted `(column, ±1)` lists.
    pub fn boundary_rows(&self, k: i32) -> Vec<Vec<(u32, i64)>> {
        let mut rows: Vec<Vec<(u32, i64)>> = vec![Vec::new(); self.count(k - 1)];
        let cols = self.count(k);
        if k >= 0 && cols > 0 {
            let lower = self.level(k - 1).expect("faces live one level down");
            let mut face = Vec::with_capacity(k as usize);
            for c in 0..cols {
                let s = self.simplex(k, c);
                for skip in 0..s.len() {
                    face.clear();
                    face.extend(s.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &v)| v));
                    let r = lower.index_of(&face).expect("faces are stored");
                    rows[r].push((c as u32, if skip % 2 == 0 { 1 } else { -1 }));
                }
            }
        }
        rows
    }

    /// Vertex images under a group element given as one permutation per
    /// coordinate.
    pub fn vertex_action(&self, g: &[Permutation]) -> Result<Vec<u32>> {
        if g.len() != self.sizes.len() || g.iter().zip(&self.sizes).any(|(p, &n)| p.len() != n as usize) {
            return Err(Error::SizeMismatch {
                expected: format!("permutations of {:?}", self.sizes),
                found: format!("{:?}", g.iter().map(Permutation::len).collect::<Vec<_>>()),
            });
        }
        Ok(self
            .vertices
            .iter()
            .map(|v| {
                let image = Vertex {
                    masks: v.masks.iter().zip(g).map(|(&m, p)| p.apply_mask(m)).collect(),
                };
                self.vertex_index(&image).expect("images of vertices are vertices") as u32
            })
            .collect())
    }

    /// The signed permutation by which `g` acts on oriented `k`-simplices:
    /// `σ ↦ sign(sort) · (g·σ)`.
    pub fn act(&self, g: &[Permutation], k: i32) -> Result<SignedPermutation> {
        let vmap = self.vertex_action(g)?;
        Ok(self.act_with_vertex_map(&vmap, k))
    }

    /// As [`act`](Self::act) with precomputed vertex images.
    pub fn act_with_vertex_map(&self, vmap: &[u32], k: i32) -> SignedPermutation {
        let n = self.count(k);
        if k < 0 || n == 0 {
            return SignedPermutation::identity(n);
        }
        let mut target = Vec::with_capacity(n);
        let mut sign = Vec::with_capacity(n);
        let mut buf: Vec<u32> = Vec::with_capacity(k as usize + 1);
        let level = self.level(k).expect("dimension in range");
        for i in 0..n {
            buf.clear();
            buf.extend(level.get(i).iter().map(|&v| vmap[v as usize]));
            let parity = sort_parity(&mut buf);
            target.push(level.index_of(&buf).expect("images of simplices are simplices") as u32);
            sign.push(if parity { -1 } else { 1 });
        }
        SignedPermutation { target, sign }
    }

    /// Face list: one simplex per line, vertices rendered as `(a,b|c,d)`.
    pub fn face_list(&self) -> String {
        let mut out = String::new();
        for k in 0..=self.top_dim() {
            for i in 0..self.count(k) {
                let line: Vec<String> = self
                    .simplex(k, i)
                    .iter()
                    .map(|&v| format!("{}", self.vertices[v as usize]))
                    .collect();
                out.push_str(&line.join(" "));
                out.push('\n');
            }
        }
        out
    }
}

/// Canonical representative of a product cycle type, one permutation per
/// coordinate.
pub fn class_representative(cycle_type: &[Partition]) -> Vec<Permutation> {
    cycle_type.iter().map(Permutation::from_cycle_type).collect()
}

// Insertion sort returning true for an odd number of transpositions.
fn sort_parity(buf: &mut [u32]) -> bool {
    let mut odd = false;
    for i in 1..buf.len() {
        let mut j = i;
        while j > 0 && buf[j - 1] > buf[j] {
            buf.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    odd
}

// d-subsets of {0..n-1} as masks, in lexicographic order of sorted elements.
fn combinations_lex(n: u32, d: u32) -> Vec<u64> {
    let mut out = Vec::new();
    if d > n {
        return out;
    }
    let mut c: Vec<u32> = (0..d).collect();
    loop {
        out.push(c.iter().fold(0u64, |m, &e| m | (1 << e)));
        let mut i = d as usize;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if c[i] < n - d + i as u32 {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        c[i] += 1;
        for j in i + 1..d as usize {
            c[j] = c[j - 1] + 1;
        }
        if d == 0 {
            return out;
        }
    }
}

fn enumerate_simplices(
    vertices: &[Vertex],
    start: usize,
    stack: &mut Vec<u32>,
    used: &mut [u64],
    levels: &mut [Level],
    total: &mut u64,
    cap: u64,
) -> Result<()> {
    for v in start..vertices.len() {
        let masks = &vertices[v].masks;
        if masks.iter().zip(used.iter()).any(|(m, u)| m & u != 0) {
            continue;
        }
        *total += 1;
        if *total > cap {
            return Err(Error::ResourceCap {
                what: "simplex count",
                needed: *total,
                cap,
            });
        }
        stack.push(v as u32);
        for (u, m) in used.iter_mut().zip(masks) {
            *u |= m;
        }
        levels[stack.len()].flat.extend_from_slice(stack);
        if stack.len() + 1 < levels.len() {
            enumerate_simplices(vertices, v + 1, stack, used, levels, total, cap)?;
        }
        for (u, m) in used.iter_mut().zip(masks) {
            *u &= !m;
        }
        stack.pop();
    }
    Ok(())
}

/// True for the all-ones row of the augmentation map.
pub fn is_augmentation(m: &SparseMat) -> bool {
    m.rows() == 1 && m.nnz() == m.cols() && m.triples().all(|(_, _, v)| v.is_one())
}

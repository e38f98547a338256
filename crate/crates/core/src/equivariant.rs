//! Equivariant reduced homology of packing complexes: the character of
//! `S_N` on each `H̃_k(C_N^d; Q)` and its decomposition into irreducibles.
//!
//! Traces are taken on one canonical representative per class. On cycles the
//! trace comes from the free-column basis of the reduced echelon form of
//! `∂_k`; on boundaries it is `tr(C_{k+1}) − tr(Z_{k+1})`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::characters::{CharacterTables, ClassFunction, CycleType};
use crate::complex::{PackingComplex, DEFAULT_MAX_SIMPLICES};
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::partitions::{cartesian, NPartition, Partition};

/// A packing complex together with the echelon forms of its boundary maps,
/// computed on demand per degree.
#[derive(Clone, Debug)]
pub struct EquivariantComplex {
    cx: PackingComplex,
    echelons: BTreeMap<i32, Echelon>,
}

/// Traces of one group element on chains, cycles and homology in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTraces {
    pub chains: i64,
    pub cycles: BigRational,
    pub boundaries: BigRational,
    pub homology: BigRational,
}

impl EquivariantComplex {
    pub fn new(cx: PackingComplex) -> Self {
        EquivariantComplex {
            cx,
            echelons: BTreeMap::new(),
        }
    }

    pub fn build(sizes: &[u32], subset_sizes: &[u32]) -> Result<Self> {
        Self::build_capped(sizes, subset_sizes, DEFAULT_MAX_SIMPLICES)
    }

    pub fn build_capped(sizes: &[u32], subset_sizes: &[u32], max_simplices: u64) -> Result<Self> {
        Ok(Self::new(PackingComplex::build_capped(sizes, subset_sizes, max_simplices)?))
    }

    pub fn complex(&self) -> &PackingComplex {
        &self.cx
    }

    pub fn sizes(&self) -> &[u32] {
        self.cx.sizes()
    }

    /// Computes the echelon form of `∂_k` if it is not cached yet.
    pub fn prepare(&mut self, k: i32) {
        if k < -1 || self.echelons.contains_key(&k) {
            return;
        }
        let rows = self.cx.boundary_rows(k);
        let e = Echelon::from_i64_rows(rows, self.cx.count(k));
        self.echelons.insert(k, e);
    }

    /// Prepares everything needed for `H̃_k`.
    pub fn prepare_homology(&mut self, k: i32) {
        self.prepare(k);
        self.prepare(k + 1);
    }

    /// Prepares every degree from `-1` to one past the top.
    pub fn prepare_all(&mut self) {
        for k in -1..=self.cx.top_dim() + 2 {
            self.prepare(k);
        }
    }

    pub fn is_prepared(&self, k: i32) -> bool {
        self.echelons.contains_key(&k)
    }

    /// Echelon form of `∂_k`, if prepared.
    pub fn echelon(&self, k: i32) -> Option<&Echelon> {
        self.echelons.get(&k)
    }

    fn prepared(&self, k: i32) -> Result<&Echelon> {
        self.echelons
            .get(&k)
            .ok_or_else(|| Error::Precondition(format!("boundary in degree {k} has not been reduced")))
    }

    pub fn rank_boundary(&mut self, k: i32) -> usize {
        self.prepare(k);
        self.echelons[&k].rank()
    }

    /// `dim Z_k`.
    pub fn cycle_dim(&mut self, k: i32) -> usize {
        self.cx.count(k) - self.rank_boundary(k)
    }

    /// `dim H̃_k`.
    pub fn homology_dim(&mut self, k: i32) -> usize {
        self.cycle_dim(k) - self.rank_boundary(k + 1)
    }

    /// `dim H̃_k` for `k = -1 ..= top_dim`.
    pub fn homology_dims(&mut self) -> Vec<usize> {
        (-1..=self.cx.top_dim()).map(|k| self.homology_dim(k)).collect()
    }

    /// Traces of the canonical representative of `ct` in degree `k`.
    /// Degrees `k` and `k + 1` must be prepared.
    pub fn traces(&self, ct: &CycleType, k: i32) -> Result<DegreeTraces> {
        let vmap = self.cx.vertex_action(&ct.representative())?;
        self.traces_with_vertex_map(&vmap, k)
    }

    pub fn traces_with_vertex_map(&self, vmap: &[u32], k: i32) -> Result<DegreeTraces> {
        let ek = self.prepared(k)?;
        let ek1 = self.prepared(k + 1)?;
        let gk = self.cx.act_with_vertex_map(vmap, k);
        let gk1 = self.cx.act_with_vertex_map(vmap, k + 1);
        let chains = gk.trace();
        let cycles = ek.kernel_trace(&gk);
        let boundaries = BigRational::from_integer(gk1.trace().into()) - ek1.kernel_trace(&gk1);
        let homology = &cycles - &boundaries;
        Ok(DegreeTraces {
            chains,
            cycles,
            boundaries,
            homology,
        })
    }

    /// Trace of the canonical representative of `ct` on `H̃_k`.
    pub fn homology_trace(&self, ct: &CycleType, k: i32) -> Result<BigRational> {
        Ok(self.traces(ct, k)?.homology)
    }

    /// Character of `S_N` on `H̃_k`.
    pub fn homology_character(&mut self, k: i32) -> Result<ClassFunction> {
        if k < -1 {
            return Ok(ClassFunction::zero(self.cx.sizes()));
        }
        self.prepare_homology(k);
        let sizes = self.cx.sizes().to_vec();
        let this = &*self;
        ClassFunction::try_from_fn(&sizes, |ct| this.homology_trace(ct, k))
    }

    pub fn homology_decomposition(&mut self, k: i32, tables: &CharacterTables) -> Result<Decomposition> {
        let chi = self.homology_character(k)?;
        tables.decompose(&chi)
    }

    /// Characters of every `H̃_k`, `k = -1 ..= top_dim`.
    pub fn all_homology_characters(&mut self) -> Result<Vec<ClassFunction>> {
        self.prepare_all();
        let sizes = self.cx.sizes().to_vec();
        let top = self.cx.top_dim();
        let mut out: Vec<ClassFunction> = (-1..=top).map(|_| ClassFunction::zero(&sizes)).collect();
        for ct in CycleType::all(&sizes) {
            let vmap = self.cx.vertex_action(&ct.representative())?;
            for k in -1..=top {
                let t = self.traces_with_vertex_map(&vmap, k)?;
                out[(k + 1) as usize].set(&ct, t.homology)?;
            }
        }
        Ok(out)
    }

    /// Checks `Σ_k (−1)^k tr(g|C_k) = Σ_k (−1)^k tr(g|H̃_k)` at every class.
    pub fn hopf_trace_check(&mut self) -> Result<HopfReport> {
        self.prepare_all();
        let sizes = self.cx.sizes().to_vec();
        let top = self.cx.top_dim();
        let mut report = HopfReport {
            sizes: sizes.clone(),
            classes_checked: 0,
            failures: Vec::new(),
        };
        for ct in CycleType::all(&sizes) {
            let vmap = self.cx.vertex_action(&ct.representative())?;
            let mut chain_sum = BigRational::zero();
            let mut homology_sum = BigRational::zero();
            for k in -1..=top {
                let t = self.traces_with_vertex_map(&vmap, k)?;
                let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
                chain_sum += BigRational::from_integer((sign * t.chains).into());
                if sign > 0 {
                    homology_sum += t.homology;
                } else {
                    homology_sum -= t.homology;
                }
            }
            report.classes_checked += 1;
            if chain_sum != homology_sum {
                report.failures.push(HopfFailure {
                    class: ct,
                    chain_sum,
                    homology_sum,
                });
            }
        }
        Ok(report)
    }
}

/// A class at which the Hopf trace identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfFailure {
    pub class: CycleType,
    pub chain_sum: BigRational,
    pub homology_sum: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfReport {
    pub sizes: Vec<u32>,
    pub classes_checked: usize,
    pub failures: Vec<HopfFailure>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Character of `S_N` on `H̃_k(C_N^d; Q)`.
pub fn homology_character(sizes: &[u32], subset_sizes: &[u32], k: i32) -> Result<ClassFunction> {
    EquivariantComplex::build(sizes, subset_sizes)?.homology_character(k)
}

/// `H̃_k(C_N^d; Q)` as a sum of irreducibles; empty means zero homology.
pub fn homology_decomposition(sizes: &[u32], subset_sizes: &[u32], k: i32) -> Result<Decomposition> {
    let tables = CharacterTables::for_sizes(sizes)?;
    EquivariantComplex::build(sizes, subset_sizes)?.homology_decomposition(k, &tables)
}

/// Unreduced `H_0` when the complex has no edges in some direction: the sum
/// of all `[λ¹]⊗…⊗[λⁿ]` with two-row `λ^i` and `λ^i_1 ≥ max(d_i, N_i − d_i)`.
pub fn zero_dim_h0(sizes: &[u32], subset_sizes: &[u32]) -> Result<Decomposition> {
    if sizes.len() != subset_sizes.len() {
        return Err(Error::SizeMismatch {
            expected: format!("{} subset sizes", sizes.len()),
            found: format!("{}", subset_sizes.len()),
        });
    }
    if sizes.iter().zip(subset_sizes).any(|(&n, &d)| n < d) {
        return Err(Error::Precondition("every N_i must be at least d_i".into()));
    }
    if !sizes.iter().zip(subset_sizes).any(|(&n, &d)| n < 2 * d) {
        return Err(Error::Precondition("some N_j must be below 2 d_j".into()));
    }
    let lists: Vec<Vec<Partition>> = sizes
        .iter()
        .zip(subset_sizes)
        .map(|(&n, &d)| {
            (0..=d.min(n - d))
                .map(|j| Partition::new(alloc::vec![n - j, j]).expect("two rows"))
                .collect()
        })
        .collect();
    Decomposition::from_terms(
        sizes.to_vec(),
        cartesian(&lists).into_iter().map(|c| (NPartition::new(c), 1)),
    )
}

/// Hopf trace identity on `C_N^d` at every class.
pub fn hopf_trace_check(sizes: &[u32], subset_sizes: &[u32]) -> Result<HopfReport> {
    EquivariantComplex::build(sizes, subset_sizes)?.hopf_trace_check()
}

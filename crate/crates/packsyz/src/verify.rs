//! Verification suites: reference values, closed forms against homology,
//! vanishing and stability ranges, and structural invariants.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use packsyz_core::characters::{CharacterTables, CycleType};
use packsyz_core::equivariant::{zero_dim_h0, EquivariantComplex};
use packsyz_core::linalg::{laplacian, Echelon};
use packsyz_core::plethysm::add_column;
use packsyz_core::stability::{les_consistency, stable_range_scan, syzygy_stability_check, Axis};
use packsyz_core::syzygy::{
    betti_entry_with, betti_table_with, koszul_dimension_oracle, linear_strand_segre, linear_strand_veronese,
    mpower_resolution, render_cell, top_laplacian_spectrum, vanishing_predicates, veronese_newell_mismatches,
    SyzygyQuery,
};
use packsyz_core::{Decomposition, NPartition, PackingComplex, Partition};
use rayon::prelude::*;
use serde::Serialize;

use crate::cache::{Engine, Key};
use crate::config::Config;
use crate::error::CliResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    BettiTable,
    Examples,
    LinearStrand,
    Koszul,
    Vanishing,
    Stability,
    Les,
    Invariants,
    Spectra,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::BettiTable,
        Suite::Examples,
        Suite::LinearStrand,
        Suite::Koszul,
        Suite::Vanishing,
        Suite::Stability,
        Suite::Les,
        Suite::Invariants,
        Suite::Spectra,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::BettiTable => "betti-table",
            Suite::Examples => "examples",
            Suite::LinearStrand => "linear-strand",
            Suite::Koszul => "koszul",
            Suite::Vanishing => "vanishing",
            Suite::Stability => "stability",
            Suite::Les => "les",
            Suite::Invariants => "invariants",
            Suite::Spectra => "spectra",
            Suite::All => "all",
        }
    }
}

/// One named assertion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    fn eq<T: PartialEq + fmt::Display>(name: impl Into<String>, got: T, want: T) -> Self {
        let passed = got == want;
        let detail = if passed { format!("{got}") } else { format!("got {got}, expected {want}") };
        Check::new(name, passed, detail)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Runs one suite, or every suite for [`Suite::All`].
pub fn run(suite: Suite, engine: &mut Engine, cfg: &Config) -> CliResult<Vec<SuiteReport>> {
    if suite == Suite::All {
        return Suite::EACH.iter().map(|&s| run_one(s, engine, cfg)).collect();
    }
    Ok(vec![run_one(suite, engine, cfg)?])
}

fn run_one(suite: Suite, engine: &mut Engine, cfg: &Config) -> CliResult<SuiteReport> {
    let checks = match suite {
        Suite::BettiTable => betti_table_suite(engine)?,
        Suite::Examples => examples(engine)?,
        Suite::LinearStrand => {
            let mut c = segre_strand(engine)?;
            c.extend(veronese_strand(engine)?);
            c
        }
        Suite::Koszul => koszul(engine, cfg)?,
        Suite::Vanishing => vanishing(engine)?,
        Suite::Stability => stability(engine)?,
        Suite::Les => les(engine)?,
        Suite::Invariants => invariants(engine)?,
        Suite::Spectra => spectra(engine)?,
        Suite::All => unreachable!("expanded by run"),
    };
    Ok(SuiteReport { suite, checks })
}

fn np(s: &str) -> NPartition {
    s.parse().expect("well-formed n-partition")
}

fn dec(sizes: &[u32], terms: &[&str]) -> Decomposition {
    Decomposition::from_terms(sizes.to_vec(), terms.iter().map(|t| (np(t), 1))).expect("matching sizes")
}

fn pool(engine: &Engine) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(engine.threads())
        .build()
        .expect("thread pool")
}

fn syzygy_key(q: &SyzygyQuery) -> Option<Key> {
    q.sizes().map(|n| (n, q.d.clone(), q.homology_degree()))
}

/// Displayed entries of the two-factor Segre table, `p ≤ 4`, `q ≤ 2`.
pub const BETTI_TABLE: [(u32, u32, &[&str]); 15] = [
    (0, 0, &["()x()"]),
    (1, 0, &[]),
    (2, 0, &[]),
    (3, 0, &[]),
    (4, 0, &[]),
    (0, 1, &[]),
    (1, 1, &["(1,1)x(1,1)"]),
    (2, 1, &["(2,1)x(1,1,1)", "(1,1,1)x(2,1)"]),
    (3, 1, &["(3,1)x(1,1,1,1)", "(2,1,1)x(2,1,1)", "(1,1,1,1)x(3,1)"]),
    (
        4,
        1,
        &["(4,1)x(1,1,1,1,1)", "(3,1,1)x(2,1,1,1)", "(2,1,1,1)x(3,1,1)", "(1,1,1,1,1)x(4,1)"],
    ),
    (0, 2, &[]),
    (1, 2, &[]),
    (2, 2, &[]),
    (3, 2, &[]),
    (4, 2, &["(2,2,2)x(2,2,2)"]),
];

/// The equivariant Betti table of `O(1,1)` against its displayed entries.
pub fn betti_table_suite(engine: &mut Engine) -> CliResult<Vec<Check>> {
    let keys: Vec<Key> = BETTI_TABLE
        .iter()
        .filter_map(|&(p, q, _)| SyzygyQuery::new(p, q, vec![1, 1], vec![0, 0]).ok().and_then(|qy| syzygy_key(&qy)))
        .collect();
    engine.prefetch(keys)?;
    let table = betti_table_with(engine, 4, 2, &[1, 1], &[0, 0])?;
    let mut out = Vec::new();
    for &(p, q, terms) in &BETTI_TABLE {
        let got = table.entry(p, q).cloned().unwrap_or_default();
        let want = dec(got.sizes(), terms);
        out.push(Check::eq(format!("K_{{{p},{q}}}"), render_cell(&got), render_cell(&want)));
    }
    Ok(out)
}

/// Worked examples with explicitly stated answers.
pub fn examples(engine: &mut Engine) -> CliResult<Vec<Check>> {
    let mut out = Vec::new();
    let mut h = |n: &[u32], d: &[u32], k: i32| -> CliResult<Decomposition> {
        Ok(packsyz_core::syzygy::HomologySource::decomposition(engine, n, d, k)?)
    };

    out.push(Check::eq("H0(C_(2,2)) = sign x sign", h(&[2, 2], &[1, 1], 0)?, dec(&[2, 2], &["(1,1)x(1,1)"])));
    let c22 = PackingComplex::build(&[2, 2], &[1, 1])?;
    out.push(Check::eq("C_(2,2) has 4 vertices and 2 edges", format!("{:?}", c22.f_vector()), "[1, 4, 2]".into()));

    out.push(Check::eq("H1(C_(3,2))", h(&[3, 2], &[1, 1], 1)?, dec(&[3, 2], &["(1,1,1)x(2)"])));
    for k in [-1, 0] {
        out.push(Check::eq(format!("H{k}(C_(3,2)) = 0"), h(&[3, 2], &[1, 1], k)?.len(), 0));
    }
    out.push(Check::eq(
        "H1(C_(3,3))",
        h(&[3, 3], &[1, 1], 1)?,
        dec(&[3, 3], &["(1,1,1)x(2,1)", "(2,1)x(1,1,1)"]),
    ));
    out.push(Check::eq("H0(C_(3,3)) = 0", h(&[3, 3], &[1, 1], 0)?.len(), 0));

    let tables = CharacterTables::for_sizes(&[3, 3])?;
    let h22 = EquivariantComplex::build(&[2, 2], &[1, 1])?.homology_character(0)?;
    let ind = tables.induce(&h22, &[3, 2], &np("(1)x()"))?;
    out.push(Check::eq(
        "Ind H0(C_(2,2)) to S3 x S2",
        tables.decompose(&ind)?,
        dec(&[3, 2], &["(2,1)x(1,1)", "(1,1,1)x(1,1)"]),
    ));
    let h33 = EquivariantComplex::build(&[3, 3], &[1, 1])?.homology_character(1)?;
    out.push(Check::eq(
        "Res H1(C_(3,3)) to S3 x S2",
        tables.decompose(&tables.restrict(&h33, &[3, 2])?)?,
        dec(&[3, 2], &["(1,1,1)x(2)", "(2,1)x(1,1)", "(1,1,1)x(1,1)"]),
    ));

    let lambda = np("(3,1)x(2,2,1)");
    out.push(Check::eq(
        "pad ((3,1),(2,2,1)) to (8,7)",
        lambda.pad(&[8, 7]).map(|l| l.to_string()).unwrap_or_default(),
        "(4,3,1)x(2,2,2,1)".into(),
    ));
    out.push(Check::new("pad ((3,1),(2,2,1)) to (8,6) undefined", lambda.pad(&[8, 6]).is_none(), ""));
    let delta: Partition = "(6,3,3,1)".parse()?;
    out.push(Check::eq("content (6,3,3,1)", delta.content(), 9));

    for (n, d) in [([3u32, 1u32], [1u32, 1u32]), ([4, 3], [2, 2]), ([5, 3], [2, 2]), ([3, 5], [1, 3])] {
        let mut unreduced = h(&n, &d, 0)?;
        let trivial = NPartition::new(n.iter().map(|&x| Partition::row(x)).collect());
        unreduced.insert(trivial, 1)?;
        out.push(Check::eq(format!("H0(C_{n:?}^{d:?}) two-row formula"), unreduced, zero_dim_h0(&n, &d)?));
    }

    out.push(Check::eq(
        "empty C_(1,1)^(2,1): H-1 trivial",
        h(&[1, 1], &[2, 1], -1)?,
        dec(&[1, 1], &["(1)x(1)"]),
    ));
    Ok(out)
}

/// `K_{p,0}^{1,…,1}(a,0,…,0)` from plethysm against homology, `n ∈ {2,3}`,
/// `p, a ≤ 3`.
pub fn segre_strand(engine: &mut Engine) -> CliResult<Vec<Check>> {
    let mut queries = Vec::new();
    for n in [2usize, 3] {
        for p in 0..=3u32 {
            for a in 0..=3u32 {
                let mut b = vec![0i64; n];
                b[0] = i64::from(a);
                queries.push((n, p, a, SyzygyQuery::new(p, 0, vec![1; n], b)?));
            }
        }
    }
    engine.prefetch(queries.iter().filter_map(|(.., qy)| syzygy_key(qy)))?;
    let tables = CharacterTables::new(6)?;
    let mut out = Vec::new();
    for (n, p, a, qy) in &queries {
        let closed = linear_strand_segre(*p, *a, *n, &tables)?;
        let direct = betti_entry_with(engine, qy)?;
        out.push(Check::eq(format!("segre n={n} p={p} a={a}"), render_cell(&direct), render_cell(&closed)));
    }
    Ok(out)
}

/// Veronese linear strand: the cross-identity with `Λ^p(Sym^d)`, homology
/// on small cases and the `n = 1` resolution of `𝔪^a`.
pub fn veronese_strand(engine: &mut Engine) -> CliResult<Vec<Check>> {
    let mut out = newell()?;
    for (p, d) in [(1u32, 2u32), (2, 2), (3, 2), (1, 3), (2, 3), (1, 4)] {
        let qy = SyzygyQuery::new(p, 0, vec![d], vec![1])?;
        out.push(Check::eq(
            format!("veronese p={p} d={d} against homology"),
            render_cell(&betti_entry_with(engine, &qy)?),
            render_cell(&linear_strand_veronese(p, d)?),
        ));
    }
    let tables = CharacterTables::new(8)?;
    for a in 1..=4u32 {
        let pmax = 4;
        let mut from_strand = Vec::new();
        for p in 0..=pmax {
            let s = linear_strand_segre(p, a, 1, &tables)?;
            from_strand.extend(s.terms().map(|(l, _)| l.components()[0].to_string()));
        }
        let closed: Vec<String> = mpower_resolution(a, pmax).iter().map(|l| l.to_string()).collect();
        out.push(Check::eq(format!("resolution of m^{a}"), from_strand.join(" "), closed.join(" ")));
    }
    Ok(out)
}

/// Newell's cross-identity for `p ≤ 3`, `d ≤ 4`.
pub fn newell() -> CliResult<Vec<Check>> {
    let mut out = Vec::new();
    for p in 0..=3u32 {
        for d in 1..=4u32 {
            let mism = veronese_newell_mismatches(p, d)?;
            let strand = linear_strand_veronese(p, d)?;
            let detail = if mism.is_empty() {
                format!("{} constituents", strand.len())
            } else {
                mism.iter()
                    .map(|(l, a, b)| {
                        let shape = add_column(l, p as usize + 1).map(|s| s.to_string()).unwrap_or_default();
                        format!("{shape} strand {a} vs wedge {b}")
                    })
                    .collect::<Vec<_>>()
                    .join("; ")
            };
            out.push(Check::new(format!("newell p={p} d={d}"), mism.is_empty(), detail));
        }
    }
    Ok(out)
}

/// Dimensions of Koszul homology against `Σ m_λ Π dim S_{λ^i}`.
pub fn koszul(engine: &mut Engine, cfg: &Config) -> CliResult<Vec<Check>> {
    let mut queries = Vec::new();
    for b in [[0i64, 0], [1, 0], [1, 1]] {
        for p in 0..=3u32 {
            for q in 0..=2u32 {
                queries.push(SyzygyQuery::new(p, q, vec![1, 1], b.to_vec())?);
            }
        }
    }
    engine.prefetch(queries.iter().filter_map(syzygy_key))?;
    let mut out = Vec::new();
    let cap = cfg.max_oracle_entries;
    let decs: Vec<Decomposition> = queries.iter().map(|q| betti_entry_with(engine, q)).collect::<Result<_, _>>()?;
    let dims = [[2u32, 2], [3, 3]];
    let oracle: Vec<Vec<packsyz_core::Result<u64>>> = pool(engine).install(|| {
        queries
            .par_iter()
            .map(|q| dims.iter().map(|d| koszul_dimension_oracle(q, d, cap)).collect())
            .collect()
    });
    for ((qy, dec), ks) in queries.iter().zip(&decs).zip(oracle) {
        for (d, k) in dims.iter().zip(ks) {
            let k = k?;
            out.push(Check::eq(format!("dim {qy} at {d:?}"), u128::from(k), dec.weyl_dimension(d)));
        }
    }
    let k11 = SyzygyQuery::new(1, 1, vec![1, 1], vec![0, 0])?;
    out.push(Check::eq("2x2 minors of a 2x2 matrix", koszul_dimension_oracle(&k11, &[2, 2], cap)?, 1));
    out.push(Check::eq("2x2 minors of a 3x3 matrix", koszul_dimension_oracle(&k11, &[3, 3], cap)?, 9));
    Ok(out)
}

/// `H̃_{p-1}(C_N^d) = 0` whenever `N_i ≥ p(d_i+1)+d_i`, exhaustively on
/// `N ≤ (7,7)`, and `K_{p,2}^d(b) = 0` whenever `p ≤ min(d_i + b_i)`.
pub fn vanishing(engine: &mut Engine) -> CliResult<Vec<Check>> {
    let mut out = Vec::new();
    let cap = engine.max_simplices();
    for d in [[1u32, 1], [1, 2], [2, 2]] {
        let grid: Vec<[u32; 2]> = (0..=7).flat_map(|a| (0..=7).map(move |b| [a, b])).collect();
        let results: Vec<packsyz_core::Result<(usize, Vec<String>)>> = pool(engine).install(|| {
            grid.par_iter()
                .map(|n| {
                    let mut asserted = 0;
                    let mut bad = Vec::new();
                    let ps: Vec<u32> = (0..=n[0].min(n[1]))
                        .filter(|&p| n.iter().zip(&d).all(|(&ni, &di)| ni >= p * (di + 1) + di))
                        .collect();
                    if ps.is_empty() {
                        return Ok((0, bad));
                    }
                    let mut e = EquivariantComplex::build_capped(n, &d, cap)?;
                    for p in ps {
                        asserted += 1;
                        let h = e.homology_dim(p as i32 - 1);
                        let b: Vec<i64> = n.iter().zip(&d).map(|(&ni, &di)| i64::from(ni) - i64::from(p * di)).collect();
                        let predicted = vanishing_predicates(&SyzygyQuery::new(p, 0, d.to_vec(), b)?).athanasiadis;
                        if h != 0 || !predicted {
                            bad.push(format!("N={n:?} p={p} dim={h} predicted={predicted}"));
                        }
                    }
                    Ok((asserted, bad))
                })
                .collect()
        });
        let mut asserted = 0;
        let mut bad = Vec::new();
        for r in results {
            let (a, b) = r?;
            asserted += a;
            bad.extend(b);
        }
        let detail = if bad.is_empty() {
            format!("{asserted} vanishing degrees on N <= (7,7)")
        } else {
            bad.join("; ")
        };
        out.push(Check::new(format!("H_(p-1) vanishing d={d:?}"), bad.is_empty(), detail));
    }

    for d in [[1u32, 1], [1, 2], [2, 2]] {
        for b in [[0i64, 0], [0, 1], [1, 0], [1, 1]] {
            let pmax = d.iter().zip(&b).map(|(&di, &bi)| i64::from(di) + bi).min().unwrap_or(0) as u32;
            let mut asserted = Vec::new();
            let mut bad = Vec::new();
            for p in 0..=pmax {
                let qy = SyzygyQuery::new(p, 2, d.to_vec(), b.to_vec())?;
                if !qy.sizes().is_some_and(|n| n.iter().all(|&x| x <= 7)) {
                    continue;
                }
                asserted.push(p);
                let entry = betti_entry_with(engine, &qy)?;
                if !entry.is_empty() || !vanishing_predicates(&qy).np_bound {
                    bad.push(format!("p={p}: {}", render_cell(&entry)));
                }
            }
            let detail = if bad.is_empty() {
                format!("K_(p,2) = 0 for p in {asserted:?}")
            } else {
                bad.join("; ")
            };
            out.push(Check::new(format!("K_(p,2) vanishing d={d:?} b={b:?}"), bad.is_empty(), detail));
        }
    }
    Ok(out)
}

/// Scans of `H̃_k(C_{(N_1,N_2)})` up to two past `2m`, and linear-strand
/// scans in `b_1` that stabilize exactly at `b_1 = p`.
pub fn stability(engine: &mut Engine) -> CliResult<Vec<Check>> {
    let mut out = Vec::new();
    let mut keys = Vec::new();
    for k in [0i32, 1] {
        for n2 in [2u32, 3] {
            keys.extend((0..=2 * n2 + 2).map(|n1| (vec![n1, n2], vec![1, 1], k)));
        }
    }
    for p in 1..=3u32 {
        keys.extend((0..=p + 2).map(|b1| (vec![p + b1, p], vec![1, 1], p as i32 - 1)));
    }
    engine.prefetch(keys)?;
    for k in [0i32, 1] {
        for n2 in [2u32, 3] {
            let r = stable_range_scan(engine, &[1, 1], k, &[Axis::Range(0, 2 * n2 + 2), Axis::Fixed(n2)])?;
            let from: Vec<u32> = r.stable_from.iter().map(|c| c[0]).collect();
            out.push(Check::new(
                format!("H_{k}(C_(N1,{n2})) stable by N1 = {}", 2 * n2),
                r.passed() && r.margin_ok,
                format!("stable from N1 = {from:?}, bound {:?}", r.bound[0]),
            ));
        }
    }
    for p in 1..=3u32 {
        let r = syzygy_stability_check(engine, p, 0, &[1, 1], &[Axis::Range(0, p + 2), Axis::Fixed(0)])?;
        let from: Vec<u32> = r.scan.stable_from.iter().map(|c| c[0] - p).collect();
        out.push(Check::new(
            format!("K_({p},0)(b1,0) stable exactly from b1 = {p}"),
            r.passed() && r.scan.margin_ok && r.sharp == Some(true) && from == [p],
            format!("stable from b1 = {from:?}, sharp {:?}", r.sharp),
        ));
    }
    Ok(out)
}

/// Character-level exactness of the long exact sequence on small grids,
/// and the dimensions in the `(3,3)` example.
pub fn les(engine: &mut Engine) -> CliResult<Vec<Check>> {
    let mut cases = Vec::new();
    for (d, max) in [([1u32, 1u32], [4u32, 4u32]), ([1, 2], [5, 4])] {
        for n1 in d[0]..=max[0] {
            for n2 in d[1]..=max[1] {
                for i in 0..2 {
                    cases.push((vec![n1, n2], d.to_vec(), i));
                }
            }
        }
    }
    let reports: Vec<packsyz_core::Result<_>> =
        pool(engine).install(|| cases.par_iter().map(|(n, d, i)| les_consistency(n, d, *i)).collect());
    let mut out = Vec::new();
    for ((n, d, i), r) in cases.iter().zip(reports) {
        let r = r?;
        let detail = if r.passed() {
            format!("{} degrees", r.dims.len())
        } else {
            format!("{} failing classes", r.failures.len())
        };
        out.push(Check::new(format!("les N={n:?} d={d:?} i={}", i + 1), r.passed(), detail));
    }
    let r = les_consistency(&[3, 3], &[1, 1], 1)?;
    let r1 = r.dims.iter().find(|t| t.0 == 1).copied().unwrap_or_default();
    let r0 = r.dims.iter().find(|t| t.0 == 0).copied().unwrap_or_default();
    out.push(Check::eq(
        "les (3,3) dimensions 1 -> 4 -> 3",
        format!("{} {} {}", r1.2, r1.3, r0.1),
        "1 4 3".into(),
    ));
    Ok(out)
}

/// Complexes on which the structural invariants are checked.
pub const INVARIANT_COMPLEXES: [(&[u32], &[u32]); 10] = [
    (&[2, 2], &[1, 1]),
    (&[3, 2], &[1, 1]),
    (&[3, 3], &[1, 1]),
    (&[4, 3], &[1, 1]),
    (&[4, 4], &[1, 1]),
    (&[5], &[2]),
    (&[6], &[2]),
    (&[4, 4], &[2, 1]),
    (&[5, 4], &[1, 2]),
    (&[3, 3, 2], &[1, 1, 1]),
];

/// `∂∂ = 0`, the Hopf trace identity, harmonic rank, orthogonality of
/// characters and Frobenius reciprocity.
pub fn invariants(engine: &mut Engine) -> CliResult<Vec<Check>> {
    let cap = engine.max_simplices();
    let per_complex: Vec<packsyz_core::Result<Vec<Check>>> = pool(engine).install(|| {
        INVARIANT_COMPLEXES
            .par_iter()
            .map(|&(n, d)| {
                let mut e = EquivariantComplex::build_capped(n, d, cap)?;
                let top = e.complex().top_dim();
                let mut dd = true;
                let mut harmonic = true;
                for k in -1..=top {
                    let bk = e.complex().boundary(k);
                    let bk1 = e.complex().boundary(k + 1);
                    if k >= 0 {
                        dd &= e.complex().boundary(k - 1).mul(&bk)?.nnz() == 0;
                    }
                    harmonic &= Echelon::of(&laplacian(&bk, &bk1)?).nullity() == e.homology_dim(k);
                }
                let hopf = e.hopf_trace_check()?;
                Ok(vec![
                    Check::new(format!("dd = 0 on C_{n:?}^{d:?}"), dd, ""),
                    Check::new(format!("harmonic rank on C_{n:?}^{d:?}"), harmonic, format!("{:?}", e.homology_dims())),
                    Check::new(
                        format!("Hopf trace on C_{n:?}^{d:?}"),
                        hopf.passed(),
                        format!("{} classes, {} failures", hopf.classes_checked, hopf.failures.len()),
                    ),
                ])
            })
            .collect()
    });
    let mut out = Vec::new();
    for c in per_complex {
        out.extend(c?);
    }

    let tables = CharacterTables::new(8)?;
    let mut bad = Vec::new();
    for n in 0..=8u32 {
        let parts = Partition::all(n);
        let classes = CycleType::all(&[n]);
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[i..] {
                let mut sum = BigRational::zero();
                for c in &classes {
                    let rho = &c.components()[0];
                    let v = tables.chi(a, rho)? * tables.chi(b, rho)?;
                    sum += BigRational::new(v.into(), c.centralizer_order());
                }
                let want = if a == b { BigRational::one() } else { BigRational::zero() };
                if sum != want {
                    bad.push(format!("<{a},{b}> = {sum}"));
                }
            }
        }
    }
    out.push(Check::new("character orthogonality n <= 8", bad.is_empty(), bad.join("; ")));

    let mut samples = 0;
    let mut bad = Vec::new();
    let small = CharacterTables::new(6)?;
    for n in 1..=3u32 {
        for total in n..=6 {
            let m = total - n;
            for lambda in Partition::all(n) {
                let chi = small.irreducible(&NPartition::new(vec![lambda.clone()]))?;
                for nu in Partition::all(total) {
                    let psi = small.irreducible(&NPartition::new(vec![nu.clone()]))?;
                    let lhs = small.restrict(&psi, &[n])?.inner(&chi)?;
                    let mut rhs = BigRational::zero();
                    for mu in Partition::all(m) {
                        let ind = small.induce(&chi, &[total], &NPartition::new(vec![mu.clone()]))?;
                        rhs += ind.inner(&psi)? * BigRational::from_integer(mu.dimension().into());
                    }
                    samples += 1;
                    if lhs != rhs {
                        bad.push(format!("{lambda} in {nu}"));
                    }
                }
            }
        }
    }
    out.push(Check::new(
        "Frobenius reciprocity",
        bad.is_empty(),
        if bad.is_empty() { format!("{samples} pairs") } else { bad.join("; ") },
    ));
    Ok(out)
}

/// Top Laplacian spectra on `C_{(p+a,p)}` for `p ≤ 3`, `a ≤ 2`.
pub fn spectra(engine: &mut Engine) -> CliResult<Vec<Check>> {
    let cap = engine.max_simplices();
    let cases: Vec<(u32, u32)> = (0..=3).flat_map(|p| (0..=2).map(move |a| (p, a))).collect();
    let reports: Vec<packsyz_core::Result<_>> =
        pool(engine).install(|| cases.par_iter().map(|&(p, a)| top_laplacian_spectrum(p, a, 2, cap)).collect());
    let mut out = Vec::new();
    for ((p, a), r) in cases.into_iter().zip(reports) {
        let r = r?;
        let spectrum = r
            .spectrum
            .as_ref()
            .map(|s| s.iter().map(|(e, m)| format!("{e}^{m}")).collect::<Vec<_>>().join(" "))
            .unwrap_or_else(|| "not integral".into());
        out.push(Check::new(
            format!("spectrum p={p} a={a}"),
            r.passed(),
            format!("{spectrum}; kernel {:?} expected {}", r.kernel_dim(), r.expected_kernel_dim),
        ));
    }
    Ok(out)
}

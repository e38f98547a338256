//! Representation stability of packing-complex homology: unpadding, scans
//! over a box of sizes against the stable range `N_i ≥ 2m d_i`, the
//! corresponding statement for syzygy functors, and the character-level
//! check of the long exact sequence that removes one point.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::characters::{CharacterTables, ClassFunction, CycleType};
use crate::decomposition::Decomposition;
use crate::equivariant::EquivariantComplex;
use crate::error::{Error, Result};
use crate::partitions::{cartesian, NPartition, Partition};
use crate::syzygy::HomologySource;

/// Constituents with the first row stripped on `coords`.
pub type Unpadded = BTreeMap<NPartition, u64>;

/// Strips the first row on `coords`, checking that padding back recovers
/// every constituent.
pub fn unpad_constituents(dec: &Decomposition, coords: &[usize]) -> Result<Unpadded> {
    let mut out = Unpadded::new();
    for (lambda, m) in dec.terms() {
        let stripped = lambda.unpad_coords(coords);
        if stripped.pad_coords(coords, dec.sizes()).as_ref() != Some(lambda) {
            return Err(Error::Consistency(format!("{lambda} does not unpad on {coords:?}")));
        }
        *out.entry(stripped).or_insert(0) += m;
    }
    Ok(out)
}

/// Which coordinates stay fixed and which range over an interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Axis {
    Fixed(u32),
    Range(u32, u32),
}

/// One lattice point of a scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanPoint {
    pub sizes: Vec<u32>,
    pub decomposition: Decomposition,
    pub unpadded: Unpadded,
}

/// Outcome of a stable-range scan of `H̃_k(C_N^d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub subset_sizes: Vec<u32>,
    pub k: i32,
    pub axes: Vec<Axis>,
    /// `min ⌊N_j / d_j⌋` over the fixed coordinates.
    pub m: u32,
    /// `2m d_i` on scanned coordinates.
    pub bound: Vec<Option<u32>>,
    pub points: Vec<ScanPoint>,
    /// Minimal corners `c` such that every point `≥ c` has the unpadded
    /// constituents of the largest point.
    pub stable_from: Vec<Vec<u32>>,
    /// Every point at or above the bound has the constituents of the largest
    /// point.
    pub within_bound: bool,
    /// The scan reaches at least two beyond the bound on every scanned axis.
    pub margin_ok: bool,
}

impl StabilityReport {
    pub fn scanned(&self) -> Vec<usize> {
        scanned_coords(&self.axes)
    }

    pub fn passed(&self) -> bool {
        self.within_bound
    }

    pub fn point(&self, sizes: &[u32]) -> Option<&ScanPoint> {
        self.points.iter().find(|p| p.sizes == sizes)
    }

    /// Constituents at the largest point of the scan.
    pub fn terminal(&self) -> Option<&Unpadded> {
        self.points.last().map(|p| &p.unpadded)
    }
}

fn scanned_coords(axes: &[Axis]) -> Vec<usize> {
    axes.iter()
        .enumerate()
        .filter(|(_, a)| matches!(a, Axis::Range(..)))
        .map(|(i, _)| i)
        .collect()
}

/// Computes `H̃_k` at every point of the box described by `axes` and
/// compares the unpadded constituents with those of the largest point.
pub fn stable_range_scan(source: &mut impl HomologySource, subset_sizes: &[u32], k: i32, axes: &[Axis]) -> Result<StabilityReport> {
    if axes.len() != subset_sizes.len() {
        return Err(Error::SizeMismatch {
            expected: format!("{} axes", subset_sizes.len()),
            found: format!("{}", axes.len()),
        });
    }
    let fixed: Vec<(usize, u32)> = axes
        .iter()
        .enumerate()
        .filter_map(|(i, a)| match a {
            Axis::Fixed(v) => Some((i, *v)),
            Axis::Range(..) => None,
        })
        .collect();
    if fixed.is_empty() {
        return Err(Error::Precondition("at least one coordinate must stay fixed".into()));
    }
    for a in axes {
        if let Axis::Range(lo, hi) = a {
            if lo > hi {
                return Err(Error::Precondition(format!("empty range {lo}..{hi}")));
            }
        }
    }
    let m = fixed.iter().map(|&(i, v)| v / subset_sizes[i]).min().expect("nonempty");
    let scanned = scanned_coords(axes);
    let bound: Vec<Option<u32>> = axes
        .iter()
        .zip(subset_sizes)
        .map(|(a, &d)| matches!(a, Axis::Range(..)).then_some(2 * m * d))
        .collect();
    let lists: Vec<Vec<u32>> = axes
        .iter()
        .map(|a| match *a {
            Axis::Fixed(v) => vec![v],
            Axis::Range(lo, hi) => (lo..=hi).collect(),
        })
        .collect();
    let mut points = Vec::new();
    for sizes in cartesian(&lists) {
        let decomposition = source.decomposition(&sizes, subset_sizes, k)?;
        let unpadded = unpad_constituents(&decomposition, &scanned)?;
        points.push(ScanPoint {
            sizes,
            decomposition,
            unpadded,
        });
    }
    let terminal = points.last().expect("nonempty box").unpadded.clone();
    let agrees = |c: &[u32]| {
        points
            .iter()
            .filter(|p| p.sizes.iter().zip(c).all(|(a, b)| a >= b))
            .all(|p| p.unpadded == terminal)
    };
    let good: Vec<&ScanPoint> = points.iter().filter(|p| agrees(&p.sizes)).collect();
    let stable_from: Vec<Vec<u32>> = good
        .iter()
        .filter(|p| {
            !good
                .iter()
                .any(|q| q.sizes != p.sizes && q.sizes.iter().zip(&p.sizes).all(|(a, b)| a <= b))
        })
        .map(|p| p.sizes.clone())
        .collect();
    let within_bound = points
        .iter()
        .filter(|p| p.sizes.iter().zip(&bound).all(|(&n, b)| b.is_none_or(|b| n >= b)))
        .all(|p| p.unpadded == terminal);
    let margin_ok = axes.iter().zip(&bound).all(|(a, b)| match (a, b) {
        (Axis::Range(_, hi), Some(b)) => *hi >= b + 2,
        _ => true,
    });
    Ok(StabilityReport {
        subset_sizes: subset_sizes.to_vec(),
        k,
        axes: axes.to_vec(),
        m,
        bound,
        points,
        stable_from,
        within_bound,
        margin_ok,
    })
}

/// Outcome of a scan of `K_{p,q}^d(b)` over `b` on the scanned coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyStabilityReport {
    pub p: u32,
    pub q: u32,
    pub scan: StabilityReport,
    /// For `d = (1,…,1)`, one scanned coordinate and `q = 0`: whether the
    /// constituents at `b = p - 1` differ from the stable ones.
    pub sharp: Option<bool>,
}

impl SyzygyStabilityReport {
    pub fn passed(&self) -> bool {
        self.scan.passed() && self.sharp != Some(false)
    }
}

/// `K_{p,q}^d(b)` with `b_j` fixed on some coordinates (at least one with
/// `b_j < d_j`) and ranging over `lo..=hi` on the others. The decomposition
/// should be independent of the ranging `b_i` once `b_i ≥ (p+q) d_i`.
pub fn syzygy_stability_check(
    source: &mut impl HomologySource,
    p: u32,
    q: u32,
    d: &[u32],
    b_axes: &[Axis],
) -> Result<SyzygyStabilityReport> {
    if d.len() != b_axes.len() {
        return Err(Error::SizeMismatch {
            expected: format!("{} axes", d.len()),
            found: format!("{}", b_axes.len()),
        });
    }
    let fixed_ok = b_axes
        .iter()
        .zip(d)
        .any(|(a, &dj)| matches!(a, Axis::Fixed(b) if *b < dj));
    if !fixed_ok {
        return Err(Error::Precondition("some fixed b_j must satisfy b_j < d_j".into()));
    }
    let shift = |b: u32, dj: u32| (p + q) * dj + b;
    let axes: Vec<Axis> = b_axes
        .iter()
        .zip(d)
        .map(|(a, &dj)| match *a {
            Axis::Fixed(b) => Axis::Fixed(shift(b, dj)),
            Axis::Range(lo, hi) => Axis::Range(shift(lo, dj), shift(hi, dj)),
        })
        .collect();
    let scan = stable_range_scan(source, d, p as i32 - 1, &axes)?;
    let scanned = scan.scanned();
    let sharp = if q == 0 && p > 0 && scanned.len() == 1 && d.iter().all(|&x| x == 1) {
        let i = scanned[0];
        let mut sizes: Vec<u32> = scan.points.last().expect("nonempty").sizes.clone();
        sizes[i] = shift(p - 1, 1);
        scan.point(&sizes).map(|pt| Some(&pt.unpadded) != scan.terminal())
    } else {
        None
    };
    Ok(SyzygyStabilityReport { p, q, scan, sharp })
}

/// Alternating sum of the characters in the long exact sequence relating
/// `C_A`, `C_{A^i}` (one point removed from `A_i`) and the link `C_{A'}`
/// (a vertex removed), restricted to `S_{A^i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LesReport {
    pub sizes: Vec<u32>,
    pub subset_sizes: Vec<u32>,
    pub coordinate: usize,
    /// Per degree `r`: dimensions of `Ind H̃_r(C_{A'})`, `H̃_r(C_{A^i})` and
    /// `H̃_r(C_A)`.
    pub dims: Vec<(i32, u128, u128, u128)>,
    /// Classes of `S_{A^i}` where the alternating sum does not vanish.
    pub failures: Vec<(CycleType, BigRational)>,
}

impl LesReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `Σ_r (-1)^r [Ind(H̃_r(C_{A'}) ⊗ 1) - H̃_r(C_{A^i}) + Res H̃_r(C_A)] = 0`
/// as a class function on `S_{A^i}`. Only the sizes of the removed vertex
/// matter, so no vertex is passed in.
pub fn les_consistency(sizes: &[u32], subset_sizes: &[u32], coordinate: usize) -> Result<LesReport> {
    let n = sizes.len();
    if subset_sizes.len() != n || coordinate >= n {
        return Err(Error::SizeMismatch {
            expected: format!("{n} subset sizes and a coordinate below {n}"),
            found: format!("{} and {coordinate}", subset_sizes.len()),
        });
    }
    if sizes.iter().zip(subset_sizes).any(|(&s, &d)| s < d) {
        return Err(Error::Precondition("every N_j must be at least d_j".into()));
    }
    let mut smaller = sizes.to_vec();
    smaller[coordinate] -= 1;
    let link: Vec<u32> = sizes.iter().zip(subset_sizes).map(|(&s, &d)| s - d).collect();
    let filler = NPartition::new(
        link.iter()
            .zip(&smaller)
            .map(|(&l, &s)| Partition::row(s - l))
            .collect(),
    );
    let tables = CharacterTables::for_sizes(sizes)?;
    let mut full = EquivariantComplex::build(sizes, subset_sizes)?;
    let mut minus = EquivariantComplex::build(&smaller, subset_sizes)?;
    let mut lk = EquivariantComplex::build(&link, subset_sizes)?;
    let top = full.complex().top_dim().max(minus.complex().top_dim()).max(lk.complex().top_dim());
    let mut total = ClassFunction::zero(&smaller);
    let mut dims = Vec::new();
    for r in -1..=top {
        let x = tables.induce(&lk.homology_character(r)?, &smaller, &filler)?;
        let y = minus.homology_character(r)?;
        let z = tables.restrict(&full.homology_character(r)?, &smaller)?;
        let term = x.sub(&y)?.add(&z)?;
        total = if r % 2 == 0 { total.add(&term)? } else { total.sub(&term)? };
        dims.push((r, degree(&x), degree(&y), degree(&z)));
    }
    let failures = total
        .classes()
        .into_iter()
        .zip(total.values())
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (c, v.clone()))
        .collect();
    Ok(LesReport {
        sizes: sizes.to_vec(),
        subset_sizes: subset_sizes.to_vec(),
        coordinate,
        dims,
        failures,
    })
}

fn degree(chi: &ClassFunction) -> u128 {
    use num_traits::ToPrimitive;
    chi.degree().to_integer().to_u128().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syzygy::DirectHomology;

    fn np(s: &str) -> NPartition {
        s.parse().unwrap()
    }

    #[test]
    fn unpad_examples() {
        let d = Decomposition::from_terms(vec![3, 3], [(np("(2,1)x(1,1,1)"), 1), (np("(1,1,1)x(2,1)"), 1)]).unwrap();
        let u = unpad_constituents(&d, &[0]).unwrap();
        assert_eq!(u, [(np("(1)x(1,1,1)"), 1), (np("(1,1)x(2,1)"), 1)].into_iter().collect());
        assert!(unpad_constituents(&Decomposition::new(vec![2]), &[0]).unwrap().is_empty());
    }

    #[test]
    fn scan_degree_zero() {
        let mut src = DirectHomology::new();
        let r = stable_range_scan(&mut src, &[1, 1], 0, &[Axis::Range(2, 6), Axis::Fixed(2)]).unwrap();
        assert_eq!(r.m, 2);
        assert_eq!(r.bound, vec![Some(4), None]);
        assert!(r.passed() && r.margin_ok, "{:?}", r.stable_from);
        assert!(r.stable_from.iter().all(|c| c[0] <= 4));
    }

    #[test]
    fn scan_rejects_empty_range() {
        let mut src = DirectHomology::new();
        assert!(stable_range_scan(&mut src, &[1, 1], 0, &[Axis::Range(3, 2), Axis::Fixed(2)]).is_err());
        assert!(stable_range_scan(&mut src, &[1, 1], 0, &[Axis::Range(1, 2), Axis::Range(1, 2)]).is_err());
    }

    #[test]
    fn all_fixed_scan_is_one_point() {
        let mut src = DirectHomology::new();
        let r = stable_range_scan(&mut src, &[1, 1], 1, &[Axis::Fixed(3), Axis::Fixed(3)]).unwrap();
        assert_eq!(r.points.len(), 1);
        assert_eq!(r.points[0].decomposition.len(), 2);
    }

    #[test]
    fn linear_strand_sharpness() {
        let mut src = DirectHomology::new();
        let r = syzygy_stability_check(&mut src, 2, 0, &[1, 1], &[Axis::Range(0, 4), Axis::Fixed(0)]).unwrap();
        assert!(r.passed());
        assert_eq!(r.sharp, Some(true));
        assert!(r.scan.stable_from.iter().all(|c| c[0] == 4));
    }

    #[test]
    fn syzygy_hypothesis_required() {
        let mut src = DirectHomology::new();
        assert!(syzygy_stability_check(&mut src, 1, 0, &[1, 1], &[Axis::Range(0, 2), Axis::Fixed(1)]).is_err());
    }

    #[test]
    fn les_three_by_three() {
        let r = les_consistency(&[3, 3], &[1, 1], 1).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        let r1 = r.dims.iter().find(|t| t.0 == 1).unwrap();
        let r0 = r.dims.iter().find(|t| t.0 == 0).unwrap();
        assert_eq!((r1.2, r1.3, r0.1), (1, 4, 3));
    }

    #[test]
    fn les_small_and_empty_links() {
        for (n, d, i) in [(vec![2u32, 2], vec![1u32, 1], 0usize), (vec![1, 2], vec![1, 1], 1), (vec![3, 2], vec![1, 2], 0)] {
            let r = les_consistency(&n, &d, i).unwrap();
            assert!(r.passed(), "{n:?} {d:?} {i}: {:?}", r.failures);
        }
    }
}

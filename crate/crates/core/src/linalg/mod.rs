//! Exact sparse linear algebra over `Q`: reduced echelon forms, kernels,
//! traces on subquotients, Laplacians and integer spectra.
//!
//! Elimination is fraction-free over the integers after clearing row
//! denominators. It runs on machine integers with checked arithmetic and
//! restarts on big integers only when a coefficient overflows.

mod echelon;
mod sparse;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use echelon::Echelon;
pub use sparse::SparseMat;

use crate::error::{Error, Result};

/// Reduced echelon form together with a transform `T` with `T·m` equal to
/// the nonzero rows of the reduced form.
#[derive(Clone, Debug)]
pub struct Rref {
    pub echelon: Echelon,
    pub transform: SparseMat,
}

pub fn rref(m: &SparseMat) -> Echelon {
    Echelon::of(m)
}

pub fn rref_with_transform(m: &SparseMat) -> Rref {
    let (r, c) = (m.rows(), m.cols());
    let mut triples: Vec<(usize, usize, BigRational)> = m.triples().map(|(i, j, v)| (i, j, v.clone())).collect();
    triples.extend((0..r).map(|i| (i, c + i, BigRational::one())));
    let augmented = SparseMat::from_triples(r, c + r, triples).expect("augmented indices in range");
    let full = Echelon::of(&augmented);
    let echelon = Echelon::of(m);
    let rank = echelon.rank();
    let mut t = Vec::new();
    for i in 0..rank {
        for (j, v) in full.row(i) {
            if j >= c {
                t.push((i, j - c, v));
            }
        }
    }
    Rref {
        echelon,
        transform: SparseMat::from_triples(rank, r, t).expect("transform indices in range"),
    }
}

pub fn rank(m: &SparseMat) -> usize {
    Echelon::of(m).rank()
}

/// Basis of the right kernel, one vector per free column.
pub fn kernel_basis(m: &SparseMat) -> Vec<Vec<BigRational>> {
    Echelon::of(m).kernel_basis()
}

/// Trace of `g` on `span(z) / span(b)`.
///
/// A complement of `span(b)` inside `span(z)` is read off from the pivots of
/// `[b | z]`; each complement vector is mapped by `g`, expressed in the basis
/// (pivots of `b`) ∪ complement, and its own coefficient is summed.
pub fn quotient_action_trace(z: &[Vec<BigRational>], b: &[Vec<BigRational>], g: &SparseMat) -> Result<BigRational> {
    let n = g.rows();
    if !g.is_square() || z.iter().chain(b).any(|v| v.len() != n) {
        return Err(Error::SizeMismatch {
            expected: format!("vectors of length {n} and a square action"),
            found: format!("{}x{}", g.rows(), g.cols()),
        });
    }
    let mut both: Vec<Vec<BigRational>> = b.to_vec();
    both.extend(z.iter().cloned());
    let e_both = Echelon::of(&SparseMat::from_columns(n, &both)?);
    let z_rank = Echelon::of(&SparseMat::from_columns(n, z)?).rank();
    if e_both.rank() != z_rank {
        return Err(Error::Precondition("boundary vectors are not contained in the cycle span".into()));
    }
    let pivots = e_both.pivot_columns();
    let b_basis: Vec<usize> = pivots.iter().copied().filter(|&c| c < b.len()).collect();
    let complement: Vec<usize> = pivots.iter().copied().filter(|&c| c >= b.len()).collect();

    let mut cols: Vec<Vec<BigRational>> = b_basis.iter().map(|&c| both[c].clone()).collect();
    cols.extend(complement.iter().map(|&c| both[c].clone()));
    let r = cols.len();
    for &c in &complement {
        cols.push(g.mul_vec(&both[c])?);
    }
    let e = Echelon::of(&SparseMat::from_columns(n, &cols)?);
    if e.rank() != r || (0..r).any(|c| !e.is_pivot(c)) {
        return Err(Error::NotEquivariant);
    }
    let nb = b_basis.len();
    let mut trace = BigRational::zero();
    for j in 0..complement.len() {
        trace += e.entry(nb + j, r + j);
    }
    Ok(trace)
}

/// `Δ_k = ∂_kᵀ ∂_k + ∂_{k+1} ∂_{k+1}ᵀ` on `C_k`.
pub fn laplacian(bk: &SparseMat, bk1: &SparseMat) -> Result<SparseMat> {
    if bk.cols() != bk1.rows() {
        return Err(Error::SizeMismatch {
            expected: format!("∂_(k+1) with {} rows", bk.cols()),
            found: format!("{}", bk1.rows()),
        });
    }
    let down = bk.transpose().mul(bk)?;
    let up = bk1.mul(&bk1.transpose())?;
    down.add(&up)
}

/// Characteristic polynomial `det(x I - m)`, coefficients from the constant
/// term upwards. Computed from an upper Hessenberg form.
pub fn charpoly(m: &SparseMat) -> Result<Vec<BigRational>> {
    if !m.is_square() {
        return Err(Error::SizeMismatch {
            expected: "square matrix".into(),
            found: format!("{}x{}", m.rows(), m.cols()),
        });
    }
    let n = m.rows();
    let mut h = m.to_dense();
    for col in 1..n.saturating_sub(1) {
        let Some(i) = (col..n).find(|&i| !h[i][col - 1].is_zero()) else {
            continue;
        };
        if i != col {
            h.swap(i, col);
            for row in h.iter_mut() {
                row.swap(i, col);
            }
        }
        let p = h[col][col - 1].clone();
        for i in col + 1..n {
            if h[i][col - 1].is_zero() {
                continue;
            }
            let u = &h[i][col - 1] / &p;
            let pivot_row = h[col].clone();
            for (dst, src) in h[i].iter_mut().zip(&pivot_row) {
                *dst -= &u * src;
            }
            for row in h.iter_mut() {
                let t = &u * &row[i];
                row[col] += t;
            }
        }
    }

    // p_k = (x - h_kk) p_{k-1} - Σ_{i<k} h_ik (Π_{i<j≤k} h_{j,j-1}) p_{i-1}
    let mut polys: Vec<Vec<BigRational>> = vec![vec![BigRational::one()]];
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![BigRational::zero(); k + 2];
        for (d, c) in prev.iter().enumerate() {
            next[d + 1] += c;
            next[d] -= &h[k][k] * c;
        }
        let mut prod = BigRational::one();
        for i in (0..k).rev() {
            prod *= &h[i + 1][i];
            if prod.is_zero() {
                break;
            }
            let coef = &h[i][k] * &prod;
            if coef.is_zero() {
                continue;
            }
            for (d, c) in polys[i].iter().enumerate() {
                next[d] -= &coef * c;
            }
        }
        polys.push(next);
    }
    Ok(polys.pop().expect("at least the constant polynomial"))
}

fn eval(p: &[BigRational], t: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * t + c)
}

// Quotient of p by (x - t).
fn deflate(p: &[BigRational], t: &BigRational) -> Vec<BigRational> {
    let n = p.len() - 1;
    let mut q = vec![BigRational::zero(); n];
    let mut carry = BigRational::zero();
    for d in (1..=n).rev() {
        carry = &carry * t + &p[d];
        q[d - 1] = carry.clone();
    }
    q
}

/// Eigenvalues with multiplicity when the characteristic polynomial splits
/// into integer linear factors, in increasing order; `None` otherwise.
pub fn integer_spectrum(m: &SparseMat) -> Option<Vec<i64>> {
    let mut p = charpoly(m).ok()?;
    let bound = m.gershgorin_bound().ceil().to_integer().to_i64()?;
    let mut roots = Vec::with_capacity(m.rows());
    // zero first, then candidates dividing the remaining constant term
    let mut t_values: Vec<i64> = vec![0];
    for t in 1..=bound {
        t_values.push(t);
        t_values.push(-t);
    }
    for t in t_values {
        if p.len() == 1 {
            break;
        }
        let tq = BigRational::from_integer(BigInt::from(t));
        if t != 0 {
            let c0 = &p[0];
            if !c0.is_zero() && c0.is_integer() && !(c0.to_integer() % BigInt::from(t)).is_zero() {
                continue;
            }
        }
        while p.len() > 1 && eval(&p, &tq).is_zero() {
            p = deflate(&p, &tq);
            roots.push(t);
        }
    }
    if p.len() != 1 {
        return None;
    }
    roots.sort_unstable();
    Some(roots)
}

/// Integer eigenvalues of a symmetric integer matrix with multiplicities,
/// read off from the nullities of `m - tI` for `t` within the Gershgorin
/// bound. Symmetric matrices are diagonalizable, so the spectrum is integral
/// exactly when these nullities add up to the size.
pub fn symmetric_integer_spectrum(m: &SparseMat) -> Option<Vec<i64>> {
    if !m.is_square() || !m.is_symmetric() || !m.is_integral() {
        return None;
    }
    let n = m.rows();
    let bound = m.gershgorin_bound().to_integer().to_i64()?;
    let base: Vec<Vec<(u32, i64)>> = (0..n)
        .map(|r| m.row(r).iter().map(|(c, v)| (*c, v.to_integer().to_i64().expect("small entries"))).collect())
        .collect::<Vec<_>>();
    let mut roots = Vec::with_capacity(n);
    let mut t = -bound;
    while t <= bound && roots.len() < n {
        let shifted: Vec<Vec<(u32, i64)>> = base
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let mut out: Vec<(u32, i64)> = row.clone();
                match out.binary_search_by_key(&(r as u32), |&(c, _)| c) {
                    Ok(i) => out[i].1 -= t,
                    Err(i) => out.insert(i, (r as u32, -t)),
                }
                out.retain(|&(_, v)| v != 0);
                out
            })
            .collect();
        let nullity = Echelon::from_i64_rows(shifted, n).nullity();
        roots.extend(core::iter::repeat_n(t, nullity));
        t += 1;
    }
    (roots.len() == n).then_some(roots)
}

/// Sum of the diagonal.
pub fn trace(m: &SparseMat) -> BigRational {
    m.triples()
        .filter(|(r, c, _)| r == c)
        .fold(BigRational::zero(), |acc, (_, _, v)| acc + v)
}

/// True when every entry of the vector is zero.
pub fn is_zero_vector(v: &[BigRational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Integer value of an exact rational, if it is one.
pub fn as_integer(q: &BigRational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

/// True when the rational is a nonnegative integer.
pub fn is_natural(q: &BigRational) -> bool {
    q.is_integer() && !q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{PackingComplex, Permutation, SignedPermutation};
    use crate::partitions::Partition;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn identity_rref() {
        let id = SparseMat::identity(4);
        let e = rref(&id);
        assert_eq!(e.rank(), 4);
        assert_eq!(e.pivot_columns(), vec![0, 1, 2, 3]);
        assert_eq!(e.to_matrix(), id);
        assert!(kernel_basis(&id).is_empty());
    }

    #[test]
    fn zero_matrix() {
        let z = SparseMat::zeros(3, 5);
        assert_eq!(rank(&z), 0);
        assert_eq!(kernel_basis(&z).len(), 5);
    }

    #[test]
    fn augmentation_kernel() {
        let m = SparseMat::from_dense_i64(&[vec![1, 1, 1, 1]]).unwrap();
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 3);
        for v in &k {
            assert!(is_zero_vector(&m.mul_vec(v).unwrap()));
        }
    }

    #[test]
    fn rational_rref_with_transform() {
        let m = SparseMat::from_dense_i64(&[vec![2, 4, 1], vec![1, 2, 3], vec![3, 6, 4]]).unwrap();
        let r = rref_with_transform(&m);
        assert_eq!(r.echelon.rank(), 2);
        assert_eq!(r.echelon.pivot_columns(), vec![0, 2]);
        assert_eq!(r.transform.mul(&m).unwrap(), r.echelon.to_matrix());
        assert_eq!(r.echelon.entry(0, 1), q(2));
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = 3_000_000_000i64;
        let m = SparseMat::from_dense_i64(&[vec![big, big - 1, 7], vec![big - 5, big, 11], vec![13, 17, big]]).unwrap();
        let e = rref(&m);
        assert_eq!(e.rank(), 3);
        assert!(!e.used_machine_integers());
    }

    #[test]
    fn chessboard_ranks() {
        let cx = PackingComplex::build(&[2, 2], &[1, 1]).unwrap();
        assert_eq!(rank(&cx.boundary(1)), 2);
        let cx = PackingComplex::build(&[3, 3], &[1, 1]).unwrap();
        let d1 = cx.boundary(1);
        assert_eq!(kernel_basis(&d1).len(), 18 - rank(&d1));
    }

    #[test]
    fn quotient_trace_identity_and_sign() {
        let cx = PackingComplex::build(&[2, 2], &[1, 1]).unwrap();
        let z = kernel_basis(&cx.boundary(0));
        let b: Vec<Vec<BigRational>> = (0..cx.count(1)).map(|c| cx.boundary(1).column_dense(c)).collect();
        let id = SignedPermutation::identity(cx.count(0)).to_matrix();
        assert_eq!(quotient_action_trace(&z, &b, &id).unwrap(), q(1));
        let g = [Permutation::from_cycle_type(&Partition::row(2)), Permutation::identity(2)];
        let act = cx.act(&g, 0).unwrap().to_matrix();
        assert_eq!(quotient_action_trace(&z, &b, &act).unwrap(), q(-1));
    }

    #[test]
    fn quotient_trace_three_two() {
        let cx = PackingComplex::build(&[3, 2], &[1, 1]).unwrap();
        let z = kernel_basis(&cx.boundary(1));
        let b: Vec<Vec<BigRational>> = Vec::new();
        let g = [Permutation::identity(3), Permutation::from_cycle_type(&Partition::row(2))];
        let act = cx.act(&g, 1).unwrap().to_matrix();
        assert_eq!(quotient_action_trace(&z, &b, &act).unwrap(), q(1));
    }

    #[test]
    fn kernel_trace_matches_quotient_trace() {
        let cx = PackingComplex::build(&[3, 3], &[1, 1]).unwrap();
        let d1 = cx.boundary(1);
        let e = rref(&d1);
        let z = e.kernel_basis();
        for rho in Partition::all(3) {
            let g = [Permutation::from_cycle_type(&rho), Permutation::identity(3)];
            let act = cx.act(&g, 1).unwrap();
            let fast = e.kernel_trace(&act);
            let slow = quotient_action_trace(&z, &[], &act.to_matrix()).unwrap();
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn not_equivariant_detected() {
        let z = vec![vec![q(1), q(0)]];
        let swap = SparseMat::from_dense_i64(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(quotient_action_trace(&z, &[], &swap), Err(Error::NotEquivariant));
    }

    #[test]
    fn laplacian_of_point() {
        let l = laplacian(&SparseMat::zeros(0, 1), &SparseMat::zeros(1, 0)).unwrap();
        assert_eq!(l, SparseMat::zeros(1, 1));
        assert_eq!(integer_spectrum(&l), Some(vec![0]));
    }

    #[test]
    fn laplacian_two_points() {
        let aug = SparseMat::from_dense_i64(&[vec![1, 1]]).unwrap();
        let l = laplacian(&aug, &SparseMat::zeros(2, 0)).unwrap();
        assert!(l.is_symmetric());
        assert_eq!(kernel_basis(&l).len(), 1);
    }

    #[test]
    fn spectra() {
        assert_eq!(integer_spectrum(&SparseMat::zeros(3, 3)), Some(vec![0, 0, 0]));
        let d = SparseMat::diagonal(&[q(2), q(3), q(3)]);
        assert_eq!(integer_spectrum(&d), Some(vec![2, 3, 3]));
        let m = SparseMat::from_dense_i64(&[vec![2, 1], vec![1, 2]]).unwrap();
        assert_eq!(integer_spectrum(&m), Some(vec![1, 3]));
        let irrational = SparseMat::from_dense_i64(&[vec![1, 1], vec![1, 0]]).unwrap();
        assert_eq!(integer_spectrum(&irrational), None);
        assert_eq!(symmetric_integer_spectrum(&irrational), None);
        assert_eq!(symmetric_integer_spectrum(&m), Some(vec![1, 3]));
        assert_eq!(symmetric_integer_spectrum(&d), Some(vec![2, 3, 3]));
        assert_eq!(symmetric_integer_spectrum(&SparseMat::zeros(2, 2)), Some(vec![0, 0]));
    }

    #[test]
    fn charpoly_of_companion() {
        // x^3 - 6x^2 + 11x - 6
        let m = SparseMat::from_dense_i64(&[vec![0, 0, 6], vec![1, 0, -11], vec![0, 1, 6]]).unwrap();
        assert_eq!(charpoly(&m).unwrap(), vec![q(-6), q(11), q(-6), q(1)]);
        assert_eq!(integer_spectrum(&m), Some(vec![1, 2, 3]));
    }
}

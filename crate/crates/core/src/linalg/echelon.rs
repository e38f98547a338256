use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::sparse::SparseMat;
use crate::complex::SignedPermutation;

/// Integer scalars for fraction-free elimination. Arithmetic reports
/// overflow with `None` so a fixed-width pass can fall back to big integers.
pub(crate) trait Scalar: Clone + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn gcd(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Self;
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
}

type Row<T> = Vec<(u32, T)>;

/// Reduced row echelon form over the integers: every row starts with its
/// positive pivot entry and has zeros in all other pivot columns.
#[derive(Clone, Debug)]
pub(crate) struct IntEchelon<T> {
    pub rows: Vec<Row<T>>,
}

// a*x - b*y over sorted sparse rows.
fn combine<T: Scalar>(a: &T, x: &Row<T>, b: &T, y: &Row<T>) -> Option<Row<T>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let a_unit_pos = a.is_unit() && !a.is_negative();
    while i < x.len() || j < y.len() {
        let cx = x.get(i).map_or(u32::MAX, |e| e.0);
        let cy = y.get(j).map_or(u32::MAX, |e| e.0);
        if cx < cy {
            let v = if a_unit_pos { x[i].1.clone() } else { a.mul(&x[i].1)? };
            out.push((cx, v));
            i += 1;
        } else if cy < cx {
            out.push((cy, b.mul(&y[j].1)?.neg()?));
            j += 1;
        } else {
            let ax = if a_unit_pos { x[i].1.clone() } else { a.mul(&x[i].1)? };
            let v = ax.sub(&b.mul(&y[j].1)?)?;
            if !v.is_zero() {
                out.push((cx, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

fn normalize<T: Scalar>(row: &mut Row<T>) {
    let mut g = T::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_unit() {
            return;
        }
    }
    if !g.is_zero() {
        for e in row.iter_mut() {
            e.1 = e.1.div_exact(&g);
        }
    }
}

// Eliminates the entry of `x` at column `col` using `pivot_row`.
fn eliminate<T: Scalar>(x: &Row<T>, xv: &T, pivot_row: &Row<T>, pv: &T) -> Option<Row<T>> {
    if pv.is_unit() {
        let b = if pv.is_negative() { xv.neg()? } else { xv.clone() };
        combine(&T::one(), x, &b, pivot_row)
    } else {
        let g = pv.gcd(xv);
        let a = pv.div_exact(&g);
        let b = xv.div_exact(&g);
        let mut r = combine(&a, x, &b, pivot_row)?;
        normalize(&mut r);
        Some(r)
    }
}

/// Fraction-free Gauss-Jordan elimination. Pivot columns are the
/// lexicographically first independent columns; within a column the pivot
/// row is a unit entry on the shortest row when one exists.
pub(crate) fn reduce<T: Scalar>(input: Vec<Row<T>>, cols: usize) -> Option<IntEchelon<T>> {
    let mut buckets: Vec<Vec<Row<T>>> = vec![Vec::new(); cols];
    for r in input {
        if let Some(&(c, _)) = r.first() {
            buckets[c as usize].push(r);
        }
    }
    let mut pivots: Vec<Row<T>> = Vec::new();
    for c in 0..cols {
        let mut bucket = core::mem::take(&mut buckets[c]);
        if bucket.is_empty() {
            continue;
        }
        let best = bucket
            .iter()
            .enumerate()
            .min_by_key(|(_, r)| (!r[0].1.is_unit(), r.len()))
            .map(|(i, _)| i)
            .expect("bucket is nonempty");
        let mut pivot = bucket.swap_remove(best);
        if pivot[0].1.is_negative() {
            for e in pivot.iter_mut() {
                e.1 = e.1.neg()?;
            }
        }
        let pv = pivot[0].1.clone();
        for r in bucket {
            let xv = r[0].1.clone();
            let nr = eliminate(&r, &xv, &pivot, &pv)?;
            if let Some(&(nc, _)) = nr.first() {
                buckets[nc as usize].push(nr);
            }
        }
        pivots.push(pivot);
    }

    let mut pivot_row = vec![u32::MAX; cols];
    for (i, r) in pivots.iter().enumerate() {
        pivot_row[r[0].0 as usize] = i as u32;
    }
    for i in (0..pivots.len()).rev() {
        let targets: Vec<u32> = pivots[i][1..]
            .iter()
            .map(|e| e.0)
            .filter(|&c| pivot_row[c as usize] != u32::MAX)
            .collect();
        if targets.is_empty() {
            continue;
        }
        let mut row = core::mem::take(&mut pivots[i]);
        for c in targets {
            let j = pivot_row[c as usize] as usize;
            let pos = match row.binary_search_by_key(&c, |e| e.0) {
                Ok(p) => p,
                Err(_) => continue,
            };
            let xv = row[pos].1.clone();
            let pv = pivots[j][0].1.clone();
            row = eliminate(&row, &xv, &pivots[j], &pv)?;
        }
        if row[0].1.is_negative() {
            for e in row.iter_mut() {
                e.1 = e.1.neg()?;
            }
        }
        pivots[i] = row;
    }
    Some(IntEchelon { rows: pivots })
}

#[derive(Clone, Debug)]
enum Store {
    Small(IntEchelon<i64>),
    Big(IntEchelon<BigInt>),
}

/// Reduced row echelon form of a rational matrix, stored as integer rows
/// with their pivot entries.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    pivot_row: Vec<u32>,
    store: Store,
}

impl Echelon {
    pub(crate) fn from_integer_rows(rows: Vec<Row<BigInt>>, cols: usize) -> Echelon {
        let small: Option<Vec<Row<i64>>> = rows
            .iter()
            .map(|r| r.iter().map(|(c, v)| v.to_i64().map(|x| (*c, x))).collect())
            .collect();
        let store = match small.and_then(|s| reduce(s, cols)) {
            Some(e) => Store::Small(e),
            None => Store::Big(reduce(rows, cols).expect("big integer arithmetic cannot overflow")),
        };
        let mut pivot_row = vec![u32::MAX; cols];
        let firsts: Vec<u32> = match &store {
            Store::Small(e) => e.rows.iter().map(|r| r[0].0).collect(),
            Store::Big(e) => e.rows.iter().map(|r| r[0].0).collect(),
        };
        for (i, c) in firsts.into_iter().enumerate() {
            pivot_row[c as usize] = i as u32;
        }
        Echelon { cols, pivot_row, store }
    }

    /// Echelon form of a matrix given by sorted integer rows.
    pub fn from_i64_rows(rows: Vec<Vec<(u32, i64)>>, cols: usize) -> Echelon {
        match reduce(rows.clone(), cols) {
            Some(e) => {
                let mut pivot_row = vec![u32::MAX; cols];
                for (i, r) in e.rows.iter().enumerate() {
                    pivot_row[r[0].0 as usize] = i as u32;
                }
                Echelon {
                    cols,
                    pivot_row,
                    store: Store::Small(e),
                }
            }
            None => Self::from_integer_rows(
                rows.into_iter()
                    .map(|r| r.into_iter().map(|(c, v)| (c, BigInt::from(v))).collect())
                    .collect(),
                cols,
            ),
        }
    }

    pub fn of(m: &SparseMat) -> Echelon {
        let rows = (0..m.rows()).map(|r| m.integer_row(r)).collect();
        Self::from_integer_rows(rows, m.cols())
    }

    pub fn rank(&self) -> usize {
        match &self.store {
            Store::Small(e) => e.rows.len(),
            Store::Big(e) => e.rows.len(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Whether the fixed-width fast path sufficed.
    pub fn used_machine_integers(&self) -> bool {
        matches!(self.store, Store::Small(_))
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|&c| self.pivot_row[c] != u32::MAX).collect()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|&c| self.pivot_row[c] == u32::MAX).collect()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivot_row[c] != u32::MAX
    }

    /// Entry `(i, c)` of the reduced form, whose pivots are 1.
    pub fn entry(&self, i: usize, c: usize) -> BigRational {
        match &self.store {
            Store::Small(e) => {
                let r = &e.rows[i];
                let v = r.binary_search_by_key(&(c as u32), |x| x.0).map_or(0, |p| r[p].1);
                BigRational::new(v.into(), r[0].1.into())
            }
            Store::Big(e) => {
                let r = &e.rows[i];
                let v = r
                    .binary_search_by_key(&(c as u32), |x| x.0)
                    .map_or_else(|_| <BigInt as Zero>::zero(), |p| r[p].1.clone());
                BigRational::new(v, r[0].1.clone())
            }
        }
    }

    /// Row `i` of the reduced form.
    pub fn row(&self, i: usize) -> Vec<(usize, BigRational)> {
        match &self.store {
            Store::Small(e) => {
                let r = &e.rows[i];
                r.iter()
                    .map(|(c, v)| (*c as usize, BigRational::new((*v).into(), r[0].1.into())))
                    .collect()
            }
            Store::Big(e) => {
                let r = &e.rows[i];
                r.iter()
                    .map(|(c, v)| (*c as usize, BigRational::new(v.clone(), r[0].1.clone())))
                    .collect()
            }
        }
    }

    /// The reduced form as a `rank × cols` matrix.
    pub fn to_matrix(&self) -> SparseMat {
        let mut triples = Vec::new();
        for i in 0..self.rank() {
            for (c, v) in self.row(i) {
                triples.push((i, c, v));
            }
        }
        SparseMat::from_triples(self.rank(), self.cols, triples).expect("indices in range")
    }

    /// Kernel vector attached to free column `f`: 1 at `f`, zero at the other
    /// free columns, minus the reduced column at the pivots.
    pub fn kernel_vector(&self, f: usize) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.cols];
        v[f] = BigRational::one();
        for (c, &i) in self.pivot_row.iter().enumerate() {
            if i != u32::MAX {
                v[c] = -self.entry(i as usize, f);
            }
        }
        v
    }

    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        self.free_columns().into_iter().map(|f| self.kernel_vector(f)).collect()
    }

    /// Trace of a signed permutation matrix `g` on the kernel, which it must
    /// preserve. In the free-normalised basis `v_f` the diagonal coefficient is
    /// `(g v_f)_f = s_j (v_f)_j` with `g e_j = s_j e_f`.
    pub fn kernel_trace(&self, g: &SignedPermutation) -> BigRational {
        let inv = g.inverse_entries();
        let mut fixed = 0i64;
        let mut per_row: Vec<(u32, BigInt)> = Vec::new();
        for (f, &(j, s)) in inv.iter().enumerate() {
            if self.pivot_row[f] != u32::MAX {
                continue;
            }
            let j = j as usize;
            if j == f {
                fixed += i64::from(s);
                continue;
            }
            let i = self.pivot_row[j];
            if i == u32::MAX {
                continue;
            }
            let raw = self.raw_entry(i as usize, f);
            if !Zero::is_zero(&raw) {
                per_row.push((i, if s > 0 { raw } else { -raw }));
            }
        }
        per_row.sort_by_key(|e| e.0);
        let mut total = BigRational::from_integer(fixed.into());
        let mut k = 0;
        while k < per_row.len() {
            let i = per_row[k].0;
            let mut sum = <BigInt as Zero>::zero();
            while k < per_row.len() && per_row[k].0 == i {
                sum += &per_row[k].1;
                k += 1;
            }
            total -= BigRational::new(sum, self.raw_pivot(i as usize));
        }
        total
    }

    fn raw_entry(&self, i: usize, c: usize) -> BigInt {
        match &self.store {
            Store::Small(e) => {
                let r = &e.rows[i];
                r.binary_search_by_key(&(c as u32), |x| x.0).map_or(0, |p| r[p].1).into()
            }
            Store::Big(e) => {
                let r = &e.rows[i];
                r.binary_search_by_key(&(c as u32), |x| x.0)
                    .map_or_else(|_| <BigInt as Zero>::zero(), |p| r[p].1.clone())
            }
        }
    }

    fn raw_pivot(&self, i: usize) -> BigInt {
        match &self.store {
            Store::Small(e) => e.rows[i][0].1.into(),
            Store::Big(e) => e.rows[i][0].1.clone(),
        }
    }
}

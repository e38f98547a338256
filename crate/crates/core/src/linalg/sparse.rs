use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Sparse matrix over `Q`, stored row by row with strictly increasing column
/// indices and no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(u32, BigRational)>>,
}

impl SparseMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMat {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i as u32, BigRational::from_integer(1.into()))]).collect(),
        }
    }

    pub fn diagonal(entries: &[BigRational]) -> Self {
        let n = entries.len();
        let data = entries
            .iter()
            .enumerate()
            .map(|(i, x)| if x.is_zero() { Vec::new() } else { vec![(i as u32, x.clone())] })
            .collect();
        SparseMat { rows: n, cols: n, data }
    }

    /// Builds from `(row, col, value)` triples; repeated positions are summed
    /// and zeros dropped.
    pub fn from_triples(rows: usize, cols: usize, triples: Vec<(usize, usize, BigRational)>) -> Result<Self> {
        let mut data: Vec<Vec<(u32, BigRational)>> = vec![Vec::new(); rows];
        for (r, c, v) in triples {
            if r >= rows || c >= cols {
                return Err(Error::SizeMismatch {
                    expected: format!("index inside {rows}x{cols}"),
                    found: format!("({r},{c})"),
                });
            }
            data[r].push((c as u32, v));
        }
        for row in &mut data {
            row.sort_by_key(|e| e.0);
            let mut merged: Vec<(u32, BigRational)> = Vec::with_capacity(row.len());
            for (c, v) in row.drain(..) {
                match merged.last_mut() {
                    Some(last) if last.0 == c => last.1 += v,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|e| !e.1.is_zero());
            *row = merged;
        }
        Ok(SparseMat { rows, cols, data })
    }

    /// Builds from integer triples.
    pub fn from_int_triples(rows: usize, cols: usize, triples: &[(usize, usize, i64)]) -> Result<Self> {
        Self::from_triples(
            rows,
            cols,
            triples
                .iter()
                .map(|&(r, c, v)| (r, c, BigRational::from_integer(v.into())))
                .collect(),
        )
    }

    pub fn from_dense(rows: &[Vec<BigRational>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::SizeMismatch {
                expected: format!("rows of length {cols}"),
                found: "ragged rows".into(),
            });
        }
        let data = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(c, x)| (c as u32, x.clone()))
                    .collect()
            })
            .collect();
        Ok(SparseMat {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_dense_i64(rows: &[Vec<i64>]) -> Result<Self> {
        let q: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        Self::from_dense(&q)
    }

    /// Matrix whose columns are the given dense vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigRational>]) -> Result<Self> {
        let mut triples = Vec::new();
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::SizeMismatch {
                    expected: format!("columns of length {rows}"),
                    found: format!("{}", col.len()),
                });
            }
            for (r, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    triples.push((r, c, x.clone()));
                }
            }
        }
        Self::from_triples(rows, columns.len(), triples)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn row(&self, r: usize) -> &[(u32, BigRational)] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> BigRational {
        self.data[r]
            .binary_search_by_key(&(c as u32), |e| e.0)
            .map_or_else(|_| BigRational::zero(), |i| self.data[r][i].1.clone())
    }

    /// Entries in row-major order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c as usize, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<BigRational>> {
        let mut out = vec![vec![BigRational::zero(); self.cols]; self.rows];
        for (r, c, v) in self.triples() {
            out[r][c] = v.clone();
        }
        out
    }

    pub fn column_dense(&self, c: usize) -> Vec<BigRational> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> SparseMat {
        let mut data: Vec<Vec<(u32, BigRational)>> = vec![Vec::new(); self.cols];
        for (r, c, v) in self.triples() {
            data[c].push((r as u32, v.clone()));
        }
        SparseMat {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, other: &SparseMat) -> Result<SparseMat> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch {
                expected: format!("{} rows", self.cols),
                found: format!("{}", other.rows),
            });
        }
        let mut data = Vec::with_capacity(self.rows);
        let mut acc: Vec<BigRational> = vec![BigRational::zero(); other.cols];
        let mut touched: Vec<u32> = Vec::new();
        let mut mark = vec![false; other.cols];
        for row in &self.data {
            for (k, a) in row {
                for (c, b) in &other.data[*k as usize] {
                    let ci = *c as usize;
                    if !mark[ci] {
                        mark[ci] = true;
                        touched.push(*c);
                    }
                    acc[ci] += a * b;
                }
            }
            touched.sort_unstable();
            let mut out = Vec::with_capacity(touched.len());
            for &c in &touched {
                let ci = c as usize;
                mark[ci] = false;
                let v = core::mem::replace(&mut acc[ci], BigRational::zero());
                if !v.is_zero() {
                    out.push((c, v));
                }
            }
            touched.clear();
            data.push(out);
        }
        Ok(SparseMat {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn add(&self, other: &SparseMat) -> Result<SparseMat> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::SizeMismatch {
                expected: format!("{}x{}", self.rows, self.cols),
                found: format!("{}x{}", other.rows, other.cols),
            });
        }
        let triples = self
            .triples()
            .chain(other.triples())
            .map(|(r, c, v)| (r, c, v.clone()))
            .collect();
        Self::from_triples(self.rows, self.cols, triples)
    }

    pub fn mul_vec(&self, x: &[BigRational]) -> Result<Vec<BigRational>> {
        if x.len() != self.cols {
            return Err(Error::SizeMismatch {
                expected: format!("vector of length {}", self.cols),
                found: format!("{}", x.len()),
            });
        }
        Ok(self
            .data
            .iter()
            .map(|row| row.iter().fold(BigRational::zero(), |acc, (c, v)| acc + v * &x[*c as usize]))
            .collect())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && self.triples().all(|(r, c, v)| &self.get(c, r) == v)
    }

    /// `xᵀ M x`.
    pub fn quadratic_form(&self, x: &[BigRational]) -> Result<BigRational> {
        let y = self.mul_vec(x)?;
        Ok(x.iter().zip(&y).fold(BigRational::zero(), |acc, (a, b)| acc + a * b))
    }

    pub fn is_integral(&self) -> bool {
        self.triples().all(|(_, _, v)| v.is_integer())
    }

    /// Row `r` scaled by the least common multiple of its denominators.
    pub(crate) fn integer_row(&self, r: usize) -> Vec<(u32, BigInt)> {
        let row = &self.data[r];
        let l = row
            .iter()
            .fold(BigInt::from(1), |acc, (_, v)| num_integer::Integer::lcm(&acc, v.denom()));
        row.iter()
            .map(|(c, v)| (*c, v.numer() * (&l / v.denom())))
            .collect()
    }

    /// Largest absolute row sum, a bound on every eigenvalue.
    pub fn gershgorin_bound(&self) -> BigRational {
        self.data
            .iter()
            .map(|row| row.iter().fold(BigRational::zero(), |acc, (_, v)| acc + v.abs()))
            .max()
            .unwrap_or_else(BigRational::zero)
    }
}

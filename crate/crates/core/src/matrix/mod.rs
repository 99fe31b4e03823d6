//! Dense matrices over a [`Ring`].
//!
//! Row and column indices taken by the public API are 1-based.

mod block;
mod det;

pub use block::BlockQuad;

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// A dense `rows x cols` matrix, stored row-major.
pub struct Matrix<R: Ring> {
    ring: R,
    rows: usize,
    cols: usize,
    data: Vec<R::Elem>,
}

impl<R: Ring> Clone for Matrix<R> {
    fn clone(&self) -> Self {
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.clone(),
        }
    }
}

impl<R: Ring> PartialEq for Matrix<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}x{}>[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<_> = (0..self.cols).map(|j| self.at(i, j)).collect();
            write!(f, "{row:?}")?;
        }
        write!(f, "]")
    }
}

impl<R: Ring> Matrix<R> {
    /// Builds a matrix from row-major entries, checking the length and that
    /// every entry is a canonical element of `ring`.
    pub fn from_vec(ring: R, rows: usize, cols: usize, data: Vec<R::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries given for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|e| !ring.contains(e)) {
            return Err(Error::RingMismatch(format!(
                "entry {bad:?} is not an element of {ring:?}"
            )));
        }
        Ok(Matrix {
            ring,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(ring: R, rows: Vec<Vec<R::Elem>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::from_vec(ring, n, m, rows.into_iter().flatten().collect())
    }

    /// Entries given as small integers, embedded into `ring`.
    pub fn from_i64_rows(ring: R, rows: &[Vec<i64>]) -> Result<Self> {
        let converted = rows
            .iter()
            .map(|r| r.iter().map(|&x| ring.from_i64(x)).collect())
            .collect();
        Self::from_rows(ring, converted)
    }

    pub fn from_fn(ring: R, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            ring,
            rows,
            cols,
            data,
        }
    }

    /// The `rows x cols` zero matrix.
    pub fn zero(ring: R, rows: usize, cols: usize) -> Self {
        let z = ring.zero();
        Matrix {
            data: vec![z; rows * cols],
            ring,
            rows,
            cols,
        }
    }

    /// `I_n`.
    pub fn identity(ring: R, n: usize) -> Self {
        let one = ring.one();
        Self::scalar(ring, n, one)
    }

    /// `c I_n`.
    pub fn scalar(ring: R, n: usize, c: R::Elem) -> Self {
        let z = ring.zero();
        Self::from_fn(ring, n, n, |i, j| if i == j { c.clone() } else { z.clone() })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[R::Elem] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// The side length, or [`Error::NotSquare`].
    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    // zero-based
    pub(crate) fn at(&self, i: usize, j: usize) -> &R::Elem {
        &self.data[i * self.cols + j]
    }

    /// The `(i, j)` entry, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> Result<&R::Elem> {
        self.check_row(i)?;
        self.check_col(j)?;
        Ok(self.at(i - 1, j - 1))
    }

    /// Replaces the `(i, j)` entry, 1-based.
    pub fn set_entry(&mut self, i: usize, j: usize, value: R::Elem) -> Result<()> {
        self.check_row(i)?;
        self.check_col(j)?;
        if !self.ring.contains(&value) {
            return Err(Error::RingMismatch(format!("{value:?} is not in {:?}", self.ring)));
        }
        let cols = self.cols;
        self.data[(i - 1) * cols + (j - 1)] = value;
        Ok(())
    }

    fn check_row(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rows {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: self.rows,
            });
        }
        Ok(())
    }

    fn check_col(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.cols {
            return Err(Error::IndexOutOfRange {
                index: j,
                bound: self.cols,
            });
        }
        Ok(())
    }

    /// Fails unless both matrices live over the same ring.
    pub fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!(
                "{:?} vs {:?}",
                self.ring, other.ring
            )));
        }
        Ok(())
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        self.same_ring(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(self.zip_with(other, |a, b| self.ring.add(a, b)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(self.zip_with(other, |a, b| self.ring.sub(a, b)))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R::Elem, &R::Elem) -> R::Elem) -> Self {
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|a| self.ring.neg(a))
    }

    /// `c A`.
    pub fn scale(&self, c: &R::Elem) -> Self {
        self.map(|a| self.ring.mul(c, a))
    }

    /// `k A` for an integer `k`.
    pub fn scale_int(&self, k: &BigInt) -> Self {
        self.scale(&self.ring.from_int(k))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ring = &self.ring;
        let mut data = vec![ring.zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let slot = &mut data[i * other.cols + j];
                    *slot = ring.add(slot, &ring.mul(a, other.at(k, j)));
                }
            }
        }
        Ok(Matrix {
            ring: ring.clone(),
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// `A^k` for square `A`; `A^0 = I`.
    pub fn pow(&self, k: u64) -> Result<Self> {
        let n = self.require_square()?;
        let mut acc = Matrix::identity(self.ring.clone(), n);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `A^0, A^1, ..., A^k`.
    pub fn powers(&self, k: usize) -> Result<Vec<Self>> {
        let n = self.require_square()?;
        let mut out = Vec::with_capacity(k + 1);
        out.push(Matrix::identity(self.ring.clone(), n));
        for i in 0..k {
            let next = out[i].mul(self)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.ring.clone(), self.cols, self.rows, |i, j| {
            self.at(j, i).clone()
        })
    }

    /// Sum of the diagonal entries.
    pub fn trace(&self) -> Result<R::Elem> {
        let n = self.require_square()?;
        Ok((0..n).fold(self.ring.zero(), |acc, i| self.ring.add(&acc, self.at(i, i))))
    }

    /// Applies `f` to every entry, staying in the same ring.
    pub fn map(&self, f: impl Fn(&R::Elem) -> R::Elem) -> Self {
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Applies `f` entrywise, landing in the ring `target`.
    pub fn map_into<S: Ring>(&self, target: S, f: impl Fn(&R::Elem) -> S::Elem) -> Matrix<S> {
        Matrix {
            ring: target,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// The matrix whose entry `(i, j)` is `f(i, j, a_ij)` (1-based `i, j`).
    pub fn map_indexed(&self, f: impl Fn(usize, usize, &R::Elem) -> R::Elem) -> Self {
        Matrix::from_fn(self.ring.clone(), self.rows, self.cols, |i, j| {
            f(i + 1, j + 1, self.at(i, j))
        })
    }

    /// The matrix with row `j` (1-based) replaced by the `1 x cols` matrix `row`.
    pub fn with_row(&self, j: usize, row: &Self) -> Result<Self> {
        self.check_row(j)?;
        self.same_ring(row)?;
        if row.rows != 1 || row.cols != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "replacement row is {}x{}, expected 1x{}",
                row.rows, row.cols, self.cols
            )));
        }
        let mut out = self.clone();
        let start = (j - 1) * self.cols;
        out.data[start..start + self.cols].clone_from_slice(&row.data);
        Ok(out)
    }
}

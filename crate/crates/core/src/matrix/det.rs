use itertools::Itertools;

use super::Matrix;
use crate::error::{Error, Result};
use crate::ring::Ring;

/// Largest side length accepted by [`Matrix::det_leibniz`].
pub const LEIBNIZ_MAX_N: usize = 8;

/// Largest side length accepted by [`Matrix::det`]; the subset table has
/// `2^n` entries.
pub const DET_MAX_N: usize = 24;

impl<R: Ring> Matrix<R> {
    /// Determinant without division, valid over every commutative ring.
    ///
    /// Expands along rows top to bottom. `table[S]` holds the determinant of
    /// the top `|S|` rows restricted to the column set `S`; adding column `j`
    /// for the next row contributes `(-1)^{#(s in S, s > j)} a_{|S|, j}`.
    /// Cost is `O(n 2^n)` ring multiplications.
    pub fn det(&self) -> Result<R::Elem> {
        let n = self.require_square()?;
        if n > DET_MAX_N {
            return Err(Error::TooLarge(format!(
                "determinant of a {n}x{n} matrix (limit {DET_MAX_N})"
            )));
        }
        let ring = &self.ring;
        let full = 1usize << n;
        let mut table = vec![ring.zero(); full];
        table[0] = ring.one();
        for mask in 0..full - 1 {
            if ring.is_zero(&table[mask]) {
                continue;
            }
            let row = mask.count_ones() as usize;
            let partial = table[mask].clone();
            for j in 0..n {
                let bit = 1usize << j;
                if mask & bit != 0 {
                    continue;
                }
                let a = self.at(row, j);
                if ring.is_zero(a) {
                    continue;
                }
                let term = ring.mul(a, &partial);
                let above = (mask >> (j + 1)).count_ones();
                let slot = &mut table[mask | bit];
                *slot = if above % 2 == 0 {
                    ring.add(slot, &term)
                } else {
                    ring.sub(slot, &term)
                };
            }
        }
        Ok(table.pop().expect("table has 2^n >= 1 entries"))
    }

    /// The Leibniz permutation sum, term by term. Kept as an independent
    /// check on [`Matrix::det`]; refuses `n > 8`.
    pub fn det_leibniz(&self) -> Result<R::Elem> {
        let n = self.require_square()?;
        if n > LEIBNIZ_MAX_N {
            return Err(Error::TooLarge(format!(
                "Leibniz expansion of a {n}x{n} matrix (limit {LEIBNIZ_MAX_N})"
            )));
        }
        let ring = &self.ring;
        let mut total = ring.zero();
        for sigma in (0..n).permutations(n) {
            let term = (0..n).fold(ring.one(), |acc, i| ring.mul(&acc, self.at(i, sigma[i])));
            if permutation_is_odd(&sigma) {
                total = ring.sub(&total, &term);
            } else {
                total = ring.add(&total, &term);
            }
        }
        Ok(total)
    }

    /// `A_{~i,~j}`: the matrix with row `i` and column `j` crossed out.
    pub fn minor_remove(&self, i: usize, j: usize) -> Result<Self> {
        self.check_row(i)?;
        self.check_col(j)?;
        let rows: Vec<usize> = (1..=self.rows).filter(|&r| r != i).collect();
        let cols: Vec<usize> = (1..=self.cols).filter(|&c| c != j).collect();
        self.submatrix(&rows, &cols)
    }

    /// The matrix `(a_{rows[x], cols[y]})`. Indices are 1-based and may
    /// repeat or come in any order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        for &i in rows {
            self.check_row(i)?;
        }
        for &j in cols {
            self.check_col(j)?;
        }
        Ok(Matrix::from_fn(self.ring.clone(), rows.len(), cols.len(), |x, y| {
            self.at(rows[x] - 1, cols[y] - 1).clone()
        }))
    }

    /// `adj A`, whose `(i, j)` entry is `(-1)^{i+j} det(A_{~j,~i})`.
    pub fn adjugate(&self) -> Result<Self> {
        let n = self.require_square()?;
        let ring = &self.ring;
        let mut data = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                let cofactor = self.minor_remove(j, i)?.det()?;
                data.push(if (i + j) % 2 == 0 {
                    cofactor
                } else {
                    ring.neg(&cofactor)
                });
            }
        }
        Ok(Matrix {
            ring: ring.clone(),
            rows: n,
            cols: n,
            data,
        })
    }
}

fn permutation_is_odd(sigma: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..sigma.len() {
        for j in i + 1..sigma.len() {
            if sigma[i] > sigma[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

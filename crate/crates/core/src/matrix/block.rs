use super::Matrix;
use crate::error::{Error, Result};
use crate::ring::Ring;

/// Four blocks `A` (n x m), `B` (n x m'), `C` (n' x m), `D` (n' x m') that
/// glue into the `(n+n') x (m+m')` matrix `((A, B), (C, D))`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockQuad<R: Ring> {
    pub a: Matrix<R>,
    pub b: Matrix<R>,
    pub c: Matrix<R>,
    pub d: Matrix<R>,
}

impl<R: Ring> BlockQuad<R> {
    pub fn new(a: Matrix<R>, b: Matrix<R>, c: Matrix<R>, d: Matrix<R>) -> Self {
        BlockQuad { a, b, c, d }
    }

    /// Glues the four blocks together.
    pub fn glue(&self) -> Result<Matrix<R>> {
        let BlockQuad { a, b, c, d } = self;
        for other in [b, c, d] {
            a.same_ring(other)?;
        }
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::DimensionMismatch(format!(
                "blocks {}x{}, {}x{}, {}x{}, {}x{} do not conform",
                a.rows, a.cols, b.rows, b.cols, c.rows, c.cols, d.rows, d.cols
            )));
        }
        let (top, left) = (a.rows, a.cols);
        Ok(Matrix::from_fn(
            a.ring.clone(),
            top + c.rows,
            left + b.cols,
            |i, j| match (i < top, j < left) {
                (true, true) => a.at(i, j).clone(),
                (true, false) => b.at(i, j - left).clone(),
                (false, true) => c.at(i - top, j).clone(),
                (false, false) => d.at(i - top, j - left).clone(),
            },
        ))
    }
}

impl<R: Ring> Matrix<R> {
    /// Shorthand for [`BlockQuad::glue`].
    pub fn block2x2(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        BlockQuad::new(a.clone(), b.clone(), c.clone(), d.clone()).glue()
    }

    /// The sole entry of a `1 x 1` matrix.
    pub fn ent(&self) -> Result<R::Elem> {
        if (self.rows, self.cols) != (1, 1) {
            return Err(Error::DimensionMismatch(format!(
                "ent needs a 1x1 matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(self.data[0].clone())
    }

    /// Row `j` (1-based) as a `1 x cols` matrix.
    pub fn row(&self, j: usize) -> Result<Self> {
        self.check_row(j)?;
        let start = (j - 1) * self.cols;
        Ok(Matrix {
            ring: self.ring.clone(),
            rows: 1,
            cols: self.cols,
            data: self.data[start..start + self.cols].to_vec(),
        })
    }

    /// Column `j` (1-based) as a `rows x 1` matrix.
    pub fn col(&self, j: usize) -> Result<Self> {
        self.check_col(j)?;
        Ok(Matrix::from_fn(self.ring.clone(), self.rows, 1, |i, _| {
            self.at(i, j - 1).clone()
        }))
    }

    /// The `rows x cols` matrix with a single `1` at `(i, j)` (1-based).
    pub fn unit(ring: R, rows: usize, cols: usize, i: usize, j: usize) -> Result<Self> {
        let mut m = Matrix::zero(ring.clone(), rows, cols);
        m.set_entry(i, j, ring.one())?;
        Ok(m)
    }
}

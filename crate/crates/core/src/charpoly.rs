//! Characteristic polynomials, the coefficient matrices of `adj(tI - A)`,
//! and the trace recursion linking them.
//!
//! Throughout, `chi_A = det(tI_n - A)` and `c_j = [t^{n-j}] chi_A`, so that
//! `chi_A = sum_k c_{n-k} t^k` with `c_0 = 1` and `c_n = (-1)^n det A`.
//! `D_0, ..., D_{n-1}` are the matrices with `adj(tI_n - A) = sum_k t^k D_k`.
//! With `D_k = 0` outside `0..n` they satisfy
//! `c_{n-k} I_n = D_{k-1} - A D_k` for every integer `k`.

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::{PolyRing, Polynomial};
use crate::ring::Ring;

/// `chi_A` together with its coefficient family and the `D_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharPolyData<R: Ring> {
    pub n: usize,
    pub chi: Polynomial<R::Elem>,
    /// `c_0, ..., c_n`.
    pub c: Vec<R::Elem>,
    /// `D_0, ..., D_{n-1}`; empty when `n = 0`.
    pub d: Vec<Matrix<R>>,
}

impl<R: Ring> CharPolyData<R> {
    /// `c_j`, zero for `j` outside `0..=n`.
    pub fn c_at(&self, ring: &R, j: i64) -> R::Elem {
        usize::try_from(j)
            .ok()
            .and_then(|j| self.c.get(j).cloned())
            .unwrap_or_else(|| ring.zero())
    }

    /// `D_k`, the zero matrix for `k` outside `0..n`.
    pub fn d_at(&self, ring: &R, k: i64) -> Matrix<R> {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.d.get(k).cloned())
            .unwrap_or_else(|| Matrix::zero(ring.clone(), self.n, self.n))
    }
}

/// `tI_n - A` as a matrix over `R[t]`.
pub fn char_matrix<R: Ring>(a: &Matrix<R>) -> Result<Matrix<PolyRing<R>>> {
    let n = a.require_square()?;
    let pr = PolyRing::new(a.ring().clone());
    let t = Matrix::scalar(pr.clone(), n, pr.monomial(a.ring().one(), 1));
    t.sub(&pr.embed_matrix(a))
}

/// `chi_A = det(tI_n - A)`, computed by the division-free determinant over `R[t]`.
pub fn charpoly<R: Ring>(a: &Matrix<R>) -> Result<Polynomial<R::Elem>> {
    char_matrix(a)?.det()
}

fn coefficients_from_chi<R: Ring>(ring: &R, n: usize, chi: &Polynomial<R::Elem>) -> Vec<R::Elem> {
    let pr = PolyRing::new(ring.clone());
    (0..=n).map(|j| pr.coeff(chi, (n - j) as i64)).collect()
}

/// `D_{n-1} = I_n`, then `D_{k-1} = A D_k + c_{n-k} I_n` downwards.
fn d_recursion<R: Ring>(a: &Matrix<R>, c: &[R::Elem]) -> Result<Vec<Matrix<R>>> {
    let n = a.require_square()?;
    let ring = a.ring();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut d = vec![Matrix::zero(ring.clone(), n, n); n];
    d[n - 1] = Matrix::scalar(ring.clone(), n, c[0].clone());
    for k in (1..n).rev() {
        d[k - 1] = a
            .mul(&d[k])?
            .add(&Matrix::scalar(ring.clone(), n, c[n - k].clone()))?;
    }
    Ok(d)
}

/// `chi_A` from the determinant of `tI - A` over `R[t]`, with the `D_k` from
/// the descending recursion.
pub fn charpoly_direct<R: Ring>(a: &Matrix<R>) -> Result<CharPolyData<R>> {
    let n = a.require_square()?;
    let chi = charpoly(a)?;
    let c = coefficients_from_chi(a.ring(), n, &chi);
    let d = d_recursion(a, &c)?;
    Ok(CharPolyData { n, chi, c, d })
}

/// The `D_k` read off `adj(tI_n - A)` computed by cofactors over `R[t]`.
/// Independent of the recursion used by [`charpoly_direct`].
pub fn d_matrices_via_adjugate<R: Ring>(a: &Matrix<R>) -> Result<Vec<Matrix<R>>> {
    let n = a.require_square()?;
    let pr = PolyRing::new(a.ring().clone());
    let adj = char_matrix(a)?.adjugate()?;
    pr.coefficient_matrices(&adj, n)
}

/// Power traces `Tr(A^1), ..., Tr(A^k)`.
pub fn power_traces<R: Ring>(a: &Matrix<R>, k: usize) -> Result<Vec<R::Elem>> {
    let powers = a.powers(k)?;
    powers[1..].iter().map(Matrix::trace).collect()
}

/// The coefficients from the trace recursion
/// `c_k = -(1/k) sum_{i=1}^{k} Tr(A^i) c_{k-i}`; needs a Q-algebra.
pub fn charpoly_newton<R: Ring>(a: &Matrix<R>) -> Result<CharPolyData<R>> {
    let n = a.require_square()?;
    let ring = a.ring();
    if !ring.is_q_algebra() {
        return Err(Error::Unsupported(format!(
            "trace recursion divides by integers; {ring:?} is not a Q-algebra"
        )));
    }
    let traces = power_traces(a, n)?;
    let mut c = vec![ring.one()];
    for k in 1..=n {
        let s = (1..=k).fold(ring.zero(), |acc, i| {
            ring.add(&acc, &ring.mul(&traces[i - 1], &c[k - i]))
        });
        let ck = ring
            .try_div_int(&ring.neg(&s), &BigUint::from(k))
            .expect("Q-algebra checked above");
        c.push(ck);
    }
    let pr = PolyRing::new(ring.clone());
    let chi = pr.poly(c.iter().rev().cloned().collect());
    let d = d_recursion(a, &c)?;
    Ok(CharPolyData { n, chi, c, d })
}

/// `adj A = (-1)^{n-1} sum_{i=0}^{n-1} c_{n-1-i} A^i`, evaluated by Horner's rule.
pub fn adjugate_via_charpoly<R: Ring>(a: &Matrix<R>) -> Result<Matrix<R>> {
    let n = a.require_square()?;
    let ring = a.ring();
    if n == 0 {
        return Ok(Matrix::zero(ring.clone(), 0, 0));
    }
    let chi = charpoly(a)?;
    let c = coefficients_from_chi(ring, n, &chi);
    // sum_{i} c_{n-1-i} A^i with the highest power first
    let mut acc = Matrix::zero(ring.clone(), n, n);
    for i in (0..n).rev() {
        acc = acc
            .mul(a)?
            .add(&Matrix::scalar(ring.clone(), n, c[n - 1 - i].clone()))?;
    }
    Ok(if (n - 1) % 2 == 0 { acc } else { acc.neg() })
}

/// `k c_k + sum_{i=1}^{k} Tr(A^i) c_{k-i}` with `c_j = 0` outside `0..=n`.
pub fn trace_ch_residual<R: Ring>(a: &Matrix<R>, k: usize) -> Result<R::Elem> {
    let data = charpoly_direct(a)?;
    trace_ch_residual_with(a, &data, k)
}

/// As [`trace_ch_residual`], reusing already computed charpoly data.
pub fn trace_ch_residual_with<R: Ring>(
    a: &Matrix<R>,
    data: &CharPolyData<R>,
    k: usize,
) -> Result<R::Elem> {
    let ring = a.ring();
    let traces = power_traces(a, k)?;
    let mut total = ring.scale_int(&BigInt::from(k), &data.c_at(ring, k as i64));
    for i in 1..=k {
        let term = ring.mul(&traces[i - 1], &data.c_at(ring, (k - i) as i64));
        total = ring.add(&total, &term);
    }
    Ok(total)
}

/// `chi_A(A)`, which the Cayley-Hamilton theorem says is zero.
pub fn cayley_hamilton_residual<R: Ring>(a: &Matrix<R>) -> Result<Matrix<R>> {
    let chi = charpoly(a)?;
    PolyRing::new(a.ring().clone()).apply_matrix(&chi, a)
}

//! Dense univariate polynomials over any [`Ring`].
//!
//! `PolyRing<R>` is itself a [`Ring`], so a matrix over `R[t]` is just a
//! `Matrix<PolyRing<R>>`. That is how `det(tI - A)` and `adj(tI - A)` are
//! computed: the same determinant and adjugate code runs one level up.

use num_bigint::{BigInt, BigUint};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{PolynomialAlgebra, Ring};

/// A polynomial `c_0 + c_1 t + ... + c_d t^d` with no trailing zero
/// coefficients. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<E> {
    coeffs: Vec<E>,
}

impl<E> Polynomial<E> {
    /// Coefficients by ascending degree.
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// The polynomial ring `R[t]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyRing<R> {
    base: R,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    /// Builds a polynomial, dropping trailing zeros.
    pub fn poly(&self, coeffs: Vec<R::Elem>) -> Polynomial<R::Elem> {
        Polynomial {
            coeffs: trimmed(&self.base, coeffs),
        }
    }

    /// Like [`PolyRing::poly`] but rejects coefficients outside the base ring.
    pub fn try_poly(&self, coeffs: Vec<R::Elem>) -> Result<Polynomial<R::Elem>> {
        if let Some(bad) = coeffs.iter().find(|c| !self.base.contains(c)) {
            return Err(Error::RingMismatch(format!(
                "coefficient {bad:?} is not an element of {:?}",
                self.base
            )));
        }
        Ok(self.poly(coeffs))
    }

    pub fn constant(&self, c: R::Elem) -> Polynomial<R::Elem> {
        self.poly(vec![c])
    }

    /// `c t^k`.
    pub fn monomial(&self, c: R::Elem, k: usize) -> Polynomial<R::Elem> {
        let mut coeffs = vec![self.base.zero(); k];
        coeffs.push(c);
        self.poly(coeffs)
    }

    /// `[t^k] f`; zero for negative `k` and for `k` beyond the degree.
    pub fn coeff(&self, f: &Polynomial<R::Elem>, k: i64) -> R::Elem {
        usize::try_from(k)
            .ok()
            .and_then(|k| f.coeffs.get(k).cloned())
            .unwrap_or_else(|| self.base.zero())
    }

    pub fn derivative(&self, f: &Polynomial<R::Elem>) -> Polynomial<R::Elem> {
        Polynomial {
            coeffs: derivative_coeffs(&self.base, &f.coeffs),
        }
    }

    /// `f(0)`.
    pub fn eval_zero(&self, f: &Polynomial<R::Elem>) -> R::Elem {
        self.coeff(f, 0)
    }

    /// `f(x)` by Horner's rule.
    pub fn eval(&self, f: &Polynomial<R::Elem>, x: &R::Elem) -> R::Elem {
        f.coeffs.iter().rev().fold(self.base.zero(), |acc, c| {
            self.base.add(&self.base.mul(&acc, x), c)
        })
    }

    /// `f(A) = sum_k [t^k]f A^k`, evaluated by Horner's rule.
    pub fn apply_matrix(&self, f: &Polynomial<R::Elem>, a: &Matrix<R>) -> Result<Matrix<R>> {
        let n = a.require_square()?;
        if a.ring() != &self.base {
            return Err(Error::RingMismatch(
                "polynomial and matrix are over different rings".into(),
            ));
        }
        let mut acc = Matrix::zero(self.base.clone(), n, n);
        for c in f.coeffs.iter().rev() {
            acc = acc.mul(a)?.add(&Matrix::scalar(self.base.clone(), n, c.clone()))?;
        }
        Ok(acc)
    }

    /// Views a matrix over `R` as a matrix of constant polynomials.
    pub fn embed_matrix(&self, a: &Matrix<R>) -> Matrix<Self> {
        a.map_into(self.clone(), |x| self.constant(x.clone()))
    }

    /// Splits a matrix over `R[t]` as `sum_k t^k B_k` and returns
    /// `B_0, ..., B_{len-1}`; `len` must be at least one more than every
    /// entry degree.
    pub fn coefficient_matrices(&self, m: &Matrix<Self>, len: usize) -> Result<Vec<Matrix<R>>> {
        if let Some(too_big) = m.entries().iter().find(|e| e.coeffs.len() > len) {
            return Err(Error::InvalidArgument(format!(
                "entry of degree {} does not fit into {len} coefficient matrices",
                too_big.coeffs.len() - 1
            )));
        }
        Ok((0..len)
            .map(|k| m.map_into(self.base.clone(), |e| self.coeff(e, k as i64)))
            .collect())
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Polynomial<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Polynomial { coeffs: Vec::new() }
    }

    fn one(&self) -> Self::Elem {
        self.poly(vec![self.base.one()])
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Polynomial {
            coeffs: add_coeffs(&self.base, &a.coeffs, &b.coeffs),
        }
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Polynomial {
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        Polynomial {
            coeffs: mul_coeffs(&self.base, &a.coeffs, &b.coeffs),
        }
    }

    fn from_int(&self, k: &BigInt) -> Self::Elem {
        self.constant(self.base.from_int(k))
    }

    fn is_q_algebra(&self) -> bool {
        self.base.is_q_algebra()
    }

    fn div_int_unchecked(&self, x: &Self::Elem, k: &BigUint) -> Self::Elem {
        self.poly(
            x.coeffs
                .iter()
                .map(|c| self.base.div_int_unchecked(c, k))
                .collect(),
        )
    }

    fn characteristic(&self) -> BigUint {
        self.base.characteristic()
    }

    fn contains(&self, a: &Self::Elem) -> bool {
        a.coeffs.iter().all(|c| self.base.contains(c))
            && a.coeffs.last().is_none_or(|c| !self.base.is_zero(c))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.coeffs.is_empty()
    }

    fn encode(&self, a: &Self::Elem) -> Value {
        encode_coeffs(&self.base, &a.coeffs)
    }

    fn decode(&self, v: &Value) -> Result<Self::Elem> {
        Ok(Polynomial {
            coeffs: decode_coeffs(&self.base, v)?,
        })
    }
}

impl<R: Ring> PolynomialAlgebra for PolyRing<R> {
    fn formal_derivative(&self, a: &Self::Elem) -> Self::Elem {
        self.derivative(a)
    }

    fn indeterminate(&self) -> Self::Elem {
        self.monomial(self.base.one(), 1)
    }
}

// Coefficient-level kernels shared with the runtime-selected ring.

/// Wraps coefficients that are already trimmed.
pub(crate) fn from_trimmed_coeffs<E>(coeffs: Vec<E>) -> Polynomial<E> {
    Polynomial { coeffs }
}

pub(crate) fn trimmed<R: Ring>(base: &R, mut coeffs: Vec<R::Elem>) -> Vec<R::Elem> {
    while coeffs.last().is_some_and(|c| base.is_zero(c)) {
        coeffs.pop();
    }
    coeffs
}

pub(crate) fn add_coeffs<R: Ring>(base: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out: Vec<R::Elem> = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o = base.add(o, s);
    }
    trimmed(base, out)
}

/// Cauchy product: `[t^k](gh) = sum_{i=0}^{k} [t^i]g [t^{k-i}]h`.
pub(crate) fn mul_coeffs<R: Ring>(base: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![base.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if base.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = base.add(&out[i + j], &base.mul(x, y));
        }
    }
    trimmed(base, out)
}

pub(crate) fn derivative_coeffs<R: Ring>(base: &R, a: &[R::Elem]) -> Vec<R::Elem> {
    let out = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| base.scale_int(&BigInt::from(k), c))
        .collect();
    trimmed(base, out)
}

pub(crate) fn encode_coeffs<R: Ring>(base: &R, a: &[R::Elem]) -> Value {
    Value::Array(a.iter().map(|c| base.encode(c)).collect())
}

/// Accepts a coefficient array, a `{"coeffs":[...]}` object, or a bare base
/// element (read as a constant).
pub(crate) fn decode_coeffs<R: Ring>(base: &R, v: &Value) -> Result<Vec<R::Elem>> {
    let items = match v {
        Value::Array(items) => items,
        Value::Object(obj) if obj.contains_key("coeffs") => obj["coeffs"]
            .as_array()
            .ok_or_else(|| Error::parse("coeffs", "expected an array"))?,
        scalar => return Ok(trimmed(base, vec![base.decode(scalar)?])),
    };
    let coeffs = items
        .iter()
        .map(|c| base.decode(c))
        .collect::<Result<Vec<_>>>()?;
    Ok(trimmed(base, coeffs))
}

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::{Check, Identity, JsonRing, SubsetSelector, VerificationReport, Verifier};
use crate::charpoly::{
    adjugate_via_charpoly, char_matrix, charpoly, charpoly_direct, charpoly_newton,
    d_matrices_via_adjugate, trace_ch_residual_with,
};
use crate::error::{Error, Result};
use crate::json::encode_entries;
use crate::matrix::Matrix;
use crate::poly::PolyRing;
use crate::ring::Ring;

pub(super) fn echo_a<R: JsonRing>(a: &Matrix<R>) -> Value {
    json!({"ring": a.ring().descriptor_json(), "A": encode_entries(a)})
}

pub(super) fn same_square<R: Ring>(a: &Matrix<R>, others: &[&Matrix<R>]) -> Result<usize> {
    let n = a.require_square()?;
    for m in others {
        a.same_ring(m)?;
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "expected {n}x{n}, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
    }
    Ok(n)
}

impl Verifier {
    /// `A adj A = adj A A = det A I_n`.
    pub fn verify_adj_inverse<R: JsonRing>(&self, a: &Matrix<R>) -> Result<VerificationReport> {
        let n = a.require_square()?;
        let mut chk = self.check(Identity::AdjInverse);
        let adj = a.adjugate()?;
        let det_i = Matrix::scalar(a.ring().clone(), n, a.det()?);
        chk.matrix("A adj A", &a.mul(&adj)?, &det_i)?;
        chk.matrix("adj A A", &adj.mul(a)?, &det_i)?;
        Ok(chk.finish(echo_a(a)))
    }

    /// The cofactor adjugate equals `(-1)^{n-1} sum_i c_{n-1-i} A^i`.
    pub fn verify_adj_charpoly<R: JsonRing>(&self, a: &Matrix<R>) -> Result<VerificationReport> {
        let mut chk = self.check(Identity::AdjCharpoly);
        chk.matrix("adj A", &a.adjugate()?, &adjugate_via_charpoly(a)?)?;
        Ok(chk.finish(echo_a(a)))
    }

    /// `adj(AB) = adj B adj A`.
    pub fn verify_adj_product<R: JsonRing>(
        &self,
        a: &Matrix<R>,
        b: &Matrix<R>,
    ) -> Result<VerificationReport> {
        same_square(a, &[b])?;
        let mut chk = self.check(Identity::AdjProduct);
        let lhs = a.mul(b)?.adjugate()?;
        let rhs = b.adjugate()?.mul(&a.adjugate()?)?;
        chk.matrix("adj(AB)", &lhs, &rhs)?;
        let mut inputs = echo_a(a);
        inputs["B"] = encode_entries(b);
        Ok(chk.finish(inputs))
    }

    /// `det(adj A) = (det A)^{n-1}` for `n >= 1` and
    /// `adj(adj A) = (det A)^{n-2} A` for `n >= 2`.
    pub fn verify_adj_of_adj<R: JsonRing>(&self, a: &Matrix<R>) -> Result<VerificationReport> {
        let n = a.require_square()?;
        let mut chk = self.check(Identity::AdjOfAdj);
        if n == 0 {
            return Ok(VerificationReport::not_met(chk.name(), "needs n >= 1", echo_a(a)));
        }
        let ring = a.ring();
        let det = a.det()?;
        let adj = a.adjugate()?;
        chk.elem("det(adj A)", ring, &adj.det()?, &ring.pow(&det, n as u64 - 1));
        if n >= 2 {
            let rhs = a.scale(&ring.pow(&det, n as u64 - 2));
            chk.matrix("adj(adj A)", &adj.adjugate()?, &rhs)?;
        }
        Ok(chk.finish(echo_a(a)))
    }

    /// `adj(lambda A) = lambda^{n-1} adj A`; refuses `n = 0`.
    pub fn verify_adj_scalar<R: JsonRing>(
        &self,
        a: &Matrix<R>,
        lambda: &R::Elem,
    ) -> Result<VerificationReport> {
        let n = a.require_square()?;
        if n == 0 {
            return Err(Error::InvalidArgument(
                "adj(lambda A) needs a matrix of positive size".into(),
            ));
        }
        let ring = a.ring();
        let mut chk = self.check(Identity::AdjScalar);
        let lhs = a.scale(lambda).adjugate()?;
        let rhs = a.adjugate()?.scale(&ring.pow(lambda, n as u64 - 1));
        chk.matrix("adj(lambda A)", &lhs, &rhs)?;
        let mut inputs = echo_a(a);
        inputs["lambda"] = ring.encode(lambda);
        Ok(chk.finish(inputs))
    }

    /// `Tr(adj A) = (-1)^{n-1} c_{n-1}`.
    pub fn verify_adj_trace<R: JsonRing>(&self, a: &Matrix<R>) -> Result<VerificationReport> {
        let n = a.require_square()?;
        let ring = a.ring();
        let data = charpoly_direct(a)?;
        let mut chk = self.check(Identity::AdjTrace);
        let rhs = ring.mul(&ring.sign(n + 1), &data.c_at(ring, n as i64 - 1));
        chk.elem("Tr(adj A)", ring, &a.adjugate()?.trace()?, &rhs);
        Ok(chk.finish(echo_a(a)))
    }

    /// `c_1 = -Tr A`.
    pub fn verify_charpoly_c1<R: JsonRing>(&self, a: &Matrix<R>) -> Result<VerificationReport> {
        let ring = a.ring();
        let data = charpoly_direct(a)?;
        let mut chk = self.check(Identity::CharpolyC1);
        chk.elem("c_1", ring, &data.c_at(ring, 1), &ring.neg(&a.trace()?));
        Ok(chk.finish(echo_a(a)))
    }

    /// `Tr(D_k) = (k+1) c_{n-(k+1)}` for `k = 0, ..., n-1`.
    pub fn verify_trace_d<R: JsonRing>(&self, a: &Matrix<R>) -> Result<VerificationReport> {
        let n = a.require_square()?;
        let ring = a.ring();
        let data = charpoly_direct(a)?;
        let mut chk = self.check(Identity::TraceD);
        for k in 0..n {
            let rhs = ring.scale_int(&BigInt::from(k + 1), &data.c[n - k - 1]);
            chk.elem(format!("Tr(D_{k})"), ring, &data.d[k].trace()?, &rhs);
        }
        Ok(chk.finish(echo_a(a)))
    }

    /// `sum_{i=0}^{k} c_{k-i} A^i = D_{n-1-k}` for `k = 0, ..., n-1`.
    pub fn verify_d_partial_sums<R: JsonRing>(&self, a: &Matrix<R>) -> Result<VerificationReport> {
        let n = a.require_square()?;
        let ring = a.ring();
        let data = charpoly_direct(a)?;
        let powers = a.powers(n)?;
        let mut chk = self.check(Identity::DPartialSums);
        for k in 0..n {
            let mut partial = Matrix::zero(ring.clone(), n, n);
            for (i, p) in powers.iter().enumerate().take(k + 1) {
                partial = partial.add(&p.scale(&data.c[k - i]))?;
            }
            chk.matrix(format!("k={k}"), &partial, &data.d[n - 1 - k])?;
        }
        Ok(chk.finish(echo_a(a)))
    }

    /// The `D_k` from the descending recursion are the coefficient matrices
    /// of `adj(tI_n - A)`, and `c_{n-k} I_n = D_{k-1} - A D_k` for `k = 0, ..., n`.
    pub fn verify_d_expansion<R: JsonRing>(&self, a: &Matrix<R>) -> Result<VerificationReport> {
        let n = a.require_square()?;
        let ring = a.ring();
        let data = charpoly_direct(a)?;
        let oracle = d_matrices_via_adjugate(a)?;
        let mut chk = self.check(Identity::DExpansion);
        for k in 0..n {
            chk.matrix(format!("D_{k}"), &data.d[k], &oracle[k])?;
        }
        for k in 0..=n as i64 {
            let lhs = Matrix::scalar(ring.clone(), n, data.c_at(ring, n as i64 - k));
            let rhs = data.d_at(ring, k - 1).sub(&a.mul(&data.d_at(ring, k))?)?;
            chk.matrix(format!("recursion k={k}"), &lhs, &rhs)?;
        }
        Ok(chk.finish(echo_a(a)))
    }

    /// `chi_A(A) = 0`.
    pub fn verify_cayley_hamilton<R: JsonRing>(&self, a: &Matrix<R>) -> Result<VerificationReport> {
        let n = a.require_square()?;
        let pr = PolyRing::new(a.ring().clone());
        let mut chk = self.check(Identity::CayleyHamilton);
        let lhs = pr.apply_matrix(&charpoly(a)?, a)?;
        chk.matrix("chi_A(A)", &lhs, &Matrix::zero(a.ring().clone(), n, n))?;
        Ok(chk.finish(echo_a(a)))
    }

    /// `k c_k + sum_{i=1}^{k} Tr(A^i) c_{k-i} = 0` for `k = 0, ..., kmax`.
    pub fn verify_trace_cayley_hamilton<R: JsonRing>(
        &self,
        a: &Matrix<R>,
        kmax: usize,
    ) -> Result<VerificationReport> {
        let ring = a.ring();
        let data = charpoly_direct(a)?;
        let mut chk = self.check(Identity::TraceCayleyHamilton);
        for k in 0..=kmax {
            let lhs = trace_ch_residual_with(a, &data, k)?;
            chk.elem(format!("k={k}"), ring, &lhs, &ring.zero());
        }
        let mut inputs = echo_a(a);
        inputs["kmax"] = json!(kmax);
        Ok(chk.finish(inputs))
    }

    /// The trace recursion reproduces `chi_A`, the `c_j` and the `D_k`; needs a Q-algebra.
    pub fn verify_charpoly_newton<R: JsonRing>(&self, a: &Matrix<R>) -> Result<VerificationReport> {
        let n = a.require_square()?;
        let ring = a.ring();
        let mut chk = self.check(Identity::CharpolyNewton);
        if !ring.is_q_algebra() {
            return Ok(VerificationReport::not_met(
                chk.name(),
                "ring is not a Q-algebra",
                echo_a(a),
            ));
        }
        let direct = charpoly_direct(a)?;
        let newton = charpoly_newton(a)?;
        let pr = PolyRing::new(ring.clone());
        chk.elem("chi", &pr, &newton.chi, &direct.chi);
        for j in 0..=n {
            chk.elem(format!("c_{j}"), ring, &newton.c[j], &direct.c[j]);
        }
        for k in 0..n {
            chk.matrix(format!("D_{k}"), &newton.d[k], &direct.d[k])?;
        }
        Ok(chk.finish(echo_a(a)))
    }

    /// `d/dt chi_A = Tr(adj(tI_n - A))` over `R[t]`.
    pub fn verify_ddet<R: JsonRing>(&self, a: &Matrix<R>) -> Result<VerificationReport> {
        let pr = PolyRing::new(a.ring().clone());
        let mut chk = self.check(Identity::Ddet);
        let lhs = pr.derivative(&charpoly(a)?);
        let rhs = char_matrix(a)?.adjugate()?.trace()?;
        chk.elem("d/dt chi_A", &pr, &lhs, &rhs);
        Ok(chk.finish(echo_a(a)))
    }

    /// Jacobi's complementary minor theorem for one pair of index sets:
    /// `det(sub_{w(P)}^{w(Q)} adj A)
    ///   = (-1)^{sum P + sum Q} (det A)^{|Q|-1} det(sub_{w(~Q)}^{w(~P)} A)`.
    pub fn verify_jacobi<R: JsonRing>(
        &self,
        a: &Matrix<R>,
        p: &SubsetSelector,
        q: &SubsetSelector,
    ) -> Result<VerificationReport> {
        let n = a.require_square()?;
        check_pair(n, p, q)?;
        let mut chk = self.check(Identity::Jacobi);
        jacobi_part(&mut chk, a, &a.adjugate()?, &a.det()?, p, q)?;
        let mut inputs = echo_a(a);
        inputs["P"] = json!(p.members());
        inputs["Q"] = json!(q.members());
        Ok(chk.finish(inputs))
    }

    /// [`Verifier::verify_jacobi`] over every pair `|P| = |Q| >= 1`, collected
    /// into one report with a residual per pair.
    pub fn verify_jacobi_exhaustive<R: JsonRing>(
        &self,
        a: &Matrix<R>,
    ) -> Result<VerificationReport> {
        let n = a.require_square()?;
        let mut chk = self.check(Identity::Jacobi);
        if n == 0 {
            return Ok(VerificationReport::not_met(
                chk.name(),
                "no nonempty index sets when n = 0",
                echo_a(a),
            ));
        }
        let adj = a.adjugate()?;
        let det = a.det()?;
        for size in 1..=n {
            for p in SubsetSelector::all_of_size(n, size) {
                for q in SubsetSelector::all_of_size(n, size) {
                    jacobi_part(&mut chk, a, &adj, &det, &p, &q)?;
                }
            }
        }
        Ok(chk.finish(echo_a(a)))
    }
}

fn check_pair(n: usize, p: &SubsetSelector, q: &SubsetSelector) -> Result<()> {
    if p.n() != n || q.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "index sets drawn from 1..={} and 1..={} for a {n}x{n} matrix",
            p.n(),
            q.n()
        )));
    }
    if p.len() != q.len() {
        return Err(Error::InvalidArgument(format!(
            "|P| = {} differs from |Q| = {}",
            p.len(),
            q.len()
        )));
    }
    if p.is_empty() {
        return Err(Error::InvalidArgument("P and Q must be nonempty".into()));
    }
    Ok(())
}

fn jacobi_part<R: Ring>(
    chk: &mut Check,
    a: &Matrix<R>,
    adj: &Matrix<R>,
    det: &R::Elem,
    p: &SubsetSelector,
    q: &SubsetSelector,
) -> Result<()> {
    let ring = a.ring();
    let lhs = adj.submatrix(p.members(), q.members())?.det()?;
    let complement = a
        .submatrix(q.complement().members(), p.complement().members())?
        .det()?;
    let rhs = ring.product([
        &ring.sign(p.sum() + q.sum()),
        &ring.pow(det, q.len() as u64 - 1),
        &complement,
    ]);
    chk.elem(
        format!("P={:?} Q={:?}", p.members(), q.members()),
        ring,
        &lhs,
        &rhs,
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, IntegersMod};

    fn z(rows: &[Vec<i64>]) -> Matrix<Integers> {
        Matrix::from_i64_rows(Integers, rows).unwrap()
    }

    #[test]
    fn examples_pass() {
        let v = Verifier::new();
        let a = z(&[vec![1, 2], vec![3, 4]]);
        let swap = z(&[vec![0, 1], vec![1, 0]]);
        assert!(v.verify_adj_inverse(&a).unwrap().passed());
        assert!(v.verify_adj_charpoly(&a).unwrap().passed());
        assert!(v.verify_adj_product(&a, &swap).unwrap().passed());
        assert!(v.verify_adj_of_adj(&a).unwrap().passed());
        assert!(v.verify_adj_of_adj(&z(&[vec![1, 1], vec![1, 1]])).unwrap().passed());
        assert!(v.verify_adj_scalar(&a, &BigInt::from(-1)).unwrap().passed());
        assert!(v.verify_adj_trace(&a).unwrap().passed());
        assert!(v.verify_charpoly_c1(&a).unwrap().passed());
        assert!(v.verify_trace_d(&a).unwrap().passed());
        assert!(v.verify_d_partial_sums(&a).unwrap().passed());
        assert!(v.verify_d_expansion(&a).unwrap().passed());
        assert!(v.verify_cayley_hamilton(&a).unwrap().passed());
        assert!(v.verify_trace_cayley_hamilton(&a, 5).unwrap().passed());
        assert!(v.verify_ddet(&a).unwrap().passed());
        assert!(v.verify_jacobi_exhaustive(&a).unwrap().passed());
    }

    #[test]
    fn newton_gated_on_integers() {
        let r = Verifier::new()
            .verify_charpoly_newton(&z(&[vec![1]]))
            .unwrap();
        assert!(!r.hypothesis_met());
        assert_eq!(r.residual, None);
    }

    #[test]
    fn adj_scalar_refuses_empty() {
        let empty = Matrix::zero(Integers, 0, 0);
        assert!(Verifier::new()
            .verify_adj_scalar(&empty, &BigInt::from(2))
            .is_err());
    }

    #[test]
    fn jacobi_single_pair() {
        let a = z(&[vec![1, 2], vec![3, 4]]);
        let one = SubsetSelector::new(2, [1]).unwrap();
        let r = Verifier::new().verify_jacobi(&a, &one, &one).unwrap();
        assert!(r.passed());
        assert_eq!(r.residual, Some(json!("0")));
        let empty = SubsetSelector::new(2, []).unwrap();
        assert!(Verifier::new().verify_jacobi(&a, &empty, &empty).is_err());
        let two = SubsetSelector::full(2);
        assert!(Verifier::new().verify_jacobi(&a, &one, &two).is_err());
    }

    #[test]
    fn corruption_is_reported() {
        let m8 = IntegersMod::new(8).unwrap();
        let a = Matrix::from_i64_rows(m8, &[vec![1, 2], vec![3, 4]]).unwrap();
        let v = Verifier::corrupting(Some(Identity::AdjInverse));
        let r = v.verify_adj_inverse(&a).unwrap();
        assert!(r.failed());
        assert_eq!(r.residual.unwrap()["A adj A"], json!([["1", "0"], ["0", "0"]]));
        assert!(v.verify_adj_charpoly(&a).unwrap().passed());
    }
}

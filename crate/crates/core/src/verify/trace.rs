use num_bigint::{BigInt, BigUint};
use serde_json::json;

use super::adjugate::{echo_a, same_square};
use super::{multinomial, Identity, JsonRing, MultiIndex, VerificationReport, Verifier};
use crate::error::{Error, Result};
use crate::json::encode_entries;
use crate::matrix::Matrix;
use crate::ring::is_prime;

/// Largest number of index tuples [`Verifier::verify_trace_multinomial`] will sum over.
pub const MULTINOMIAL_MAX_TERMS: u64 = 100_000;

impl Verifier {
    /// `(Tr A)^m = sum over (i_1..i_n) with sum m of
    /// (m; i_1..i_n) det(M_{i_1..i_n})`, where row `j` of `M_{i_1..i_n}` is
    /// row `j` of `A^{i_j}`.
    pub fn verify_trace_multinomial<R: JsonRing>(
        &self,
        a: &Matrix<R>,
        m: usize,
    ) -> Result<VerificationReport> {
        let n = a.require_square()?;
        let count = MultiIndex::count(m, n);
        if count > BigInt::from(MULTINOMIAL_MAX_TERMS) {
            return Err(Error::TooLarge(format!(
                "{count} index tuples for m = {m}, n = {n} (limit {MULTINOMIAL_MAX_TERMS})"
            )));
        }
        let ring = a.ring();
        let powers = a.powers(m)?;
        let mut rhs = ring.zero();
        for idx in MultiIndex::compositions(m, n) {
            let mut rows = Vec::with_capacity(n * n);
            for (j, &i) in idx.parts().iter().enumerate() {
                rows.extend_from_slice(powers[i].row(j + 1)?.entries());
            }
            let mi = Matrix::from_vec(ring.clone(), n, n, rows)?;
            let term = ring.scale_int(&multinomial(m, &idx)?, &mi.det()?);
            rhs = ring.add(&rhs, &term);
        }
        let mut chk = self.check(Identity::TraceMultinomial);
        chk.elem(format!("(Tr A)^{m}"), ring, &ring.pow(&a.trace()?, m as u64), &rhs);
        let mut inputs = echo_a(a);
        inputs["m"] = json!(m);
        Ok(chk.finish(inputs))
    }

    /// `sum_j det(B'_j) = Tr(A) det(B)`, where `B'_j` is `B` with row `j`
    /// replaced by row `j` of `BA`.
    pub fn verify_row_replacement<R: JsonRing>(
        &self,
        a: &Matrix<R>,
        b: &Matrix<R>,
    ) -> Result<VerificationReport> {
        let n = same_square(a, &[b])?;
        let ring = a.ring();
        let ba = b.mul(a)?;
        let mut lhs = ring.zero();
        for j in 1..=n {
            lhs = ring.add(&lhs, &b.with_row(j, &ba.row(j)?)?.det()?);
        }
        let mut chk = self.check(Identity::RowReplacement);
        chk.elem("sum det(B'_j)", ring, &lhs, &ring.mul(&a.trace()?, &b.det()?));
        let mut inputs = echo_a(a);
        inputs["B"] = encode_entries(b);
        Ok(chk.finish(inputs))
    }

    /// `Tr(A^p) = (Tr A)^p` for a prime `p` that is zero in the ring.
    /// A composite or unit `p` is an error; `p != 0` in the ring is an unmet hypothesis.
    pub fn verify_frobenius_trace<R: JsonRing>(
        &self,
        a: &Matrix<R>,
        p: u64,
    ) -> Result<VerificationReport> {
        a.require_square()?;
        if !is_prime(&BigUint::from(p)) {
            return Err(Error::InvalidArgument(format!("p = {p} is not prime")));
        }
        let ring = a.ring();
        let mut chk = self.check(Identity::Frobenius);
        let mut inputs = echo_a(a);
        inputs["p"] = json!(p);
        if !ring.is_zero(&ring.from_int(&BigInt::from(p))) {
            return Ok(VerificationReport::not_met(
                chk.name(),
                format!("{p} != 0 in the ring"),
                inputs,
            ));
        }
        let lhs = a.pow(p)?.trace()?;
        chk.elem(format!("Tr(A^{p})"), ring, &lhs, &ring.pow(&a.trace()?, p));
        Ok(chk.finish(inputs))
    }
}

use serde_json::json;

use super::adjugate::echo_a;
use super::{factorial, Identity, JsonRing, VerificationReport, Verifier};
use crate::charpoly::{charpoly, power_traces};
use crate::error::Result;
use crate::matrix::Matrix;
use crate::poly::PolyRing;
use crate::ring::Ring;

impl Verifier {
    /// If `Tr(A^i) = 0` for `i = 1, ..., n` then `n! A^n = 0` and
    /// `n! chi_A = n! t^n`; over a Q-algebra also `A^n = 0` and `chi_A = t^n`.
    pub fn verify_nilpotency_criterion<R: JsonRing>(
        &self,
        a: &Matrix<R>,
    ) -> Result<VerificationReport> {
        let n = a.require_square()?;
        let ring = a.ring();
        let mut chk = self.check(Identity::Nilpotency);
        let traces = power_traces(a, n)?;
        if let Some(i) = traces.iter().position(|t| !ring.is_zero(t)) {
            return Ok(VerificationReport::not_met(
                chk.name(),
                format!("Tr(A^{}) != 0", i + 1),
                echo_a(a),
            ));
        }
        let pr = PolyRing::new(ring.clone());
        let nf = factorial(n);
        let a_n = a.pow(n as u64)?;
        let chi = charpoly(a)?;
        let t_n = pr.monomial(ring.one(), n);
        let zero = Matrix::zero(ring.clone(), n, n);
        chk.matrix("n! A^n", &a_n.scale_int(&nf), &zero)?;
        chk.elem(
            "n! chi_A",
            &pr,
            &pr.scale_int(&nf, &chi),
            &pr.scale_int(&nf, &t_n),
        );
        if ring.is_q_algebra() {
            chk.matrix("A^n", &a_n, &zero)?;
            chk.elem("chi_A", &pr, &chi, &t_n);
        }
        Ok(chk.finish(echo_a(a)))
    }

    /// If `chi_A = t^n` then `Tr(A^i) = 0` for `i = 1, ..., imax`.
    pub fn verify_nilpotency_converse<R: JsonRing>(
        &self,
        a: &Matrix<R>,
        imax: usize,
    ) -> Result<VerificationReport> {
        let n = a.require_square()?;
        let ring = a.ring();
        let pr = PolyRing::new(ring.clone());
        let mut chk = self.check(Identity::NilpotencyConverse);
        let mut inputs = echo_a(a);
        inputs["imax"] = json!(imax);
        if charpoly(a)? != pr.monomial(ring.one(), n) {
            return Ok(VerificationReport::not_met(chk.name(), "chi_A != t^n", inputs));
        }
        for (i, t) in power_traces(a, imax)?.iter().enumerate() {
            chk.elem(format!("Tr(A^{})", i + 1), ring, t, &ring.zero());
        }
        Ok(chk.finish(inputs))
    }

    /// If `A^{k+1} = 0` then `(Tr A)^{nk+1} = 0` and
    /// `(Tr A)^{nk} = (nk)! / (k!)^n (det A)^k`.
    pub fn verify_almkvist<R: JsonRing>(
        &self,
        a: &Matrix<R>,
        k: usize,
    ) -> Result<VerificationReport> {
        let n = a.require_square()?;
        let ring = a.ring();
        let mut chk = self.check(Identity::Almkvist);
        let mut inputs = echo_a(a);
        inputs["k"] = json!(k);
        if !a.pow(k as u64 + 1)?.is_zero() {
            return Ok(VerificationReport::not_met(
                chk.name(),
                format!("A^{} != 0", k + 1),
                inputs,
            ));
        }
        let nk = (n * k) as u64;
        let tr = a.trace()?;
        chk.elem(
            format!("(Tr A)^{}", nk + 1),
            ring,
            &ring.pow(&tr, nk + 1),
            &ring.zero(),
        );
        let coefficient = factorial(n * k) / num_traits::pow(factorial(k), n);
        let rhs = ring.mul(&ring.from_int(&coefficient), &ring.pow(&a.det()?, k as u64));
        chk.elem(format!("(Tr A)^{nk}"), ring, &ring.pow(&tr, nk), &rhs);
        Ok(chk.finish(inputs))
    }
}

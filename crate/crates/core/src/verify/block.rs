use super::adjugate::{echo_a, same_square};
use super::{Identity, JsonRing, VerificationReport, Verifier};
use crate::error::{Error, Result};
use crate::json::encode_entries;
use crate::matrix::Matrix;
use crate::ring::Ring;

fn expect_shape<R: Ring>(m: &Matrix<R>, rows: usize, cols: usize, name: &str) -> Result<()> {
    if (m.rows(), m.cols()) != (rows, cols) {
        return Err(Error::DimensionMismatch(format!(
            "{name} should be {rows}x{cols}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

fn same_ring<R: Ring>(a: &Matrix<R>, others: &[&Matrix<R>]) -> Result<()> {
    others.iter().try_for_each(|m| a.same_ring(m))
}

impl Verifier {
    /// `det(AS + B) = det(SA + B)` when `AB = BA`.
    pub fn verify_commute_swap<R: JsonRing>(
        &self,
        a: &Matrix<R>,
        b: &Matrix<R>,
        s: &Matrix<R>,
    ) -> Result<VerificationReport> {
        same_square(a, &[b, s])?;
        let mut chk = self.check(Identity::CommuteSwap);
        let mut inputs = echo_a(a);
        inputs["B"] = encode_entries(b);
        inputs["S"] = encode_entries(s);
        if a.mul(b)? != b.mul(a)? {
            return Ok(VerificationReport::not_met(chk.name(), "AB != BA", inputs));
        }
        let lhs = a.mul(s)?.add(b)?.det()?;
        let rhs = s.mul(a)?.add(b)?.det()?;
        chk.elem("det(AS+B)", a.ring(), &lhs, &rhs);
        Ok(chk.finish(inputs))
    }

    /// `det((A, B), (C, D)) = det(AD - CB)` when `AC = CA`.
    pub fn verify_block_commute<R: JsonRing>(
        &self,
        a: &Matrix<R>,
        b: &Matrix<R>,
        c: &Matrix<R>,
        d: &Matrix<R>,
    ) -> Result<VerificationReport> {
        same_square(a, &[b, c, d])?;
        let mut chk = self.check(Identity::BlockCommute);
        let mut inputs = echo_a(a);
        inputs["B"] = encode_entries(b);
        inputs["C"] = encode_entries(c);
        inputs["D"] = encode_entries(d);
        if a.mul(c)? != c.mul(a)? {
            return Ok(VerificationReport::not_met(chk.name(), "AC != CA", inputs));
        }
        let lhs = Matrix::block2x2(a, b, c, d)?.det()?;
        let rhs = a.mul(d)?.sub(&c.mul(b)?)?.det()?;
        chk.elem("det((A,B),(C,D))", a.ring(), &lhs, &rhs);
        Ok(chk.finish(inputs))
    }

    /// `det((A, pv), (qu, D)) = det A det D - ent(u adj(A) p) ent(v adj(D) q)`
    /// for `A` n x n, `D` m x m, `p` n x 1, `q` m x 1, `v` 1 x m, `u` 1 x n.
    pub fn verify_rank1_block<R: JsonRing>(
        &self,
        a: &Matrix<R>,
        d: &Matrix<R>,
        p: &Matrix<R>,
        q: &Matrix<R>,
        v: &Matrix<R>,
        u: &Matrix<R>,
    ) -> Result<VerificationReport> {
        let n = a.require_square()?;
        let m = d.require_square()?;
        same_ring(a, &[d, p, q, v, u])?;
        expect_shape(p, n, 1, "p")?;
        expect_shape(q, m, 1, "q")?;
        expect_shape(v, 1, m, "v")?;
        expect_shape(u, 1, n, "u")?;
        let ring = a.ring();
        let mut chk = self.check(Identity::Rank1Block);
        let lhs = Matrix::block2x2(a, &p.mul(v)?, &q.mul(u)?, d)?.det()?;
        let left = u.mul(&a.adjugate()?)?.mul(p)?.ent()?;
        let right = v.mul(&d.adjugate()?)?.mul(q)?.ent()?;
        let rhs = ring.sub(
            &ring.mul(&a.det()?, &d.det()?),
            &ring.mul(&left, &right),
        );
        chk.elem("det((A,pv),(qu,D))", ring, &lhs, &rhs);
        let mut inputs = echo_a(a);
        for (key, mat) in [("D", d), ("p", p), ("q", q), ("v", v), ("u", u)] {
            inputs[key] = encode_entries(mat);
        }
        Ok(chk.finish(inputs))
    }

    /// `det((A, u), (v, h)) = h det A - ent(v adj(A) u)` for a column `u`,
    /// a row `v` and a scalar `h`.
    pub fn verify_bordered<R: JsonRing>(
        &self,
        a: &Matrix<R>,
        u: &Matrix<R>,
        v: &Matrix<R>,
        h: &R::Elem,
    ) -> Result<VerificationReport> {
        let n = a.require_square()?;
        same_ring(a, &[u, v])?;
        expect_shape(u, n, 1, "u")?;
        expect_shape(v, 1, n, "v")?;
        let ring = a.ring();
        let mut chk = self.check(Identity::Bordered);
        let hm = Matrix::scalar(ring.clone(), 1, h.clone());
        let lhs = Matrix::block2x2(a, u, v, &hm)?.det()?;
        let rhs = ring.sub(
            &ring.mul(h, &a.det()?),
            &v.mul(&a.adjugate()?)?.mul(u)?.ent()?,
        );
        chk.elem("det((A,u),(v,h))", ring, &lhs, &rhs);
        let mut inputs = echo_a(a);
        inputs["u"] = encode_entries(u);
        inputs["v"] = encode_entries(v);
        inputs["h"] = ring.encode(h);
        Ok(chk.finish(inputs))
    }

    /// With `B` the n x m matrix having a single 1 at `(n, 1)` and `C` the
    /// m x n matrix having a single 1 at `(1, n)`:
    /// `det((A, B), (C, D)) = det A det D - det(A_{~n,~n}) det(D_{~1,~1})`.
    pub fn verify_block_indicator<R: JsonRing>(
        &self,
        a: &Matrix<R>,
        d: &Matrix<R>,
    ) -> Result<VerificationReport> {
        let n = a.require_square()?;
        let m = d.require_square()?;
        a.same_ring(d)?;
        if n == 0 || m == 0 {
            return Err(Error::InvalidArgument(
                "both diagonal blocks must be nonempty".into(),
            ));
        }
        let ring = a.ring();
        let b = Matrix::unit(ring.clone(), n, m, n, 1)?;
        let c = Matrix::unit(ring.clone(), m, n, 1, n)?;
        let mut chk = self.check(Identity::BlockIndicator);
        let lhs = Matrix::block2x2(a, &b, &c, d)?.det()?;
        let rhs = ring.sub(
            &ring.mul(&a.det()?, &d.det()?),
            &ring.mul(&a.minor_remove(n, n)?.det()?, &d.minor_remove(1, 1)?.det()?),
        );
        chk.elem("det((A,B),(C,D))", ring, &lhs, &rhs);
        let mut inputs = echo_a(a);
        inputs["D"] = encode_entries(d);
        Ok(chk.finish(inputs))
    }

    /// `det(A + uv) = det A + ent(v adj(A) u)` for a column `u` and a row `v`.
    pub fn verify_matrix_det_lemma<R: JsonRing>(
        &self,
        a: &Matrix<R>,
        u: &Matrix<R>,
        v: &Matrix<R>,
    ) -> Result<VerificationReport> {
        let n = a.require_square()?;
        same_ring(a, &[u, v])?;
        expect_shape(u, n, 1, "u")?;
        expect_shape(v, 1, n, "v")?;
        let ring = a.ring();
        let mut chk = self.check(Identity::MatrixDetLemma);
        let lhs = a.add(&u.mul(v)?)?.det()?;
        let rhs = ring.add(&a.det()?, &v.mul(&a.adjugate()?)?.mul(u)?.ent()?);
        chk.elem("det(A+uv)", ring, &lhs, &rhs);
        let mut inputs = echo_a(a);
        inputs["u"] = encode_entries(u);
        inputs["v"] = encode_entries(v);
        Ok(chk.finish(inputs))
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use serde_json::json;

    use super::*;
    use crate::ring::Integers;

    fn z(rows: &[Vec<i64>]) -> Matrix<Integers> {
        Matrix::from_i64_rows(Integers, rows).unwrap()
    }

    #[test]
    fn bordered_example() {
        let a = z(&[vec![1, 2], vec![3, 4]]);
        let e2 = z(&[vec![0], vec![1]]);
        let r = Verifier::new()
            .verify_bordered(&a, &e2, &e2.transpose(), &BigInt::from(0))
            .unwrap();
        assert!(r.passed());
        let glued = Matrix::block2x2(&a, &e2, &e2.transpose(), &z(&[vec![0]])).unwrap();
        assert_eq!(glued.det_leibniz().unwrap(), BigInt::from(-1));
    }

    #[test]
    fn commuting_hypothesis() {
        let a = z(&[vec![1, 2], vec![3, 4]]);
        let b = z(&[vec![0, 1], vec![1, 0]]);
        let v = Verifier::new();
        assert!(!v.verify_commute_swap(&a, &b, &b).unwrap().hypothesis_met());
        let a2 = a.mul(&a).unwrap();
        assert!(v.verify_commute_swap(&a, &a2, &b).unwrap().passed());
        assert!(!v.verify_block_commute(&a, &b, &b, &a).unwrap().hypothesis_met());
        assert!(v.verify_block_commute(&a, &b, &a2, &b).unwrap().passed());
    }

    #[test]
    fn scalar_blocks() {
        let s = |x| z(&[vec![x]]);
        let r = Verifier::new()
            .verify_block_commute(&s(2), &s(3), &s(5), &s(7))
            .unwrap();
        assert!(r.passed());
    }

    #[test]
    fn indicator_and_rank_one() {
        let a = z(&[vec![1, 2], vec![3, 4]]);
        let d = z(&[vec![2, 0, 1], vec![1, 1, 0], vec![0, 3, 1]]);
        let v = Verifier::new();
        assert!(v.verify_block_indicator(&a, &d).unwrap().passed());
        let p = z(&[vec![0], vec![0]]);
        let q = z(&[vec![1], vec![2], vec![3]]);
        let row3 = z(&[vec![1, 1, 1]]);
        let row2 = z(&[vec![4, 5]]);
        assert!(v.verify_rank1_block(&a, &d, &p, &q, &row3, &row2).unwrap().passed());
        assert!(v.verify_rank1_block(&a, &d, &q, &q, &row3, &row2).is_err());
    }

    #[test]
    fn det_lemma() {
        let e1 = z(&[vec![1], vec![0]]);
        let id = Matrix::identity(Integers, 2);
        let r = Verifier::new()
            .verify_matrix_det_lemma(&id, &e1, &e1.transpose())
            .unwrap();
        assert!(r.passed());
        assert_eq!(r.inputs["u"], json!([["1"], ["0"]]));
    }
}

//! Derivations on commutative algebras and the derivative-of-determinant
//! formulas.
//!
//! A derivation is represented by its action alone: a map `f` with
//! `f(a + b) = f(a) + f(b)` and `f(ab) = a f(b) + f(a) b`. Nothing enforces
//! the axioms at construction, so [`Verifier::verify_derivation_axioms`]
//! samples them. Linearity over the base ring is only sampled for integer
//! scalars; a general base-ring scalar is indistinguishable from any other
//! element through the ring interface.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::json::encode_entries;
use crate::matrix::Matrix;
use crate::ring::{PolynomialAlgebra, Ring, RingDescriptor, RingElement};
use crate::verify::{Identity, JsonRing, Status, VerificationReport, Verifier};

type DerivationFn<L> = dyn Fn(&<L as Ring>::Elem) -> <L as Ring>::Elem + Send + Sync;

/// A map `f: L -> L` meant to be a derivation.
pub struct Derivation<L: Ring> {
    algebra: L,
    label: Value,
    map: Arc<DerivationFn<L>>,
}

impl<L: Ring> Clone for Derivation<L> {
    fn clone(&self) -> Self {
        Derivation {
            algebra: self.algebra.clone(),
            label: self.label.clone(),
            map: Arc::clone(&self.map),
        }
    }
}

impl<L: Ring> fmt::Debug for Derivation<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Derivation")
            .field("algebra", &self.algebra)
            .field("label", &self.label)
            .finish_non_exhaustive()
    }
}

impl<L: Ring> Derivation<L> {
    /// Wraps an arbitrary map. `label` is echoed in reports.
    pub fn new(
        algebra: L,
        label: impl Into<Value>,
        map: impl Fn(&L::Elem) -> L::Elem + Send + Sync + 'static,
    ) -> Self {
        Derivation {
            algebra,
            label: label.into(),
            map: Arc::new(map),
        }
    }

    pub fn zero(algebra: L) -> Self
    where
        L: 'static,
    {
        let z = algebra.clone();
        Derivation::new(algebra, "zero", move |_| z.zero())
    }

    pub fn algebra(&self) -> &L {
        &self.algebra
    }

    pub fn label(&self) -> &Value {
        &self.label
    }

    pub fn apply(&self, a: &L::Elem) -> L::Elem {
        (self.map)(a)
    }

    /// `f` applied to every entry.
    pub fn apply_matrix(&self, a: &Matrix<L>) -> Matrix<L> {
        a.map(|x| self.apply(x))
    }
}

impl<L: PolynomialAlgebra + 'static> Derivation<L> {
    /// `d/dt`.
    pub fn ddt(algebra: L) -> Self {
        let r = algebra.clone();
        Derivation::new(algebra, "ddt", move |a| r.formal_derivative(a))
    }

    /// `g d/dt` for a fixed `g` in the algebra.
    pub fn g_ddt(algebra: L, g: L::Elem) -> Self {
        let r = algebra.clone();
        let label = json!({ "gddt": algebra.encode(&g) });
        Derivation::new(algebra, label, move |a| r.mul(&g, &r.formal_derivative(a)))
    }
}

impl Derivation<RingDescriptor> {
    /// Builds a derivation from its configuration label:
    /// `"zero"`, `"ddt"` or `{"gddt": <polynomial>}`.
    pub fn from_label(algebra: &RingDescriptor, label: &Value) -> Result<Self> {
        match label {
            Value::String(s) if s == "zero" => Ok(Derivation::zero(algebra.clone())),
            Value::String(s) if s == "ddt" => {
                require_polynomial(algebra)?;
                Ok(Derivation::ddt(algebra.clone()))
            }
            Value::Object(obj) if obj.len() == 1 && obj.contains_key("gddt") => {
                require_polynomial(algebra)?;
                let g = algebra.decode(&obj["gddt"])?;
                Ok(Derivation::g_ddt(algebra.clone(), g))
            }
            other => Err(Error::parse(
                "derivation",
                format!("expected \"zero\", \"ddt\" or {{\"gddt\": ...}}, found {other}"),
            )),
        }
    }
}

fn require_polynomial(algebra: &RingDescriptor) -> Result<()> {
    if algebra.is_polynomial() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "d/dt needs a polynomial ring, not {algebra}"
        )))
    }
}

/// The zero derivation, `d/dt`, and `g d/dt` when `g` is given.
/// Fails unless `algebra` is a polynomial ring.
pub fn make_standard_derivations(
    algebra: &RingDescriptor,
    g: Option<RingElement>,
) -> Result<Vec<Derivation<RingDescriptor>>> {
    require_polynomial(algebra)?;
    let mut out = vec![
        Derivation::zero(algebra.clone()),
        Derivation::ddt(algebra.clone()),
    ];
    if let Some(g) = g {
        if !algebra.contains(&g) {
            return Err(Error::RingMismatch(format!("g is not an element of {algebra}")));
        }
        out.push(Derivation::g_ddt(algebra.clone(), g));
    }
    Ok(out)
}

fn echo_f<L: JsonRing>(f: &Derivation<L>) -> Value {
    json!({"ring": f.algebra().descriptor_json(), "f": f.label()})
}

fn check_matrix<L: Ring>(f: &Derivation<L>, a: &Matrix<L>) -> Result<usize> {
    if a.ring() != f.algebra() {
        return Err(Error::RingMismatch(
            "matrix and derivation act on different rings".into(),
        ));
    }
    a.require_square()
}

impl Verifier {
    /// `f(a_1 ... a_n) = sum_i a_1 ... a_{i-1} f(a_i) a_{i+1} ... a_n`, and the
    /// commutative form `sum_k f(a_k) prod_{i != k} a_i`.
    pub fn verify_leibniz_chain<L: JsonRing>(
        &self,
        f: &Derivation<L>,
        elems: &[L::Elem],
    ) -> Result<VerificationReport> {
        let ring = f.algebra();
        if let Some(i) = elems.iter().position(|x| !ring.contains(x)) {
            return Err(Error::RingMismatch(format!(
                "element {i} does not belong to the derivation's algebra"
            )));
        }
        let mut chk = self.check(Identity::LeibnizChain);
        let lhs = f.apply(&ring.product(elems));
        let mut ordered = ring.zero();
        let mut commutative = ring.zero();
        for k in 0..elems.len() {
            let before = ring.product(&elems[..k]);
            let after = ring.product(&elems[k + 1..]);
            let fk = f.apply(&elems[k]);
            ordered = ring.add(&ordered, &ring.product([&before, &fk, &after]));
            let others = ring.product(
                elems
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != k)
                    .map(|(_, x)| x),
            );
            commutative = ring.add(&commutative, &ring.mul(&fk, &others));
        }
        chk.elem("ordered", ring, &lhs, &ordered);
        chk.elem("commutative", ring, &lhs, &commutative);
        let mut inputs = echo_f(f);
        inputs["elems"] = Value::Array(elems.iter().map(|x| ring.encode(x)).collect());
        Ok(chk.finish(inputs))
    }

    /// `f(det A) = Tr(f(A) adj A)` with `f` applied entrywise.
    pub fn verify_derivation_det<L: JsonRing>(
        &self,
        f: &Derivation<L>,
        a: &Matrix<L>,
    ) -> Result<VerificationReport> {
        check_matrix(f, a)?;
        let ring = f.algebra();
        let mut chk = self.check(Identity::DerivationDet);
        let lhs = f.apply(&a.det()?);
        let rhs = f.apply_matrix(a).mul(&a.adjugate()?)?.trace()?;
        chk.elem("f(det A)", ring, &lhs, &rhs);
        let mut inputs = echo_f(f);
        inputs["A"] = encode_entries(a);
        Ok(chk.finish(inputs))
    }

    /// `f(det A) = sum_k det A'_k`, where `A'_k` is `A` with `f` applied to row `k` only.
    pub fn verify_derivation_det_rows<L: JsonRing>(
        &self,
        f: &Derivation<L>,
        a: &Matrix<L>,
    ) -> Result<VerificationReport> {
        let n = check_matrix(f, a)?;
        let ring = f.algebra();
        let mut chk = self.check(Identity::DerivationDetRows);
        let lhs = f.apply(&a.det()?);
        let mut rhs = ring.zero();
        for k in 1..=n {
            let a_k = a.map_indexed(|i, _, x| if i == k { f.apply(x) } else { x.clone() });
            rhs = ring.add(&rhs, &a_k.det()?);
        }
        chk.elem("f(det A)", ring, &lhs, &rhs);
        let mut inputs = echo_f(f);
        inputs["A"] = encode_entries(a);
        Ok(chk.finish(inputs))
    }

    /// Samples the derivation axioms: additivity and the Leibniz rule on each
    /// pair, `f(1) = 0`, and `f(k a) = k f(a)` for each integer `k` and each
    /// first component `a`. The residual lists the violations.
    pub fn verify_derivation_axioms<L: JsonRing>(
        &self,
        f: &Derivation<L>,
        pairs: &[(L::Elem, L::Elem)],
        scalars: &[i64],
    ) -> Result<VerificationReport> {
        let ring = f.algebra();
        let mut violations = Vec::new();
        let mut record = |axiom: &str, lhs: L::Elem, rhs: L::Elem, sample: Value| {
            if lhs != rhs {
                violations.push(json!({
                    "axiom": axiom,
                    "sample": sample,
                    "lhs": ring.encode(&lhs),
                    "rhs": ring.encode(&rhs),
                }));
            }
        };
        record("unit", f.apply(&ring.one()), ring.zero(), Value::Null);
        for (a, b) in pairs {
            if !ring.contains(a) || !ring.contains(b) {
                return Err(Error::RingMismatch(
                    "sample does not belong to the derivation's algebra".into(),
                ));
            }
            let sample = json!([ring.encode(a), ring.encode(b)]);
            let (fa, fb) = (f.apply(a), f.apply(b));
            record(
                "additivity",
                f.apply(&ring.add(a, b)),
                ring.add(&fa, &fb),
                sample.clone(),
            );
            record(
                "leibniz",
                f.apply(&ring.mul(a, b)),
                ring.add(&ring.mul(a, &fb), &ring.mul(&fa, b)),
                sample,
            );
            for &k in scalars {
                let k = BigInt::from(k);
                record(
                    "integer-linearity",
                    f.apply(&ring.scale_int(&k, a)),
                    ring.scale_int(&k, &fa),
                    json!([ring.encode(a), k.to_string()]),
                );
            }
        }
        let status = if violations.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        let mut inputs = echo_f(f);
        inputs["pairs"] = json!(pairs.len());
        Ok(VerificationReport {
            identity: "derivation-axioms".into(),
            status,
            residual: Some(Value::Array(violations)),
            inputs,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;
    use crate::ring::{Integers, Rationals};

    fn zt() -> RingDescriptor {
        RingDescriptor::poly_over(RingDescriptor::Integers)
    }

    fn p(ring: &RingDescriptor, coeffs: &[i64]) -> RingElement {
        ring.poly(coeffs.iter().map(|&c| RingElement::Int(c.into())).collect())
            .unwrap()
    }

    #[test]
    fn standard_instances() {
        let r = zt();
        let fs = make_standard_derivations(&r, Some(r.t().unwrap())).unwrap();
        let t3 = p(&r, &[0, 0, 0, 1]);
        assert_eq!(fs[0].apply(&t3), r.zero());
        assert_eq!(fs[1].apply(&t3), p(&r, &[0, 0, 3]));
        assert_eq!(fs[2].apply(&p(&r, &[0, 0, 1])), p(&r, &[0, 0, 2]));
        assert_eq!(fs[2].label(), &json!({"gddt": ["0", "1"]}));
        assert!(make_standard_derivations(&RingDescriptor::Integers, None).is_err());
    }

    #[test]
    fn labels() {
        let r = zt();
        assert_eq!(Derivation::from_label(&r, &json!("ddt")).unwrap().label(), "ddt");
        let g = Derivation::from_label(&r, &json!({"gddt": ["1", "1"]})).unwrap();
        assert_eq!(g.apply(&r.t().unwrap()), p(&r, &[1, 1]));
        assert!(Derivation::from_label(&RingDescriptor::Rationals, &json!("ddt")).is_err());
        assert!(Derivation::from_label(&RingDescriptor::Rationals, &json!("zero")).is_ok());
        assert!(Derivation::from_label(&r, &json!("dx")).unwrap_err().is_parse());
    }

    #[test]
    fn leibniz_chain_examples() {
        let r = zt();
        let d = Derivation::ddt(r.clone());
        let v = Verifier::new();
        assert!(v.verify_leibniz_chain(&d, &[]).unwrap().passed());
        let t = r.t().unwrap();
        assert!(v.verify_leibniz_chain(&d, &[t.clone(), t.clone()]).unwrap().passed());
        let chain = [p(&r, &[1, 1]), p(&r, &[-1, 1]), t];
        assert!(v.verify_leibniz_chain(&d, &chain).unwrap().passed());
        let stray = RingElement::Int(3.into());
        assert!(v.verify_leibniz_chain(&d, &[stray]).is_err());
    }

    #[test]
    fn determinant_formulas() {
        let r = zt();
        let d = Derivation::ddt(r.clone());
        let t = r.t().unwrap();
        let one = r.one();
        let a = Matrix::from_rows(r.clone(), vec![vec![t.clone(), one.clone()], vec![one, t]])
            .unwrap();
        let v = Verifier::new();
        assert!(v.verify_derivation_det(&d, &a).unwrap().passed());
        assert!(v.verify_derivation_det_rows(&d, &a).unwrap().passed());
        let zero = Derivation::zero(r.clone());
        assert!(v.verify_derivation_det(&zero, &a).unwrap().passed());
        let other = Matrix::identity(RingDescriptor::Integers, 2);
        assert!(v.verify_derivation_det(&d, &other).is_err());
    }

    #[test]
    fn static_rings() {
        let pr = PolyRing::new(Rationals);
        let d = Derivation::ddt(pr.clone());
        let pairs = vec![(pr.indeterminate(), pr.constant(Rationals.from_i64(3)))];
        let r = Verifier::new().verify_derivation_axioms(&d, &pairs, &[2, -5]).unwrap();
        assert!(r.passed());
        assert_eq!(r.residual, Some(json!([])));

        // squaring is not a derivation
        let sq = Derivation::new(Integers, "square", |a: &BigInt| a * a);
        let pairs = vec![(BigInt::from(2), BigInt::from(3))];
        let r = Verifier::new().verify_derivation_axioms(&sq, &pairs, &[]).unwrap();
        assert!(r.failed());
    }
}

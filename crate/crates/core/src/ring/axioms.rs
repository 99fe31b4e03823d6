use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::verify::{JsonRing, Status, VerificationReport};

/// Evaluates the commutative ring axioms on each sample triple `(a, b, c)`.
/// The residual lists every violated axiom with its witness; it is empty
/// when the report passes.
pub fn axiom_spotcheck<R: JsonRing>(
    ring: &R,
    samples: &[(R::Elem, R::Elem, R::Elem)],
) -> Result<VerificationReport> {
    let mut violations = Vec::new();
    for (idx, (a, b, c)) in samples.iter().enumerate() {
        if let Some(pos) = [a, b, c].iter().position(|x| !ring.contains(x)) {
            return Err(Error::RingMismatch(format!(
                "sample {idx}, component {pos} is not a canonical element of {ring:?}"
            )));
        }
        let r = ring;
        let checks = [
            ("add-commutative", r.add(a, b), r.add(b, a)),
            ("mul-commutative", r.mul(a, b), r.mul(b, a)),
            ("add-associative", r.add(&r.add(a, b), c), r.add(a, &r.add(b, c))),
            ("mul-associative", r.mul(&r.mul(a, b), c), r.mul(a, &r.mul(b, c))),
            (
                "distributive",
                r.mul(a, &r.add(b, c)),
                r.add(&r.mul(a, b), &r.mul(a, c)),
            ),
            ("add-identity", r.add(a, &r.zero()), a.clone()),
            ("mul-identity", r.mul(a, &r.one()), a.clone()),
            ("add-inverse", r.add(a, &r.neg(a)), r.zero()),
            ("mul-zero", r.mul(a, &r.zero()), r.zero()),
        ];
        for (axiom, lhs, rhs) in checks {
            if lhs != rhs {
                violations.push(json!({
                    "axiom": axiom,
                    "sample": idx,
                    "lhs": r.encode(&lhs),
                    "rhs": r.encode(&rhs),
                }));
            }
        }
    }
    let encoded: Vec<Value> = samples
        .iter()
        .map(|(a, b, c)| json!([ring.encode(a), ring.encode(b), ring.encode(c)]))
        .collect();
    Ok(VerificationReport {
        identity: "ring-axioms".into(),
        status: if violations.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        },
        residual: Some(Value::Array(violations)),
        inputs: json!({"ring": ring.descriptor_json(), "samples": encoded}),
    })
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_rational::BigRational;

    use super::*;
    use crate::ring::{Integers, IntegersMod, Rationals, RingDescriptor, RingElement};

    #[test]
    fn examples() {
        let m6 = IntegersMod::new(6).unwrap();
        let i = |x: i64| BigInt::from(x);
        assert!(axiom_spotcheck(&m6, &[(i(2), i(3), i(5))]).unwrap().passed());
        assert!(axiom_spotcheck(&Integers, &[(i(0), i(0), i(0))]).unwrap().passed());
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let r = axiom_spotcheck(&Rationals, &[(q(1, 2), q(2, 3), q(-1, 1))]).unwrap();
        assert!(r.passed());
        assert_eq!(r.residual, Some(json!([])));
    }

    #[test]
    fn foreign_samples_rejected() {
        let m6 = IntegersMod::new(6).unwrap();
        let seven = BigInt::from(7);
        let zero = BigInt::from(0);
        assert!(matches!(
            axiom_spotcheck(&m6, &[(seven, zero.clone(), zero)]),
            Err(Error::RingMismatch(_))
        ));
        let rat = RingElement::Rat(BigRational::from_integer(1.into()));
        let int = RingElement::Int(1.into());
        assert!(axiom_spotcheck(&RingDescriptor::Integers, &[(int.clone(), int, rat)]).is_err());
    }
}

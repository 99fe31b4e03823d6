use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde_json::{json, Value};

use super::{Integers, IntegersMod, PolynomialAlgebra, Rationals, Ring};
use crate::error::{Error, Result};
use crate::json::{decode_bigint, modulus_json, RingJson};
use crate::poly::{self, Polynomial};

/// A commutative ring selected at runtime.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Integers,
    Mod(IntegersMod),
    Rationals,
    /// Polynomials in `t` over the boxed base ring.
    Poly(Box<RingDescriptor>),
}

/// An element of a [`RingDescriptor`] ring.
///
/// Integers and residues share the `Int` variant; residues are kept in
/// `[0, m)`. The ring decides how a value is interpreted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingElement {
    Int(BigInt),
    Rat(BigRational),
    Poly(Polynomial<RingElement>),
}

impl RingDescriptor {
    pub fn modular(m: impl Into<BigInt>) -> Result<Self> {
        Ok(RingDescriptor::Mod(IntegersMod::new(m)?))
    }

    pub fn poly_over(base: RingDescriptor) -> Self {
        RingDescriptor::Poly(Box::new(base))
    }

    /// How many polynomial layers wrap the innermost ring.
    pub fn depth(&self) -> usize {
        match self {
            RingDescriptor::Poly(b) => 1 + b.depth(),
            _ => 0,
        }
    }

    pub fn is_polynomial(&self) -> bool {
        matches!(self, RingDescriptor::Poly(_))
    }

    /// Parses either a JSON descriptor or the shorthand `int`, `rat`,
    /// `mod:<m>`, `poly:<base>` (e.g. `poly:mod:4`).
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('{') {
            let v: Value = serde_json::from_str(t)
                .map_err(|e| Error::parse("ring", e.to_string()))?;
            return Self::from_json(&v);
        }
        match t {
            "int" | "Z" => return Ok(RingDescriptor::Integers),
            "rat" | "Q" => return Ok(RingDescriptor::Rationals),
            _ => {}
        }
        if let Some(m) = t.strip_prefix("mod:") {
            let m: BigInt = m
                .trim()
                .parse()
                .map_err(|_| Error::parse("ring", format!("bad modulus `{m}`")))?;
            return Self::modular(m).map_err(|e| Error::parse("ring", e.to_string()));
        }
        if let Some(base) = t.strip_prefix("poly:") {
            return Ok(Self::poly_over(Self::parse(base)?));
        }
        Err(Error::parse("ring", format!("unknown ring `{text}`")))
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let kind = v
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::parse("ring.kind", "missing or not a string"))?;
        match kind {
            "int" => Ok(RingDescriptor::Integers),
            "rat" => Ok(RingDescriptor::Rationals),
            "mod" => {
                let m = decode_bigint(
                    v.get("m").ok_or_else(|| Error::parse("ring.m", "missing"))?,
                    "ring.m",
                )?;
                Self::modular(m).map_err(|e| Error::parse("ring.m", e.to_string()))
            }
            "poly" => {
                let base = v
                    .get("base")
                    .ok_or_else(|| Error::parse("ring.base", "missing"))?;
                Ok(Self::poly_over(Self::from_json(base)?))
            }
            other => Err(Error::parse("ring.kind", format!("unknown kind `{other}`"))),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            RingDescriptor::Integers => json!({"kind": "int"}),
            RingDescriptor::Rationals => json!({"kind": "rat"}),
            RingDescriptor::Mod(r) => json!({"kind": "mod", "m": modulus_json(r.modulus())}),
            RingDescriptor::Poly(b) => json!({"kind": "poly", "base": b.to_json()}),
        }
    }

    /// The element `t` of a polynomial ring.
    pub fn t(&self) -> Result<RingElement> {
        match self {
            RingDescriptor::Poly(b) => Ok(RingElement::Poly(poly_of(b, vec![b.zero(), b.one()]))),
            other => Err(Error::Unsupported(format!("{other} is not a polynomial ring"))),
        }
    }

    /// Wraps a coefficient list as an element of this polynomial ring.
    pub fn poly(&self, coeffs: Vec<RingElement>) -> Result<RingElement> {
        match self {
            RingDescriptor::Poly(b) => {
                if coeffs.iter().any(|c| !b.contains(c)) {
                    return Err(Error::RingMismatch(format!(
                        "coefficient outside {b}"
                    )));
                }
                Ok(RingElement::Poly(poly_of(b, coeffs)))
            }
            other => Err(Error::Unsupported(format!("{other} is not a polynomial ring"))),
        }
    }
}

fn poly_of(base: &RingDescriptor, coeffs: Vec<RingElement>) -> Polynomial<RingElement> {
    poly::from_trimmed_coeffs(poly::trimmed(base, coeffs))
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => write!(f, "Z"),
            RingDescriptor::Rationals => write!(f, "Q"),
            RingDescriptor::Mod(r) => write!(f, "Z/{}", r.modulus()),
            RingDescriptor::Poly(b) => write!(f, "({b})[t]"),
        }
    }
}

fn mismatch(ring: &RingDescriptor, a: &RingElement) -> ! {
    panic!("element {a:?} does not belong to ring {ring}")
}

macro_rules! binary {
    ($self:ident, $a:ident, $b:ident, $op:ident, $pk:path) => {
        match ($self, $a, $b) {
            (RingDescriptor::Integers, RingElement::Int(x), RingElement::Int(y)) => {
                RingElement::Int(Integers.$op(x, y))
            }
            (RingDescriptor::Mod(m), RingElement::Int(x), RingElement::Int(y)) => {
                RingElement::Int(m.$op(x, y))
            }
            (RingDescriptor::Rationals, RingElement::Rat(x), RingElement::Rat(y)) => {
                RingElement::Rat(Rationals.$op(x, y))
            }
            (RingDescriptor::Poly(base), RingElement::Poly(x), RingElement::Poly(y)) => {
                RingElement::Poly(poly::from_trimmed_coeffs($pk(&**base, x.coeffs(), y.coeffs())))
            }
            (r, a, b) if r.contains(a) => mismatch(r, b),
            (r, a, _) => mismatch(r, a),
        }
    };
}

impl Ring for RingDescriptor {
    type Elem = RingElement;

    fn zero(&self) -> RingElement {
        match self {
            RingDescriptor::Integers | RingDescriptor::Mod(_) => RingElement::Int(BigInt::from(0)),
            RingDescriptor::Rationals => RingElement::Rat(Rationals.zero()),
            RingDescriptor::Poly(_) => RingElement::Poly(poly::from_trimmed_coeffs(Vec::new())),
        }
    }

    fn one(&self) -> RingElement {
        self.from_int(&BigInt::from(1))
    }

    fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        binary!(self, a, b, add, poly::add_coeffs)
    }

    fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match self {
            RingDescriptor::Poly(_) => self.add(a, &self.neg(b)),
            _ => binary!(self, a, b, sub, poly::add_coeffs),
        }
    }

    fn neg(&self, a: &RingElement) -> RingElement {
        match (self, a) {
            (RingDescriptor::Integers, RingElement::Int(x)) => RingElement::Int(-x),
            (RingDescriptor::Mod(m), RingElement::Int(x)) => RingElement::Int(m.neg(x)),
            (RingDescriptor::Rationals, RingElement::Rat(x)) => RingElement::Rat(-x),
            (RingDescriptor::Poly(b), RingElement::Poly(p)) => RingElement::Poly(
                poly::from_trimmed_coeffs(p.coeffs().iter().map(|c| b.neg(c)).collect()),
            ),
            (r, a) => mismatch(r, a),
        }
    }

    fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        binary!(self, a, b, mul, poly::mul_coeffs)
    }

    fn from_int(&self, k: &BigInt) -> RingElement {
        match self {
            RingDescriptor::Integers => RingElement::Int(k.clone()),
            RingDescriptor::Mod(m) => RingElement::Int(m.from_int(k)),
            RingDescriptor::Rationals => RingElement::Rat(Rationals.from_int(k)),
            RingDescriptor::Poly(b) => RingElement::Poly(poly_of(b, vec![b.from_int(k)])),
        }
    }

    fn is_q_algebra(&self) -> bool {
        match self {
            RingDescriptor::Rationals => true,
            RingDescriptor::Poly(b) => b.is_q_algebra(),
            _ => false,
        }
    }

    fn div_int_unchecked(&self, x: &RingElement, k: &BigUint) -> RingElement {
        match (self, x) {
            (RingDescriptor::Rationals, RingElement::Rat(q)) => {
                RingElement::Rat(Rationals.div_int_unchecked(q, k))
            }
            (RingDescriptor::Poly(b), RingElement::Poly(p)) => RingElement::Poly(poly_of(
                b,
                p.coeffs().iter().map(|c| b.div_int_unchecked(c, k)).collect(),
            )),
            (r, a) => mismatch(r, a),
        }
    }

    fn characteristic(&self) -> BigUint {
        match self {
            RingDescriptor::Integers => Integers.characteristic(),
            RingDescriptor::Mod(m) => m.characteristic(),
            RingDescriptor::Rationals => Rationals.characteristic(),
            RingDescriptor::Poly(b) => b.characteristic(),
        }
    }

    fn contains(&self, a: &RingElement) -> bool {
        match (self, a) {
            (RingDescriptor::Integers, RingElement::Int(_)) => true,
            (RingDescriptor::Mod(m), RingElement::Int(x)) => m.contains(x),
            (RingDescriptor::Rationals, RingElement::Rat(x)) => Rationals.contains(x),
            (RingDescriptor::Poly(b), RingElement::Poly(p)) => {
                p.coeffs().iter().all(|c| b.contains(c))
                    && p.coeffs().last().is_none_or(|c| !b.is_zero(c))
            }
            _ => false,
        }
    }

    fn is_zero(&self, a: &RingElement) -> bool {
        match a {
            RingElement::Int(x) => num_traits::Zero::is_zero(x),
            RingElement::Rat(x) => num_traits::Zero::is_zero(x),
            RingElement::Poly(p) => p.is_zero(),
        }
    }

    fn encode(&self, a: &RingElement) -> Value {
        match (self, a) {
            (RingDescriptor::Integers, RingElement::Int(x)) => Integers.encode(x),
            (RingDescriptor::Mod(m), RingElement::Int(x)) => m.encode(x),
            (RingDescriptor::Rationals, RingElement::Rat(x)) => Rationals.encode(x),
            (RingDescriptor::Poly(b), RingElement::Poly(p)) => poly::encode_coeffs(&**b, p.coeffs()),
            (r, a) => mismatch(r, a),
        }
    }

    fn decode(&self, v: &Value) -> Result<RingElement> {
        Ok(match self {
            RingDescriptor::Integers => RingElement::Int(Integers.decode(v)?),
            RingDescriptor::Mod(m) => RingElement::Int(m.decode(v)?),
            RingDescriptor::Rationals => RingElement::Rat(Rationals.decode(v)?),
            RingDescriptor::Poly(b) => {
                RingElement::Poly(poly::from_trimmed_coeffs(poly::decode_coeffs(&**b, v)?))
            }
        })
    }
}

impl PolynomialAlgebra for RingDescriptor {
    /// Differentiates in the outermost indeterminate; every element of a
    /// non-polynomial ring is a constant and differentiates to zero.
    fn formal_derivative(&self, a: &RingElement) -> RingElement {
        match (self, a) {
            (RingDescriptor::Poly(b), RingElement::Poly(p)) => {
                RingElement::Poly(poly::from_trimmed_coeffs(poly::derivative_coeffs(&**b, p.coeffs())))
            }
            (RingDescriptor::Poly(_), a) => mismatch(self, a),
            _ => self.zero(),
        }
    }

    fn indeterminate(&self) -> RingElement {
        self.t().expect("indeterminate requested on a non-polynomial ring")
    }
}

impl RingJson for RingDescriptor {
    fn descriptor_json(&self) -> Value {
        self.to_json()
    }
}

//! JSON encodings for rings, elements, polynomials, matrices and
//! characteristic-polynomial data.
//!
//! Numerals are always emitted as decimal strings so that big integers never
//! pass through a floating-point or fixed-width number type. On input, plain
//! JSON integers are accepted as well.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::charpoly::CharPolyData;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::{PolyRing, Polynomial};
use crate::ring::Ring;

pub(crate) fn encode_bigint(a: &BigInt) -> Value {
    Value::String(a.to_string())
}

pub(crate) fn decode_bigint(v: &Value, field: &str) -> Result<BigInt> {
    match v {
        Value::String(s) => parse_bigint_str(s, field),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(Error::parse(field, format!("`{n}` is not an integer")))
            }
        }
        other => Err(Error::parse(
            field,
            format!("expected an integer, found {other}"),
        )),
    }
}

fn parse_bigint_str(s: &str, field: &str) -> Result<BigInt> {
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    t.parse::<BigInt>()
        .map_err(|_| Error::parse(field, format!("`{s}` is not a decimal integer")))
}

pub(crate) fn encode_rational(a: &BigRational) -> Value {
    json!({ "num": a.numer().to_string(), "den": a.denom().to_string() })
}

pub(crate) fn decode_rational(v: &Value, field: &str) -> Result<BigRational> {
    let (num, den) = match v {
        Value::Object(obj) => {
            let num = obj
                .get("num")
                .ok_or_else(|| Error::parse(field, "missing `num`"))?;
            let num = decode_bigint(num, &format!("{field}.num"))?;
            let den = match obj.get("den") {
                Some(d) => decode_bigint(d, &format!("{field}.den"))?,
                None => BigInt::from(1),
            };
            (num, den)
        }
        Value::String(s) => match s.split_once('/') {
            Some((n, d)) => (parse_bigint_str(n, field)?, parse_bigint_str(d, field)?),
            None => (parse_bigint_str(s, field)?, BigInt::from(1)),
        },
        other => (decode_bigint(other, field)?, BigInt::from(1)),
    };
    if den.is_zero() {
        return Err(Error::parse(field, "zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

fn decode_usize(v: &Value, field: &str) -> Result<usize> {
    let k = decode_bigint(v, field)?;
    usize::try_from(k).map_err(|_| Error::parse(field, "expected a nonnegative size"))
}

/// `{"coeffs":[...]}`, index = degree.
pub fn encode_polynomial<R: Ring>(base: &R, f: &Polynomial<R::Elem>) -> Value {
    json!({ "coeffs": f.coeffs().iter().map(|c| base.encode(c)).collect::<Vec<_>>() })
}

pub fn decode_polynomial<R: Ring>(base: &R, v: &Value) -> Result<Polynomial<R::Elem>> {
    PolyRing::new(base.clone()).decode(v)
}

/// `{"ring":..,"rows":n,"cols":m,"entries":[[..],..]}`.
pub fn encode_matrix<R: Ring + RingJson>(m: &Matrix<R>) -> Value {
    json!({
        "ring": m.ring().descriptor_json(),
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": encode_entries(m),
    })
}

/// The nested row arrays of a matrix, without the ring or shape.
pub fn encode_entries<R: Ring>(m: &Matrix<R>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array(
                    (0..m.cols())
                        .map(|j| m.ring().encode(m.at(i, j)))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// Decodes a matrix over a known ring. `rows`/`cols` are optional when they
/// can be read off the entries; a `ring` field, if present, is ignored here.
pub fn decode_matrix_over<R: Ring>(ring: &R, v: &Value) -> Result<Matrix<R>> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::parse("matrix", "expected a JSON object"))?;
    let entries = obj
        .get("entries")
        .ok_or_else(|| Error::parse("entries", "missing field"))?
        .as_array()
        .ok_or_else(|| Error::parse("entries", "expected an array of rows"))?;
    let rows = match obj.get("rows") {
        Some(r) => decode_usize(r, "rows")?,
        None => entries.len(),
    };
    if rows != entries.len() {
        return Err(Error::parse(
            "rows",
            format!("declared {rows} rows but `entries` has {}", entries.len()),
        ));
    }
    let mut data = Vec::new();
    let mut width: Option<usize> = match obj.get("cols") {
        Some(c) => Some(decode_usize(c, "cols")?),
        None => None,
    };
    for (i, row) in entries.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::parse(format!("entries[{i}]"), "expected an array"))?;
        match width {
            Some(w) if w != row.len() => {
                return Err(Error::parse(
                    format!("entries[{i}]"),
                    format!("row has {} entries, expected {w}", row.len()),
                ))
            }
            _ => width = Some(row.len()),
        }
        for (j, e) in row.iter().enumerate() {
            let x = ring.decode(e).map_err(|err| match err {
                Error::Parse { message, .. } => Error::parse(format!("entries[{i}][{j}]"), message),
                other => other,
            })?;
            data.push(x);
        }
    }
    Matrix::from_vec(ring.clone(), rows, width.unwrap_or(0), data)
}

/// `{"chi":<polynomial>,"c":[...],"D":[<matrix>,...]}`.
pub fn encode_charpoly<R: Ring + RingJson>(ring: &R, data: &CharPolyData<R>) -> Value {
    json!({
        "chi": encode_polynomial(ring, &data.chi),
        "c": data.c.iter().map(|x| ring.encode(x)).collect::<Vec<_>>(),
        "D": data.d.iter().map(encode_matrix).collect::<Vec<_>>(),
    })
}

pub fn decode_charpoly<R: Ring>(ring: &R, v: &Value) -> Result<CharPolyData<R>> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::parse("charpoly", "expected a JSON object"))?;
    let chi = decode_polynomial(
        ring,
        obj.get("chi").ok_or_else(|| Error::parse("chi", "missing field"))?,
    )?;
    let c = obj
        .get("c")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse("c", "expected an array"))?
        .iter()
        .map(|x| ring.decode(x))
        .collect::<Result<Vec<_>>>()?;
    let d = obj
        .get("D")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse("D", "expected an array"))?
        .iter()
        .map(|m| decode_matrix_over(ring, m))
        .collect::<Result<Vec<_>>>()?;
    let n = c.len().checked_sub(1).ok_or_else(|| Error::parse("c", "empty"))?;
    Ok(CharPolyData { n, chi, c, d })
}

/// Rings that can describe themselves as a ring-descriptor JSON value.
pub trait RingJson {
    fn descriptor_json(&self) -> Value;
}

impl RingJson for crate::ring::Integers {
    fn descriptor_json(&self) -> Value {
        json!({"kind": "int"})
    }
}

impl RingJson for crate::ring::Rationals {
    fn descriptor_json(&self) -> Value {
        json!({"kind": "rat"})
    }
}

impl RingJson for crate::ring::IntegersMod {
    fn descriptor_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("kind".into(), "mod".into());
        obj.insert("m".into(), modulus_json(self.modulus()));
        Value::Object(obj)
    }
}

impl<R: Ring + RingJson> RingJson for PolyRing<R> {
    fn descriptor_json(&self) -> Value {
        json!({"kind": "poly", "base": self.base().descriptor_json()})
    }
}

pub(crate) fn modulus_json(m: &BigInt) -> Value {
    match u64::try_from(m) {
        Ok(small) => Value::from(small),
        Err(_) => Value::String(m.to_string()),
    }
}

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde_json::Value;

use super::Ring;
use crate::error::Result;
use crate::json::{decode_bigint, encode_bigint};

/// The ring `Z` of arbitrary-precision integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::from(1)
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn from_int(&self, k: &BigInt) -> BigInt {
        k.clone()
    }

    fn characteristic(&self) -> BigUint {
        BigUint::zero()
    }

    fn contains(&self, _a: &BigInt) -> bool {
        true
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn encode(&self, a: &BigInt) -> Value {
        encode_bigint(a)
    }

    fn decode(&self, v: &Value) -> Result<BigInt> {
        decode_bigint(v, "element")
    }
}

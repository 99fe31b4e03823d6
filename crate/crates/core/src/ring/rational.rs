use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::Value;

use super::Ring;
use crate::error::Result;
use crate::json::{decode_rational, encode_rational};

/// The field `Q`, stored as reduced fractions with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(1))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn from_int(&self, k: &BigInt) -> BigRational {
        BigRational::from_integer(k.clone())
    }

    fn is_q_algebra(&self) -> bool {
        true
    }

    fn div_int_unchecked(&self, x: &BigRational, k: &BigUint) -> BigRational {
        x / BigRational::from_integer(BigInt::from(k.clone()))
    }

    fn characteristic(&self) -> BigUint {
        BigUint::zero()
    }

    fn contains(&self, a: &BigRational) -> bool {
        let reduced = BigRational::new(a.numer().clone(), a.denom().clone());
        a.denom() > &BigInt::zero() && reduced.numer() == a.numer() && reduced.denom() == a.denom()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn encode(&self, a: &BigRational) -> Value {
        encode_rational(a)
    }

    fn decode(&self, v: &Value) -> Result<BigRational> {
        decode_rational(v, "element")
    }
}

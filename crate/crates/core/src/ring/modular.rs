use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::Value;

use super::Ring;
use crate::error::{Error, Result};
use crate::json::{decode_bigint, encode_bigint};

/// The residue ring `Z/m` for a modulus `m >= 1` chosen at runtime.
///
/// `m = 1` gives the zero ring. Elements are residues in `[0, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegersMod {
    modulus: BigInt,
}

impl IntegersMod {
    pub fn new(modulus: impl Into<BigInt>) -> Result<Self> {
        let modulus = modulus.into();
        if modulus < BigInt::one() {
            return Err(Error::InvalidArgument(format!(
                "modulus must be at least 1, got {modulus}"
            )));
        }
        Ok(IntegersMod { modulus })
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    fn reduce(&self, a: BigInt) -> BigInt {
        a.mod_floor(&self.modulus)
    }
}

impl Ring for IntegersMod {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        self.reduce(BigInt::one())
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let s = a + b;
        if s >= self.modulus {
            s - &self.modulus
        } else {
            s
        }
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        if a.is_zero() {
            BigInt::zero()
        } else {
            &self.modulus - a
        }
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(a * b)
    }

    fn from_int(&self, k: &BigInt) -> BigInt {
        self.reduce(k.clone())
    }

    fn characteristic(&self) -> BigUint {
        self.modulus
            .to_biguint()
            .expect("modulus is positive by construction")
    }

    fn contains(&self, a: &BigInt) -> bool {
        a.sign() != Sign::Minus && *a < self.modulus
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn encode(&self, a: &BigInt) -> Value {
        encode_bigint(a)
    }

    /// Accepts any integer and reduces it into `[0, m)`.
    fn decode(&self, v: &Value) -> Result<BigInt> {
        Ok(self.reduce(decode_bigint(v, "element")?))
    }
}

use std::fmt::Debug;
use std::marker::PhantomData;
use std::num::Wrapping;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::Ring;
use crate::error::{Error, Result};
use crate::json::{decode_bigint, RingJson};

/// Machine scalars usable as ring elements through [`Native`].
///
/// The wrapping unsigned integers are the exact rings `Z/2^k`. Floating-point
/// types are provided for quick numeric work; they are not exact, so the
/// identity checks are only meaningful up to rounding over them.
pub trait NativeScalar:
    Copy
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    const NAME: &'static str;
    const DIVISIBLE: bool;

    fn from_bigint(k: &BigInt) -> Self;
    fn div_int(self, k: &BigUint) -> Self;
    fn characteristic() -> BigUint;
    fn to_json(self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

macro_rules! float_scalar {
    ($t:ty, $name:literal) => {
        impl NativeScalar for $t {
            const NAME: &'static str = $name;
            const DIVISIBLE: bool = true;

            fn from_bigint(k: &BigInt) -> Self {
                k.to_f64().unwrap_or(f64::NAN) as $t
            }

            fn div_int(self, k: &BigUint) -> Self {
                self / (k.to_f64().unwrap_or(f64::INFINITY) as $t)
            }

            fn characteristic() -> BigUint {
                BigUint::zero()
            }

            fn to_json(self) -> Value {
                json!(self)
            }

            fn from_json(v: &Value) -> Result<Self> {
                match v {
                    Value::Number(n) => n
                        .as_f64()
                        .map(|x| x as $t)
                        .ok_or_else(|| Error::parse("element", "not a number")),
                    Value::String(s) => s
                        .trim()
                        .parse::<$t>()
                        .map_err(|_| Error::parse("element", format!("`{s}` is not a number"))),
                    other => Err(Error::parse("element", format!("expected a number, found {other}"))),
                }
            }
        }
    };
}

float_scalar!(f32, "f32");
float_scalar!(f64, "f64");

macro_rules! wrapping_scalar {
    ($t:ty, $name:literal) => {
        impl NativeScalar for Wrapping<$t> {
            const NAME: &'static str = $name;
            const DIVISIBLE: bool = false;

            fn from_bigint(k: &BigInt) -> Self {
                let m = BigInt::from(<$t>::MAX) + 1;
                let r: BigInt = ((k % &m) + &m) % &m;
                Wrapping(r.to_u128().expect("reduced residue fits") as $t)
            }

            fn div_int(self, _k: &BigUint) -> Self {
                unreachable!("wrapping integers are not a Q-algebra")
            }

            fn characteristic() -> BigUint {
                BigUint::from(<$t>::MAX) + 1u32
            }

            fn to_json(self) -> Value {
                Value::String(self.0.to_string())
            }

            fn from_json(v: &Value) -> Result<Self> {
                Ok(Self::from_bigint(&decode_bigint(v, "element")?))
            }
        }
    };
}

wrapping_scalar!(u8, "u8");
wrapping_scalar!(u16, "u16");
wrapping_scalar!(u32, "u32");
wrapping_scalar!(u64, "u64");

/// The ring structure carried by a machine scalar type `T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Native<T>(PhantomData<T>);

impl<T> Native<T> {
    pub fn new() -> Self {
        Native(PhantomData)
    }
}

impl<T: NativeScalar> Ring for Native<T> {
    type Elem = T;

    fn zero(&self) -> T {
        T::zero()
    }

    fn one(&self) -> T {
        T::one()
    }

    fn add(&self, a: &T, b: &T) -> T {
        *a + *b
    }

    fn neg(&self, a: &T) -> T {
        -*a
    }

    fn sub(&self, a: &T, b: &T) -> T {
        *a - *b
    }

    fn mul(&self, a: &T, b: &T) -> T {
        *a * *b
    }

    fn from_int(&self, k: &BigInt) -> T {
        T::from_bigint(k)
    }

    fn is_q_algebra(&self) -> bool {
        T::DIVISIBLE
    }

    fn div_int_unchecked(&self, x: &T, k: &BigUint) -> T {
        x.div_int(k)
    }

    fn characteristic(&self) -> BigUint {
        T::characteristic()
    }

    fn contains(&self, _a: &T) -> bool {
        true
    }

    fn encode(&self, a: &T) -> Value {
        a.to_json()
    }

    fn decode(&self, v: &Value) -> Result<T> {
        T::from_json(v)
    }
}

impl<T: NativeScalar> RingJson for Native<T> {
    fn descriptor_json(&self) -> Value {
        json!({"kind": "native", "type": T::NAME})
    }
}

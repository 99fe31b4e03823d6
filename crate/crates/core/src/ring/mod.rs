//! Commutative rings with exact arithmetic.
//!
//! A [`Ring`] is a value that knows how to combine its elements. Keeping the
//! ring separate from the element type lets parameters such as a modulus be
//! chosen at runtime ([`IntegersMod`], [`RingDescriptor`]) while the same
//! generic algorithms also run over statically known rings ([`Integers`],
//! [`Rationals`], [`PolyRing`], [`Native`]).
//!
//! Every element type has a canonical representation, so `==` on elements is
//! ring equality.
//!
//! An element `a` is *regular* when `a·x = 0` forces `x = 0`. Several classical
//! proofs of the determinant identities in this crate first assume `det A` is
//! regular and then remove the assumption. Regularity has no decision
//! procedure over an arbitrary ring, so it is not exposed as an operation; the
//! identity checks run on singular and zero-divisor inputs directly.

mod axioms;
mod dynamic;
mod integers;
mod modular;
mod native;
mod rational;

pub use axioms::axiom_spotcheck;
pub use dynamic::{RingDescriptor, RingElement};
pub use integers::Integers;
pub use modular::IntegersMod;
pub use native::{Native, NativeScalar};
pub use rational::Rationals;

pub use crate::poly::PolyRing;

use std::fmt::Debug;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::Result;

/// A commutative ring with unity.
pub trait Ring: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// The image of an integer under the unique ring map `Z -> R`.
    fn from_int(&self, k: &BigInt) -> Self::Elem;

    /// Whether every positive integer is declared invertible in this ring.
    ///
    /// This is a property of the ring, never probed per element: the
    /// integers answer `false` even though `4 / 2` happens to exist.
    fn is_q_algebra(&self) -> bool {
        false
    }

    /// Exact division by a positive integer; only meaningful when
    /// [`Ring::is_q_algebra`] holds. Callers go through [`Ring::try_div_int`].
    fn div_int_unchecked(&self, _x: &Self::Elem, _k: &BigUint) -> Self::Elem {
        unreachable!("div_int_unchecked on a ring that is not a Q-algebra")
    }

    /// The nonnegative generator of the kernel of `Z -> R`.
    fn characteristic(&self) -> BigUint;

    /// Whether `a` is a canonical element of this ring.
    fn contains(&self, a: &Self::Elem) -> bool;

    fn encode(&self, a: &Self::Elem) -> Value;
    fn decode(&self, v: &Value) -> Result<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn from_i64(&self, k: i64) -> Self::Elem {
        self.from_int(&BigInt::from(k))
    }

    /// `k·a`.
    fn scale_int(&self, k: &BigInt, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.from_int(k), a)
    }

    fn pow(&self, a: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `y` with `k·y = x`, or `None` when the ring is not a Q-algebra.
    fn try_div_int(&self, x: &Self::Elem, k: &BigUint) -> Option<Self::Elem> {
        assert!(!k.is_zero(), "division by zero integer");
        if self.is_q_algebra() {
            Some(self.div_int_unchecked(x, k))
        } else {
            None
        }
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn product<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    /// `(-1)^k` as a ring element.
    fn sign(&self, k: usize) -> Self::Elem {
        if k % 2 == 0 {
            self.one()
        } else {
            self.neg(&self.one())
        }
    }
}

/// Rings whose elements are polynomials in one indeterminate `t`.
pub trait PolynomialAlgebra: Ring {
    /// The formal derivative `d/dt`.
    fn formal_derivative(&self, a: &Self::Elem) -> Self::Elem;

    /// The indeterminate `t`.
    fn indeterminate(&self) -> Self::Elem;
}

/// Trial-division primality test.
pub fn is_prime(n: &BigUint) -> bool {
    if n <= &BigUint::one() {
        return false;
    }
    let mut d = BigUint::from(2u32);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return false;
        }
        d += 1u32;
    }
    true
}

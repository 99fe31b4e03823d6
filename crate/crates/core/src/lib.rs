//! Exact linear algebra over commutative rings.
//!
//! Matrices, determinants, adjugates and characteristic polynomials are
//! computed without division, so they are exact over any commutative ring:
//! the integers, `Z/m` (zero divisors included), the rationals, and
//! polynomial rings over any of these. On top of that sits a verifier that
//! checks classical determinant, adjugate and trace identities on concrete
//! and random inputs.
//!
//! Rings come in two flavours. Static rings ([`Integers`], [`IntegersMod`],
//! [`Rationals`], [`PolyRing`], [`Native`]) are ordinary Rust types; the
//! runtime [`RingDescriptor`] picks one of them from a value, which is what the
//! command-line tool parses from JSON.
//!
//! ```
//! use ringmat::{charpoly_direct, Integers, ZMatrix};
//! use num_bigint::BigInt;
//!
//! let a = ZMatrix::from_i64_rows(Integers, &[vec![1, 2], vec![3, 4]]).unwrap();
//! let data = charpoly_direct(&a).unwrap();
//! let c: Vec<BigInt> = [1, -5, -2].into_iter().map(BigInt::from).collect();
//! assert_eq!(data.c, c);
//! assert_eq!(a.adjugate().unwrap(), ZMatrix::from_i64_rows(Integers, &[vec![4, -2], vec![-3, 1]]).unwrap());
//! ```

pub mod charpoly;
pub mod derivation;
pub mod error;
pub mod json;
pub mod matrix;
pub mod poly;
pub mod ring;
pub mod sample;
pub mod suite;
pub mod verify;

pub use charpoly::{
    adjugate_via_charpoly, cayley_hamilton_residual, charpoly, charpoly_direct, charpoly_newton,
    trace_ch_residual, CharPolyData,
};
pub use derivation::{make_standard_derivations, Derivation};
pub use error::{Error, Result};
pub use matrix::{BlockQuad, Matrix};
pub use poly::{PolyRing, Polynomial};
pub use ring::{
    axiom_spotcheck, Integers, IntegersMod, Native, NativeScalar, PolynomialAlgebra, Rationals,
    Ring, RingDescriptor, RingElement,
};
pub use suite::{run_suite, verify_matrix, SuiteConfig};
pub use verify::{Identity, Status, Summary, VerificationReport, Verifier};

/// Matrices over the integers.
pub type ZMatrix = Matrix<Integers>;
/// Matrices over the rationals.
pub type QMatrix = Matrix<Rationals>;
/// Matrices over `Z/m`.
pub type ModMatrix = Matrix<IntegersMod>;
/// Matrices over `Z[t]`.
pub type ZtMatrix = Matrix<PolyRing<Integers>>;
/// Matrices over a ring chosen at runtime.
pub type DynMatrix = Matrix<RingDescriptor>;
/// `f64` matrices; arithmetic is inexact, so identity checks over them are approximate at best.
pub type F64Matrix = Matrix<Native<f64>>;
/// Matrices over `u64` with wrapping arithmetic, i.e. over `Z/2^64`.
pub type WrappingU64Matrix = Matrix<Native<std::num::Wrapping<u64>>>;

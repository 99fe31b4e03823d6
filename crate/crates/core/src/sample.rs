//! Deterministic random inputs.
//!
//! The generator is SplitMix64 (state `x`; each step sets
//! `x += 0x9e3779b97f4a7c15` and outputs the usual SplitMix64 mix of `x`),
//! seeded with the 64-bit seed as its initial state. `below(n)` is
//! `next_u64() mod n`. Entries are drawn uniformly from:
//!
//! * integers: `[-9, 9]`;
//! * `Z/m`: the full residue set `[0, m)`;
//! * rationals: `a/b` with `a, b` in `[-5, 5] \ {0}`, then reduced;
//! * polynomials: `degree + 1` coefficients drawn from the base ring, then trimmed.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::matrix::Matrix;
use crate::poly::PolyRing;
use crate::ring::{Ring, RingDescriptor, RingElement};

/// The `count` case seeds derived from a run seed: the first `count`
/// outputs of SplitMix64 started at `seed`.
pub fn case_seeds(seed: u64, count: usize) -> Vec<u64> {
    let mut rng = SplitMix64::seed_from_u64(seed);
    (0..count).map(|_| rng.next_u64()).collect()
}

/// Draws elements and matrices of one ring.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: SplitMix64,
    ring: RingDescriptor,
    poly_degree: usize,
}

impl Sampler {
    /// Polynomial entries default to degree at most 1.
    pub fn new(ring: RingDescriptor, seed: u64) -> Self {
        Sampler {
            rng: SplitMix64::seed_from_u64(seed),
            ring,
            poly_degree: 1,
        }
    }

    pub fn with_poly_degree(mut self, degree: usize) -> Self {
        self.poly_degree = degree;
        self
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform-ish in `[0, n)`; `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// In `[lo, hi]`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    fn nonzero_small(&mut self) -> i64 {
        let x = self.range(-5, 4);
        if x >= 0 {
            x + 1
        } else {
            x
        }
    }

    pub fn element(&mut self) -> RingElement {
        let ring = self.ring.clone();
        self.element_of(&ring)
    }

    pub fn element_of(&mut self, ring: &RingDescriptor) -> RingElement {
        match ring {
            RingDescriptor::Integers => RingElement::Int(BigInt::from(self.range(-9, 9))),
            RingDescriptor::Mod(m) => {
                let m = m.modulus().magnitude();
                let words = m.bits() / 64 + 1;
                let mut acc = BigUint::from(0u8);
                for _ in 0..words {
                    acc = (acc << 64) + self.next_u64();
                }
                RingElement::Int(BigInt::from(acc % m))
            }
            RingDescriptor::Rationals => {
                let num = self.nonzero_small();
                let den = self.nonzero_small();
                RingElement::Rat(BigRational::new(num.into(), den.into()))
            }
            RingDescriptor::Poly(base) => {
                let coeffs = (0..=self.poly_degree).map(|_| self.element_of(base)).collect();
                ring.poly(coeffs).expect("polynomial ring")
            }
        }
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix<RingDescriptor> {
        let ring = self.ring.clone();
        Matrix::from_fn(ring, rows, cols, |_, _| self.element())
    }

    pub fn square(&mut self, n: usize) -> Matrix<RingDescriptor> {
        self.matrix(n, n)
    }

    /// A square matrix with determinant zero: row 2 copies row 1, or the
    /// `1 x 1` zero matrix. For `n = 0` this is the empty matrix, whose
    /// determinant is 1.
    pub fn singular(&mut self, n: usize) -> Matrix<RingDescriptor> {
        let a = self.square(n);
        match n {
            0 => a,
            1 => Matrix::zero(self.ring.clone(), 1, 1),
            _ => a
                .with_row(2, &a.row(1).expect("n >= 2"))
                .expect("row shape matches"),
        }
    }

    /// `p(A)` for a random `p` of degree at most 3; commutes with `A`.
    pub fn polynomial_in(&mut self, a: &Matrix<RingDescriptor>) -> Matrix<RingDescriptor> {
        let pr = PolyRing::new(self.ring.clone());
        let p = pr.poly((0..4).map(|_| self.element()).collect());
        pr.apply_matrix(&p, a).expect("square matrix over the sampler's ring")
    }

    /// Random entries strictly above the diagonal, zero elsewhere.
    pub fn strictly_upper(&mut self, n: usize) -> Matrix<RingDescriptor> {
        let ring = self.ring.clone();
        Matrix::from_fn(ring.clone(), n, n, |i, j| {
            if j > i {
                self.element()
            } else {
                ring.zero()
            }
        })
    }

    /// A matrix `A` and `k <= n` with `A^{k+1} = 0`.
    ///
    /// Either a block-diagonal matrix whose blocks are strictly upper
    /// triangular of size at most `k + 1`, or a diagonal matrix whose entries
    /// `x` satisfy `x^{k+1} = 0` (nonzero such entries exist in rings like
    /// `Z/8`; elsewhere the search falls back to zero).
    pub fn nilpotent(&mut self, n: usize) -> (Matrix<RingDescriptor>, usize) {
        let k = self.below(n as u64 + 1) as usize;
        let ring = self.ring.clone();
        if self.below(2) == 0 {
            let mut block_of = Vec::with_capacity(n);
            let mut block = 0;
            while block_of.len() < n {
                let size = 1 + self.below(k as u64 + 1) as usize;
                for _ in 0..size.min(n - block_of.len()) {
                    block_of.push(block);
                }
                block += 1;
            }
            let a = Matrix::from_fn(ring.clone(), n, n, |i, j| {
                if j > i && block_of[i] == block_of[j] {
                    self.element()
                } else {
                    ring.zero()
                }
            });
            (a, k)
        } else {
            let a = Matrix::from_fn(ring.clone(), n, n, |i, j| {
                if i == j {
                    self.nilpotent_element(k as u64 + 1)
                } else {
                    ring.zero()
                }
            });
            (a, k)
        }
    }

    fn nilpotent_element(&mut self, exp: u64) -> RingElement {
        let ring = self.ring.clone();
        for _ in 0..16 {
            let x = self.element();
            if ring.is_zero(&ring.pow(&x, exp)) {
                return x;
            }
        }
        ring.zero()
    }

    /// A uniformly chosen `k`-subset of `{1, ..., n}`, sorted.
    pub fn subset(&mut self, n: usize, k: usize) -> Vec<usize> {
        let mut pool: Vec<usize> = (1..=n).collect();
        for i in 0..k.min(n) {
            let j = i + self.below((n - i) as u64) as usize;
            pool.swap(i, j);
        }
        let mut out = pool[..k.min(n)].to_vec();
        out.sort_unstable();
        out
    }
}

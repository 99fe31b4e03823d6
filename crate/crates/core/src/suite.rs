//! Batches of identity checks: on random inputs drawn from a seed, or on a
//! given matrix with sampled auxiliary inputs.
//!
//! Case `c` of a run with seed `s` uses the `c`-th case seed of
//! [`case_seeds`]`(s, count)`; identity number `i` (its position in
//! [`Identity::ALL`]) then draws from a [`Sampler`] seeded with
//! `case_seed + i` (wrapping). Reports come back ordered by case, then by
//! identity, whatever order they were computed in.

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::json;

use crate::derivation::Derivation;
use crate::error::{Error, Result};
use crate::json::encode_entries;
use crate::matrix::Matrix;
use crate::ring::{is_prime, PolynomialAlgebra, Ring, RingDescriptor, RingElement};
use crate::sample::{case_seeds, Sampler};
use crate::verify::{Identity, VerificationReport, Verifier};

/// Largest case size accepted when a suite contains an identity that glues
/// two blocks into a matrix of twice the size.
pub const BLOCK_MAX_SIZE: usize = 6;

/// Knobs for [`run_suite`] and [`verify_matrix`]. Unset values default per
/// case: `imax = 2n + 1`, `k` from the nilpotent construction (or `n` for a
/// given matrix), `p` the ring characteristic, `m` drawn from `0..=4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub count: usize,
    /// Largest matrix size drawn; cases use `n` in `1..=size`.
    pub size: usize,
    pub imax: Option<usize>,
    pub k: Option<usize>,
    pub p: Option<u64>,
    pub m: Option<usize>,
    /// Degree bound for sampled polynomial entries.
    pub poly_degree: usize,
    pub verifier: Verifier,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            count: 1,
            size: 3,
            imax: None,
            k: None,
            p: None,
            m: None,
            poly_degree: 1,
            verifier: Verifier::new(),
        }
    }
}

fn ordinal(id: Identity) -> u64 {
    Identity::ALL.iter().position(|&x| x == id).expect("listed") as u64
}

fn sampler_for(ring: &RingDescriptor, seed: u64, id: Identity, cfg: &SuiteConfig) -> Sampler {
    Sampler::new(ring.clone(), seed.wrapping_add(ordinal(id))).with_poly_degree(cfg.poly_degree)
}

/// Runs `count` random cases of every identity in `identities`.
pub fn run_suite(
    ring: &RingDescriptor,
    identities: &[Identity],
    cfg: &SuiteConfig,
) -> Result<Vec<VerificationReport>> {
    if cfg.size > BLOCK_MAX_SIZE && identities.iter().any(|id| id.doubles_dimension()) {
        return Err(Error::InvalidArgument(format!(
            "size {} exceeds {BLOCK_MAX_SIZE} for a suite with block identities",
            cfg.size
        )));
    }
    let jobs: Vec<(usize, u64, Identity)> = case_seeds(cfg.seed, cfg.count)
        .into_iter()
        .enumerate()
        .flat_map(|(c, seed)| identities.iter().map(move |&id| (c, seed, id)))
        .collect();
    jobs.into_par_iter()
        .map(|(case, seed, id)| {
            let mut s = sampler_for(ring, seed, id, cfg);
            let n = if cfg.size == 0 {
                0
            } else {
                1 + s.below(cfg.size as u64) as usize
            };
            let (a, k) = match id {
                Identity::Nilpotency | Identity::NilpotencyConverse if s.below(4) > 0 => {
                    (s.strictly_upper(n), None)
                }
                Identity::Nilpotency | Identity::NilpotencyConverse | Identity::Almkvist => {
                    let (a, k) = s.nilpotent(n);
                    (a, Some(k))
                }
                _ if s.below(4) == 0 => (s.singular(n), None),
                _ => (s.square(n), None),
            };
            let mut report = run_one(id, &a, &mut s, cfg, true, k)?;
            report.annotate("case", json!(case));
            report.annotate("case_seed", json!(seed.to_string()));
            Ok(report)
        })
        .collect()
}

/// Checks every identity in `identities` on the given matrix. Extra inputs
/// (a second matrix, vectors, scalars) are drawn from `cfg.seed`.
pub fn verify_matrix(
    a: &Matrix<RingDescriptor>,
    identities: &[Identity],
    cfg: &SuiteConfig,
) -> Result<Vec<VerificationReport>> {
    a.require_square()?;
    identities
        .par_iter()
        .map(|&id| {
            let mut s = sampler_for(a.ring(), cfg.seed, id, cfg);
            run_one(id, a, &mut s, cfg, false, None)
        })
        .collect()
}

fn run_one(
    id: Identity,
    a: &Matrix<RingDescriptor>,
    s: &mut Sampler,
    cfg: &SuiteConfig,
    fuzz: bool,
    k: Option<usize>,
) -> Result<VerificationReport> {
    use Identity::*;
    let v = &cfg.verifier;
    let n = a.require_square()?;
    let ring = a.ring().clone();
    match id {
        AdjInverse => v.verify_adj_inverse(a),
        AdjCharpoly => v.verify_adj_charpoly(a),
        AdjProduct => v.verify_adj_product(a, &s.square(n)),
        AdjOfAdj => v.verify_adj_of_adj(a),
        AdjScalar => v.verify_adj_scalar(a, &s.element()),
        AdjTrace => v.verify_adj_trace(a),
        CharpolyC1 => v.verify_charpoly_c1(a),
        TraceD => v.verify_trace_d(a),
        DPartialSums => v.verify_d_partial_sums(a),
        DExpansion => v.verify_d_expansion(a),
        CayleyHamilton => v.verify_cayley_hamilton(a),
        TraceCayleyHamilton => v.verify_trace_cayley_hamilton(a, 2 * n + 1),
        CharpolyNewton => v.verify_charpoly_newton(a),
        Ddet => v.verify_ddet(a),
        Jacobi => v.verify_jacobi_exhaustive(a),
        CommuteSwap => {
            let b = s.polynomial_in(a);
            v.verify_commute_swap(a, &b, &s.square(n))
        }
        BlockCommute => {
            let c = s.polynomial_in(a);
            let (b, d) = (s.square(n), s.square(n));
            v.verify_block_commute(a, &b, &c, &d)
        }
        Rank1Block => {
            let m = 1 + s.below(cfg.size.max(1) as u64) as usize;
            let d = s.square(m);
            let (p, q) = (s.matrix(n, 1), s.matrix(m, 1));
            let (row_v, row_u) = (s.matrix(1, m), s.matrix(1, n));
            v.verify_rank1_block(a, &d, &p, &q, &row_v, &row_u)
        }
        Bordered => {
            let (u, w) = (s.matrix(n, 1), s.matrix(1, n));
            v.verify_bordered(a, &u, &w, &s.element())
        }
        BlockIndicator => {
            let m = 1 + s.below(cfg.size.max(1) as u64) as usize;
            v.verify_block_indicator(a, &s.square(m))
        }
        MatrixDetLemma => {
            let (u, w) = (s.matrix(n, 1), s.matrix(1, n));
            v.verify_matrix_det_lemma(a, &u, &w)
        }
        Nilpotency => v.verify_nilpotency_criterion(a),
        NilpotencyConverse => v.verify_nilpotency_converse(a, cfg.imax.unwrap_or(2 * n + 1)),
        Almkvist => v.verify_almkvist(a, k.or(cfg.k).unwrap_or(n)),
        TraceMultinomial => {
            let m = cfg.m.unwrap_or_else(|| s.below(5) as usize);
            v.verify_trace_multinomial(a, m)
        }
        RowReplacement => v.verify_row_replacement(a, &s.square(n)),
        Frobenius => match cfg.p.or_else(|| prime_characteristic(&ring)) {
            Some(p) => v.verify_frobenius_trace(a, p),
            None => Ok(VerificationReport::not_met(
                id.name(),
                format!("no prime p given and {ring} does not have prime characteristic"),
                json!({"ring": ring.to_json(), "A": encode_entries(a)}),
            )),
        },
        DerivationDet | DerivationDetRows | LeibnizChain => {
            let algebra = if ring.is_polynomial() {
                ring.clone()
            } else {
                RingDescriptor::poly_over(ring.clone())
            };
            let f = match s.below(3) {
                0 => Derivation::zero(algebra.clone()),
                1 => Derivation::ddt(algebra.clone()),
                _ => Derivation::g_ddt(algebra.clone(), algebra.indeterminate()),
            };
            let mut lifted = Sampler::new(algebra.clone(), s.next_u64()).with_poly_degree(2);
            if id == LeibnizChain {
                let len = s.below(5) as usize;
                let elems: Vec<_> = (0..len).map(|_| lifted.element()).collect();
                return v.verify_leibniz_chain(&f, &elems);
            }
            let m = if fuzz {
                lifted.square(n)
            } else if ring.is_polynomial() {
                a.clone()
            } else {
                // tI - A, whose determinant is the characteristic polynomial
                let lift = |x: &RingElement| algebra.poly(vec![x.clone()]).expect("poly");
                let t = Matrix::scalar(algebra.clone(), n, algebra.indeterminate());
                t.sub(&a.map_into(algebra.clone(), lift))?
            };
            if id == DerivationDet {
                v.verify_derivation_det(&f, &m)
            } else {
                v.verify_derivation_det_rows(&f, &m)
            }
        }
    }
}

fn prime_characteristic(ring: &RingDescriptor) -> Option<u64> {
    let c = ring.characteristic();
    if is_prime(&c) {
        c.to_u64()
    } else {
        None
    }
}

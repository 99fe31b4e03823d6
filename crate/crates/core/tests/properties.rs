//! Algebraic invariants on random inputs, each checked against an
//! independently computed value.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::collection::vec;
use proptest::prelude::*;

use ringmat::charpoly::{char_matrix, d_matrices_via_adjugate, power_traces};
use ringmat::{
    adjugate_via_charpoly, axiom_spotcheck, cayley_hamilton_residual, charpoly_direct,
    charpoly_newton, trace_ch_residual, DynMatrix, Matrix, PolyRing, Polynomial, Ring,
    RingDescriptor, RingElement,
};

type Raw = (i64, i64);

fn ring(i: usize) -> RingDescriptor {
    match i {
        0 => RingDescriptor::Integers,
        1 => RingDescriptor::modular(6).unwrap(),
        2 => RingDescriptor::modular(8).unwrap(),
        3 => RingDescriptor::Rationals,
        4 => RingDescriptor::poly_over(RingDescriptor::Integers),
        _ => RingDescriptor::poly_over(RingDescriptor::modular(4).unwrap()),
    }
}

const RINGS: usize = 6;

/// `a` for integers and residues, `a/b` for rationals, `a + bt` style for polynomials.
fn elem(ring: &RingDescriptor, (a, b): Raw) -> RingElement {
    match ring {
        RingDescriptor::Rationals => {
            let den = if b == 0 { 1 } else { b };
            RingElement::Rat(BigRational::new(a.into(), den.into()))
        }
        RingDescriptor::Poly(base) => ring
            .poly(vec![elem(base, (a, b)), elem(base, (b, a))])
            .unwrap(),
        _ => ring.from_i64(a),
    }
}

fn raw() -> impl Strategy<Value = Raw> {
    (-9i64..=9, -5i64..=5)
}

fn build(ring: &RingDescriptor, rows: usize, cols: usize, raw: &[Raw]) -> DynMatrix {
    let entries = raw.iter().map(|&r| elem(ring, r)).collect();
    Matrix::from_vec(ring.clone(), rows, cols, entries).unwrap()
}

/// `k` square matrices of one random size in `lo..=hi` over one random ring.
fn squares(k: usize, lo: usize, hi: usize) -> impl Strategy<Value = Vec<DynMatrix>> {
    (0..RINGS, lo..=hi).prop_flat_map(move |(r, n)| {
        vec(raw(), k * n * n).prop_map(move |raw| {
            let ring = ring(r);
            (0..k)
                .map(|i| build(&ring, n, n, &raw[i * n * n..(i + 1) * n * n]))
                .collect()
        })
    })
}

fn square(lo: usize, hi: usize) -> impl Strategy<Value = DynMatrix> {
    squares(1, lo, hi).prop_map(|mut v| v.pop().unwrap())
}

fn int_matrix(hi: usize) -> impl Strategy<Value = DynMatrix> {
    (0..=hi).prop_flat_map(|n| {
        vec(raw(), n * n).prop_map(move |raw| build(&RingDescriptor::Integers, n, n, &raw))
    })
}

fn elems(ring: &RingDescriptor, raw: &[Raw]) -> Vec<RingElement> {
    raw.iter().map(|&r| elem(ring, r)).collect()
}

/// Cofactor expansion along row `p`, written out directly.
fn laplace(a: &DynMatrix, p: usize) -> RingElement {
    let ring = a.ring();
    let mut acc = ring.zero();
    for q in 1..=a.cols() {
        let term = ring.mul(a.entry(p, q).unwrap(), &a.minor_remove(p, q).unwrap().det().unwrap());
        acc = ring.add(&acc, &ring.mul(&ring.sign(p + q), &term));
    }
    acc
}

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(64)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn ring_axioms_hold(r in 0..RINGS, raw in vec((raw(), raw(), raw()), 1..8)) {
        let ring = ring(r);
        let samples: Vec<_> = raw
            .iter()
            .map(|&(a, b, c)| (elem(&ring, a), elem(&ring, b), elem(&ring, c)))
            .collect();
        let report = axiom_spotcheck(&ring, &samples).unwrap();
        prop_assert!(report.passed(), "{:?}", report.residual);
    }

    #[test]
    fn int_embedding_is_a_homomorphism(r in 0..RINGS, a in -1000i64..1000, b in -1000i64..1000) {
        let ring = ring(r);
        prop_assert_eq!(ring.from_i64(a + b), ring.add(&ring.from_i64(a), &ring.from_i64(b)));
        prop_assert_eq!(ring.from_i64(a * b), ring.mul(&ring.from_i64(a), &ring.from_i64(b)));
        prop_assert_eq!(ring.from_i64(1), ring.one());
    }

    #[test]
    fn modulus_embeds_to_zero(m in 1i64..100) {
        let ring = RingDescriptor::modular(m).unwrap();
        prop_assert!(ring.is_zero(&ring.from_i64(m)));
        prop_assert!(ring.is_zero(&ring.from_i64(-3 * m)));
    }

    #[test]
    fn division_by_integers_inverts_scaling(r in 0..RINGS, x in raw(), k in 1u32..20) {
        let ring = ring(r);
        let x = elem(&ring, x);
        let kx = ring.mul(&ring.from_int(&BigInt::from(k)), &x);
        match ring.try_div_int(&kx, &BigUint::from(k)) {
            Some(y) => {
                prop_assert!(ring.is_q_algebra());
                prop_assert_eq!(y, x);
            }
            None => prop_assert!(!ring.is_q_algebra()),
        }
    }

    #[test]
    fn poly_product_is_the_convolution(r in 0..RINGS, f in vec(raw(), 0..5), g in vec(raw(), 0..5)) {
        let base = ring(r);
        let pr = PolyRing::new(base.clone());
        let (f, g) = (pr.poly(elems(&base, &f)), pr.poly(elems(&base, &g)));
        let fg = pr.mul(&f, &g);
        for k in -1i64..10 {
            let mut conv = base.zero();
            for i in 0..=k.max(-1) {
                conv = base.add(&conv, &base.mul(&pr.coeff(&f, i), &pr.coeff(&g, k - i)));
            }
            prop_assert_eq!(pr.coeff(&fg, k), conv, "k = {}", k);
        }
        if let (Some(df), Some(dg), Some(dfg)) = (f.degree(), g.degree(), fg.degree()) {
            prop_assert!(dfg <= df + dg);
        }
    }

    #[test]
    fn derivative_obeys_leibniz(r in 0..RINGS, f in vec(raw(), 0..5), g in vec(raw(), 0..5)) {
        let base = ring(r);
        let pr = PolyRing::new(base.clone());
        let (f, g) = (pr.poly(elems(&base, &f)), pr.poly(elems(&base, &g)));
        let lhs = pr.derivative(&pr.mul(&f, &g));
        let rhs = pr.add(&pr.mul(&f, &pr.derivative(&g)), &pr.mul(&pr.derivative(&f), &g));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_at_zero_is_a_homomorphism(r in 0..RINGS, f in vec(raw(), 0..5), g in vec(raw(), 0..5)) {
        let base = ring(r);
        let pr = PolyRing::new(base.clone());
        let (f, g) = (pr.poly(elems(&base, &f)), pr.poly(elems(&base, &g)));
        let (ef, eg) = (pr.eval_zero(&f), pr.eval_zero(&g));
        prop_assert_eq!(pr.eval_zero(&pr.mul(&f, &g)), base.mul(&ef, &eg));
        prop_assert_eq!(pr.eval_zero(&pr.add(&f, &g)), base.add(&ef, &eg));
    }

    #[test]
    fn substitution_is_multiplicative(
        a in square(0, 4),
        f in vec(raw(), 0..4),
        g in vec(raw(), 0..4),
    ) {
        let base = a.ring().clone();
        let pr = PolyRing::new(base.clone());
        let (f, g) = (pr.poly(elems(&base, &f)), pr.poly(elems(&base, &g)));
        let lhs = pr.apply_matrix(&pr.mul(&f, &g), &a).unwrap();
        let rhs = pr.apply_matrix(&f, &a).unwrap().mul(&pr.apply_matrix(&g, &a).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn det_of_pencil_has_the_expected_extreme_coefficients(ab in squares(2, 0, 4)) {
        let (a, b) = (&ab[0], &ab[1]);
        let n = a.rows();
        let pr = PolyRing::new(a.ring().clone());
        let t = pr.monomial(a.ring().one(), 1);
        let pencil = pr.embed_matrix(a).scale(&t).add(&pr.embed_matrix(b)).unwrap();
        let p: Polynomial<RingElement> = pencil.det().unwrap();
        prop_assert!(p.degree().is_none_or(|d| d <= n));
        prop_assert_eq!(pr.coeff(&p, 0), b.det().unwrap());
        prop_assert_eq!(pr.coeff(&p, n as i64), a.det().unwrap());
    }

    #[test]
    fn det_matches_leibniz(a in square(0, 5)) {
        prop_assert_eq!(a.det().unwrap(), a.det_leibniz().unwrap());
    }

    #[test]
    fn adjugate_inverts_up_to_det(a in square(0, 5)) {
        let adj = a.adjugate().unwrap();
        let d = Matrix::scalar(a.ring().clone(), a.rows(), a.det().unwrap());
        prop_assert_eq!(&a.mul(&adj).unwrap(), &d);
        prop_assert_eq!(&adj.mul(&a).unwrap(), &d);
    }

    #[test]
    fn det_is_multiplicative(ab in squares(2, 0, 4)) {
        let (a, b) = (&ab[0], &ab[1]);
        let ring = a.ring();
        prop_assert_eq!(
            a.mul(b).unwrap().det().unwrap(),
            ring.mul(&a.det().unwrap(), &b.det().unwrap())
        );
    }

    #[test]
    fn trace_of_product_is_symmetric(
        r in 0..RINGS,
        (n, m, raw) in (0usize..4, 0usize..4).prop_flat_map(|(n, m)| (Just(n), Just(m), vec(raw(), 2 * n * m))),
    ) {
        let ring = ring(r);
        let a = build(&ring, n, m, &raw[..n * m]);
        let b = build(&ring, m, n, &raw[n * m..]);
        let mut sum = ring.zero();
        for i in 1..=n {
            for j in 1..=m {
                sum = ring.add(&sum, &ring.mul(a.entry(i, j).unwrap(), b.entry(j, i).unwrap()));
            }
        }
        prop_assert_eq!(a.mul(&b).unwrap().trace().unwrap(), sum.clone());
        prop_assert_eq!(b.mul(&a).unwrap().trace().unwrap(), sum);
    }

    #[test]
    fn laplace_expansion_along_every_row(a in square(1, 5)) {
        let d = a.det().unwrap();
        for p in 1..=a.rows() {
            prop_assert_eq!(laplace(&a, p), d.clone(), "row {}", p);
        }
    }

    #[test]
    fn det_scales_by_power(a in square(0, 5), lambda in raw()) {
        let ring = a.ring();
        let lambda = elem(ring, lambda);
        let lhs = a.scale(&lambda).det().unwrap();
        let rhs = ring.mul(&ring.pow(&lambda, a.rows() as u64), &a.det().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduction_mod_six_commutes_with_det_minors_adjugate(a in int_matrix(4)) {
        let z6 = RingDescriptor::modular(6).unwrap();
        let f = |x: &RingElement| match x {
            RingElement::Int(k) => z6.from_int(k),
            _ => unreachable!("integer entries"),
        };
        let fa = a.map_into(z6.clone(), f);
        prop_assert_eq!(f(&a.det().unwrap()), fa.det().unwrap());
        prop_assert_eq!(a.adjugate().unwrap().map_into(z6.clone(), f), fa.adjugate().unwrap());
        for u in 1..=a.rows() {
            for v in 1..=a.cols() {
                prop_assert_eq!(
                    a.minor_remove(u, v).unwrap().map_into(z6.clone(), f),
                    fa.minor_remove(u, v).unwrap()
                );
            }
        }
    }

    #[test]
    fn evaluation_at_zero_commutes_with_det_and_adjugate(a in square(0, 4)) {
        let base = a.ring().clone();
        let pr = PolyRing::new(base.clone());
        let lifted = pr.embed_matrix(&a).add(&Matrix::scalar(pr.clone(), a.rows(), pr.monomial(base.one(), 1))).unwrap();
        let ev = |m: &Matrix<PolyRing<RingDescriptor>>| m.map_into(base.clone(), |p| pr.eval_zero(p));
        prop_assert_eq!(pr.eval_zero(&lifted.det().unwrap()), ev(&lifted).det().unwrap());
        prop_assert_eq!(ev(&lifted.adjugate().unwrap()), ev(&lifted).adjugate().unwrap());
    }

    #[test]
    fn charpoly_data_invariants(a in square(0, 5)) {
        let ring = a.ring();
        let n = a.rows();
        let data = charpoly_direct(&a).unwrap();
        let pr = PolyRing::new(ring.clone());
        prop_assert_eq!(data.chi.degree(), Some(n));
        prop_assert_eq!(&data.c[0], &ring.one());
        prop_assert_eq!(data.c[n].clone(), ring.mul(&ring.sign(n), &a.det().unwrap()));
        for k in 0..=n {
            prop_assert_eq!(pr.coeff(&data.chi, k as i64), data.c[n - k].clone());
        }
        prop_assert_eq!(&data.d, &d_matrices_via_adjugate(&a).unwrap());
        for k in -2..=n as i64 + 2 {
            let lhs = Matrix::scalar(ring.clone(), n, data.c_at(ring, n as i64 - k));
            let rhs = data.d_at(ring, k - 1).sub(&a.mul(&data.d_at(ring, k)).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs, "k = {}", k);
        }
    }

    #[test]
    fn charpoly_coefficient_identities(a in square(1, 5)) {
        let ring = a.ring();
        let n = a.rows();
        let data = charpoly_direct(&a).unwrap();
        prop_assert_eq!(data.c[1].clone(), ring.neg(&a.trace().unwrap()));
        prop_assert_eq!(
            a.adjugate().unwrap().trace().unwrap(),
            ring.mul(&ring.sign(n - 1), &data.c[n - 1])
        );
        let powers = a.powers(n).unwrap();
        for k in 0..n {
            prop_assert_eq!(
                data.d[k].trace().unwrap(),
                ring.mul(&ring.from_i64(k as i64 + 1), &data.c[n - k - 1])
            );
            let mut partial = Matrix::zero(ring.clone(), n, n);
            for i in 0..=k {
                partial = partial.add(&powers[i].scale(&data.c[k - i])).unwrap();
            }
            prop_assert_eq!(&partial, &data.d[n - 1 - k]);
        }
        prop_assert_eq!(adjugate_via_charpoly(&a).unwrap(), a.adjugate().unwrap());
    }

    #[test]
    fn derivative_of_charpoly_is_trace_of_adjugate(a in square(0, 4)) {
        let pr = PolyRing::new(a.ring().clone());
        let chi = charpoly_direct(&a).unwrap().chi;
        let adj = char_matrix(&a).unwrap().adjugate().unwrap();
        prop_assert_eq!(pr.derivative(&chi), adj.trace().unwrap());
    }

    #[test]
    fn cayley_hamilton_and_trace_recursion(a in square(0, 5)) {
        prop_assert!(cayley_hamilton_residual(&a).unwrap().is_zero());
        let ring = a.ring();
        let n = a.rows();
        let traces = power_traces(&a, 2 * n + 1).unwrap();
        for k in 0..=2 * n + 1 {
            prop_assert!(ring.is_zero(&trace_ch_residual(&a, k).unwrap()), "k = {}", k);
        }
        for (i, tr) in traces.iter().enumerate() {
            prop_assert_eq!(tr, &a.pow(i as u64 + 1).unwrap().trace().unwrap());
        }
    }

    #[test]
    fn newton_agrees_with_direct_over_rationals(
        (n, raw) in (0usize..=5).prop_flat_map(|n| (Just(n), vec(raw(), n * n))),
    ) {
        let a = build(&RingDescriptor::Rationals, n, n, &raw);
        prop_assert_eq!(charpoly_newton(&a).unwrap(), charpoly_direct(&a).unwrap());
        let qt = RingDescriptor::poly_over(RingDescriptor::Rationals);
        let b = build(&qt, n.min(3), n.min(3), &raw[..n.min(3) * n.min(3)]);
        prop_assert_eq!(charpoly_newton(&b).unwrap(), charpoly_direct(&b).unwrap());
    }
}

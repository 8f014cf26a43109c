use std::sync::Arc;

use linf_core::gca::{
    graded_component_basis, partial_derivative, AlgebraMap, DgcAlgebra, Generator, Monomial, Poly, Signature,
};
use linf_core::lie::{ce_of_lie, so};
use linf_core::{q, Error, Rational};
use proptest::prelude::*;

type P = Poly<Rational>;

fn sig(spec: &[(&str, usize)]) -> Arc<Signature> {
    Signature::new(spec.iter().map(|(n, d)| Generator::new(*n, *d)).collect()).unwrap()
}

fn g(s: &Arc<Signature>, n: &str) -> P {
    Poly::named(s, n).unwrap()
}

fn so3() -> DgcAlgebra<Rational> {
    ce_of_lie(&so::<Rational>(3).unwrap().data).unwrap()
}

#[test]
fn normalize_sorted_pair_keeps_sign() {
    let s = sig(&[("t1", 1), ("t2", 1)]);
    let (m, neg) = Monomial::normalize(&[(0, 1), (1, 1)], &s).unwrap();
    assert_eq!(m, Monomial::from_sorted(vec![(0, 1), (1, 1)]));
    assert!(!neg);
}

#[test]
fn normalize_swapped_pair_negates() {
    let s = sig(&[("t1", 1), ("t2", 1)]);
    let (m, neg) = Monomial::normalize(&[(1, 1), (0, 1)], &s).unwrap();
    assert_eq!(m, Monomial::from_sorted(vec![(0, 1), (1, 1)]));
    assert!(neg);
}

#[test]
fn normalize_odd_square_vanishes() {
    let s = sig(&[("t1", 1), ("t2", 1)]);
    assert!(Monomial::normalize(&[(0, 1), (0, 1)], &s).is_none());
}

#[test]
fn even_generators_square_freely() {
    let s = sig(&[("b", 2), ("h", 3), ("t1", 1), ("t2", 1)]);
    assert_eq!((&g(&s, "b") * &g(&s, "b")).render(), "b^2");
    assert!((&g(&s, "h") * &g(&s, "h")).is_zero());
    let lhs = &(&g(&s, "t1") + &g(&s, "t2")) * &g(&s, "t1");
    assert_eq!(lhs.render(), "-t1*t2");
}

#[test]
fn mismatched_generator_sets_are_rejected() {
    let a = sig(&[("t", 1)]);
    let b = sig(&[("u", 1)]);
    assert_eq!(g(&a, "t").try_mul(&g(&b, "u")), Err(Error::GeneratorMismatch));
}

#[test]
fn ce_so3_differentials() {
    let a = so3();
    let s = a.sig().clone();
    assert_eq!(a.d(&g(&s, "t1")).render(), "-t2*t3");
    assert_eq!(a.d(&g(&s, "t2")), -&(&g(&s, "t3") * &g(&s, "t1")));
    assert_eq!(a.d(&g(&s, "t3")).render(), "-t1*t2");
    let top = &(&g(&s, "t1") * &g(&s, "t2")) * &g(&s, "t3");
    assert!(a.d(&top).is_zero());
    assert!(a.d_squared_residuals().is_empty());
}

#[test]
fn weil_u1_leibniz_example() {
    let s = sig(&[("t", 1), ("r", 2)]);
    let w = DgcAlgebra::new("W(u(1))", s.clone(), vec![g(&s, "r"), Poly::zero(&s)]).unwrap();
    assert_eq!(w.d(&(&g(&s, "t") * &g(&s, "r"))).render(), "r^2");
}

#[test]
fn d_squared_residual_is_reported() {
    let s = sig(&[("t1", 1), ("t2", 2), ("t3", 3)]);
    let a = DgcAlgebra::new("bad", s.clone(), vec![g(&s, "t2"), g(&s, "t3"), Poly::zero(&s)]).unwrap();
    let r = a.d_squared_residuals();
    assert_eq!(r.len(), 1);
    assert_eq!(r[0].0, 0);
    assert_eq!(r[0].1, g(&s, "t3"));
    assert!(matches!(a.require_nilpotent(), Err(Error::NotNilpotent(_))));
}

#[test]
fn differential_must_raise_degree_by_one() {
    let s = sig(&[("t1", 1), ("t2", 1)]);
    let e = DgcAlgebra::new("bad", s.clone(), vec![g(&s, "t2"), Poly::zero(&s)]).unwrap_err();
    assert!(matches!(e, Error::DegreeMismatch { .. }));
}

#[test]
fn identity_is_a_chain_map() {
    let a = so3();
    let id = (0..3).map(|i| Poly::generator(a.sig(), i)).collect();
    assert!(AlgebraMap::verified(&a, &a, id).is_ok());
}

#[test]
fn degree_changing_assignment_is_rejected() {
    let a = sig(&[("t", 1)]);
    let b = sig(&[("b", 2)]);
    let src = DgcAlgebra::new("A", a.clone(), vec![Poly::zero(&a)]).unwrap();
    let tgt = DgcAlgebra::new("B", b.clone(), vec![Poly::zero(&b)]).unwrap();
    let e = AlgebraMap::new(&src, &tgt, vec![g(&b, "b")]).unwrap_err();
    assert!(matches!(e, Error::DegreeMismatch { .. }));
}

#[test]
fn component_bases() {
    let a = so3();
    let b2 = a.graded_component_basis(2).unwrap();
    let names: Vec<String> = b2.iter().map(|m| Poly::term(a.sig(), m.clone(), q(1, 1)).render()).collect();
    assert_eq!(names, ["t1*t2", "t1*t3", "t2*t3"]);
    assert_eq!(a.graded_component_basis(0).unwrap(), vec![Monomial::one()]);

    let s = sig(&[("t1", 1), ("t2", 1), ("t3", 1), ("b", 2)]);
    let b2 = graded_component_basis(&s, 2, |_| true).unwrap();
    let names: Vec<String> = b2.iter().map(|m| Poly::term(&s, m.clone(), q(1, 1)).render()).collect();
    assert_eq!(names, ["t1*t2", "t1*t3", "t2*t3", "b"]);
}

#[test]
fn degree_zero_generators_make_components_infinite() {
    let s = sig(&[("v", 0), ("t", 1)]);
    assert_eq!(graded_component_basis(&s, 1, |_| true), Err(Error::InfiniteComponent(1)));
}

#[test]
fn partial_derivative_is_left() {
    let s = sig(&[("t1", 1), ("t2", 1), ("b", 2)]);
    let p = &(&g(&s, "t1") * &g(&s, "t2")) * &g(&s, "b");
    assert_eq!(partial_derivative(&p, 1), -&(&g(&s, "t1") * &g(&s, "b")));
    assert_eq!(partial_derivative(&p.pow(1), 2), &g(&s, "t1") * &g(&s, "t2"));
    let b3 = g(&s, "b").pow(3);
    assert_eq!(partial_derivative(&b3, 2), g(&s, "b").pow(2).scale(&q(3, 1)));
}

// Random elements over generators of mixed degree and parity.
fn mixed_sig() -> Arc<Signature> {
    sig(&[("t1", 1), ("t2", 1), ("b", 2), ("t3", 1), ("h", 3), ("e", 2)])
}

fn mixed_algebra() -> DgcAlgebra<Rational> {
    // An arbitrary degree +1 derivation; Leibniz does not need d² = 0.
    let s = mixed_sig();
    let d = vec![
        &(&g(&s, "t1") * &g(&s, "t3")) + &g(&s, "e"),
        g(&s, "t1") * g(&s, "t2"),
        g(&s, "h"),
        -g(&s, "b"),
        g(&s, "b") * g(&s, "e"),
        g(&s, "h"),
    ];
    DgcAlgebra::new("mixed", s, d).unwrap()
}

fn arb_poly() -> impl Strategy<Value = P> {
    let term = (-3i64..=3, prop::collection::vec((0usize..6, 1u32..3), 0..4));
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        let s = mixed_sig();
        let mut p = Poly::zero(&s);
        for (c, w) in terms {
            p = &p + &Poly::word(&s, &w, q(c, 1));
        }
        p
    })
}

fn arb_homogeneous() -> impl Strategy<Value = (usize, P)> {
    arb_poly().prop_map(|p| {
        let comps = p.degree_components();
        match comps.into_iter().next_back() {
            Some((d, c)) => (d, c),
            None => (0, p),
        }
    })
}

fn sgn(odd: bool) -> Rational {
    if odd {
        q(-1, 1)
    } else {
        q(1, 1)
    }
}

proptest! {
    #[test]
    fn product_is_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn product_is_graded_commutative((da, a) in arb_homogeneous(), (db, b) in arb_homogeneous()) {
        prop_assert_eq!(&a * &b, (&b * &a).scale(&sgn(da * db % 2 == 1)));
    }

    #[test]
    fn product_degrees_add((da, a) in arb_homogeneous(), (db, b) in arb_homogeneous()) {
        let ab = &a * &b;
        prop_assert!(ab.is_homogeneous_of(da + db));
    }

    #[test]
    fn leibniz_rule((dp, p) in arb_homogeneous(), q_ in arb_poly()) {
        let a = mixed_algebra();
        let lhs = a.d(&(&p * &q_));
        let rhs = &(&a.d(&p) * &q_) + &(&p * &a.d(&q_)).scale(&sgn(dp % 2 == 1));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normalize_is_idempotent(w in prop::collection::vec((0usize..6, 1u32..3), 0..6)) {
        let s = mixed_sig();
        if let Some((m, _)) = Monomial::normalize(&w, &s) {
            let f: Vec<(usize, u32)> = m.factors().iter().map(|&(i, e)| (i as usize, e)).collect();
            let (m2, neg) = Monomial::normalize(&f, &s).unwrap();
            prop_assert_eq!(m2, m);
            prop_assert!(!neg);
        }
    }

    #[test]
    fn word_length_is_additive(a in prop::collection::vec((0usize..6, 1u32..3), 0..4),
                               b in prop::collection::vec((0usize..6, 1u32..3), 0..4)) {
        let s = mixed_sig();
        if let (Some((ma, _)), Some((mb, _))) = (Monomial::normalize(&a, &s), Monomial::normalize(&b, &s)) {
            if let Some((m, _)) = ma.mul(&mb, &s) {
                prop_assert_eq!(m.word_length(), ma.word_length() + mb.word_length());
            }
        }
    }

    #[test]
    fn monomial_product_matches_word_normalization(a in prop::collection::vec((0usize..6, 1u32..3), 0..4),
                                                   b in prop::collection::vec((0usize..6, 1u32..3), 0..4)) {
        let s = mixed_sig();
        let pa = Poly::word(&s, &a, q(1, 1));
        let pb = Poly::word(&s, &b, q(1, 1));
        let joined: Vec<(usize, u32)> = a.iter().chain(&b).copied().collect();
        prop_assert_eq!(&pa * &pb, Poly::word(&s, &joined, q(1, 1)));
    }
}

#[test]
fn float_scalars_agree_on_integral_structure_constants() {
    let a = ce_of_lie(&so::<f64>(3).unwrap().data).unwrap();
    assert!(a.is_nilpotent());
    assert_eq!(a.d(&Poly::generator(a.sig(), 0)).render(), "-t2*t3");
}

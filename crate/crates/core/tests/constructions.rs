use linf_core::cohomology::{class_coordinates, cohomology, cohomology_dimensions};
use linf_core::constructions::{
    basic_elements, ce_restriction, direct_sum, opposite_algebra, opposite_morphism, string_like_extension,
    string_like_extension_in_degree, transgress, transgression_for, weak_cokernel_cone, weil_algebra,
};
use linf_core::gca::{Derivation, DgcAlgebra, Generator, Poly, Signature};
use linf_core::lie::{ce_of_lie, ce_u1_to_uk, cocycle_from_form, invariant_polynomial_str, so, u1, LieModel};
use linf_core::{q, Error, Rational};

type A = DgcAlgebra<Rational>;

fn model(n: usize) -> (LieModel<Rational>, A) {
    let m = so::<Rational>(n).unwrap();
    let ce = ce_of_lie(&m.data).unwrap();
    (m, ce)
}

fn mu3(m: &LieModel<Rational>, ce: &A) -> Poly<Rational> {
    cocycle_from_form(&m.data, m.form.as_ref().unwrap(), ce).unwrap()
}

fn u1_ce() -> A {
    ce_of_lie(&u1::<Rational>().unwrap().data).unwrap()
}

#[test]
fn weil_of_u1() {
    let w = weil_algebra(&u1_ce()).unwrap();
    let d: Vec<String> = w.algebra.differentials().iter().map(|p| p.render()).collect();
    assert_eq!(d, ["s(t)", "0"]);
}

#[test]
fn weil_of_so3_matches_boxed_table() {
    let (_, ce) = model(3);
    let w = weil_algebra(&ce).unwrap();
    let d: Vec<String> = w.algebra.differentials().iter().map(|p| p.render()).collect();
    assert_eq!(
        d,
        [
            "-t2*t3 + s(t1)",
            "t1*t3 + s(t2)",
            "-t1*t2 + s(t3)",
            "-t2*s(t3) + t3*s(t2)",
            "t1*s(t3) - t3*s(t1)",
            "-t1*s(t2) + t2*s(t1)",
        ]
    );
    // D r^a = -ε_abc t^b r^c.
    let s = w.algebra.sig();
    let t = |i: usize| Poly::generator(s, i);
    let r = |i: usize| w.shifted_gen(i);
    let expect = -&(&(&t(1) * &r(2)) - &(&t(2) * &r(1)));
    assert_eq!(w.algebra.d_generator(3), &expect);
}

#[test]
fn weil_algebras_are_nilpotent_and_restrict() {
    for n in [3, 5] {
        let (_, ce) = model(n);
        let w = weil_algebra(&ce).unwrap();
        assert!(w.algebra.is_nilpotent());
        let res = ce_restriction(&w).unwrap();
        assert!(res.is_chain_map());
        for i in 0..ce.sig().len() {
            assert_eq!(res.apply(&Poly::generator(w.algebra.sig(), i)).unwrap(), Poly::generator(ce.sig(), i));
            assert!(res.images()[w.shift.shifted(i)].is_zero());
        }
    }
}

#[test]
fn weil_of_so3_is_acyclic() {
    let (_, ce) = model(3);
    let w = weil_algebra(&ce).unwrap();
    assert_eq!(cohomology_dimensions(&w.algebra, 5).unwrap(), [1, 0, 0, 0, 0, 0]);
}

#[test]
fn basic_elements_examples() {
    let w = weil_algebra(&u1_ce()).unwrap();
    let b = basic_elements(&w, 2).unwrap();
    assert_eq!(b.closed.iter().map(|p| p.render()).collect::<Vec<_>>(), ["s(t)"]);

    let (_, ce) = model(3);
    let w = weil_algebra(&ce).unwrap();
    let b = basic_elements(&w, 4).unwrap();
    assert_eq!(b.closed.len(), 1);
    assert!(b.non_closed.is_empty());
    let sq = (0..3).fold(Poly::zero(w.algebra.sig()), |acc, i| &acc + &w.shifted_gen(i).pow(2));
    assert_eq!(b.closed[0], sq);

    for k in 1..=3 {
        let w = weil_algebra(&ce_u1_to_uk::<Rational>(k).unwrap()).unwrap();
        let b = basic_elements(&w, 2).unwrap();
        assert!(b.closed.is_empty());
        assert_eq!(b.non_closed.len(), 1);
        assert_eq!(b.non_closed[0].0.render(), "s(t0)");
        assert_eq!(b.non_closed[0].1.render(), "s(b)");
    }
}

#[test]
fn transgression_of_u1() {
    let w = weil_algebra(&u1_ce()).unwrap();
    let t = transgress(&w, &w.shifted_gen(0)).unwrap();
    assert_eq!(t.cs.render(), "t");
    assert_eq!(t.mu.render(), "t");
}

#[test]
fn transgression_of_so3() {
    let (m, ce) = model(3);
    let w = weil_algebra(&ce).unwrap();
    let sq = (0..3).fold(Poly::zero(w.algebra.sig()), |acc, i| &acc + &w.shifted_gen(i).pow(2));
    let t = transgress(&w, &sq).unwrap();
    assert_eq!(w.algebra.d(&t.cs), sq);
    assert_eq!(ce_restriction(&w).unwrap().apply(&t.cs).unwrap(), t.mu);
    assert_eq!(t.mu, -mu3(&m, &ce));
    assert_eq!(t.cs.render(), "-t1*t2*t3 + t1*s(t1) + t2*s(t2) + t3*s(t3)");
}

#[test]
fn literal_closed_form_needs_negative_cubic_term() {
    // cs = P_ab t^b r^a + c μ_abc t^a t^b t^c with P_ab = δ_ab, μ_abc = ε_abc;
    // Σ ε_abc t^a t^b t^c = 6 t1 t2 t3.
    let (m, ce) = model(3);
    let w = weil_algebra(&ce).unwrap();
    let sig = w.algebra.sig();
    let p = (0..3).fold(Poly::zero(sig), |acc, i| &acc + &w.shifted_gen(i).pow(2));
    let quad = (0..3).fold(Poly::zero(sig), |acc, i| &acc + &(&Poly::generator(sig, i) * &w.shifted_gen(i)));
    let cubic = w.include(&mu3(&m, &ce)).unwrap().scale(&q(6, 1));
    let literal = &quad + &cubic.scale(&q(1, 6));
    let residual = &w.algebra.d(&literal) - &p;
    assert!(!residual.is_zero());
    assert_eq!(residual, w.algebra.d(&cubic.scale(&q(2, 6))));
    let corrected = &quad - &cubic.scale(&q(1, 6));
    assert_eq!(w.algebra.d(&corrected), p);
}

#[test]
fn transgression_of_so5_hits_mu7() {
    let (m, ce) = model(5);
    let w = weil_algebra(&ce).unwrap();
    let r: Vec<usize> = (0..10).map(|i| w.shift.shifted(i)).collect();
    let p8 = invariant_polynomial_str(&m.data, m.realization.as_ref().unwrap(), 4, w.algebra.sig(), &r).unwrap();
    let t = transgress(&w, &p8).unwrap();
    assert_eq!(w.algebra.d(&t.cs), p8);
    assert!(ce.d(&t.mu).is_zero());
    let h7 = cohomology(&ce, 7).unwrap();
    assert_eq!(h7.dimension, 1);
    let c = class_coordinates(&ce, &t.mu, 7, &h7.representatives).unwrap();
    assert_ne!(c[0], q(0, 1));
}

#[test]
fn non_basic_input_is_rejected() {
    let (_, ce) = model(3);
    let w = weil_algebra(&ce).unwrap();
    let t1 = Poly::generator(w.algebra.sig(), 0);
    assert_eq!(transgress(&w, &(&t1 * &w.shifted_gen(0))), Err(Error::NotBasic));
    assert!(matches!(transgress(&w, &w.shifted_gen(0)), Err(Error::NotClosed(_))));
}

#[test]
fn koszul_homotopy_counts_word_length() {
    // On Λ(x, u) with δx = u, the commutator δK + Kδ with K(u) = x is the
    // word-length operator.
    let sig = Signature::new(vec![
        Generator::new("x1", 1),
        Generator::new("x2", 2),
        Generator::new("u1", 2),
        Generator::new("u2", 3),
    ])
    .unwrap();
    let g = |i: usize| Poly::<Rational>::generator(&sig, i);
    let delta = Derivation::new(&sig, true, vec![Some(g(2)), Some(g(3)), None, None]).unwrap();
    let k = Derivation::new(&sig, true, vec![None, None, Some(g(0)), Some(g(1))]).unwrap();
    let samples = [
        &(&g(0) * &g(1)) * &g(3),
        &g(1).pow(2) * &g(2),
        &(&g(0) * &g(2).pow(2)) + &g(1).pow(3),
        &g(3) * &g(2),
    ];
    for p in samples {
        let lhs = &delta.apply(&k.apply(&p)) + &k.apply(&delta.apply(&p));
        let mut rhs = Poly::zero(&sig);
        for (len, part) in p.word_length_components() {
            rhs = &rhs + &part.scale(&q(len as i64, 1));
        }
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn string_extensions() {
    let (m, ce) = model(3);
    let mu = mu3(&m, &ce);
    let st = string_like_extension(&ce, &mu, "b").unwrap();
    assert_eq!(st.d_generator(3).render(), "t1*t2*t3");
    assert!(st.is_nilpotent());

    let t12 = &Poly::generator(ce.sig(), 0) * &Poly::generator(ce.sig(), 1);
    assert_eq!(string_like_extension(&ce, &t12, "b").unwrap_err(), Error::EvenCocycle(2));

    let (m5, ce5) = model(5);
    let mu = mu3(&m5, &ce5);
    let st5 = string_like_extension(&ce5, &mu, "b2").unwrap();
    let mu7 = cohomology(&ce5, 7).unwrap().representatives[0].clone();
    let fb = string_like_extension(&st5, &mu7.embed(st5.sig()).unwrap(), "b6").unwrap();
    let degs: Vec<usize> = fb.generators().iter().map(|g| g.degree).collect();
    assert_eq!(degs, [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 6]);
    assert!(fb.is_nilpotent());
}

#[test]
fn zero_extension_preserves_low_cohomology() {
    let (_, ce) = model(3);
    let ext = string_like_extension_in_degree(&ce, &Poly::zero(ce.sig()), "b", 2).unwrap();
    assert_eq!(cohomology_dimensions(&ext, 1).unwrap(), cohomology_dimensions(&ce, 1).unwrap());
    assert_eq!(cohomology_dimensions(&ext, 3).unwrap(), [1, 0, 1, 1]);
}

#[test]
fn opposite_algebras() {
    for n in [3, 5] {
        let (_, ce) = model(n);
        let op = opposite_algebra(&ce).unwrap();
        assert!(op.is_nilpotent());
        assert!(opposite_morphism(&ce).unwrap().is_chain_map());
        let opop = opposite_algebra(&op).unwrap();
        assert_eq!(opop.differentials(), ce.differentials());
    }
    let (_, ce) = model(3);
    assert_eq!(opposite_algebra(&ce).unwrap().d_generator(0).render(), "t2*t3");
    let ab = u1_ce();
    assert_eq!(opposite_algebra(&ab).unwrap().differentials(), ab.differentials());
}

#[test]
fn direct_sums() {
    let a = u1_ce();
    let b = a.renamed("u(1)'", &["t'".to_string()]).unwrap();
    let s = direct_sum(&a, &b).unwrap();
    assert_eq!(s.sig().len(), 2);
    assert!(s.differentials().iter().all(|p| p.is_zero()));
    assert!(matches!(direct_sum(&a, &a), Err(Error::NameCollision(_))));

    let (_, ce) = model(3);
    let op = opposite_algebra(&ce).unwrap();
    let names: Vec<String> = (1..=3).map(|i| format!("u{i}")).collect();
    let s = direct_sum(&ce, &op.renamed("op", &names).unwrap()).unwrap();
    assert_eq!(s.sig().len(), 6);
    assert_eq!(s.d_generator(0).render(), "-t2*t3");
    assert_eq!(s.d_generator(3).render(), "u2*u3");
}

#[test]
fn shifted_abelian_sum() {
    let mk = |name: &str, deg: usize| {
        let sig = Signature::new(vec![Generator::new(name, deg)]).unwrap();
        DgcAlgebra::<Rational>::verified(name, sig.clone(), vec![Poly::zero(&sig)]).unwrap()
    };
    let s = direct_sum(&mk("h3", 3), &mk("h6", 6)).unwrap();
    assert_eq!(s.generators().iter().map(|g| g.degree).collect::<Vec<_>>(), [3, 6]);
}

#[test]
fn string_cone() {
    let (m, ce) = model(3);
    let mu = mu3(&m, &ce);
    let cone = weak_cokernel_cone(&ce, &mu, 2).unwrap();
    assert_eq!(cone.ce.d_generator(3).render(), "t1*t2*t3 - k");
    assert!(cone.ce.d_generator(4).is_zero());
    assert!(cone.ce.is_nilpotent() && cone.weil.is_nilpotent() && cone.opaque.is_nilpotent());
    let o = &cone.opaque;
    let d = |n: &str| o.d_generator(o.sig().require(n).unwrap()).render();
    assert_eq!(d("b"), "c - k + cs");
    assert_eq!(d("c"), "l - P");
    assert_eq!(d("k"), "l");
    assert_eq!(d("l"), "0");
    assert_eq!(d("cs"), "P");
    assert!(cone.expand.is_chain_map());
    let t = &cone.layers[0].components[0].transgression;
    assert_eq!(t.mu, mu);
}

#[test]
fn transgression_alignment_matches_given_cocycle() {
    let (m, ce) = model(3);
    let w = weil_algebra(&ce).unwrap();
    let mu = mu3(&m, &ce).scale(&q(5, 2));
    let t = transgression_for(&w, &mu).unwrap();
    assert_eq!(t.mu, mu);
    assert_eq!(w.algebra.d(&t.cs), t.p);
    assert_eq!(ce_restriction(&w).unwrap().apply(&t.cs).unwrap(), mu);
}

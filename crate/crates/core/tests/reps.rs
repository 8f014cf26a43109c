use std::collections::HashMap;

use linf_core::constructions::{ce_restriction, direct_sum, string_like_extension};
use linf_core::gca::{DgcAlgebra, Generator, Poly, Signature, Substitution};
use linf_core::lie::{ce_of_lie, cocycle_from_form, so, u1};
use linf_core::reps::{
    adjoint_rep, derive_twisted_bianchi, matrix_rep, preset, rep_algebra, rep_preset, rep_residuals, rep_weil,
    section_covariant_derivative, standard_rep_published_table, standard_rep_shifted_u1, twisted_chern_character_check,
    twisted_de_rham_check, Label, PresetOptions, RelationSet, RepData, PRESETS,
};
use linf_core::{q, Error, Rational};
use proptest::prelude::*;

type R = Rational;

fn eps(a: usize, b: usize, c: usize) -> i64 {
    match (a, b, c) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

fn so3_ce() -> DgcAlgebra<R> {
    ce_of_lie(&so::<R>(3).unwrap().data).unwrap()
}

/// `d v_i = Σ m[a][j][i] v_j t^a` over CE(so(3)), without any checks on `m`.
fn raw_rep(m: &[Vec<Vec<i64>>]) -> RepData<R> {
    let ce = so3_ce();
    let module = (1..=3).map(|i| Generator::new(format!("v{i}"), 0)).collect();
    RepData::new(&ce, module, |sig| {
        Ok((0..3)
            .map(|i| {
                let mut p = Poly::zero(sig);
                for j in 0..3 {
                    for a in 0..3 {
                        let w = &Poly::generator(sig, 3 + j) * &Poly::generator(sig, a);
                        p = &p + &w.scale(&q(m[a][j][i], 1));
                    }
                }
                p
            })
            .collect())
    })
    .unwrap()
}

fn relation_strings(rs: &RelationSet<R>) -> Vec<String> {
    rs.boxed.iter().map(|r| rs.display_relation(r)).collect()
}

#[test]
fn so3_vector_rep_is_nilpotent() {
    let m = so::<R>(3).unwrap();
    let rho = matrix_rep(&m.data, m.realization.as_ref().unwrap(), "v").unwrap();
    let a = rep_algebra(&rho).unwrap();
    assert!(a.is_nilpotent());
    let d = |n: &str| a.d_generator(a.sig().require(n).unwrap()).render();
    assert_eq!(d("v1"), "-t2*v3 + t3*v2");
}

#[test]
fn vector_rep_sign_matters() {
    // d v_i = ε_jia v_j t^a is not a representation for C^a_bc = ε_abc;
    // the opposite sign is.
    let plus: Vec<Vec<Vec<i64>>> =
        (0..3).map(|a| (0..3).map(|j| (0..3).map(|i| eps(j, i, a)).collect()).collect()).collect();
    let minus: Vec<Vec<Vec<i64>>> =
        plus.iter().map(|m| m.iter().map(|r| r.iter().map(|x| -x).collect()).collect()).collect();
    assert!(matches!(rep_algebra(&raw_rep(&plus)), Err(Error::NotNilpotent(_))));
    assert!(rep_algebra(&raw_rep(&minus)).is_ok());
}

fn defect(m: &[Vec<Vec<i64>>], sig: &std::sync::Arc<Signature>, i: usize) -> Poly<R> {
    // Σ_{b<c} ([M_b, M_c] − ε_abc M_a)_{ki} v_k t^b t^c
    let mut p = Poly::zero(sig);
    for b in 0..3 {
        for c in b + 1..3 {
            for k in 0..3 {
                let mut x = 0;
                for j in 0..3 {
                    x += m[b][k][j] * m[c][j][i] - m[c][k][j] * m[b][j][i];
                }
                for a in 0..3 {
                    x -= eps(a, b, c) * m[a][k][i];
                }
                if x != 0 {
                    let w = &(&Poly::generator(sig, 3 + k) * &Poly::generator(sig, b)) * &Poly::generator(sig, c);
                    p = &p + &w.scale(&q(x, 1));
                }
            }
        }
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn perturbed_action_residual_is_the_rep_defect(
        a in 0usize..3, j in 0usize..3, i in 0usize..3, k in -3i64..=3,
    ) {
        let mut m: Vec<Vec<Vec<i64>>> =
            (0..3).map(|a| (0..3).map(|j| (0..3).map(|i| -eps(j, i, a)).collect()).collect()).collect();
        m[a][j][i] += k;
        let rho = raw_rep(&m);
        let res: HashMap<usize, Poly<R>> = rep_residuals(&rho).unwrap().into_iter().collect();
        for v in 0..3 {
            let got = res.get(&(3 + v)).cloned().unwrap_or_else(|| Poly::zero(rho.sig()));
            prop_assert_eq!(got, defect(&m, rho.sig(), v));
        }
    }
}

#[test]
fn trivial_action_gives_direct_sum() {
    let ce = so3_ce();
    let rho = RepData::new(&ce, vec![Generator::new("v", 0)], |sig| Ok(vec![Poly::zero(sig)])).unwrap();
    let a = rep_algebra(&rho).unwrap();
    let vsig = Signature::new(vec![Generator::new("v", 0)]).unwrap();
    let v = DgcAlgebra::verified("V", vsig.clone(), vec![Poly::zero(&vsig)]).unwrap();
    let sum = direct_sum(&ce, &v).unwrap();
    assert_eq!(a.differentials(), sum.differentials());
}

#[test]
fn adjoint_of_so3() {
    let rho = adjoint_rep(&so3_ce()).unwrap();
    let a = rep_algebra(&rho).unwrap();
    let d: Vec<String> = (3..6).map(|i| a.d_generator(i).render()).collect();
    // d χ^a = −ε_abc t^b χ^c, the same matrices as the vector representation
    assert_eq!(d, ["-t2*chi_t3 + t3*chi_t2", "t1*chi_t3 - t3*chi_t1", "-t1*chi_t2 + t2*chi_t1"]);
    assert!(rep_weil(&rho).unwrap().algebra.is_nilpotent());
}

#[test]
fn adjoint_of_string_is_nilpotent() {
    let m = so::<R>(3).unwrap();
    let ce = ce_of_lie(&m.data).unwrap();
    let mu = cocycle_from_form(&m.data, m.form.as_ref().unwrap(), &ce).unwrap();
    let st = string_like_extension(&ce, &mu, "b").unwrap();
    let rho = adjoint_rep(&st).unwrap();
    assert_eq!(rho.action()[3].render(), "t1*t2*chi_t3 - t1*t3*chi_t2 + t2*t3*chi_t1");
    assert!(rep_weil(&rho).unwrap().algebra.is_nilpotent());
}

#[test]
fn adjoint_of_abelian_is_trivial() {
    let ce = ce_of_lie(&u1::<R>().unwrap().data).unwrap();
    let rho = adjoint_rep(&ce).unwrap();
    assert!(rho.action().iter().all(Poly::is_zero));
    assert!(rep_algebra(&rho).is_ok());
}

#[test]
fn adjoint_of_so5_is_nilpotent() {
    let ce = ce_of_lie(&so::<R>(5).unwrap().data).unwrap();
    assert!(rep_algebra(&adjoint_rep(&ce).unwrap()).is_ok());
}

#[test]
fn standard_rep_ladder() {
    let rho = standard_rep_shifted_u1::<R>(1, 2).unwrap();
    let a = rep_algebra(&rho).unwrap();
    let d: Vec<String> = a.differentials().iter().map(|p| p.render()).collect();
    assert_eq!(d, ["0", "0", "h*v0", "h*v2"]);
    let v4 = Poly::named(a.sig(), "v4").unwrap();
    assert!(a.d(&a.d(&v4)).is_zero());
    let rho7 = standard_rep_shifted_u1::<R>(3, 1).unwrap();
    assert_eq!(rho7.base().sig().degree(0), 7);
    assert!(rep_algebra(&rho7).is_ok());
    assert!(standard_rep_shifted_u1::<R>(0, 1).is_err());
}

#[test]
fn standard_rep_weil_and_restriction() {
    let rho = standard_rep_shifted_u1::<R>(1, 1).unwrap();
    let w = rep_weil(&rho).unwrap();
    let d = |n: &str| w.algebra.d_generator(w.algebra.sig().require(n).unwrap()).render();
    assert_eq!(d("v2"), "h*v0 + s(v2)");
    let a = rep_algebra(&rho).unwrap();
    let res = ce_restriction(&w).unwrap();
    for i in 0..a.sig().len() {
        let img = res.apply(w.algebra.d_generator(i)).unwrap();
        assert_eq!(&img, a.d_generator(i));
    }
}

#[test]
fn published_standard_rep_table_is_checked_not_adopted() {
    let claims = standard_rep_published_table::<R>(1).unwrap();
    let flags: Vec<(String, bool)> = claims.iter().map(|c| (c.generator.clone(), c.matches())).collect();
    assert_eq!(
        flags,
        [
            ("v0".to_string(), false),
            ("s(v0)".to_string(), true),
            ("v2".to_string(), true),
            ("s(v2)".to_string(), true),
        ]
    );
    assert_eq!(claims[0].derived.render(), "s(v0)");
}

#[test]
fn so3_vector_section_squares_to_curvature() {
    let m = so::<R>(3).unwrap();
    let rho = matrix_rep(&m.data, m.realization.as_ref().unwrap(), "v").unwrap();
    let mut labels = HashMap::new();
    for i in 1..=3 {
        labels.insert(format!("t{i}"), Label::plain(format!("A{i}")));
        labels.insert(format!("s(t{i})"), Label::new(format!("FA{i}"), format!("F_A{i}")));
        labels.insert(format!("v{i}"), Label::plain(format!("s{i}")));
        labels.insert(format!("s(v{i})"), Label::new(format!("Ds{i}"), format!("∇s{i}")));
    }
    let p = rep_preset("vector", &rho, &labels, true, &["s(v1)"]).unwrap();
    let rs = section_covariant_derivative(&p, &rho).unwrap();
    assert!(rs.is_consistent());
    assert_eq!(relation_strings(&rs), ["∇s1 = ds1 - s2∧A3 + s3∧A2"]);
    let sq = rs.relation("DDs1").unwrap();
    assert_eq!(rs.display_poly(&sq.rhs), "-s2∧F_A3 + s3∧F_A2");
    assert_eq!(rs.residuals.iter().filter(|(n, _)| n.starts_with("∇∇")).count(), 3);
}

#[test]
fn section_needs_matching_preset() {
    let opts = PresetOptions::<R>::default();
    let p = preset("string", &opts).unwrap();
    let rho = standard_rep_shifted_u1::<R>(1, 1).unwrap();
    assert_eq!(section_covariant_derivative(&p, &rho).unwrap_err(), Error::GeneratorMismatch);
}

#[test]
fn bn_morphism_covariant_derivative() {
    let rs = derive_twisted_bianchi::<R>("bn-morphism", &PresetOptions::default()).unwrap();
    assert!(rs.is_consistent());
    // ds2 + s0∧(H2 − H1)
    assert_eq!(relation_strings(&rs), ["∇s2 = ds2 - s0∧H1 + s0∧H2", "∇s0 = ds0"]);
    let sq = rs.relation("DDs2").unwrap();
    assert_eq!(rs.display_poly(&sq.rhs), "-s0∧G1 + s0∧G2");
    let rs5 = derive_twisted_bianchi::<R>("bn-morphism", &PresetOptions { n: 5, ..Default::default() }).unwrap();
    assert!(rs5.is_consistent());
    assert_eq!(rs5.display_relation(&rs5.boxed[0]), "∇s4 = ds4 - s0∧H1 + s0∧H2");
}

#[test]
fn rr_iia_covariant_constancy() {
    let rs = derive_twisted_bianchi::<R>("rr-iia", &PresetOptions::default()).unwrap();
    assert!(rs.is_consistent());
    assert_eq!(rs.display_relation(&rs.boxed[0]), "∇F2 = dF2 + H3∧F0");
    assert!(rs.table.iter().all(|r| !r.rhs.support().iter().any(|&i| rs.sig.name(i) == "H1")));
}

#[test]
fn string_preset_matches_boxes() {
    let rs = derive_twisted_bianchi::<R>("string", &PresetOptions::default()).unwrap();
    assert_eq!(relation_strings(&rs), ["H3 = dB + C3 - cs3(A,F_A)", "dH3 = G4 - P4(F_A)", "dG4 = 0"]);
    let ascii: Vec<String> = rs.boxed.iter().map(|r| rs.ascii_relation(r)).collect();
    assert_eq!(ascii, ["H3 = dB + C3 - cs3", "dH3 = G4 - P4", "dG4 = 0"]);
    assert!(rs.is_consistent());
}

#[test]
fn string_twist_measures_the_failure() {
    let rs = derive_twisted_bianchi::<R>("string", &PresetOptions::default()).unwrap();
    let g4 = rs.sig.require("G4").unwrap();
    let val = &Poly::named(&rs.sig, "P4").unwrap() + &Poly::named(&rs.sig, "dH3").unwrap();
    let sub = Substitution::with_overrides(&rs.sig, &[(g4, val)]).unwrap();
    let dh3 = rs.relation("dH3").unwrap();
    assert_eq!(sub.apply(&dh3.rhs).unwrap(), Poly::named(&rs.sig, "dH3").unwrap());
}

#[test]
fn string_preset_expanded() {
    let opts = PresetOptions { expand: true, ..Default::default() };
    let rs = derive_twisted_bianchi::<R>("string", &opts).unwrap();
    assert!(rs.is_consistent());
    assert!(rs.sig.index_of("cs3").is_none());
    let h3 = rs.relation("H3").unwrap();
    assert_eq!(
        rs.display_poly(&h3.rhs),
        "dB - A1∧A2∧A3 + A1∧F_A1 + A2∧F_A2 + A3∧F_A3 + C3"
    );
}

#[test]
fn fivebrane_preset_matches_boxes() {
    let rs = derive_twisted_bianchi::<R>("fivebrane", &PresetOptions::default()).unwrap();
    assert_eq!(
        relation_strings(&rs),
        [
            "H3 = dB2 + C3 - cs3(A,F_A)",
            "dH3 = G4 - P4(F_A)",
            "dG4 = 0",
            "H7 = dB6 + C7 - cs7(A,F_A)",
            "dH7 = G8 - P8(F_A)",
            "dG8 = 0",
        ]
    );
    assert!(rs.is_consistent());
}

#[test]
fn c_field_presets_carry_the_sign() {
    let rs = derive_twisted_bianchi::<R>("c-field", &PresetOptions::default()).unwrap();
    assert_eq!(
        relation_strings(&rs),
        ["C3' = c3 + C3 - cs3(A,F_A) + cs3(ω,F_ω)", "dC3' = G4 - P4(F_A) + P4(F_ω)", "dG4 = 0"]
    );
    assert!(rs.is_consistent());
    let neg = PresetOptions { sign: q(-1, 1), ..Default::default() };
    let rs = derive_twisted_bianchi::<R>("c-field", &neg).unwrap();
    assert_eq!(rs.display_relation(&rs.boxed[1]), "dC3' = G4 - P4(F_A) - P4(F_ω)");
    assert!(rs.is_consistent());
}

#[test]
fn dual_c_field_preset() {
    let rs = derive_twisted_bianchi::<R>("dual-c-field", &PresetOptions::default()).unwrap();
    let lines = relation_strings(&rs);
    assert_eq!(lines[3], "C7' = c7 + C7 - cs7(A,F_A) + cs7(ω,F_ω)");
    assert_eq!(lines[4], "dC7' = G8 - P8(F_A) + P8(F_ω)");
    assert_eq!(lines[1], "dH3 = G4 - P4(F_A)");
    assert!(rs.is_consistent());
}

#[test]
fn u_k_preset() {
    for k in 1..=3 {
        let rs = derive_twisted_bianchi::<R>("u-k", &PresetOptions { k, ..Default::default() }).unwrap();
        assert_eq!(relation_strings(&rs), ["F0 = dA0 + B", "dF0 = H3"]);
        assert!(rs.is_consistent());
    }
}

#[test]
fn unknown_preset_is_rejected() {
    assert_eq!(
        derive_twisted_bianchi::<R>("nope", &PresetOptions::default()).unwrap_err(),
        Error::UnknownPreset("nope".into())
    );
    assert_eq!(PRESETS.len(), 7);
}

fn closed_h() -> DgcAlgebra<R> {
    let sig = Signature::new(vec![Generator::new("h", 3)]).unwrap();
    DgcAlgebra::verified("b^2u(1)", sig.clone(), vec![Poly::zero(&sig)]).unwrap()
}

#[test]
fn twisted_de_rham_squares_to_zero() {
    let base = closed_h();
    let h = Poly::named(base.sig(), "h").unwrap();
    let rep = twisted_de_rham_check(&base, &h, 3).unwrap();
    assert!(rep.squares_to_zero());
    let table: Vec<String> = rep.covariant.iter().map(|(n, p)| format!("{n}: {}", p.render())).collect();
    assert_eq!(table, ["c0: dc0", "c2: h*c0 + dc2", "c4: h*c2 + dc4", "c6: h*c4 + dc6"]);
    let empty = twisted_de_rham_check(&base, &h, 0).unwrap();
    assert!(empty.squares_to_zero());
}

#[test]
fn twisted_de_rham_obstruction() {
    let sig = Signature::new(vec![Generator::new("H", 3), Generator::new("G", 4)]).unwrap();
    let base: DgcAlgebra<R> =
        DgcAlgebra::verified("H,G", sig.clone(), vec![Poly::named(&sig, "G").unwrap(), Poly::zero(&sig)]).unwrap();
    let h = Poly::named(&sig, "H").unwrap();
    let rep = twisted_de_rham_check(&base, &h, 2).unwrap();
    let sq: Vec<String> = rep.squares.iter().map(|(_, p)| p.render()).collect();
    assert_eq!(sq, ["0", "G*c0", "G*c2"]);
    assert!(twisted_de_rham_check(&base, &Poly::named(&sig, "G").unwrap(), 1).is_err());
}

#[test]
fn twisted_chern_character() {
    for k in 1..=3 {
        let rep = twisted_chern_character_check::<R>(k, 8).unwrap();
        assert!(rep.holds(), "k = {k}");
        assert!(rep.inclusion.is_chain_map());
    }
    let rep = twisted_chern_character_check::<R>(2, 4).unwrap();
    assert_eq!(rep.character.render(), "2 + 2*r0 + r0^2 - c2");
}

#[test]
fn every_preset_is_closed_under_d() {
    let opts = PresetOptions::<R>::default();
    for name in PRESETS.iter().filter(|n| !n.contains("five") && !n.starts_with("dual")) {
        assert!(derive_twisted_bianchi(name, &opts).unwrap().is_consistent(), "{name}");
    }
}

//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness so the lines show up in plain `cargo test` output.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use linf_cli::builtin::{fivebrane, fivebrane_cone, string, string_cone};
use linf_cli::dsl::{parse_algebra_file, print_algebra_file};
use linf_core::charclass::{
    anomaly_polynomial, chern_character_component, class_signature, reduce, sigma_digit_sum, singer_divisibility,
    symbol,
};
use linf_core::cohomology::{class_coordinates, cohomology, cohomology_dimensions};
use linf_core::constructions::{ce_restriction, opposite_algebra, opposite_morphism, transgress, weil_algebra};
use linf_core::gca::{DgcAlgebra, Generator, Poly};
use linf_core::lie::{ce_of_lie, ce_u1_to_uk, invariant_polynomial_str, so, su, u1, LieModel};
use linf_core::reps::{adjoint_rep, rep_residuals, standard_rep_shifted_u1, twisted_chern_character_check, twisted_de_rham_check};
use linf_core::{q, Rational, Result};

type R = Rational;
type Check = std::result::Result<String, String>;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn linf(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_linf")).current_dir(root()).args(args).output().expect("run linf")
}

fn ensure(ok: bool, what: impl Into<String>) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn core<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ce_of(m: &LieModel<R>) -> Result<DgcAlgebra<R>> {
    ce_of_lie(&m.data)
}

fn nilpotency() -> Check {
    let mut algebras: Vec<(String, DgcAlgebra<R>)> = Vec::new();
    for (name, m) in [("so(3)", so(3)), ("so(5)", so(5)), ("su(3)", su(3)), ("u(1)", u1())] {
        algebras.push((name.into(), core(ce_of(&core(m)?))?));
    }
    for k in 1..=3 {
        algebras.push((format!("u(1)->u({k})"), core(ce_u1_to_uk(k))?));
    }
    algebras.push(("string(3)".into(), core(string(3))?));
    algebras.push(("string(5)".into(), core(string(5))?));
    algebras.push(("fivebrane(5)".into(), core(fivebrane())?));
    let mut count = 0;
    for (name, a) in &algebras {
        ensure(a.is_nilpotent(), format!("CE {name}"))?;
        ensure(core(weil_algebra(a))?.algebra.is_nilpotent(), format!("W {name}"))?;
        count += 2;
    }
    for (name, cone) in [("string cone", core(string_cone())?), ("fivebrane cone", core(fivebrane_cone())?)] {
        ensure(cone.ce.is_nilpotent() && cone.weil.is_nilpotent() && cone.opaque.is_nilpotent(), name)?;
        ensure(cone.expand.is_chain_map(), format!("{name} expansion"))?;
        count += 3;
    }
    for (name, a) in &algebras {
        let rho = core(adjoint_rep(a))?;
        ensure(core(rep_residuals(&rho))?.is_empty(), format!("adjoint of {name}"))?;
        count += 1;
    }
    for k in 1..=3 {
        let rho = core(standard_rep_shifted_u1::<R>(k, 3))?;
        ensure(core(rep_residuals(&rho))?.is_empty(), format!("standard rep k={k}"))?;
        count += 1;
    }
    Ok(format!("{count} algebras with d² = 0"))
}

fn cohomology_oracles() -> Check {
    let so3 = core(ce_of(&core(so(3))?))?;
    let so5 = core(ce_of(&core(so(5))?))?;
    let cases = [
        ("so(3)", so3, 6, vec![1, 0, 0, 1, 0, 0, 0]),
        ("so(5)", so5, 8, vec![1, 0, 0, 1, 0, 0, 0, 1, 0]),
        ("so(3)_mu3", core(string(3))?, 6, vec![1, 0, 0, 0, 0, 0, 0]),
    ];
    let mut so5_time = Duration::ZERO;
    for (name, a, max, want) in cases {
        let t = Instant::now();
        let dims = core(cohomology_dimensions(&a, max))?;
        if name == "so(5)" {
            so5_time = t.elapsed();
        }
        ensure(dims == want, format!("{name}: {dims:?}"))?;
    }
    ensure(so5_time < Duration::from_secs(300), "so(5) took longer than 5 minutes")?;
    Ok(format!("so(3), so(5) to degree 8 ({:.1?}), so(3)_mu3", so5_time))
}

fn quadratic(w: &linf_core::WeilAlgebra, m: &LieModel<R>) -> Result<Poly<R>> {
    let sig = w.algebra.sig();
    let mut p = Poly::zero(sig);
    for d in m.data.dual_names() {
        let r = Poly::named(sig, &format!("s({d})"))?;
        p = &p + &(&r * &r);
    }
    Ok(p)
}

fn transgression() -> Check {
    for m in [core(u1())?, core(so(3))?] {
        let ce = core(ce_of(&m))?;
        let w = core(weil_algebra(&ce))?;
        let p = core(quadratic(&w, &m))?;
        let t = core(transgress(&w, &p))?;
        ensure(w.algebra.d(&t.cs) == p, format!("D cs = P for {}", m.data.name()))?;
        ensure(core(core(ce_restriction(&w))?.apply(&t.cs))? == t.mu, "i* cs = mu")?;
        ensure(ce.d(&t.mu).is_zero(), "d mu = 0")?;
    }
    let m = core(so(5))?;
    let ce = core(ce_of(&m))?;
    let w = core(weil_algebra(&ce))?;
    let r: Vec<usize> = (0..w.shift.base_len()).map(|i| w.shift.shifted(i)).collect();
    let p8 = core(invariant_polynomial_str(&m.data, m.realization.as_ref().unwrap(), 4, w.algebra.sig(), &r))?;
    let t = core(transgress(&w, &p8))?;
    ensure(w.algebra.d(&t.cs) == p8, "D cs = P8")?;
    let h7 = core(cohomology(&ce, 7))?;
    ensure(h7.dimension == 1, "H^7(so(5)) is one-dimensional")?;
    let c = core(class_coordinates(&ce, &t.mu, 7, &h7.representatives))?;
    ensure(c[0] != q(0, 1), "i* cs is exact")?;
    Ok(format!("u(1), so(3) exact; so(5): i* cs = {} · [mu7] + d(..)", c[0]))
}

fn bianchi_lines(preset: &str) -> std::result::Result<Vec<String>, String> {
    let o = linf(&["bianchi", "--preset", preset]);
    ensure(o.status.code() == Some(0), format!("bianchi --preset {preset} exit {:?}", o.status.code()))?;
    let text = String::from_utf8(o.stdout).map_err(|e| e.to_string())?;
    let golden = std::fs::read_to_string(root().join(format!("tests/golden/bianchi_{preset}.txt")))
        .map_err(|e| e.to_string())?;
    let norm = |s: &str| s.lines().map(|l| l.trim_end().to_string()).filter(|l| !l.is_empty()).collect::<Vec<_>>();
    ensure(norm(&text) == norm(&golden), format!("{preset} differs from golden file"))?;
    Ok(norm(&text).into_iter().filter(|l| !l.starts_with("note:")).collect())
}

fn bianchi() -> Check {
    let string = bianchi_lines("string")?;
    let expect = ["H3 = dB + C3 - cs3(A,F_A)", "dH3 = G4 - P4(F_A)", "dG4 = 0"];
    ensure(string == expect, format!("string: {string:?}"))?;
    let five = bianchi_lines("fivebrane")?;
    for l in ["dH7 = G8 - P8(F_A)", "dG8 = 0", "dH3 = G4 - P4(F_A)", "dG4 = 0"] {
        ensure(five.iter().any(|x| x == l), format!("fivebrane lacks {l}"))?;
    }
    Ok("string and fivebrane boxes match golden files".into())
}

fn characteristic_classes() -> Check {
    let s = |n: &str| core(symbol::<R>(n));
    let c1 = s("c1")?;
    let c2 = s("c2")?;
    let c3 = s("c3")?;
    let c4 = s("c4")?;
    let ch4 = &(&(&(&c1.pow(4) - &(&c1.pow(2) * &c2).scale(&q(4, 1))) + &(&c1 * &c3).scale(&q(4, 1)))
        + &c2.pow(2).scale(&q(2, 1)))
        - &c4.scale(&q(4, 1));
    let ch4 = ch4.scale(&q(1, 24));
    ensure(core(chern_character_component::<R>(4))? == ch4, "ch4 formula")?;
    let zero = Poly::zero(&class_signature());
    let red = core(reduce(&ch4, &[("c1", zero.clone()), ("c2", zero.clone())]))?;
    ensure(red == c4.scale(&q(-1, 6)), "ch4 at c1 = c2 = 0")?;
    ensure(core(singer_divisibility(4, 4))? == 6u32.into(), "singer(4,4)")?;
    ensure(core(sigma_digit_sum(2, 3))? == 2 && core(sigma_digit_sum(3, 3))? == 1, "digit sums")?;
    let g8 = core(reduce(&core(anomaly_polynomial::<R>("g8-th"))?, &[("lambda", zero)]))?;
    let want = &s("a")?.pow(2).scale(&q(1, 2)) - &s("p2T")?.scale(&q(1, 48));
    ensure(g8 == want, format!("g8-th at lambda = 0: {}", g8.render()))?;
    Ok("ch4, -c4/6, singer(4,4) = 6, σ digit sums, G8 at λ = 0".into())
}

fn twisted_de_rham() -> Check {
    for deg in [3usize, 5, 7] {
        let base = core(DgcAlgebra::<R>::from_fn("H", vec![Generator::new("H", deg)], |s, _| Ok(Poly::zero(s))))?;
        let rep = core(twisted_de_rham_check(&base, &core(base.gen("H"))?, 4))?;
        ensure(rep.squares_to_zero(), format!("closed H of degree {deg}"))?;
    }
    let gens = vec![Generator::new("H", 3), Generator::new("G", 4)];
    let base = core(DgcAlgebra::<R>::from_fn("HG", gens, |s, i| {
        Ok(if i == 0 { Poly::generator(s, 1) } else { Poly::zero(s) })
    }))?;
    let rep = core(twisted_de_rham_check(&base, &core(base.gen("H"))?, 4))?;
    let sig = rep.algebra.sig().clone();
    for (r, (_, sq)) in rep.squares.iter().enumerate() {
        let want = if r == 0 {
            Poly::zero(&sig)
        } else {
            &core(Poly::named(&sig, "G"))? * &core(Poly::named(&sig, &format!("c{}", 2 * (r - 1))))?
        };
        ensure(*sq == want, format!("obstructed rung {r}: {}", sq.render()))?;
    }
    Ok("closed H squares to zero; dH = G leaves G∧c_{2(r-1)}".into())
}

fn twisted_chern() -> Check {
    for k in 1..=3 {
        let rep = core(twisted_chern_character_check::<R>(k, 8))?;
        ensure(rep.holds(), format!("k = {k}"))?;
        ensure(rep.inclusion.is_chain_map(), format!("inclusion k = {k}"))?;
    }
    let o = linf(&["twisted-derham", "--chern", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).map_err(|e| e.to_string())?;
    let notes = v["notes"].as_array().cloned().unwrap_or_default();
    ensure(notes.iter().any(|n| n.as_str().is_some_and(|s| s.contains("H3∧c"))), "deviation note missing")?;
    Ok("d ch = c∧ch to degree 8 for k = 1, 2, 3; deviation noted in the report".into())
}

fn opposite() -> Check {
    for n in [3, 5] {
        let ce = core(ce_of(&core(so(n))?))?;
        ensure(core(opposite_algebra(&ce))?.is_nilpotent(), format!("so({n})^op"))?;
        ensure(core(opposite_morphism(&ce))?.is_chain_map(), format!("g ↦ -g on so({n})"))?;
    }
    Ok("so(3)^op, so(5)^op nilpotent; g ↦ -g is a chain map".into())
}

fn determinism() -> Check {
    let mut files: Vec<PathBuf> = std::fs::read_dir(root().join("samples"))
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e == "linf"))
        .collect();
    files.sort();
    ensure(!files.is_empty(), "no samples")?;
    let mut runs = 0;
    for f in &files {
        let text = std::fs::read_to_string(f).map_err(|e| e.to_string())?;
        let parsed = parse_algebra_file(&text).map_err(|e| format!("{}: {e}", f.display()))?;
        let again = parse_algebra_file(&print_algebra_file(&parsed)).map_err(|e| e.to_string())?;
        ensure(again == parsed, format!("round trip of {}", f.display()))?;
        let rel = f.strip_prefix(root()).unwrap().to_string_lossy().into_owned();
        for cmd in ["check", "weil", "opposite"] {
            for json in [false, true] {
                let mut args = vec![cmd, rel.as_str()];
                if json {
                    args.push("--json");
                }
                let a = linf(&args);
                let b = linf(&args);
                ensure(a.stdout == b.stdout && a.status.code() == b.status.code(), format!("{args:?}"))?;
                runs += 1;
            }
        }
    }
    for args in [["bianchi", "--preset", "string"], ["bianchi", "--preset", "c-field"], ["singer", "4", "4"]] {
        ensure(linf(&args).stdout == linf(&args).stdout, format!("{args:?}"))?;
        runs += 1;
    }
    Ok(format!("{} sample files round-trip; {runs} commands byte-identical twice", files.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("nilpotency suite", nilpotency),
        ("cohomology oracles", cohomology_oracles),
        ("transgression", transgression),
        ("bianchi reproduction", bianchi),
        ("characteristic classes", characteristic_classes),
        ("twisted de Rham", twisted_de_rham),
        ("twisted Chern character", twisted_chern),
        ("opposite and chain map", opposite),
        ("CLI determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let el = t.elapsed();
        let res = if i == 0 && el >= Duration::from_secs(60) { Err(format!("took {el:.1?}")) } else { res };
        match res {
            Ok(msg) => println!("criterion {}: PASS {name}: {msg} [{el:.1?}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {msg} [{el:.1?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

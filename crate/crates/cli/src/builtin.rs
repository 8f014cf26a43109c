//! Named algebras available through `--builtin`.

use linf_core::cohomology::cohomology;
use linf_core::constructions::{
    align_transgression, string_like_extension, transgress, transgression_for, weak_cokernel_cone_layers,
    weil_algebra, ConeComponent, ConeLayer, WeakCokernelCone,
};
use linf_core::gca::DgcAlgebra;
use linf_core::lie::{ce_of_lie, ce_u1_to_uk, cocycle_from_form, invariant_polynomial_str, so, su, u1, LieModel};
use linf_core::{Error, Rational, Result};

type R = Rational;

pub const BUILTINS: &[&str] = &[
    "so3",
    "so5",
    "su3",
    "u1",
    "u1-u1",
    "u1-u2",
    "u1-u3",
    "string3",
    "string5",
    "fivebrane5",
    "cone-string",
    "cone-fivebrane",
];

/// An algebra, with the Lie model it comes from when it is a plain
/// Chevalley–Eilenberg algebra.
pub struct Builtin {
    pub algebra: DgcAlgebra<R>,
    pub model: Option<LieModel<R>>,
}

fn lie(model: LieModel<R>, name: &str) -> Result<Builtin> {
    let algebra = ce_of_lie(&model.data)?.with_name(name);
    Ok(Builtin { algebra, model: Some(model) })
}

fn plain(algebra: DgcAlgebra<R>) -> Builtin {
    Builtin { algebra, model: None }
}

pub fn builtin(name: &str) -> Result<Builtin> {
    match name {
        "so3" => lie(so(3)?, "so3"),
        "so5" => lie(so(5)?, "so5"),
        "su3" => lie(su(3)?, "su3"),
        "u1" => lie(u1()?, "u1"),
        "u1-u1" => Ok(plain(ce_u1_to_uk(1)?.with_name(name))),
        "u1-u2" => Ok(plain(ce_u1_to_uk(2)?.with_name(name))),
        "u1-u3" => Ok(plain(ce_u1_to_uk(3)?.with_name(name))),
        "string3" => Ok(plain(string(3)?.with_name(name))),
        "string5" => Ok(plain(string(5)?.with_name(name))),
        "fivebrane5" => Ok(plain(fivebrane()?.with_name(name))),
        "cone-string" => Ok(plain(string_cone()?.ce.with_name(name))),
        "cone-fivebrane" => Ok(plain(fivebrane_cone()?.ce.with_name(name))),
        _ => Err(Error::UnknownPreset(name.to_string())),
    }
}

fn mu3(m: &LieModel<R>, ce: &DgcAlgebra<R>) -> Result<linf_core::Poly> {
    cocycle_from_form(&m.data, m.form.as_ref().ok_or(Error::NonInvariantForm)?, ce)
}

/// `so(n)_{μ3}` with the new generator `b`.
pub fn string(n: usize) -> Result<DgcAlgebra<R>> {
    let m = so::<R>(n)?;
    let ce = ce_of_lie(&m.data)?;
    string_like_extension(&ce, &mu3(&m, &ce)?, "b")
}

/// `(so(5)_{μ3})_{μ7}` with generators `b` and `b6`, where `μ7` is the first
/// degree-7 class of `so(5)`.
pub fn fivebrane() -> Result<DgcAlgebra<R>> {
    let m = so::<R>(5)?;
    let ce = ce_of_lie(&m.data)?;
    let s = string_like_extension(&ce, &mu3(&m, &ce)?, "b")?;
    let mu7 = first_class(&ce, 7)?.embed(s.sig())?;
    string_like_extension(&s, &mu7, "b6")
}

fn first_class(ce: &DgcAlgebra<R>, n: usize) -> Result<linf_core::Poly> {
    cohomology(ce, n)?
        .representatives
        .into_iter()
        .next()
        .ok_or_else(|| Error::NoTransgression(format!("no degree-{n} class")))
}

/// Cone of `b u(1) ↪ so(3)_{μ3}`.
pub fn string_cone() -> Result<WeakCokernelCone<R>> {
    let m = so::<R>(3)?;
    let ce = ce_of_lie(&m.data)?;
    linf_core::constructions::weak_cokernel_cone(&ce, &mu3(&m, &ce)?, 2)
}

/// Two-layer cone over `so(5)` killing `μ3` and `μ7`, with `μ7` transgressed
/// to a multiple of `str(X⁴)`.
pub fn fivebrane_cone() -> Result<WeakCokernelCone<R>> {
    let m = so::<R>(5)?;
    let ce = ce_of_lie(&m.data)?;
    let w = weil_algebra(&ce)?;
    let t3 = transgression_for(&w, &mu3(&m, &ce)?)?;
    let r: Vec<usize> = (0..w.shift.base_len()).map(|i| w.shift.shifted(i)).collect();
    let real = m.realization.as_ref().expect("so(n) is realized");
    let p8 = invariant_polynomial_str(&m.data, real, 4, w.algebra.sig(), &r)?;
    let t7 = align_transgression(&w, &[transgress(&w, &p8)?], &first_class(&ce, 7)?)?;
    let layer = |degree: usize, suffix: &str, t| ConeLayer {
        degree,
        b: format!("b{suffix}"),
        k: format!("k{suffix}"),
        c: format!("c{suffix}"),
        l: format!("l{suffix}"),
        components: vec![ConeComponent {
            sign: linf_core::q(1, 1),
            transgression: t,
            cs_name: format!("cs{suffix}"),
            p_name: format!("P{suffix}"),
        }],
    };
    weak_cokernel_cone_layers(&w, vec![layer(2, "2", t3), layer(6, "6", t7)])
}

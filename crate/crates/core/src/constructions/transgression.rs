use crate::cohomology::Coordinates;
use crate::error::{Error, Result};
use crate::gca::{Derivation, Poly, Substitution};
use crate::linalg::{solve, SparseVec};
use crate::scalar::{int, Scalar};

use super::weil::{basic_elements, ce_restriction, require_basic_closed, WeilAlgebra};

/// `D cs = p` in `W(A)`, `mu = i*(cs)` in `A`, `d_A mu = 0` and `D p = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Transgression<S> {
    pub mu: Poly<S>,
    pub cs: Poly<S>,
    pub p: Poly<S>,
}

/// Substitution on `W(A)` fixing base generators and sending
/// `s g ↦ s g + sign · d_A g`.
fn shear<S: Scalar>(w: &WeilAlgebra<S>, sign: i64) -> Result<Substitution<S>> {
    let sig = w.algebra.sig();
    let n = w.shift.base_len();
    let overrides = (0..n)
        .map(|i| {
            let dg = w.include(w.base.d_generator(i))?;
            Ok((w.shift.shifted(i), &w.shifted_gen(i) + &dg.scale(&int(sign))))
        })
        .collect::<Result<Vec<_>>>()?;
    Substitution::with_overrides(sig, &overrides)
}

/// Chern–Simons element of a closed element `p` of the shifted subalgebra.
///
/// In the coordinates `u_g = D g` the Weil differential becomes the Koszul
/// differential `g ↦ u_g`, and `K = Σ g ∂/∂u_g` satisfies `DK + KD = N` with
/// `N` the word length. The result is `Σ_N K(p_N) / N` transported back,
/// where `p_N` is the word-length-`N` part of `p` in the new coordinates.
pub fn transgress<S: Scalar>(w: &WeilAlgebra<S>, p: &Poly<S>) -> Result<Transgression<S>> {
    require_basic_closed(w, p)?;
    let sig = w.algebra.sig();
    let n = w.shift.base_len();
    let q = shear(w, -1)?.apply(p)?;
    let mut images: Vec<Option<Poly<S>>> = vec![None; sig.len()];
    for i in 0..n {
        images[w.shift.shifted(i)] = Some(Poly::generator(sig, i));
    }
    let k = Derivation::new(sig, true, images)?;
    let mut cs_u = Poly::zero(sig);
    for (len, part) in q.word_length_components() {
        if len == 0 {
            return Err(Error::NoTransgression("element has a constant term".into()));
        }
        let scale = S::one() / int::<S>(len as i64);
        cs_u = &cs_u + &k.apply(&part).scale(&scale);
    }
    let cs = shear(w, 1)?.apply(&cs_u)?;
    let dcs = w.algebra.d(&cs);
    if dcs != *p {
        return Err(Error::NoTransgression(format!("D cs - P = {}", (&dcs - p).render())));
    }
    let mu = ce_restriction(w)?.apply(&cs)?;
    let dmu = w.base.d(&mu);
    if !dmu.is_zero() {
        return Err(Error::NotClosed(dmu.render()));
    }
    Ok(Transgression { mu, cs, p: p.clone() })
}

/// Rescales and corrects transgressions of `candidates` so that the
/// restriction equals `mu` exactly: solves `mu = Σ λ_i μ_i + d x` and returns
/// `(Σ λ_i P_i, Σ λ_i cs_i + D x)`.
pub fn align_transgression<S: Scalar>(
    w: &WeilAlgebra<S>,
    candidates: &[Transgression<S>],
    mu: &Poly<S>,
) -> Result<Transgression<S>> {
    let base = &w.base;
    let Some(deg) = mu.homogeneous_degree() else {
        return Err(Error::NoTransgression("cocycle is zero or inhomogeneous".into()));
    };
    let dmu = base.differentiate(mu)?;
    if !dmu.is_zero() {
        return Err(Error::NotClosed(dmu.render()));
    }
    let cn = Coordinates::new(base.graded_component_basis(deg)?);
    let below = Coordinates::new(base.graded_component_basis(deg - 1)?);
    let mut cols: Vec<SparseVec<S>> = candidates.iter().map(|t| cn.vector(&t.mu)).collect::<Result<_>>()?;
    let m = cols.len();
    for b in below.basis() {
        cols.push(cn.vector(&base.d(&Poly::term(base.sig(), b.clone(), S::one())))?);
    }
    let x = solve(&cols, &cn.vector(mu)?)
        .ok_or_else(|| Error::NoTransgression("cocycle is not in the span of transgressed classes".into()))?;
    let mut p = Poly::zero(w.algebra.sig());
    let mut cs = Poly::zero(w.algebra.sig());
    for (i, t) in candidates.iter().enumerate() {
        if let Some(l) = x.get(&i) {
            p = &p + &t.p.scale(l);
            cs = &cs + &t.cs.scale(l);
        }
    }
    if p.is_zero() {
        return Err(Error::NoTransgression("cocycle is exact".into()));
    }
    let mut prim = SparseVec::new();
    for (j, c) in x.range(m..) {
        prim.insert(j - m, c.clone());
    }
    let xw = w.include(&below.poly(base.sig(), &prim))?;
    cs = &cs + &w.algebra.d(&xw);
    let t = Transgression { mu: mu.clone(), cs, p };
    debug_assert_eq!(w.algebra.d(&t.cs), t.p);
    Ok(t)
}

/// A transgression of `mu` sourced from the closed basic elements of degree
/// `|mu| + 1`.
pub fn transgression_for<S: Scalar>(w: &WeilAlgebra<S>, mu: &Poly<S>) -> Result<Transgression<S>> {
    let deg = mu
        .homogeneous_degree()
        .ok_or_else(|| Error::NoTransgression("cocycle is zero or inhomogeneous".into()))?;
    let basic = basic_elements(w, deg + 1)?;
    let cands = basic.closed.iter().map(|p| transgress(w, p)).collect::<Result<Vec<_>>>()?;
    align_transgression(w, &cands, mu)
}

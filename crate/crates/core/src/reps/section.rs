use crate::error::{Error, Result};
use crate::gca::{partial_derivative, Poly, Substitution};
use crate::scalar::{sign, Scalar};

use super::connection::{ConnectionPreset, Relation, RelationSet};
use super::rep::{rep_weil, RepData};

/// Relations of a preset over `W_ρ`, extended by `∇∇s_i = (ρ∘F)s_i` for each
/// module generator `v_i`, where
/// `∇s_i` is the symbol of `s(v_i)`, `d_ρ v_i = Σ_j v_j α_ij`,
/// `(ρ∘X)ω_i = −Σ_j ω_j ∧ X(α_ij)` and `∇∇s_i := d∇s_i − (ρ∘A)(∇s)_i`.
///
/// `(ρ∘F)s_i = −Σ_j (−1)^{|v_j|} s_j ∧ F(σα_ij)` with `σ` the shift on base
/// generators. A residual per module generator is appended; all vanish when
/// `d_V = 0`.
pub fn section_covariant_derivative<S: Scalar>(
    preset: &ConnectionPreset<S>,
    rho: &RepData<S>,
) -> Result<RelationSet<S>> {
    let w = rep_weil(rho)?;
    let src = &w.algebra;
    let names_match = src.sig().len() == preset.source.sig().len()
        && (0..src.sig().len()).all(|i| src.sig().get(i) == preset.source.sig().get(i));
    if !names_match {
        return Err(Error::GeneratorMismatch);
    }
    if rho.internal().iter().any(|p| !p.is_zero()) {
        return Err(Error::InvalidArgument("covariant square needs d_V = 0".into()));
    }
    let mut rs = preset.relations()?;
    let sym = |i: usize| -> Result<usize> { rs.sig.require(&preset.labels[i].ident) };
    let images = (0..src.sig().len()).map(|i| Ok(Poly::generator(&rs.sig, sym(i)?))).collect::<Result<Vec<_>>>()?;
    let phi = Substitution::new(src.sig(), &rs.sig, images)?;
    let module: Vec<usize> = rho.module_indices().collect();
    let mut extra = Vec::new();
    for (a, &vi) in module.iter().enumerate() {
        let action = rho.action()[a].embed(src.sig())?;
        let mut rho_a = Poly::zero(&rs.sig);
        let mut rho_f = Poly::zero(&rs.sig);
        for &vj in &module {
            let alpha = partial_derivative(&action, vj);
            if alpha.is_zero() {
                continue;
            }
            let sj = Poly::generator(&rs.sig, sym(vj)?);
            let nabla_j = Poly::generator(&rs.sig, sym(w.shift.shifted(vj))?);
            let sigma_alpha = &src.d(&alpha) - &w.include(&rho.base().d(&alpha.embed(rho.base().sig())?))?;
            rho_a = &rho_a - &(&nabla_j * &phi.apply(&alpha)?);
            rho_f = &rho_f - &(&sj * &phi.apply(&sigma_alpha)?).scale(&sign::<S>(src.sig().is_odd(vj)));
        }
        let si = w.shift.shifted(vi);
        let label = &preset.labels[si];
        let bianchi = rs
            .relation(&label.d_ident)
            .ok_or_else(|| Error::InvalidArgument(format!("{} is not a curvature", label.display)))?
            .rhs
            .clone();
        let square = &bianchi - &rho_a;
        let section = &preset.labels[vi].display;
        rs.residuals.push((format!("∇{} - (ρ∘F){section}", label.display), &square - &rho_f));
        extra.push(Relation {
            lhs: format!("D{}", label.ident),
            lhs_display: format!("∇{}", label.display),
            rhs: rho_f,
            degree: src.sig().degree(si) + 1,
        });
    }
    rs.table.extend(extra);
    Ok(rs)
}

use std::sync::Arc;

use crate::constructions::{weil_algebra, WeilAlgebra};
use crate::error::{Error, Result};
use crate::gca::{Derivation, DgcAlgebra, Generator, Poly, Signature};
use crate::lie::{ce_of_lie, LieData, MatrixRealization};
use crate::scalar::Scalar;

/// A representation up to homotopy: module generators adjoined to a base
/// algebra, with `d v = d_V v + d_ρ v` where every term of `d_ρ v` contains a
/// base generator and `d_V v` involves module generators only.
#[derive(Clone, Debug)]
pub struct RepData<S> {
    base: DgcAlgebra<S>,
    sig: Arc<Signature>,
    internal: Vec<Poly<S>>,
    action: Vec<Poly<S>>,
}

impl<S: Scalar> RepData<S> {
    /// `module_d[i]` is `d` of module generator `i`, over the combined
    /// signature passed to `f`.
    pub fn new(
        base: &DgcAlgebra<S>,
        module: Vec<Generator>,
        module_d: impl Fn(&Arc<Signature>) -> Result<Vec<Poly<S>>>,
    ) -> Result<Self> {
        let nb = base.sig().len();
        let mut gens = base.generators().to_vec();
        gens.extend(module);
        let sig = Signature::new(gens)?;
        let d = module_d(&sig)?;
        if d.len() != sig.len() - nb {
            return Err(Error::InvalidArgument("one differential per module generator".into()));
        }
        for (j, p) in d.iter().enumerate() {
            let want = sig.degree(nb + j) + 1;
            if !p.is_homogeneous_of(want) {
                return Err(Error::DegreeMismatch {
                    what: format!("d {}", sig.name(nb + j)),
                    expected: want as i64,
                    found: p.homogeneous_degree().map_or(-1, |x| x as i64),
                });
            }
        }
        let internal = d.iter().map(|p| p.filter(|m| m.all_in(|i| i >= nb))).collect();
        let action = d.iter().map(|p| p.filter(|m| !m.all_in(|i| i >= nb))).collect();
        Ok(RepData { base: base.clone(), sig, internal, action })
    }

    pub fn base(&self) -> &DgcAlgebra<S> {
        &self.base
    }

    pub fn sig(&self) -> &Arc<Signature> {
        &self.sig
    }

    /// Indices of module generators in the combined signature.
    pub fn module_indices(&self) -> std::ops::Range<usize> {
        self.base.sig().len()..self.sig.len()
    }

    /// `d_V` per module generator.
    pub fn internal(&self) -> &[Poly<S>] {
        &self.internal
    }

    /// `d_ρ` per module generator.
    pub fn action(&self) -> &[Poly<S>] {
        &self.action
    }

    fn combined(&self) -> Result<DgcAlgebra<S>> {
        let mut diff: Vec<Poly<S>> = self
            .base
            .differentials()
            .iter()
            .map(|p| p.embed(&self.sig))
            .collect::<Result<_>>()?;
        for (v, a) in self.internal.iter().zip(&self.action) {
            diff.push(v + a);
        }
        DgcAlgebra::new(format!("CE_rho({})", self.base.name()), self.sig.clone(), diff)
    }
}

/// The combined algebra on base and module generators. Verifies `d² = 0` and
/// that killing the base generators leaves a nilpotent `d_V`.
pub fn rep_algebra<S: Scalar>(rho: &RepData<S>) -> Result<DgcAlgebra<S>> {
    let a = rho.combined()?;
    a.require_nilpotent()?;
    let module: Vec<Generator> = rho.module_indices().map(|i| rho.sig.get(i).clone()).collect();
    let msig = Signature::new(module)?;
    let nb = rho.base.sig().len();
    let map: Vec<usize> = (0..rho.sig.len()).map(|i| i.saturating_sub(nb)).collect();
    let quotient: Vec<Poly<S>> = rho.internal.iter().map(|p| p.relabel(&msig, &map)).collect();
    DgcAlgebra::verified("V", msig, quotient)?;
    Ok(a)
}

/// `d²` residuals of the combined differential, without failing.
pub fn rep_residuals<S: Scalar>(rho: &RepData<S>) -> Result<Vec<(usize, Poly<S>)>> {
    Ok(rho.combined()?.d_squared_residuals())
}

/// `W_ρ`: the Weil algebra of the combined algebra.
pub fn rep_weil<S: Scalar>(rho: &RepData<S>) -> Result<WeilAlgebra<S>> {
    weil_algebra(&rep_algebra(rho)?)
}

/// The adjoint representation: module generators `chi_g` of degree `|g| - 1`
/// with `d chi_g = σ⁻¹(d g)`, where `σ⁻¹` is the degree −1 derivation sending
/// each base generator to its partner.
pub fn adjoint_rep<S: Scalar>(a: &DgcAlgebra<S>) -> Result<RepData<S>> {
    if a.generators().iter().any(|g| g.degree == 0) {
        return Err(Error::InvalidArgument("adjoint representation needs positive-degree generators".into()));
    }
    let module = a
        .generators()
        .iter()
        .map(|g| Generator::new(format!("chi_{}", g.name), g.degree - 1))
        .collect();
    let nb = a.sig().len();
    RepData::new(a, module, |sig| {
        let mut images = vec![None; sig.len()];
        for (i, img) in images.iter_mut().enumerate().take(nb) {
            *img = Some(Poly::generator(sig, nb + i));
        }
        let desusp = Derivation::new(sig, true, images)?;
        a.differentials()
            .iter()
            .map(|p| Ok(desusp.apply_right(&p.embed(sig)?)))
            .collect()
    })
}

/// A linear representation given by matrices: module generators `v1..vn` in
/// degree 0 with `d v_i = Σ (e_a)_{ji} v_j t^a`.
pub fn matrix_rep<S: Scalar>(l: &LieData<S>, m: &MatrixRealization<S>, prefix: &str) -> Result<RepData<S>> {
    if !m.realizes(l) {
        return Err(Error::InconsistentRealization("commutators do not match structure constants".into()));
    }
    let ce = ce_of_lie(l)?;
    let n = m.size();
    let nb = l.dim();
    let module = (1..=n).map(|i| Generator::new(format!("{prefix}{i}"), 0)).collect();
    RepData::new(&ce, module, |sig| {
        Ok((0..n)
            .map(|i| {
                let mut p = Poly::zero(sig);
                for j in 0..n {
                    for a in 0..nb {
                        let c = m.matrices()[a][j][i].clone();
                        if !c.is_zero() {
                            let w = &Poly::generator(sig, nb + j) * &Poly::generator(sig, a);
                            p = &p + &w.scale(&c);
                        }
                    }
                }
                p
            })
            .collect())
    })
}

/// Module `v_{2kr}`, `r = 0..=r_max`, over `b^{2k}u(1)` (one closed generator
/// `h` of degree `2k + 1`), with `d v_{2kr} = v_{2k(r-1)} h` and `d v_0 = 0`.
pub fn standard_rep_shifted_u1<S: Scalar>(k: usize, r_max: usize) -> Result<RepData<S>> {
    if k < 1 || r_max < 1 {
        return Err(Error::InvalidArgument("standard representation needs k ≥ 1 and r_max ≥ 1".into()));
    }
    let hsig = Signature::new(vec![Generator::new("h", 2 * k + 1)])?;
    let base = DgcAlgebra::verified(format!("b^{}u(1)", 2 * k), hsig.clone(), vec![Poly::zero(&hsig)])?;
    let module = (0..=r_max).map(|r| Generator::new(format!("v{}", 2 * k * r), 2 * k * r)).collect();
    RepData::new(&base, module, |sig| {
        Ok((0..=r_max)
            .map(|r| {
                if r == 0 {
                    Poly::zero(sig)
                } else {
                    &Poly::generator(sig, r) * &Poly::generator(sig, 0)
                }
            })
            .collect())
    })
}

/// A line of a hand-written differential table compared with the derived one.
#[derive(Clone, Debug)]
pub struct TableClaim<S> {
    pub generator: String,
    pub claimed: Poly<S>,
    pub derived: Poly<S>,
}

impl<S: Scalar> TableClaim<S> {
    pub fn matches(&self) -> bool {
        self.claimed == self.derived
    }
}

/// The published Weil table of the standard representation with module
/// `v0, v_{n-1}` over one closed generator `h` of odd degree `n`, next to the
/// derived differential. The claimed `d v0 = s(v_{n-1})` has the wrong degree.
pub fn standard_rep_published_table<S: Scalar>(k: usize) -> Result<Vec<TableClaim<S>>> {
    let rho = standard_rep_shifted_u1::<S>(k, 1)?;
    let w = rep_weil(&rho)?;
    let wa = &w.algebra;
    let top = format!("v{}", 2 * k);
    let g = |n: &str| wa.gen(n);
    let sv0 = g("s(v0)")?;
    let svt = g(&format!("s({top})"))?;
    let h = g("h")?;
    let sh = g("s(h)")?;
    let v0 = g("v0")?;
    let claims = [
        ("v0".to_string(), svt.clone()),
        ("s(v0)".to_string(), Poly::zero(wa.sig())),
        (top.clone(), &(&v0 * &h) + &svt),
        (format!("s({top})"), -&(&(&sv0 * &h) + &(&v0 * &sh))),
    ];
    claims
        .into_iter()
        .map(|(name, claimed)| {
            let derived = wa.d_generator(wa.sig().require(&name)?).clone();
            Ok(TableClaim { generator: name, claimed, derived })
        })
        .collect()
}

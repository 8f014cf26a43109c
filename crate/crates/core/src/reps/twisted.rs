use std::collections::BTreeMap;

use crate::charclass::{chern_character_component, class_signature};
use crate::constructions::{weil_algebra, WeilAlgebra};
use crate::error::{Error, Result};
use crate::gca::{AlgebraMap, DgcAlgebra, Generator, Poly, Substitution};
use crate::lie::{ce_u1_to_uk, invariant_polynomial_str, su};
use crate::scalar::{ratio, Scalar};

/// `∇c_j = dc_j + H∧c_{j-s}` on a ladder `c_0, c_s, c_{2s}, ..` with
/// `s = |H| − 1`, and `∇∇c_j`, which is `dH∧c_{j-s}` since `H∧H = 0`.
#[derive(Clone, Debug)]
pub struct TwistedDeRhamReport<S> {
    pub algebra: DgcAlgebra<S>,
    pub covariant: Vec<(String, Poly<S>)>,
    pub squares: Vec<(String, Poly<S>)>,
}

impl<S: Scalar> TwistedDeRhamReport<S> {
    pub fn squares_to_zero(&self) -> bool {
        self.squares.iter().all(|(_, p)| p.is_zero())
    }
}

/// Builds the forms algebra on `base` plus ladder symbols `c{j}` and their
/// derivatives `dc{j}`, for `rungs + 1` rungs, and evaluates `∇` twice.
pub fn twisted_de_rham_check<S: Scalar>(
    base: &DgcAlgebra<S>,
    h: &Poly<S>,
    rungs: usize,
) -> Result<TwistedDeRhamReport<S>> {
    let Some(hd) = h.homogeneous_degree() else {
        return Err(Error::NotHomogeneous);
    };
    if hd % 2 == 0 {
        return Err(Error::InvalidArgument("twist must have odd degree".into()));
    }
    let step = hd - 1;
    let nb = base.sig().len();
    let mut gens = base.generators().to_vec();
    for r in 0..=rungs {
        gens.push(Generator::new(format!("c{}", r * step), r * step));
    }
    for r in 0..=rungs {
        gens.push(Generator::new(format!("dc{}", r * step), r * step + 1));
    }
    let m = rungs + 1;
    let algebra = DgcAlgebra::from_fn(format!("{} + ladder", base.name()), gens, |sig, i| {
        if i < nb {
            base.d_generator(i).embed(sig)
        } else if i < nb + m {
            Ok(Poly::generator(sig, i + m))
        } else {
            Ok(Poly::zero(sig))
        }
    })?;
    algebra.require_nilpotent()?;
    let sig = algebra.sig().clone();
    let h = h.embed(&sig)?;
    let c = |r: usize| Poly::generator(&sig, nb + r);
    let nabla = |w: &[Poly<S>], r: usize| -> Poly<S> {
        let mut out = algebra.d(&w[r]);
        if r > 0 {
            out = &out + &(&h * &w[r - 1]);
        }
        out
    };
    let ladder: Vec<Poly<S>> = (0..m).map(c).collect();
    let first: Vec<Poly<S>> = (0..m).map(|r| nabla(&ladder, r)).collect();
    let second: Vec<Poly<S>> = (0..m).map(|r| nabla(&first, r)).collect();
    let name = |r: usize| format!("c{}", r * step);
    Ok(TwistedDeRhamReport {
        covariant: first.into_iter().enumerate().map(|(r, p)| (name(r), p)).collect(),
        squares: second.into_iter().enumerate().map(|(r, p)| (name(r), p)).collect(),
        algebra,
    })
}

/// `inv(u(1) → u(k))` with its inclusion into the Weil algebra, the
/// truncated twisted Chern character `ch = exp(r0) · Σ_j ch_j`, and the
/// residuals of `d ch = c∧ch` per degree.
#[derive(Clone, Debug)]
pub struct ChernCharacterReport<S> {
    pub invariants: DgcAlgebra<S>,
    pub inclusion: AlgebraMap<S>,
    pub character: Poly<S>,
    pub residuals: BTreeMap<usize, Poly<S>>,
}

impl<S: Scalar> ChernCharacterReport<S> {
    pub fn holds(&self) -> bool {
        self.residuals.values().all(Poly::is_zero)
    }
}

/// Generators `c` (degree 3), `r0` (degree 2) and `c2..ck` with `d r0 = c`,
/// mapped to `s(b)`, `s(t0)` and `str(X^i)` of the `su(k)` curvature.
pub fn twisted_chern_character_check<S: Scalar>(k: usize, cap: usize) -> Result<ChernCharacterReport<S>> {
    if k < 1 {
        return Err(Error::InvalidArgument("rank must be positive".into()));
    }
    let mut gens = vec![Generator::new("c", 3), Generator::new("r0", 2)];
    gens.extend((2..=k).map(|i| Generator::new(format!("c{i}"), 2 * i)));
    let inv = DgcAlgebra::from_fn(format!("inv(u(1) -> u({k}))"), gens, |sig, i| {
        Ok(if i == 1 { Poly::generator(sig, 0) } else { Poly::zero(sig) })
    })?;
    inv.require_nilpotent()?;

    let w: WeilAlgebra<S> = weil_algebra(&ce_u1_to_uk::<S>(k)?)?;
    let wsig = w.algebra.sig();
    let mut images = vec![Poly::named(wsig, "s(b)")?, Poly::named(wsig, "s(t0)")?];
    if k >= 2 {
        let m = su::<S>(k)?;
        let real = m.realization.as_ref().expect("su(k) is realized");
        let r: Vec<usize> = (1..=m.data.dim()).map(|i| w.shift.shifted(i)).collect();
        for i in 2..=k {
            images.push(invariant_polynomial_str(&m.data, real, i as u32, wsig, &r)?);
        }
    }
    let inclusion = AlgebraMap::verified(&inv, &w.algebra, images)?;

    let sig = inv.sig().clone();
    let csig = class_signature();
    let mut overrides: Vec<Poly<S>> = Vec::with_capacity(csig.len());
    for g in csig.generators() {
        let p = match g.name.strip_prefix('c').and_then(|n| n.parse::<usize>().ok()) {
            Some(i) if (2..=k).contains(&i) => Poly::generator(&sig, i),
            _ => Poly::zero(&sig),
        };
        overrides.push(p);
    }
    let to_inv = Substitution::new(&csig, &sig, overrides)?;
    let mut parts = vec![Poly::constant(&sig, ratio(k as i64, 1))];
    for j in 1..=(cap / 2).min(6) {
        parts.push(to_inv.apply(&chern_character_component::<S>(j)?)?);
    }
    let mut exp = Poly::zero(&sig);
    let r0 = Poly::generator(&sig, 1);
    let mut fact = S::one();
    for j in 0..=cap / 2 {
        if j > 0 {
            fact = fact * ratio(j as i64, 1);
        }
        exp = &exp + &r0.pow(j as u32).scale(&(S::one() / fact.clone()));
    }
    let s: Poly<S> = parts.iter().fold(Poly::zero(&sig), |a, p| &a + p);
    let character = (&exp * &s).filter(|m| m.degree(&sig) <= cap);

    let c = Poly::generator(&sig, 0);
    let dch = inv.d(&character).degree_components();
    let cch = (&c * &character).degree_components();
    let mut residuals = BTreeMap::new();
    for deg in (3..=cap).step_by(2) {
        let zero = Poly::zero(&sig);
        let lhs = dch.get(&deg).unwrap_or(&zero);
        let rhs = cch.get(&deg).unwrap_or(&zero);
        residuals.insert(deg, lhs - rhs);
    }
    Ok(ChernCharacterReport { invariants: inv, inclusion, character, residuals })
}

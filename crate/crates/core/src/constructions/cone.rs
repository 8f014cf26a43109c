use crate::error::{Error, Result};
use crate::gca::{AlgebraMap, DgcAlgebra, Generator, Poly, Signature};
use crate::scalar::Scalar;

use super::transgression::{transgression_for, Transgression};
use super::weil::{weil_algebra, WeilAlgebra};

/// One summand `sign · (μ, cs, P)` of a cone layer, with the names used for
/// the opaque `cs` and `P` symbols.
#[derive(Clone, Debug)]
pub struct ConeComponent<S> {
    pub sign: S,
    pub transgression: Transgression<S>,
    pub cs_name: String,
    pub p_name: String,
}

/// Generators `b` (degree `n`), `k`, `c` (degree `n + 1`) and `l` (degree
/// `n + 2`) killing the cocycle `Σ sign_j μ_j`.
#[derive(Clone, Debug)]
pub struct ConeLayer<S> {
    pub degree: usize,
    pub b: String,
    pub k: String,
    pub c: String,
    pub l: String,
    pub components: Vec<ConeComponent<S>>,
}

/// CE and Weil algebras of the weak cokernel `b^{n-1}u(1) ↪ g_μ`, plus a form
/// of the Weil cone where every `cs` and `P` is a free symbol with
/// `D cs = P`, and the chain map expanding those symbols.
#[derive(Clone, Debug)]
pub struct WeakCokernelCone<S> {
    pub ce: DgcAlgebra<S>,
    pub weil: DgcAlgebra<S>,
    pub opaque: DgcAlgebra<S>,
    pub expand: AlgebraMap<S>,
    pub layers: Vec<ConeLayer<S>>,
}

/// Cone with one layer, a transgression of `mu` taken from the closed basic
/// elements of `W(a)`, and generator names `b, k, c, l, cs, P`.
pub fn weak_cokernel_cone<S: Scalar>(a: &DgcAlgebra<S>, mu: &Poly<S>, n: usize) -> Result<WeakCokernelCone<S>> {
    if mu.homogeneous_degree() != Some(n + 1) {
        return Err(Error::DegreeMismatch {
            what: "cocycle".into(),
            expected: n as i64 + 1,
            found: mu.homogeneous_degree().map_or(-1, |d| d as i64),
        });
    }
    let w = weil_algebra(a)?;
    let t = transgression_for(&w, mu)?;
    let layer = ConeLayer {
        degree: n,
        b: "b".into(),
        k: "k".into(),
        c: "c".into(),
        l: "l".into(),
        components: vec![ConeComponent { sign: S::one(), transgression: t, cs_name: "cs".into(), p_name: "P".into() }],
    };
    weak_cokernel_cone_layers(&w, vec![layer])
}

/// Cone over several layers. CE cone: `d b = Σ sign μ − k`, `d k = 0`. Weil
/// cone: `D b = Σ sign cs + c − k`, `D c = l − Σ sign P`, `D k = l`, `D l = 0`.
pub fn weak_cokernel_cone_layers<S: Scalar>(
    w: &WeilAlgebra<S>,
    layers: Vec<ConeLayer<S>>,
) -> Result<WeakCokernelCone<S>> {
    for layer in &layers {
        if layer.components.is_empty() {
            return Err(Error::InvalidArgument(format!("layer {} has no components", layer.b)));
        }
        for comp in &layer.components {
            let t = &comp.transgression;
            if t.mu.homogeneous_degree() != Some(layer.degree + 1) {
                return Err(Error::DegreeMismatch {
                    what: comp.cs_name.clone(),
                    expected: layer.degree as i64 + 1,
                    found: t.mu.homogeneous_degree().map_or(-1, |d| d as i64),
                });
            }
        }
    }
    let gen = |name: &String, deg: usize| Generator::new(name.clone(), deg);

    let base = &w.base;
    let mut ce_gens = base.generators().to_vec();
    ce_gens.extend(layers.iter().map(|l| gen(&l.b, l.degree)));
    ce_gens.extend(layers.iter().map(|l| gen(&l.k, l.degree + 1)));
    let ce = DgcAlgebra::from_fn(format!("cone({})", base.name()), ce_gens, |sig, i| {
        let nb = base.sig().len();
        let nl = layers.len();
        if i < nb {
            base.d_generator(i).embed(sig)
        } else if i < nb + nl {
            let layer = &layers[i - nb];
            let mut p = -Poly::named(sig, &layer.k)?;
            for comp in &layer.components {
                p = &p + &comp.transgression.mu.embed(sig)?.scale(&comp.sign);
            }
            Ok(p)
        } else {
            Ok(Poly::zero(sig))
        }
    })?;
    ce.require_nilpotent()?;

    let wa = &w.algebra;
    let mut gens = wa.generators().to_vec();
    for l in &layers {
        gens.push(gen(&l.b, l.degree));
    }
    for l in &layers {
        gens.push(gen(&l.c, l.degree + 1));
    }
    for l in &layers {
        gens.push(gen(&l.k, l.degree + 1));
    }
    for l in &layers {
        gens.push(gen(&l.l, l.degree + 2));
    }
    let mut opaque_gens = gens.clone();
    for l in &layers {
        for comp in &l.components {
            opaque_gens.push(gen(&comp.cs_name, l.degree + 1));
            opaque_gens.push(gen(&comp.p_name, l.degree + 2));
        }
    }
    let sig = Signature::new(gens)?;
    let osig = Signature::new(opaque_gens)?;

    let cone_diff = |sig: &std::sync::Arc<Signature>,
                     cs: &dyn Fn(&ConeComponent<S>) -> Result<Poly<S>>,
                     p: &dyn Fn(&ConeComponent<S>) -> Result<Poly<S>>|
     -> Result<Vec<Poly<S>>> {
        let mut diff: Vec<Poly<S>> = wa.differentials().iter().map(|q| q.embed(sig)).collect::<Result<_>>()?;
        for l in &layers {
            let mut d = &Poly::named(sig, &l.c)? - &Poly::named(sig, &l.k)?;
            for comp in &l.components {
                d = &d + &cs(comp)?.scale(&comp.sign);
            }
            diff.push(d);
        }
        for l in &layers {
            let mut d = Poly::named(sig, &l.l)?;
            for comp in &l.components {
                d = &d - &p(comp)?.scale(&comp.sign);
            }
            diff.push(d);
        }
        for l in &layers {
            diff.push(Poly::named(sig, &l.l)?);
        }
        for _ in &layers {
            diff.push(Poly::zero(sig));
        }
        Ok(diff)
    };

    let diff = cone_diff(&sig, &|c| c.transgression.cs.embed(&sig), &|c| c.transgression.p.embed(&sig))?;
    let weil = DgcAlgebra::verified(format!("W(cone({}))", base.name()), sig.clone(), diff)?;

    let mut odiff = cone_diff(&osig, &|c| Poly::named(&osig, &c.cs_name), &|c| Poly::named(&osig, &c.p_name))?;
    for l in &layers {
        for comp in &l.components {
            odiff.push(Poly::named(&osig, &comp.p_name)?);
            odiff.push(Poly::zero(&osig));
        }
    }
    let opaque = DgcAlgebra::verified(format!("W(cone({}))", base.name()), osig.clone(), odiff)?;

    let mut images: Vec<Poly<S>> = (0..sig.len()).map(|i| Poly::generator(&sig, i)).collect();
    for l in &layers {
        for comp in &l.components {
            images.push(comp.transgression.cs.embed(&sig)?);
            images.push(comp.transgression.p.embed(&sig)?);
        }
    }
    let expand = AlgebraMap::verified(&opaque, &weil, images)?;
    Ok(WeakCokernelCone { ce, weil, opaque, expand, layers })
}

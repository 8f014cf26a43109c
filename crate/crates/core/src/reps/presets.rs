use std::collections::HashMap;

use crate::cohomology::cohomology;
use crate::constructions::{
    align_transgression, direct_sum, transgress, transgression_for, weak_cokernel_cone_layers, weil_algebra,
    ConeComponent, ConeLayer, Transgression, WeilAlgebra,
};
use crate::error::{Error, Result};
use crate::gca::{DgcAlgebra, Generator, Poly, Signature};
use crate::lie::{ce_of_lie, ce_u1_to_uk, cocycle_from_form, invariant_polynomial_str, so, LieModel};
use crate::scalar::Scalar;

use super::connection::{Boxed, ConnectionPreset, Label, RelationSet};
use super::section::section_covariant_derivative;
use super::rep::{rep_weil, RepData};

/// Names accepted by [`preset`].
pub const PRESETS: &[&str] = &["u-k", "string", "fivebrane", "c-field", "dual-c-field", "bn-morphism", "rr-iia"];

/// Parameters shared by the connection presets.
#[derive(Clone, Debug)]
pub struct PresetOptions<S> {
    /// Rank for `u-k`.
    pub k: usize,
    /// Degree of the closed generators for `bn-morphism`.
    pub n: usize,
    /// Sign `σ` of the second gauge field in the C-field presets.
    pub sign: S,
    /// Expand Chern–Simons and invariant-polynomial symbols.
    pub expand: bool,
}

impl<S: Scalar> Default for PresetOptions<S> {
    fn default() -> Self {
        PresetOptions { k: 2, n: 3, sign: S::one(), expand: false }
    }
}

/// The labelled source algebra of a named preset.
pub fn preset<S: Scalar>(name: &str, opts: &PresetOptions<S>) -> Result<ConnectionPreset<S>> {
    match name {
        "u-k" => u_k(opts),
        "string" => string(opts),
        "fivebrane" => fivebrane(opts),
        "c-field" => c_field(opts),
        "dual-c-field" => dual_c_field(opts),
        "bn-morphism" => bn_morphism(opts, false),
        "rr-iia" => bn_morphism(&PresetOptions { n: 3, ..opts.clone() }, true),
        _ => Err(Error::UnknownPreset(name.to_string())),
    }
}

/// Relations of a named preset, including derived section identities for the
/// representation presets.
pub fn derive_twisted_bianchi<S: Scalar>(name: &str, opts: &PresetOptions<S>) -> Result<RelationSet<S>> {
    let p = preset(name, opts)?;
    match name {
        "bn-morphism" => section_covariant_derivative(&p, &bn_rep(opts.n)?),
        "rr-iia" => section_covariant_derivative(&p, &bn_rep(3)?)?.specialize_to_zero(&["H1", "dH1", "G1", "dG1"]),
        _ => p.relations(),
    }
}

fn labels_by_name(sig: &Signature, named: &HashMap<String, Label>) -> Result<Vec<Label>> {
    sig.generators()
        .iter()
        .map(|g| named.get(&g.name).cloned().ok_or_else(|| Error::UnknownGenerator(g.name.clone())))
        .collect()
}

fn index(sig: &Signature, name: &str) -> Result<usize> {
    sig.require(name)
}

/// Labels `A{i}` / `F_A{i}` for a Weil algebra whose base generators are
/// `{prefix}{i}` (or the u(k) names), with a display symbol per summand.
fn weil_labels(w: &WeilAlgebra<impl Scalar>, rename: impl Fn(&str) -> (String, String)) -> HashMap<String, Label> {
    let mut out = HashMap::new();
    for (i, j) in w.shift.pairs() {
        let g = w.algebra.sig().name(i);
        let (ident, display) = rename(g);
        out.insert(g.to_string(), Label::new(ident.clone(), display.clone()));
        let sg = w.algebra.sig().name(j).to_string();
        let (fi, fd) = curvature_name(&ident, &display);
        out.insert(sg, Label::new(fi, fd));
    }
    out
}

fn curvature_name(ident: &str, display: &str) -> (String, String) {
    let split = |s: &str| -> (String, String) {
        let k = s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len());
        (s[..k].to_string(), s[k..].to_string())
    };
    let (ip, is) = split(ident);
    let (dp, ds) = split(display);
    (format!("F{ip}{is}"), format!("F_{dp}{ds}"))
}

/// `t{i}` → `A{i}` for the first summand, `w{i}` → `ω{i}` for the second.
fn gauge_rename(g: &str) -> (String, String) {
    if let Some(rest) = g.strip_prefix('t') {
        (format!("A{rest}"), format!("A{rest}"))
    } else if let Some(rest) = g.strip_prefix('w') {
        (format!("w{rest}"), format!("ω{rest}"))
    } else {
        (g.to_string(), g.to_string())
    }
}

fn so_model<S: Scalar>(n: usize) -> Result<(LieModel<S>, DgcAlgebra<S>)> {
    let m = so::<S>(n)?;
    let ce = ce_of_lie(&m.data)?;
    Ok((m, ce))
}

fn mu_from_form<S: Scalar>(m: &LieModel<S>, ce: &DgcAlgebra<S>) -> Result<Poly<S>> {
    let form = m.form.as_ref().ok_or(Error::NonInvariantForm)?;
    cocycle_from_form(&m.data, form, ce)
}

/// Transgression of the degree-7 class of `so(n)` normalized against the
/// transgression of `str(X⁴)`.
fn seven_layer<S: Scalar>(m: &LieModel<S>, ce: &DgcAlgebra<S>, w: &WeilAlgebra<S>) -> Result<Transgression<S>> {
    let h7 = cohomology(ce, 7)?;
    let mu7 = h7
        .representatives
        .first()
        .cloned()
        .ok_or_else(|| Error::NoTransgression("no degree-7 class".into()))?;
    let r: Vec<usize> = (0..w.shift.base_len()).map(|i| w.shift.shifted(i)).collect();
    let real = m.realization.as_ref().ok_or(Error::NonInvariantForm)?;
    let p8 = invariant_polynomial_str(&m.data, real, 4, w.algebra.sig(), &r)?;
    let t = transgress(w, &p8)?;
    align_transgression(w, &[t], &mu7)
}

/// The same transgression over the renamed copy `to` of `from`.
fn transport<S: Scalar>(t: &Transgression<S>, to: &WeilAlgebra<S>) -> Transgression<S> {
    let wid: Vec<usize> = (0..to.algebra.sig().len()).collect();
    let bid: Vec<usize> = (0..to.base.sig().len()).collect();
    Transgression {
        mu: t.mu.relabel(to.base.sig(), &bid),
        cs: t.cs.relabel(to.algebra.sig(), &wid),
        p: t.p.relabel(to.algebra.sig(), &wid),
    }
}

struct LayerNames {
    degree: usize,
    b: Label,
    c: Label,
    k: Label,
    l: Label,
}

struct Comp<S> {
    sign: S,
    t: Transgression<S>,
    cs: Label,
    p: Label,
}

fn cone_preset<S: Scalar>(
    name: &str,
    w: &WeilAlgebra<S>,
    mut labels: HashMap<String, Label>,
    layers: Vec<(LayerNames, Vec<Comp<S>>)>,
    boxed: &[(bool, &str)],
    expand: bool,
    notes: Vec<String>,
) -> Result<ConnectionPreset<S>> {
    let mut cone_layers = Vec::new();
    for (ln, comps) in layers {
        let mut components = Vec::new();
        for c in comps {
            labels.insert(c.cs.ident.clone(), c.cs.clone());
            labels.insert(c.p.ident.clone(), c.p.clone());
            components.push(ConeComponent {
                sign: c.sign,
                transgression: c.t,
                cs_name: c.cs.ident.clone(),
                p_name: c.p.ident.clone(),
            });
        }
        for l in [&ln.b, &ln.c, &ln.k, &ln.l] {
            labels.insert(l.ident.clone(), l.clone());
        }
        cone_layers.push(ConeLayer {
            degree: ln.degree,
            b: ln.b.ident.clone(),
            k: ln.k.ident.clone(),
            c: ln.c.ident.clone(),
            l: ln.l.ident.clone(),
            components,
        });
    }
    let cone = weak_cokernel_cone_layers(w, cone_layers)?;
    let source = if expand { cone.weil.clone() } else { cone.opaque.clone() };
    let sig = source.sig().clone();
    let mut pairs: Vec<(usize, usize)> = w.shift.pairs().collect();
    for l in &cone.layers {
        pairs.push((index(&sig, &l.b)?, index(&sig, &l.c)?));
        pairs.push((index(&sig, &l.k)?, index(&sig, &l.l)?));
        if !expand {
            for c in &l.components {
                pairs.push((index(&sig, &c.cs_name)?, index(&sig, &c.p_name)?));
            }
        }
    }
    let boxed = boxed
        .iter()
        .map(|&(def, n)| {
            let i = index(&sig, n)?;
            Ok(if def { Boxed::Define(i) } else { Boxed::Bianchi(i) })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConnectionPreset {
        name: name.to_string(),
        labels: labels_by_name(&sig, &labels)?,
        order: (0..sig.len()).collect(),
        source,
        pairs,
        boxed,
        notes,
    })
}

fn layer(degree: usize, b: Label, c: Label, k: Label, l: Label) -> LayerNames {
    LayerNames { degree, b, c, k, l }
}

fn u_k<S: Scalar>(opts: &PresetOptions<S>) -> Result<ConnectionPreset<S>> {
    let ce = ce_u1_to_uk::<S>(opts.k)?;
    let w = weil_algebra(&ce)?;
    let labels = weil_labels(&w, |g| match g {
        "b" => ("B".into(), "B".into()),
        _ => {
            let rest = g.trim_start_matches('t');
            (format!("A{rest}"), format!("A{rest}"))
        }
    });
    let mut labels = labels;
    labels.insert("s(t0)".into(), Label::plain("F0"));
    labels.insert("s(b)".into(), Label::plain("H3"));
    let sig = w.algebra.sig().clone();
    let f0 = index(&sig, "s(t0)")?;
    Ok(ConnectionPreset {
        name: format!("u(1) -> u({})", opts.k),
        labels: labels_by_name(&sig, &labels)?,
        order: (0..sig.len()).collect(),
        pairs: w.shift.pairs().collect(),
        boxed: vec![Boxed::Define(f0), Boxed::Bianchi(f0)],
        source: w.algebra,
        notes: vec![],
    })
}

fn string<S: Scalar>(opts: &PresetOptions<S>) -> Result<ConnectionPreset<S>> {
    let (m, ce) = so_model::<S>(3)?;
    let w = weil_algebra(&ce)?;
    let t = transgression_for(&w, &mu_from_form(&m, &ce)?)?;
    let layers = vec![(
        layer(2, Label::plain("B"), Label::plain("H3"), Label::plain("C3"), Label::plain("G4")),
        vec![Comp { sign: S::one(), t, cs: Label::new("cs3", "cs3(A,F_A)"), p: Label::new("P4", "P4(F_A)") }],
    )];
    cone_preset(
        "string",
        &w,
        weil_labels(&w, gauge_rename),
        layers,
        &[(true, "H3"), (false, "H3"), (false, "G4")],
        opts.expand,
        vec!["gauge algebra so(3)".into()],
    )
}

fn fivebrane_layers<S: Scalar>(
    m: &LieModel<S>,
    ce: &DgcAlgebra<S>,
    w: &WeilAlgebra<S>,
) -> Result<(Transgression<S>, Transgression<S>)> {
    let t3 = transgression_for(w, &mu_from_form(m, ce)?)?;
    let t7 = seven_layer(m, ce, w)?;
    Ok((t3, t7))
}

fn fivebrane<S: Scalar>(opts: &PresetOptions<S>) -> Result<ConnectionPreset<S>> {
    let (m, ce) = so_model::<S>(5)?;
    let w = weil_algebra(&ce)?;
    let (t3, t7) = fivebrane_layers(&m, &ce, &w)?;
    let layers = vec![
        (
            layer(2, Label::plain("B2"), Label::plain("H3"), Label::plain("C3"), Label::plain("G4")),
            vec![Comp { sign: S::one(), t: t3, cs: Label::new("cs3", "cs3(A,F_A)"), p: Label::new("P4", "P4(F_A)") }],
        ),
        (
            layer(6, Label::plain("B6"), Label::plain("H7"), Label::plain("C7"), Label::plain("G8")),
            vec![Comp { sign: S::one(), t: t7, cs: Label::new("cs7", "cs7(A,F_A)"), p: Label::new("P8", "P8(F_A)") }],
        ),
    ];
    cone_preset(
        "fivebrane",
        &w,
        weil_labels(&w, gauge_rename),
        layers,
        &[(true, "H3"), (false, "H3"), (false, "G4"), (true, "H7"), (false, "H7"), (false, "G8")],
        opts.expand,
        vec!["gauge algebra so(5)".into()],
    )
}

/// `g ⊕ g'` with the second copy's generators renamed `w{i}`, its Weil
/// algebra, and the Weil algebra of the renamed copy alone.
fn doubled<S: Scalar>(ce: &DgcAlgebra<S>) -> Result<(WeilAlgebra<S>, WeilAlgebra<S>, WeilAlgebra<S>)> {
    let names: Vec<String> = ce.generators().iter().map(|g| format!("w{}", g.name.trim_start_matches('t'))).collect();
    let ce_w = ce.renamed(format!("{}_ω", ce.name()), &names)?;
    let sum = direct_sum(ce, &ce_w)?;
    Ok((weil_algebra(ce)?, weil_algebra(&ce_w)?, weil_algebra(&sum)?))
}

fn c_field<S: Scalar>(opts: &PresetOptions<S>) -> Result<ConnectionPreset<S>> {
    let (m, ce) = so_model::<S>(3)?;
    let (wa, ww, w) = doubled(&ce)?;
    let t = transgression_for(&wa, &mu_from_form(&m, &ce)?)?;
    let tw = transport(&t, &ww);
    let layers = vec![(
        layer(
            2,
            Label::plain("B").with_d("c3", "c3"),
            Label::new("C3p", "C3'"),
            Label::plain("C3"),
            Label::plain("G4"),
        ),
        vec![
            Comp { sign: S::one(), t, cs: Label::new("cs3", "cs3(A,F_A)"), p: Label::new("P4", "P4(F_A)") },
            Comp {
                sign: -opts.sign.clone(),
                t: tw,
                cs: Label::new("cs3w", "cs3(ω,F_ω)"),
                p: Label::new("P4w", "P4(F_ω)"),
            },
        ],
    )];
    cone_preset(
        "c-field",
        &w,
        weil_labels(&w, gauge_rename),
        layers,
        &[(true, "C3p"), (false, "C3p"), (false, "G4")],
        opts.expand,
        vec![format!("gauge algebra so(3) + so(3), sign σ = {}", opts.sign)],
    )
}

fn dual_c_field<S: Scalar>(opts: &PresetOptions<S>) -> Result<ConnectionPreset<S>> {
    let (m, ce) = so_model::<S>(5)?;
    let (wa, ww, w) = doubled(&ce)?;
    let (t3, t7) = fivebrane_layers(&m, &ce, &wa)?;
    let t7w = transport(&t7, &ww);
    let layers = vec![
        (
            layer(2, Label::plain("B2"), Label::plain("H3"), Label::plain("C3"), Label::plain("G4")),
            vec![Comp { sign: S::one(), t: t3, cs: Label::new("cs3", "cs3(A,F_A)"), p: Label::new("P4", "P4(F_A)") }],
        ),
        (
            layer(
                6,
                Label::plain("B6").with_d("c7", "c7"),
                Label::new("C7p", "C7'"),
                Label::plain("C7"),
                Label::plain("G8"),
            ),
            vec![
                Comp { sign: S::one(), t: t7, cs: Label::new("cs7", "cs7(A,F_A)"), p: Label::new("P8", "P8(F_A)") },
                Comp {
                    sign: -opts.sign.clone(),
                    t: t7w,
                    cs: Label::new("cs7w", "cs7(ω,F_ω)"),
                    p: Label::new("P8w", "P8(F_ω)"),
                },
            ],
        ),
    ];
    cone_preset(
        "dual-c-field",
        &w,
        weil_labels(&w, gauge_rename),
        layers,
        &[(true, "H3"), (false, "H3"), (false, "G4"), (true, "C7p"), (false, "C7p"), (false, "G8")],
        opts.expand,
        vec![format!("gauge algebra so(5) + so(5), sign σ = {}", opts.sign)],
    )
}

/// Module `v0, v_{n-1}` over two closed generators `h1, h2` of degree `n`
/// with `d v_{n-1} = v0 (h1 - h2)`.
pub(crate) fn bn_rep<S: Scalar>(n: usize) -> Result<RepData<S>> {
    if n < 2 {
        return Err(Error::InvalidArgument("bn-morphism needs n ≥ 2".into()));
    }
    let sig = Signature::new(vec![Generator::new("h1", n), Generator::new("h2", n)])?;
    let base = DgcAlgebra::verified("b u(1)^op + b u(1)", sig.clone(), vec![Poly::zero(&sig), Poly::zero(&sig)])?;
    let top = format!("v{}", n - 1);
    RepData::new(&base, vec![Generator::new("v0", 0), Generator::new(top, n - 1)], |s| {
        let h = &Poly::generator(s, 0) - &Poly::generator(s, 1);
        Ok(vec![Poly::zero(s), &Poly::generator(s, 2) * &h])
    })
}

/// A preset over `W_ρ` with labels keyed by generator name. Module
/// generators and their shifts render before base ones when `module_first`.
/// `boxed` lists shifted module generators whose definitions are boxed.
pub fn rep_preset<S: Scalar>(
    name: &str,
    rho: &RepData<S>,
    labels: &HashMap<String, Label>,
    module_first: bool,
    boxed: &[&str],
) -> Result<ConnectionPreset<S>> {
    let w = rep_weil(rho)?;
    let sig = w.algebra.sig().clone();
    let module = rho.module_indices();
    let is_module = |i: usize| module.contains(&w.shift.unshifted(i).unwrap_or(i));
    let mut order: Vec<usize> = (0..sig.len()).collect();
    order.sort_by_key(|&i| (is_module(i) != module_first, i));
    let boxed = boxed.iter().map(|n| Ok(Boxed::Define(index(&sig, n)?))).collect::<Result<Vec<_>>>()?;
    Ok(ConnectionPreset {
        name: name.to_string(),
        labels: labels_by_name(&sig, labels)?,
        order,
        pairs: w.shift.pairs().collect(),
        boxed,
        source: w.algebra,
        notes: vec![],
    })
}

fn bn_morphism<S: Scalar>(opts: &PresetOptions<S>, rr: bool) -> Result<ConnectionPreset<S>> {
    let n = opts.n;
    let rho = bn_rep::<S>(n)?;
    let top = n - 1;
    let (sec, h2, g2) = if rr { ("F", "H3", "G4") } else { ("s", "H2", "G2") };
    let mut labels = HashMap::new();
    labels.insert("h1".to_string(), Label::plain("H1"));
    labels.insert("h2".to_string(), Label::plain(h2));
    labels.insert("s(h1)".to_string(), Label::plain("G1"));
    labels.insert("s(h2)".to_string(), Label::plain(g2));
    for r in [0, top] {
        labels.insert(format!("v{r}"), Label::plain(format!("{sec}{r}")));
        labels.insert(format!("s(v{r})"), Label::new(format!("D{sec}{r}"), format!("∇{sec}{r}")));
    }
    let name = if rr { "RR fields of type IIA".to_string() } else { format!("b^{}u(1) morphism", n - 1) };
    let mut p = rep_preset(&name, &rho, &labels, !rr, &[&format!("s(v{top})"), "s(v0)"])?;
    if rr {
        p.notes.push("H1 = 0, H2 = H3".into());
    }
    Ok(p)
}

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gca::{DgcAlgebra, Generator, Poly, Signature, Substitution};
use crate::scalar::Scalar;

/// Names of the form attached to a source generator and of its exterior
/// derivative. `ident` is ASCII and parseable; `display` is for people.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Label {
    pub ident: String,
    pub display: String,
    pub d_ident: String,
    pub d_display: String,
}

impl Label {
    pub fn new(ident: impl Into<String>, display: impl Into<String>) -> Self {
        let ident = ident.into();
        let display = display.into();
        Label { d_ident: format!("d{ident}"), d_display: format!("d{display}"), ident, display }
    }

    pub fn plain(ident: impl Into<String>) -> Self {
        let ident = ident.into();
        Label::new(ident.clone(), ident)
    }

    /// Overrides the name of the exterior derivative.
    pub fn with_d(mut self, ident: impl Into<String>, display: impl Into<String>) -> Self {
        self.d_ident = ident.into();
        self.d_display = display.into();
        self
    }
}

/// `lhs = rhs` where `lhs` is a single named form and `rhs` lives over the
/// symbol signature of its [`RelationSet`].
#[derive(Clone, Debug, PartialEq)]
pub struct Relation<S> {
    pub lhs: String,
    pub lhs_display: String,
    pub rhs: Poly<S>,
    pub degree: usize,
}

/// Relations among forms read off a dg-algebra map out of a Weil-type
/// algebra. `boxed` is the published subset, `table` the complete list, and
/// `residuals` must all vanish for the relations to be closed under `d`.
#[derive(Clone, Debug)]
pub struct RelationSet<S> {
    pub name: String,
    pub sig: Arc<Signature>,
    pub display: Vec<String>,
    pub boxed: Vec<Relation<S>>,
    pub table: Vec<Relation<S>>,
    pub residuals: Vec<(String, Poly<S>)>,
    pub notes: Vec<String>,
}

impl<S: Scalar> RelationSet<S> {
    pub fn is_consistent(&self) -> bool {
        self.residuals.iter().all(|(_, p)| p.is_zero())
    }

    /// `p` with display labels and `∧`.
    pub fn display_poly(&self, p: &Poly<S>) -> String {
        p.render_parts(|i| self.display[i].clone(), " ", "∧")
    }

    pub fn display_relation(&self, r: &Relation<S>) -> String {
        format!("{} = {}", r.lhs_display, self.display_poly(&r.rhs))
    }

    /// ASCII form, parseable over [`RelationSet::sig`].
    pub fn ascii_relation(&self, r: &Relation<S>) -> String {
        format!("{} = {}", r.lhs, r.rhs.render())
    }

    pub fn relation(&self, lhs: &str) -> Option<&Relation<S>> {
        self.table.iter().find(|r| r.lhs == lhs)
    }

    /// Sets the named symbols to zero and drops relations whose left side is
    /// one of them or whose both sides become trivial.
    pub fn specialize_to_zero(mut self, idents: &[&str]) -> Result<Self> {
        let overrides = idents
            .iter()
            .map(|n| Ok((self.sig.require(n)?, Poly::zero(&self.sig))))
            .collect::<Result<Vec<_>>>()?;
        let sub = Substitution::with_overrides(&self.sig, &overrides)?;
        let fix = |rs: Vec<Relation<S>>| -> Result<Vec<Relation<S>>> {
            rs.into_iter()
                .filter(|r| !idents.contains(&r.lhs.as_str()))
                .map(|r| Ok(Relation { rhs: sub.apply(&r.rhs)?, ..r }))
                .collect()
        };
        self.boxed = fix(self.boxed)?;
        self.table = fix(self.table)?;
        let residuals = std::mem::take(&mut self.residuals);
        self.residuals = residuals
            .into_iter()
            .map(|(n, p)| Ok((n, sub.apply(&p)?)))
            .collect::<Result<_>>()?;
        Ok(self)
    }
}

/// Which relation of a [`ConnectionPreset`] to put in the boxed subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boxed {
    /// Definition of the curvature with this source index.
    Define(usize),
    /// Bianchi identity of the curvature with this source index.
    Bianchi(usize),
}

/// A source algebra with every generator labelled, split into
/// `(potential, curvature)` pairs with `D potential = c · curvature + rest`.
#[derive(Clone, Debug)]
pub struct ConnectionPreset<S> {
    pub name: String,
    pub source: DgcAlgebra<S>,
    pub labels: Vec<Label>,
    /// Display order of generators; lower positions render first.
    pub order: Vec<usize>,
    pub pairs: Vec<(usize, usize)>,
    pub boxed: Vec<Boxed>,
    pub notes: Vec<String>,
}

impl<S: Scalar> ConnectionPreset<S> {
    /// Symbol signature: all derivative symbols, then all form symbols, each
    /// in display order. Returns it with the position maps.
    fn target(&self) -> Result<(Arc<Signature>, Vec<String>, Vec<usize>, Vec<usize>)> {
        let n = self.source.sig().len();
        if self.labels.len() != n || self.order.len() != n {
            return Err(Error::InvalidArgument("one label and one order slot per generator".into()));
        }
        let mut gens = Vec::with_capacity(2 * n);
        let mut display = Vec::with_capacity(2 * n);
        let mut d_pos = vec![0; n];
        let mut pos = vec![0; n];
        for (k, &i) in self.order.iter().enumerate() {
            let l = &self.labels[i];
            gens.push(Generator::new(l.d_ident.clone(), self.source.sig().degree(i) + 1));
            display.push(l.d_display.clone());
            d_pos[i] = k;
        }
        for (k, &i) in self.order.iter().enumerate() {
            let l = &self.labels[i];
            gens.push(Generator::new(l.ident.clone(), self.source.sig().degree(i)));
            display.push(l.display.clone());
            pos[i] = n + k;
        }
        Ok((Signature::new(gens)?, display, d_pos, pos))
    }

    /// Definitions of all curvatures, their Bianchi identities, and the
    /// closure residuals.
    pub fn relations(&self) -> Result<RelationSet<S>> {
        let src = &self.source;
        let (sig, display, d_pos, pos) = self.target()?;
        let phi = Substitution::new(src.sig(), &sig, (0..src.sig().len()).map(|i| Poly::generator(&sig, pos[i])).collect())?;

        let mut define: HashMap<usize, Relation<S>> = HashMap::new();
        let mut bianchi: HashMap<usize, Relation<S>> = HashMap::new();
        for &(g, kappa) in &self.pairs {
            let dg = src.d_generator(g);
            let km = Poly::generator(src.sig(), kappa);
            let (m, _) = km.terms().next().expect("generator");
            let coef = dg.coefficient(m);
            if coef.is_zero() {
                return Err(Error::InvalidArgument(format!(
                    "{} does not appear linearly in d {}",
                    src.sig().name(kappa),
                    src.sig().name(g)
                )));
            }
            let rest = dg - &km.scale(&coef);
            let inv = S::one() / coef;
            let rhs = (&Poly::generator(&sig, d_pos[g]) - &phi.apply(&rest)?).scale(&inv);
            let l = &self.labels[kappa];
            let deg = src.sig().degree(kappa);
            define.insert(kappa, Relation { lhs: l.ident.clone(), lhs_display: l.display.clone(), rhs, degree: deg });
            bianchi.insert(
                kappa,
                Relation {
                    lhs: l.d_ident.clone(),
                    lhs_display: l.d_display.clone(),
                    rhs: phi.apply(src.d_generator(kappa))?,
                    degree: deg + 1,
                },
            );
        }

        let mut table = Vec::new();
        for &i in &self.order {
            if let Some(r) = define.get(&i) {
                table.push(r.clone());
            }
        }
        for &i in &self.order {
            if let Some(r) = bianchi.get(&i) {
                table.push(r.clone());
            }
        }
        let boxed = self
            .boxed
            .iter()
            .map(|b| {
                let (map, i) = match *b {
                    Boxed::Define(i) => (&define, i),
                    Boxed::Bianchi(i) => (&bianchi, i),
                };
                map.get(&i)
                    .cloned()
                    .ok_or_else(|| Error::InvalidArgument(format!("{} is not a curvature", src.sig().name(i))))
            })
            .collect::<Result<Vec<_>>>()?;

        let residuals = closure_residuals(&sig, &d_pos, &pos, &self.pairs, &define, &table)?;
        Ok(RelationSet {
            name: self.name.clone(),
            sig,
            display,
            boxed,
            table,
            residuals,
            notes: self.notes.clone(),
        })
    }
}

/// Free algebra on all symbols with `d(X) = dX`. Curvatures are eliminated by
/// their definitions; each relation must then hold identically.
fn closure_residuals<S: Scalar>(
    sig: &Arc<Signature>,
    d_pos: &[usize],
    pos: &[usize],
    pairs: &[(usize, usize)],
    define: &HashMap<usize, Relation<S>>,
    table: &[Relation<S>],
) -> Result<Vec<(String, Poly<S>)>> {
    let n = pos.len();
    let free = DgcAlgebra::from_fn("forms", sig.generators().to_vec(), |s, i| {
        Ok(if i < n { Poly::zero(s) } else { Poly::generator(s, i - n) })
    })?;
    let overrides: Vec<(usize, Poly<S>)> = pairs.iter().map(|&(_, k)| (pos[k], define[&k].rhs.clone())).collect();
    let step = Substitution::with_overrides(sig, &overrides)?;
    let mut expanded: Vec<(usize, Poly<S>)> = overrides.clone();
    for _ in 0..=pairs.len() {
        let next: Vec<(usize, Poly<S>)> =
            expanded.iter().map(|(i, p)| Ok((*i, step.apply(p)?))).collect::<Result<_>>()?;
        if next == expanded {
            break;
        }
        expanded = next;
    }
    let mut full = expanded.clone();
    for (&(_, k), (_, e)) in pairs.iter().zip(&expanded) {
        full.push((d_pos[k], free.differentiate(e)?));
    }
    let psi = Substitution::with_overrides(sig, &full)?;
    table
        .iter()
        .map(|r| {
            let lhs = Poly::named(sig, &r.lhs)?;
            Ok((r.lhs.clone(), psi.apply(&(&lhs - &r.rhs))?))
        })
        .collect()
}

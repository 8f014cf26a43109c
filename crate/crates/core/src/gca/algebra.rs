use std::sync::Arc;

use super::derivation::Derivation;
use super::monomial::Monomial;
use super::poly::Poly;
use super::signature::{same_signature, Generator, Signature};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A free graded-commutative algebra with a degree +1 differential, given by
/// its values on generators.
#[derive(Clone, Debug)]
pub struct DgcAlgebra<S> {
    name: String,
    sig: Arc<Signature>,
    diff: Vec<Poly<S>>,
}

impl<S: Scalar> DgcAlgebra<S> {
    /// Builds an algebra, checking that every `d g` lies over `sig` and has
    /// degree `|g| + 1`. Nilpotency is not checked; see [`Self::verified`].
    pub fn new(name: impl Into<String>, sig: Arc<Signature>, diff: Vec<Poly<S>>) -> Result<Self> {
        if diff.len() != sig.len() {
            return Err(Error::InvalidArgument(format!(
                "{} generators but {} differentials",
                sig.len(),
                diff.len()
            )));
        }
        for (i, p) in diff.iter().enumerate() {
            if !same_signature(p.sig(), &sig) {
                return Err(Error::GeneratorMismatch);
            }
            let want = sig.degree(i) + 1;
            if !p.is_homogeneous_of(want) {
                return Err(Error::DegreeMismatch {
                    what: format!("d {}", sig.name(i)),
                    expected: want as i64,
                    found: p.homogeneous_degree().map_or(-1, |d| d as i64),
                });
            }
        }
        Ok(DgcAlgebra { name: name.into(), sig, diff })
    }

    /// Builds from `(generator, differential)` pairs where each differential
    /// is produced from the finished signature.
    pub fn from_fn(
        name: impl Into<String>,
        gens: Vec<Generator>,
        f: impl Fn(&Arc<Signature>, usize) -> Result<Poly<S>>,
    ) -> Result<Self> {
        let sig = Signature::new(gens)?;
        let diff = (0..sig.len()).map(|i| f(&sig, i)).collect::<Result<Vec<_>>>()?;
        Self::new(name, sig, diff)
    }

    /// Like [`Self::new`] and additionally requires `d ∘ d = 0`.
    pub fn verified(name: impl Into<String>, sig: Arc<Signature>, diff: Vec<Poly<S>>) -> Result<Self> {
        let a = Self::new(name, sig, diff)?;
        a.require_nilpotent()?;
        Ok(a)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn sig(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn generators(&self) -> &[Generator] {
        self.sig.generators()
    }

    pub fn d_generator(&self, i: usize) -> &Poly<S> {
        &self.diff[i]
    }

    pub fn differentials(&self) -> &[Poly<S>] {
        &self.diff
    }

    pub fn gen(&self, name: &str) -> Result<Poly<S>> {
        Poly::named(&self.sig, name)
    }

    pub fn derivation(&self) -> Derivation<S> {
        Derivation::new(&self.sig, true, self.diff.iter().cloned().map(Some).collect())
            .expect("differentials lie over the signature")
    }

    /// `d p` by the graded Leibniz rule.
    pub fn differentiate(&self, p: &Poly<S>) -> Result<Poly<S>> {
        if !same_signature(p.sig(), &self.sig) {
            return Err(Error::GeneratorMismatch);
        }
        Ok(self.derivation().apply(p))
    }

    /// `d` on an element known to lie in this algebra.
    pub fn d(&self, p: &Poly<S>) -> Poly<S> {
        self.differentiate(p).expect("element of this algebra")
    }

    /// Nonzero `d(d g)` per generator.
    pub fn d_squared_residuals(&self) -> Vec<(usize, Poly<S>)> {
        let der = self.derivation();
        (0..self.sig.len())
            .filter_map(|i| {
                let r = der.apply(&self.diff[i]);
                (!r.is_zero()).then_some((i, r))
            })
            .collect()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.d_squared_residuals().is_empty()
    }

    pub fn require_nilpotent(&self) -> Result<()> {
        let r = self.d_squared_residuals();
        if r.is_empty() {
            Ok(())
        } else {
            Err(Error::NotNilpotent(
                r.into_iter()
                    .map(|(i, p)| (self.sig.name(i).to_string(), p.render()))
                    .collect(),
            ))
        }
    }

    /// Monomials of total degree `n` in lexicographic order.
    pub fn graded_component_basis(&self, n: usize) -> Result<Vec<Monomial>> {
        graded_component_basis(&self.sig, n, |_| true)
    }

    /// Renamed copy over a fresh signature: generator `i` becomes
    /// `names[i]`.
    pub fn renamed(&self, name: impl Into<String>, names: &[String]) -> Result<Self> {
        let gens = self
            .generators()
            .iter()
            .zip(names)
            .map(|(g, n)| Generator::new(n.clone(), g.degree))
            .collect();
        let sig = Signature::new(gens)?;
        let id: Vec<usize> = (0..sig.len()).collect();
        let diff = self.diff.iter().map(|p| p.relabel(&sig, &id)).collect();
        Self::new(name, sig, diff)
    }
}

/// Monomials of degree `n` using only generators accepted by `allow`, in
/// lexicographic order.
///
/// Fails with [`Error::InfiniteComponent`] if an allowed degree-0 generator
/// exists and `n` is reachable.
pub fn graded_component_basis(
    sig: &Signature,
    n: usize,
    allow: impl Fn(usize) -> bool,
) -> Result<Vec<Monomial>> {
    let gens: Vec<usize> = (0..sig.len()).filter(|&i| allow(i)).collect();
    if gens.iter().any(|&i| sig.degree(i) == 0) {
        return Err(Error::InfiniteComponent(n));
    }
    let mut out = Vec::new();
    let mut cur: Vec<(u32, u32)> = Vec::new();
    fn rec(
        sig: &Signature,
        gens: &[usize],
        k: usize,
        left: usize,
        cur: &mut Vec<(u32, u32)>,
        out: &mut Vec<Monomial>,
    ) {
        if left == 0 {
            out.push(Monomial::from_sorted(cur.clone()));
            return;
        }
        if k == gens.len() {
            return;
        }
        let g = gens[k];
        let d = sig.degree(g);
        let max_e = if sig.is_odd(g) { 1 } else { left / d };
        for e in (1..=max_e.min(left / d)).rev() {
            cur.push((g as u32, e as u32));
            rec(sig, gens, k + 1, left - e * d, cur, out);
            cur.pop();
        }
        rec(sig, gens, k + 1, left, cur, out);
    }
    rec(sig, &gens, 0, n, &mut cur, &mut out);
    out.sort();
    Ok(out)
}

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::gca::{graded_component_basis, AlgebraMap, Derivation, DgcAlgebra, Generator, Monomial, Poly, Signature};
use crate::linalg::{kernel, Echelon, SparseVec};
use crate::scalar::Scalar;

/// Pairing of each generator of the base algebra with its shifted partner in
/// the Weil algebra. Base generator `i` sits at index `i` of the Weil algebra
/// and its partner at `base_len + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftMap {
    base_len: usize,
}

impl ShiftMap {
    pub fn base_len(&self) -> usize {
        self.base_len
    }

    pub fn shifted(&self, i: usize) -> usize {
        assert!(i < self.base_len);
        self.base_len + i
    }

    pub fn unshifted(&self, j: usize) -> Option<usize> {
        (j >= self.base_len && j < 2 * self.base_len).then(|| j - self.base_len)
    }

    pub fn is_shifted(&self, j: usize) -> bool {
        j >= self.base_len
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.base_len).map(|i| (i, self.base_len + i))
    }
}

/// Name of the shifted partner of `g`.
pub fn shifted_name(g: &str) -> String {
    format!("s({g})")
}

/// `W(A)` together with its base algebra and shift pairing.
#[derive(Clone, Debug)]
pub struct WeilAlgebra<S> {
    pub algebra: DgcAlgebra<S>,
    pub base: DgcAlgebra<S>,
    pub shift: ShiftMap,
}

impl<S: Scalar> WeilAlgebra<S> {
    /// The image of a base element under the inclusion `A ⊂ W(A)`.
    pub fn include(&self, p: &Poly<S>) -> Result<Poly<S>> {
        p.embed(self.algebra.sig())
    }

    /// The shifted partner of base generator `i` as an element.
    pub fn shifted_gen(&self, i: usize) -> Poly<S> {
        Poly::generator(self.algebra.sig(), self.shift.shifted(i))
    }

    /// Whether every term of `p` uses shifted generators only.
    pub fn is_in_shifted_subalgebra(&self, p: &Poly<S>) -> bool {
        p.terms().all(|(m, _)| m.all_in(|j| self.shift.is_shifted(j)))
    }
}

/// `W(A)`: generators of `A` followed by shifted copies `s(g)` of degree
/// `|g| + 1`, with `D g = d g + s g` and `D(s g) = -D(d g)`, the value forced
/// by `D² = 0`.
pub fn weil_algebra<S: Scalar>(a: &DgcAlgebra<S>) -> Result<WeilAlgebra<S>> {
    let n = a.sig().len();
    let mut gens: Vec<Generator> = a.generators().to_vec();
    gens.extend(a.generators().iter().map(|g| Generator::new(shifted_name(&g.name), g.degree + 1)));
    let sig = Signature::new(gens)?;
    let id: Vec<usize> = (0..n).collect();
    let d_base: Vec<Poly<S>> = a.differentials().iter().map(|p| p.relabel(&sig, &id)).collect();
    let d_low: Vec<Poly<S>> = (0..n)
        .map(|i| &d_base[i] + &Poly::generator(&sig, n + i))
        .collect();
    let mut images: Vec<Option<Poly<S>>> = d_low.iter().cloned().map(Some).collect();
    images.extend((0..n).map(|_| None));
    let partial = Derivation::new(&sig, true, images)?;
    let mut diff = d_low;
    for p in &d_base {
        diff.push(-partial.apply(p));
    }
    let w = DgcAlgebra::verified(format!("W({})", a.name()), sig, diff)?;
    Ok(WeilAlgebra { algebra: w, base: a.clone(), shift: ShiftMap { base_len: n } })
}

/// The surjection `W(A) → A`: base generators map to themselves and each
/// shifted generator to the value making the map a chain map,
/// `φ(s g) = d_A g - φ(d_A g)`, which is zero here.
pub fn ce_restriction<S: Scalar>(w: &WeilAlgebra<S>) -> Result<AlgebraMap<S>> {
    let a = &w.base;
    let n = a.sig().len();
    let mut images: Vec<Poly<S>> = (0..n).map(|i| Poly::generator(a.sig(), i)).collect();
    // `d_A g` involves only base generators, on which φ is the identity, so
    // every shifted generator maps to zero.
    images.extend((0..n).map(|_| Poly::zero(a.sig())));
    AlgebraMap::verified(&w.algebra, a, images)
}

/// Degree-`n` elements of the shifted subalgebra whose differential stays in
/// it, split into closed ones and a complement.
#[derive(Clone, Debug)]
pub struct BasicElements<S> {
    pub closed: Vec<Poly<S>>,
    /// Basic but not closed, each with its differential.
    pub non_closed: Vec<(Poly<S>, Poly<S>)>,
}

impl<S: Scalar> BasicElements<S> {
    pub fn all(&self) -> Vec<Poly<S>> {
        self.closed
            .iter()
            .cloned()
            .chain(self.non_closed.iter().map(|(p, _)| p.clone()))
            .collect()
    }
}

#[derive(Default)]
struct DynCoords {
    index: HashMap<Monomial, usize>,
}

impl DynCoords {
    fn vector<S: Scalar>(&mut self, p: &Poly<S>) -> SparseVec<S> {
        let mut v = SparseVec::new();
        for (m, c) in p.terms() {
            let next = self.index.len();
            let i = *self.index.entry(m.clone()).or_insert(next);
            v.insert(i, c.clone());
        }
        v
    }
}

fn combine<S: Scalar>(w: &DgcAlgebra<S>, basis: &[Poly<S>], v: &SparseVec<S>) -> Poly<S> {
    let mut p = Poly::zero(w.sig());
    for (i, c) in v {
        p = &p + &basis[*i].scale(c);
    }
    p
}

pub fn basic_elements<S: Scalar>(w: &WeilAlgebra<S>, n: usize) -> Result<BasicElements<S>> {
    let wa = &w.algebra;
    let shift = &w.shift;
    let mono = graded_component_basis(wa.sig(), n, |j| shift.is_shifted(j))?;
    let elems: Vec<Poly<S>> = mono.into_iter().map(|m| Poly::term(wa.sig(), m, S::one())).collect();
    let diffs: Vec<Poly<S>> = elems.iter().map(|p| wa.d(p)).collect();
    let mut coords = DynCoords::default();
    let mixed: Vec<SparseVec<S>> = diffs
        .iter()
        .map(|dp| coords.vector(&dp.filter(|m| !m.all_in(|j| shift.is_shifted(j)))))
        .collect();
    let basic: Vec<Poly<S>> = kernel(&mixed).iter().map(|v| combine(wa, &elems, v)).collect();
    let mut dcoords = DynCoords::default();
    let dvecs: Vec<SparseVec<S>> = basic.iter().map(|b| dcoords.vector(&wa.d(b))).collect();
    let closed: Vec<Poly<S>> = kernel(&dvecs).iter().map(|v| combine(wa, &basic, v)).collect();
    let mut pcoords = DynCoords::default();
    let mut ech = Echelon::new();
    for c in &closed {
        let _ = ech.insert(pcoords.vector(c), SparseVec::new());
    }
    let mut non_closed = Vec::new();
    for b in &basic {
        if ech.insert(pcoords.vector(b), SparseVec::new()).is_ok() {
            non_closed.push((b.clone(), wa.d(b)));
        }
    }
    Ok(BasicElements { closed, non_closed })
}

pub(crate) fn require_basic_closed<S: Scalar>(w: &WeilAlgebra<S>, p: &Poly<S>) -> Result<()> {
    if !w.is_in_shifted_subalgebra(p) {
        return Err(Error::NotBasic);
    }
    let dp = w.algebra.differentiate(p)?;
    if !dp.is_zero() {
        return Err(Error::NotClosed(dp.render()));
    }
    Ok(())
}

//! Cohomology of dg-algebras in a fixed degree.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gca::{DgcAlgebra, Monomial, Poly, Signature};
use crate::linalg::{kernel, Echelon, SparseVec};
use crate::scalar::Scalar;

/// A finite monomial basis with coordinate lookup.
#[derive(Clone, Debug)]
pub struct Coordinates {
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Coordinates {
    pub fn new(basis: Vec<Monomial>) -> Self {
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Coordinates { basis, index }
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// Coordinates of `p`; fails if `p` has a term outside the basis.
    pub fn vector<S: Scalar>(&self, p: &Poly<S>) -> Result<SparseVec<S>> {
        p.terms()
            .map(|(m, c)| {
                self.index
                    .get(m)
                    .map(|&i| (i, c.clone()))
                    .ok_or(Error::NotHomogeneous)
            })
            .collect()
    }

    pub fn poly<S: Scalar>(&self, sig: &Arc<Signature>, v: &SparseVec<S>) -> Poly<S> {
        let mut p = Poly::zero(sig);
        for (i, c) in v {
            p.add_term(self.basis[*i].clone(), c.clone());
        }
        p
    }
}

/// One graded piece of cohomology with closed representatives.
#[derive(Clone, Debug)]
pub struct CohomologyGroup<S> {
    pub degree: usize,
    pub dimension: usize,
    pub representatives: Vec<Poly<S>>,
}

fn component<S: Scalar>(a: &DgcAlgebra<S>, n: i64) -> Result<Coordinates> {
    if n < 0 {
        return Ok(Coordinates::new(Vec::new()));
    }
    Ok(Coordinates::new(a.graded_component_basis(n as usize)?))
}

fn boundaries<S: Scalar>(a: &DgcAlgebra<S>, n: usize, cn: &Coordinates) -> Result<Echelon<S>> {
    let below = component(a, n as i64 - 1)?;
    let mut ech = Echelon::new();
    for m in below.basis() {
        let dp = a.d(&Poly::term(a.sig(), m.clone(), S::one()));
        let _ = ech.insert(cn.vector(&dp)?, SparseVec::new());
    }
    Ok(ech)
}

/// `H^n(A)` with representatives obtained by reducing the cycle basis modulo
/// boundaries in row-echelon order.
pub fn cohomology<S: Scalar>(a: &DgcAlgebra<S>, n: usize) -> Result<CohomologyGroup<S>> {
    let cn = component(a, n as i64)?;
    let above = component(a, n as i64 + 1)?;
    let images: Vec<SparseVec<S>> = cn
        .basis()
        .iter()
        .map(|m| above.vector(&a.d(&Poly::term(a.sig(), m.clone(), S::one()))))
        .collect::<Result<_>>()?;
    let cycles = kernel(&images);
    let mut ech = boundaries(a, n, &cn)?;
    let mut reps = Vec::new();
    for z in cycles {
        let (r, _) = ech.reduce(z, SparseVec::new());
        if r.is_empty() {
            continue;
        }
        let lead = r.values().next().expect("nonzero").clone();
        let r = crate::linalg::scale(&r, &(S::one() / lead));
        reps.push(cn.poly(a.sig(), &r));
        let _ = ech.insert(r, SparseVec::new());
    }
    Ok(CohomologyGroup { degree: n, dimension: reps.len(), representatives: reps })
}

/// Dimensions of `H^0 .. H^max`.
pub fn cohomology_dimensions<S: Scalar>(a: &DgcAlgebra<S>, max: usize) -> Result<Vec<usize>> {
    (0..=max).map(|n| cohomology(a, n).map(|h| h.dimension)).collect()
}

/// Coefficients `λ` with `p = Σ λ_i reps[i] + d x`.
///
/// Fails with [`Error::NotClosed`] if `d p ≠ 0` and [`Error::NotInSpan`] if
/// the classes of `reps` do not contain `[p]`.
pub fn class_coordinates<S: Scalar>(
    a: &DgcAlgebra<S>,
    p: &Poly<S>,
    n: usize,
    reps: &[Poly<S>],
) -> Result<Vec<S>> {
    if !p.is_homogeneous_of(n) {
        return Err(Error::NotHomogeneous);
    }
    let dp = a.differentiate(p)?;
    if !dp.is_zero() {
        return Err(Error::NotClosed(dp.render()));
    }
    let cn = component(a, n as i64)?;
    let mut ech = boundaries(a, n, &cn)?;
    for (i, r) in reps.iter().enumerate() {
        let _ = ech.insert(cn.vector(r)?, SparseVec::from([(i, S::one())]));
    }
    let (res, tag) = ech.reduce(cn.vector(p)?, SparseVec::new());
    if !res.is_empty() {
        return Err(Error::NotInSpan);
    }
    Ok((0..reps.len())
        .map(|i| tag.get(&i).cloned().map_or_else(S::zero, |c| -c))
        .collect())
}

/// Some `x` of degree `n - 1` with `d x = p`, if `p` is exact.
pub fn primitive<S: Scalar>(a: &DgcAlgebra<S>, p: &Poly<S>, n: usize) -> Result<Option<Poly<S>>> {
    let cn = component(a, n as i64)?;
    let below = component(a, n as i64 - 1)?;
    let cols: Vec<SparseVec<S>> = below
        .basis()
        .iter()
        .map(|m| cn.vector(&a.d(&Poly::term(a.sig(), m.clone(), S::one()))))
        .collect::<Result<_>>()?;
    Ok(crate::linalg::solve(&cols, &cn.vector(p)?).map(|x| below.poly(a.sig(), &x)))
}

/// Cohomology in degrees `0..=max`.
#[derive(Clone, Debug)]
pub struct CohomologyReport<S> {
    pub groups: Vec<CohomologyGroup<S>>,
}

impl<S: Scalar> CohomologyReport<S> {
    pub fn dimensions(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.dimension).collect()
    }
}

pub fn cohomology_basis<S: Scalar>(a: &DgcAlgebra<S>, max: usize) -> Result<CohomologyReport<S>> {
    Ok(CohomologyReport { groups: (0..=max).map(|n| cohomology(a, n)).collect::<Result<_>>()? })
}

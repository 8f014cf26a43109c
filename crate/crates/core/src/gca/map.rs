use super::algebra::DgcAlgebra;
use super::hom::Substitution;
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A degree-preserving algebra homomorphism between dg-algebras.
#[derive(Clone, Debug)]
pub struct AlgebraMap<S> {
    source: DgcAlgebra<S>,
    target: DgcAlgebra<S>,
    sub: Substitution<S>,
}

impl<S: Scalar> AlgebraMap<S> {
    /// `images[i]` is the image of source generator `i`. Degrees are checked;
    /// compatibility with differentials is not (see [`Self::verified`]).
    pub fn new(source: &DgcAlgebra<S>, target: &DgcAlgebra<S>, images: Vec<Poly<S>>) -> Result<Self> {
        let sub = Substitution::new(source.sig(), target.sig(), images)?;
        Ok(AlgebraMap { source: source.clone(), target: target.clone(), sub })
    }

    /// Like [`Self::new`] and additionally requires `φ ∘ d = d ∘ φ`.
    pub fn verified(source: &DgcAlgebra<S>, target: &DgcAlgebra<S>, images: Vec<Poly<S>>) -> Result<Self> {
        let m = Self::new(source, target, images)?;
        m.require_chain_map()?;
        Ok(m)
    }

    pub fn source(&self) -> &DgcAlgebra<S> {
        &self.source
    }

    pub fn target(&self) -> &DgcAlgebra<S> {
        &self.target
    }

    pub fn images(&self) -> &[Poly<S>] {
        self.sub.images()
    }

    pub fn apply(&self, p: &Poly<S>) -> Result<Poly<S>> {
        self.sub.apply(p)
    }

    /// Nonzero `φ(d g) - d φ(g)` per source generator.
    pub fn chain_map_residuals(&self) -> Vec<(usize, Poly<S>)> {
        let der = self.target.derivation();
        (0..self.source.sig().len())
            .filter_map(|i| {
                let lhs = self.sub.apply(self.source.d_generator(i)).expect("same source");
                let rhs = der.apply(&self.sub.images()[i]);
                let r = &lhs - &rhs;
                (!r.is_zero()).then_some((i, r))
            })
            .collect()
    }

    pub fn is_chain_map(&self) -> bool {
        self.chain_map_residuals().is_empty()
    }

    pub fn require_chain_map(&self) -> Result<()> {
        let r = self.chain_map_residuals();
        if r.is_empty() {
            Ok(())
        } else {
            Err(Error::NotChainMap(
                r.into_iter()
                    .map(|(i, p)| (self.source.sig().name(i).to_string(), p.render()))
                    .collect(),
            ))
        }
    }
}

use std::collections::HashMap;
use std::sync::Arc;

use super::poly::Poly;
use super::signature::{same_signature, Signature};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A degree-preserving homomorphism of free graded-commutative algebras,
/// determined by the images of the source generators.
#[derive(Clone, Debug)]
pub struct Substitution<S> {
    source: Arc<Signature>,
    target: Arc<Signature>,
    images: Vec<Poly<S>>,
}

impl<S: Scalar> Substitution<S> {
    /// Checks that each image lies over `target` and is homogeneous of the
    /// generator's degree.
    pub fn new(source: &Arc<Signature>, target: &Arc<Signature>, images: Vec<Poly<S>>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::InvalidArgument(format!(
                "substitution needs {} images, got {}",
                source.len(),
                images.len()
            )));
        }
        for (i, p) in images.iter().enumerate() {
            if !same_signature(p.sig(), target) {
                return Err(Error::GeneratorMismatch);
            }
            if !p.is_homogeneous_of(source.degree(i)) {
                return Err(Error::DegreeMismatch {
                    what: source.name(i).to_string(),
                    expected: source.degree(i) as i64,
                    found: p.homogeneous_degree().map_or(-1, |d| d as i64),
                });
            }
        }
        Ok(Substitution { source: source.clone(), target: target.clone(), images })
    }

    /// Identity on a signature except for the listed overrides.
    pub fn with_overrides(sig: &Arc<Signature>, overrides: &[(usize, Poly<S>)]) -> Result<Self> {
        let mut images: Vec<Poly<S>> = (0..sig.len()).map(|i| Poly::generator(sig, i)).collect();
        for (i, p) in overrides {
            images[*i] = p.clone();
        }
        Self::new(sig, sig, images)
    }

    pub fn source(&self) -> &Arc<Signature> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Signature> {
        &self.target
    }

    pub fn images(&self) -> &[Poly<S>] {
        &self.images
    }

    pub fn apply(&self, p: &Poly<S>) -> Result<Poly<S>> {
        if !same_signature(p.sig(), &self.source) {
            return Err(Error::GeneratorMismatch);
        }
        let mut powers: HashMap<(u32, u32), Poly<S>> = HashMap::new();
        let mut acc = Poly::zero(&self.target);
        for (m, c) in p.terms() {
            let f = m.factors();
            if f.is_empty() {
                acc.add_term(m.clone(), c.clone());
                continue;
            }
            let mut prod = Poly::constant(&self.target, c.clone());
            for (k, &(g, e)) in f.iter().enumerate() {
                let pw = powers
                    .entry((g, e))
                    .or_insert_with(|| self.images[g as usize].pow(e));
                if k + 1 == f.len() {
                    prod.mul_acc_into(pw, &S::one(), &mut acc);
                } else {
                    prod = &prod * pw;
                    if prod.is_zero() {
                        break;
                    }
                }
            }
        }
        Ok(acc)
    }
}

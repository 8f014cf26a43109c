use std::sync::Arc;

use super::monomial::Monomial;
use super::poly::Poly;
use super::signature::Signature;
use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

/// A graded derivation determined by its values on generators and extended by
/// the graded Leibniz rule. `odd` is the parity of its degree.
#[derive(Clone, Debug)]
pub struct Derivation<S> {
    sig: Arc<Signature>,
    odd: bool,
    images: Vec<Option<Poly<S>>>,
}

impl<S: Scalar> Derivation<S> {
    /// `images[i]` is the value on generator `i`; `None` means zero.
    pub fn new(sig: &Arc<Signature>, odd: bool, images: Vec<Option<Poly<S>>>) -> Result<Self> {
        if images.len() != sig.len() {
            return Err(Error::InvalidArgument(format!(
                "derivation needs {} images, got {}",
                sig.len(),
                images.len()
            )));
        }
        for p in images.iter().flatten() {
            if !super::signature::same_signature(p.sig(), sig) {
                return Err(Error::GeneratorMismatch);
            }
        }
        Ok(Derivation { sig: sig.clone(), odd, images })
    }

    /// The left partial derivative with respect to generator `g`.
    pub fn partial(sig: &Arc<Signature>, g: usize) -> Self {
        let mut images = vec![None; sig.len()];
        images[g] = Some(Poly::one(sig));
        Derivation { sig: sig.clone(), odd: sig.is_odd(g), images }
    }

    pub fn apply(&self, p: &Poly<S>) -> Poly<S> {
        self.apply_sided(p, false)
    }

    /// Action from the right: the sign is taken from the degree of the
    /// factors after the differentiated one, `D(xy) = x D(y) ± D(x) y` with
    /// `± = (-1)^{|D||y|}`.
    pub fn apply_right(&self, p: &Poly<S>) -> Poly<S> {
        self.apply_sided(p, true)
    }

    fn apply_sided(&self, p: &Poly<S>, right: bool) -> Poly<S> {
        let sig = &self.sig;
        let mut acc = Poly::zero(sig);
        for (m, c) in p.terms() {
            let f = m.factors();
            let total = m.degree(sig);
            let mut prefix_deg = 0usize;
            for k in 0..f.len() {
                let (g, e) = f[k];
                let g = g as usize;
                let gd = sig.degree(g);
                if let Some(img) = &self.images[g] {
                    if !img.is_zero() {
                        let mut pre: Vec<(u32, u32)> = f[..k].to_vec();
                        if e > 1 {
                            pre.push((g as u32, e - 1));
                        }
                        // Differentiating the last copy of g^e; the others sit in `pre`.
                        let before = prefix_deg + gd * (e as usize - 1);
                        let after = total - before - gd;
                        let neg = self.odd && (if right { after } else { before }) % 2 == 1;
                        let mut coef = c.clone() * int::<S>(e as i64);
                        if neg {
                            coef = -coef;
                        }
                        let left = Poly::term(sig, Monomial::from_sorted(pre), coef);
                        let mid = &left * img;
                        let rest = Poly::term(sig, Monomial::from_sorted(f[k + 1..].to_vec()), S::one());
                        mid.mul_acc_into(&rest, &S::one(), &mut acc);
                    }
                }
                prefix_deg += gd * e as usize;
            }
        }
        acc
    }
}

/// Left partial derivative `∂p/∂g`.
pub fn partial_derivative<S: Scalar>(p: &Poly<S>, g: usize) -> Poly<S> {
    Derivation::partial(p.sig(), g).apply(p)
}

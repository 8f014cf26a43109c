use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;


use super::monomial::Monomial;
use super::signature::{same_signature, Signature};
use super::term_limit::check_terms;
use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

/// An element of the free graded-commutative algebra on a [`Signature`],
/// stored as a sparse map from normal-form monomials to nonzero coefficients.
#[derive(Clone)]
pub struct Poly<S> {
    sig: Arc<Signature>,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Poly<S> {
    pub fn zero(sig: &Arc<Signature>) -> Self {
        Poly { sig: sig.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(sig: &Arc<Signature>, c: S) -> Self {
        Self::term(sig, Monomial::one(), c)
    }

    pub fn one(sig: &Arc<Signature>) -> Self {
        Self::constant(sig, S::one())
    }

    pub fn term(sig: &Arc<Signature>, m: Monomial, c: S) -> Self {
        let mut p = Self::zero(sig);
        p.add_term(m, c);
        p
    }

    pub fn generator(sig: &Arc<Signature>, i: usize) -> Self {
        assert!(i < sig.len(), "generator index out of range");
        Self::term(sig, Monomial::generator(i), S::one())
    }

    pub fn named(sig: &Arc<Signature>, name: &str) -> Result<Self> {
        Ok(Self::generator(sig, sig.require(name)?))
    }

    /// Product of an ordered word of generator powers, normalized with its
    /// Koszul sign.
    pub fn word(sig: &Arc<Signature>, word: &[(usize, u32)], c: S) -> Self {
        match Monomial::normalize(word, sig) {
            None => Self::zero(sig),
            Some((m, neg)) => Self::term(sig, m, if neg { -c } else { c }),
        }
    }

    pub fn sig(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, S)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    /// Adds `c * m`, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_sig(&self, other: &Self) -> Result<()> {
        if same_signature(&self.sig, &other.sig) {
            Ok(())
        } else {
            Err(Error::GeneratorMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Graded-commutative product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let mut out = Self::zero(&self.sig);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((m, neg)) = m1.mul(m2, &self.sig) {
                    let c = c1.clone() * c2.clone();
                    out.add_term(m, if neg { -c } else { c });
                }
            }
            check_terms(out.len());
        }
        Ok(out)
    }

    /// Adds `c * self * other` into `acc` without an intermediate allocation.
    pub(crate) fn mul_acc_into(&self, other: &Self, c: &S, acc: &mut Self) {
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((m, neg)) = m1.mul(m2, &self.sig) {
                    let k = c.clone() * c1.clone() * c2.clone();
                    acc.add_term(m, if neg { -k } else { k });
                }
            }
        }
        check_terms(acc.len());
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(&self.sig);
        if c.is_zero() {
            return out;
        }
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(&self.sig);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// The common degree of all terms; `None` for zero or mixed degree.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.degree(&self.sig));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Whether all terms have degree `n` (vacuously true for zero).
    pub fn is_homogeneous_of(&self, n: usize) -> bool {
        self.terms.keys().all(|m| m.degree(&self.sig) == n)
    }

    pub fn degree_components(&self) -> BTreeMap<usize, Self> {
        self.split_by(|m| m.degree(&self.sig))
    }

    pub fn word_length_components(&self) -> BTreeMap<usize, Self> {
        self.split_by(|m| m.word_length())
    }

    fn split_by(&self, key: impl Fn(&Monomial) -> usize) -> BTreeMap<usize, Self> {
        let mut out: BTreeMap<usize, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(key(m))
                .or_insert_with(|| Self::zero(&self.sig))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// Terms whose monomial satisfies `pred`.
    pub fn filter(&self, pred: impl Fn(&Monomial) -> bool) -> Self {
        let mut out = Self::zero(&self.sig);
        for (m, c) in &self.terms {
            if pred(m) {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Generators that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|f| f.0 as usize))
            .collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Re-expresses `self` over `target`, sending generator `i` to `map[i]`.
    pub fn relabel(&self, target: &Arc<Signature>, map: &[usize]) -> Self {
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let word: Vec<(usize, u32)> = m
                .factors()
                .iter()
                .map(|&(i, e)| (map[i as usize], e))
                .collect();
            if let Some((n, neg)) = Monomial::normalize(&word, target) {
                out.add_term(n, if neg { -c.clone() } else { c.clone() });
            }
        }
        out
    }

    /// Re-expresses `self` over `target` by generator name.
    pub fn embed(&self, target: &Arc<Signature>) -> Result<Self> {
        if same_signature(&self.sig, target) {
            return Ok(Poly { sig: target.clone(), terms: self.terms.clone() });
        }
        let used = self.support();
        let mut map = vec![usize::MAX; self.sig.len()];
        for i in used {
            let g = self.sig.get(i);
            let j = target.require(&g.name)?;
            if target.degree(j) != g.degree {
                return Err(Error::DegreeMismatch {
                    what: g.name.clone(),
                    expected: g.degree as i64,
                    found: target.degree(j) as i64,
                });
            }
            map[i] = j;
        }
        Ok(self.relabel(target, &map))
    }

    /// ASCII rendering, e.g. `1/2*t1*t2 - b^2`.
    pub fn render(&self) -> String {
        self.render_with(|i| self.sig.name(i).to_string(), "*")
    }

    /// Rendering with custom generator labels and product separator.
    pub fn render_with(&self, label: impl Fn(usize) -> String, sep: &str) -> String {
        self.render_parts(label, sep, sep)
    }

    /// Like [`Poly::render_with`], with a separate string between a
    /// coefficient and its monomial.
    pub fn render_parts(&self, label: impl Fn(usize) -> String, coef_sep: &str, sep: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = is_negative(c);
            let mag = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body: Vec<String> = m
                .factors()
                .iter()
                .map(|&(i, e)| {
                    let l = label(i as usize);
                    if e == 1 {
                        l
                    } else {
                        format!("{l}^{e}")
                    }
                })
                .collect();
            if m.is_one() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push_str(coef_sep);
                }
                out.push_str(&body.join(sep));
            }
        }
        out
    }
}

/// Sign test that works for any ordered-by-display scalar: a value is negative
/// if its rendering starts with `-`.
pub(crate) fn is_negative<S: Scalar>(c: &S) -> bool {
    c.to_string().starts_with('-')
}

impl<S: PartialEq> PartialEq for Poly<S> {
    fn eq(&self, other: &Self) -> bool {
        same_signature(&self.sig, &other.sig) && self.terms == other.terms
    }
}

impl<S: fmt::Debug> fmt::Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Poly{")?;
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c:?}")?;
            for &(i, e) in m.factors() {
                write!(f, "*{}", self.sig.name(i as usize))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        f.write_str("}")
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

// Operator forms panic on a generator-set mismatch; use the `try_` methods
// when operands may come from different algebras.
impl<S: Scalar> Add for &Poly<S> {
    type Output = Poly<S>;
    fn add(self, rhs: Self) -> Poly<S> {
        self.try_add(rhs).expect("generator sets match")
    }
}

impl<S: Scalar> Sub for &Poly<S> {
    type Output = Poly<S>;
    fn sub(self, rhs: Self) -> Poly<S> {
        self.try_sub(rhs).expect("generator sets match")
    }
}

impl<S: Scalar> Mul for &Poly<S> {
    type Output = Poly<S>;
    fn mul(self, rhs: Self) -> Poly<S> {
        self.try_mul(rhs).expect("generator sets match")
    }
}

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> Add for Poly<S> {
    type Output = Poly<S>;
    fn add(self, rhs: Self) -> Poly<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for Poly<S> {
    type Output = Poly<S>;
    fn sub(self, rhs: Self) -> Poly<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Mul for Poly<S> {
    type Output = Poly<S>;
    fn mul(self, rhs: Self) -> Poly<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Neg for Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        -&self
    }
}

/// `n * p` for an integer multiplier.
pub fn times<S: Scalar>(n: i64, p: &Poly<S>) -> Poly<S> {
    p.scale(&int(n))
}

use crate::error::{Error, Result};
use crate::gca::{AlgebraMap, DgcAlgebra, Generator, Poly, Signature};
use crate::scalar::{sign, Scalar};

/// `A_μ`: adjoins `b` of degree `|μ| - 1` with `d b = μ`.
pub fn string_like_extension<S: Scalar>(a: &DgcAlgebra<S>, mu: &Poly<S>, b: &str) -> Result<DgcAlgebra<S>> {
    let deg = mu
        .homogeneous_degree()
        .ok_or_else(|| Error::InvalidArgument("cocycle must be nonzero and homogeneous".into()))?;
    string_like_extension_in_degree(a, mu, b, deg.saturating_sub(1))
}

/// Like [`string_like_extension`] with the degree of `b` given explicitly,
/// which also admits `μ = 0`.
pub fn string_like_extension_in_degree<S: Scalar>(
    a: &DgcAlgebra<S>,
    mu: &Poly<S>,
    b: &str,
    n: usize,
) -> Result<DgcAlgebra<S>> {
    if n % 2 == 1 || n < 2 {
        return Err(Error::EvenCocycle(n + 1));
    }
    if !mu.is_homogeneous_of(n + 1) {
        return Err(Error::DegreeMismatch {
            what: format!("d {b}"),
            expected: n as i64 + 1,
            found: mu.homogeneous_degree().map_or(-1, |d| d as i64),
        });
    }
    let dmu = a.differentiate(mu)?;
    if !dmu.is_zero() {
        return Err(Error::NotClosed(dmu.render()));
    }
    let mut gens = a.generators().to_vec();
    gens.push(Generator::new(b, n));
    let sig = Signature::new(gens)?;
    let mut diff: Vec<Poly<S>> = a.differentials().iter().map(|p| p.embed(&sig)).collect::<Result<_>>()?;
    diff.push(mu.embed(&sig)?);
    DgcAlgebra::verified(format!("{}_{{{}}}", a.name(), b), sig, diff)
}

/// Generators of `a` followed by those of `b`, differentials componentwise.
pub fn direct_sum<S: Scalar>(a: &DgcAlgebra<S>, b: &DgcAlgebra<S>) -> Result<DgcAlgebra<S>> {
    let mut gens = a.generators().to_vec();
    gens.extend(b.generators().iter().cloned());
    let sig = Signature::new(gens)?;
    let na = a.sig().len();
    let ida: Vec<usize> = (0..na).collect();
    let idb: Vec<usize> = (na..sig.len()).collect();
    let diff = a
        .differentials()
        .iter()
        .map(|p| p.relabel(&sig, &ida))
        .chain(b.differentials().iter().map(|p| p.relabel(&sig, &idb)))
        .collect();
    DgcAlgebra::verified(format!("{} + {}", a.name(), b.name()), sig, diff)
}

/// `d_op = (-1)^{N+1} d` with `N` the word length of each term.
pub fn opposite_algebra<S: Scalar>(a: &DgcAlgebra<S>) -> Result<DgcAlgebra<S>> {
    let diff = a
        .differentials()
        .iter()
        .map(|p| {
            let mut out = Poly::zero(a.sig());
            for (len, part) in p.word_length_components() {
                out = &out + &part.scale(&sign::<S>(len % 2 == 0));
            }
            out
        })
        .collect();
    DgcAlgebra::verified(format!("{}^op", a.name()), a.sig().clone(), diff)
}

/// The chain map `A^op → A`, `g ↦ -g`.
pub fn opposite_morphism<S: Scalar>(a: &DgcAlgebra<S>) -> Result<AlgebraMap<S>> {
    let op = opposite_algebra(a)?;
    let images = (0..a.sig().len()).map(|i| -Poly::generator(a.sig(), i)).collect();
    AlgebraMap::verified(&op, a, images)
}

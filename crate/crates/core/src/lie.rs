//! Lie algebra inputs and their Chevalley–Eilenberg algebras.

use std::sync::Arc;


use crate::error::{Error, Result};
use crate::gca::{DgcAlgebra, Generator, Poly, Signature};
use crate::linalg::{Echelon, SparseVec};
use crate::scalar::{int, ratio, Scalar};

pub type Matrix<S> = Vec<Vec<S>>;

/// Structure constants `C^a_bc` with `[e_b, e_c] = C^a_bc e_a`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieData<S> {
    name: String,
    basis: Vec<String>,
    dual: Vec<String>,
    c: Vec<S>,
}

impl<S: Scalar> LieData<S> {
    /// `constants[a][b][c] = C^a_bc`. Checks antisymmetry and the Jacobi
    /// identity.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        dual: Vec<String>,
        constants: Vec<Vec<Vec<S>>>,
    ) -> Result<Self> {
        let n = basis.len();
        if n == 0 || dual.len() != n || constants.len() != n {
            return Err(Error::InvalidArgument("basis, dual basis and constants must agree in size".into()));
        }
        let mut c = Vec::with_capacity(n * n * n);
        for plane in &constants {
            if plane.len() != n || plane.iter().any(|r| r.len() != n) {
                return Err(Error::InvalidArgument("structure constants must be n×n×n".into()));
            }
            for row in plane {
                c.extend(row.iter().cloned());
            }
        }
        let l = LieData { name: name.into(), basis, dual, c };
        l.check()?;
        Ok(l)
    }

    /// Builds from brackets `[e_b, e_c] = Σ coeff e_a` listed for some pairs;
    /// unlisted pairs bracket to zero.
    pub fn from_brackets(
        name: impl Into<String>,
        basis: Vec<String>,
        dual: Vec<String>,
        brackets: &[(usize, usize, Vec<(usize, S)>)],
    ) -> Result<Self> {
        let n = basis.len();
        let mut k = vec![vec![vec![S::zero(); n]; n]; n];
        for (b, c, rhs) in brackets {
            for (a, x) in rhs {
                k[*a][*b][*c] = k[*a][*b][*c].clone() + x.clone();
                k[*a][*c][*b] = k[*a][*c][*b].clone() - x.clone();
            }
        }
        Self::new(name, basis, dual, k)
    }

    fn check(&self) -> Result<()> {
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                for c in b..n {
                    if self.constant(a, b, c) != -self.constant(a, c, b) {
                        return Err(Error::NotAntisymmetric(self.basis[b].clone(), self.basis[c].clone()));
                    }
                }
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    let j = self.jacobiator(x, y, z);
                    if j.iter().any(|v| !v.is_zero()) {
                        return Err(Error::Jacobi(
                            self.basis[x].clone(),
                            self.basis[y].clone(),
                            self.basis[z].clone(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// `[[x,y],z] + [[y,z],x] + [[z,x],y]` on basis elements.
    fn jacobiator(&self, x: usize, y: usize, z: usize) -> Vec<S> {
        let e = |i: usize| {
            let mut v = vec![S::zero(); self.dim()];
            v[i] = S::one();
            v
        };
        let t1 = self.bracket(&self.bracket(&e(x), &e(y)), &e(z));
        let t2 = self.bracket(&self.bracket(&e(y), &e(z)), &e(x));
        let t3 = self.bracket(&self.bracket(&e(z), &e(x)), &e(y));
        (0..self.dim())
            .map(|i| t1[i].clone() + t2[i].clone() + t3[i].clone())
            .collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn dual_names(&self) -> &[String] {
        &self.dual
    }

    /// `C^a_bc`.
    pub fn constant(&self, a: usize, b: usize, c: usize) -> S {
        let n = self.dim();
        self.c[(a * n + b) * n + c].clone()
    }

    pub fn bracket(&self, x: &[S], y: &[S]) -> Vec<S> {
        let n = self.dim();
        let mut out = vec![S::zero(); n];
        for b in 0..n {
            if x[b].is_zero() {
                continue;
            }
            for c in 0..n {
                if y[c].is_zero() {
                    continue;
                }
                let xy = x[b].clone() * y[c].clone();
                for (a, o) in out.iter_mut().enumerate() {
                    let k = self.constant(a, b, c);
                    if !k.is_zero() {
                        *o = o.clone() + k * xy.clone();
                    }
                }
            }
        }
        out
    }

    /// Nonzero brackets `(b, c, [(a, C^a_bc)])` with `b < c`.
    pub fn brackets(&self) -> Vec<(usize, usize, Vec<(usize, S)>)> {
        let n = self.dim();
        let mut out = Vec::new();
        for b in 0..n {
            for c in b + 1..n {
                let rhs: Vec<(usize, S)> = (0..n)
                    .map(|a| (a, self.constant(a, b, c)))
                    .filter(|(_, k)| !k.is_zero())
                    .collect();
                if !rhs.is_empty() {
                    out.push((b, c, rhs));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
}

/// `CE(g)`: generators `t^a` in degree 1 with `d t^a = -½ C^a_bc t^b t^c`.
pub fn ce_of_lie<S: Scalar>(l: &LieData<S>) -> Result<DgcAlgebra<S>> {
    let gens = l.dual_names().iter().map(|n| Generator::new(n.clone(), 1)).collect();
    let sig = Signature::new(gens)?;
    let n = l.dim();
    let diff = (0..n)
        .map(|a| {
            let mut p = Poly::zero(&sig);
            for b in 0..n {
                for c in 0..n {
                    let k = l.constant(a, b, c);
                    if !k.is_zero() {
                        let w = Poly::word(&sig, &[(b, 1), (c, 1)], k * ratio::<S>(-1, 2));
                        p = &p + &w;
                    }
                }
            }
            p
        })
        .collect();
    DgcAlgebra::verified(format!("CE({})", l.name()), sig, diff)
}

/// A symmetric bilinear form on a Lie algebra, in the Lie basis.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm<S> {
    matrix: Matrix<S>,
}

impl<S: Scalar> BilinearForm<S> {
    pub fn new(matrix: Matrix<S>) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("form matrix must be square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::NonSymmetricForm);
                }
            }
        }
        Ok(BilinearForm { matrix })
    }

    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| if i == j { S::one() } else { S::zero() }).collect())
            .collect();
        BilinearForm { matrix }
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> S {
        self.matrix[i][j].clone()
    }

    /// Whether `⟨[x,y],z⟩ + ⟨y,[x,z]⟩ = 0` on all basis triples.
    pub fn is_invariant(&self, l: &LieData<S>) -> bool {
        let n = l.dim();
        if self.matrix.len() != n {
            return false;
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let mut s = S::zero();
                    for d in 0..n {
                        s = s + l.constant(d, x, y) * self.entry(d, z) + l.constant(d, x, z) * self.entry(y, d);
                    }
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// The canonical 3-cocycle `μ = (1/6) Σ ⟨e_a,[e_b,e_c]⟩ t^a t^b t^c` in `ce`,
/// which must be `CE(l)` or contain its generators by name.
pub fn cocycle_from_form<S: Scalar>(
    l: &LieData<S>,
    form: &BilinearForm<S>,
    ce: &DgcAlgebra<S>,
) -> Result<Poly<S>> {
    if !form.is_invariant(l) {
        return Err(Error::NonInvariantForm);
    }
    let n = l.dim();
    let idx: Vec<usize> = l
        .dual_names()
        .iter()
        .map(|d| ce.sig().require(d))
        .collect::<Result<_>>()?;
    let sixth = ratio::<S>(1, 6);
    let mut mu = Poly::zero(ce.sig());
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let mut f = S::zero();
                for d in 0..n {
                    f = f + l.constant(d, b, c) * form.entry(a, d);
                }
                if !f.is_zero() {
                    let w = Poly::word(ce.sig(), &[(idx[a], 1), (idx[b], 1), (idx[c], 1)], f * sixth.clone());
                    mu = &mu + &w;
                }
            }
        }
    }
    let dmu = ce.differentiate(&mu)?;
    if !dmu.is_zero() {
        return Err(Error::NotClosed(dmu.render()));
    }
    Ok(mu)
}

/// Square matrices representing the Lie basis.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRealization<S> {
    matrices: Vec<Matrix<S>>,
}

fn mat_mul<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut s = S::zero();
                    for k in 0..n {
                        if !a[i][k].is_zero() && !b[k][j].is_zero() {
                            s = s + a[i][k].clone() * b[k][j].clone();
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

fn commutator<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    ab.iter()
        .zip(&ba)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x.clone() - y.clone()).collect())
        .collect()
}

fn flatten<S: Scalar>(m: &Matrix<S>) -> SparseVec<S> {
    let n = m.len();
    let mut v = SparseVec::new();
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if !x.is_zero() {
                v.insert(i * n + j, x.clone());
            }
        }
    }
    v
}

impl<S: Scalar> MatrixRealization<S> {
    pub fn new(matrices: Vec<Matrix<S>>) -> Result<Self> {
        let Some(first) = matrices.first() else {
            return Err(Error::InvalidArgument("empty realization".into()));
        };
        let n = first.len();
        if matrices.iter().any(|m| m.len() != n || m.iter().any(|r| r.len() != n)) {
            return Err(Error::InvalidArgument("realization matrices must be square of equal size".into()));
        }
        Ok(MatrixRealization { matrices })
    }

    pub fn matrices(&self) -> &[Matrix<S>] {
        &self.matrices
    }

    pub fn size(&self) -> usize {
        self.matrices[0].len()
    }

    /// Structure constants read off from commutators. Fails if the matrices
    /// are dependent or a commutator leaves their span.
    pub fn lie_data(&self, name: &str, basis: Vec<String>, dual: Vec<String>) -> Result<LieData<S>> {
        let n = self.matrices.len();
        let mut ech = Echelon::new();
        for (a, m) in self.matrices.iter().enumerate() {
            if ech.insert(flatten(m), SparseVec::from([(a, S::one())])).is_err() {
                return Err(Error::InconsistentRealization("matrices are linearly dependent".into()));
            }
        }
        let mut k = vec![vec![vec![S::zero(); n]; n]; n];
        for b in 0..n {
            for c in 0..n {
                let (res, tag) = ech.reduce(flatten(&commutator(&self.matrices[b], &self.matrices[c])), SparseVec::new());
                if !res.is_empty() {
                    return Err(Error::InconsistentRealization(format!(
                        "[{}, {}] leaves the span",
                        basis[b], basis[c]
                    )));
                }
                for (a, x) in tag {
                    k[a][b][c] = -x;
                }
            }
        }
        LieData::new(name, basis, dual, k)
    }

    /// Whether commutators reproduce the given structure constants.
    pub fn realizes(&self, l: &LieData<S>) -> bool {
        let n = l.dim();
        if self.matrices.len() != n {
            return false;
        }
        for b in 0..n {
            for c in b + 1..n {
                let lhs = commutator(&self.matrices[b], &self.matrices[c]);
                let m = self.size();
                let mut rhs = vec![vec![S::zero(); m]; m];
                for a in 0..n {
                    let k = l.constant(a, b, c);
                    if k.is_zero() {
                        continue;
                    }
                    for i in 0..m {
                        for j in 0..m {
                            rhs[i][j] = rhs[i][j].clone() + k.clone() * self.matrices[a][i][j].clone();
                        }
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// `tr(X^k)` for `X = Σ r^a e_a`, with `r[a]` the index in `sig` of the even
/// variable paired with basis element `a`.
pub fn invariant_polynomial_str<S: Scalar>(
    l: &LieData<S>,
    m: &MatrixRealization<S>,
    k: u32,
    sig: &Arc<Signature>,
    r: &[usize],
) -> Result<Poly<S>> {
    if k == 0 {
        return Err(Error::InvalidArgument("trace power must be positive".into()));
    }
    if !m.realizes(l) {
        return Err(Error::InconsistentRealization("commutators do not match structure constants".into()));
    }
    if r.len() != l.dim() || r.iter().any(|&i| i >= sig.len() || sig.is_odd(i)) {
        return Err(Error::InvalidArgument("curvature variables must be even generators, one per basis element".into()));
    }
    let n = m.size();
    let x: Vec<Vec<Poly<S>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut p = Poly::zero(sig);
                    for (a, &ra) in r.iter().enumerate() {
                        let c = m.matrices()[a][i][j].clone();
                        if !c.is_zero() {
                            p = &p + &Poly::generator(sig, ra).scale(&c);
                        }
                    }
                    p
                })
                .collect()
        })
        .collect();
    let mut pw = x.clone();
    for _ in 1..k {
        pw = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut s = Poly::zero(sig);
                        for t in 0..n {
                            if !pw[i][t].is_zero() && !x[t][j].is_zero() {
                                s = &s + &(&pw[i][t] * &x[t][j]);
                            }
                        }
                        s
                    })
                    .collect()
            })
            .collect();
    }
    let mut tr = Poly::zero(sig);
    for (i, row) in pw.iter().enumerate() {
        tr = &tr + &row[i];
    }
    Ok(tr)
}

/// A named Lie algebra together with a realization and an invariant form.
#[derive(Clone, Debug)]
pub struct LieModel<S> {
    pub data: LieData<S>,
    pub realization: Option<MatrixRealization<S>>,
    pub form: Option<BilinearForm<S>>,
}

fn zero_matrix<S: Scalar>(n: usize) -> Matrix<S> {
    vec![vec![S::zero(); n]; n]
}

/// `so(n)` in its defining representation.
///
/// For `n = 3` the basis is `(L_a)_bc = -ε_abc`, so `C^a_bc = ε_abc`. For
/// `n ≥ 4` the basis is `L_ij = E_ij - E_ji` for `i < j` in lexicographic
/// order. The form is `-½ tr(XY)`, which is the identity in both bases.
pub fn so<S: Scalar>(n: usize) -> Result<LieModel<S>> {
    if n < 2 {
        return Err(Error::InvalidArgument("so(n) needs n ≥ 2".into()));
    }
    let (mats, basis): (Vec<Matrix<S>>, Vec<String>) = if n == 3 {
        let eps = |a: usize, b: usize, c: usize| -> i64 {
            match (a, b, c) {
                (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
                (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
                _ => 0,
            }
        };
        let mats = (0..3)
            .map(|a| {
                (0..3)
                    .map(|b| (0..3).map(|c| int::<S>(-eps(a, b, c))).collect())
                    .collect()
            })
            .collect();
        (mats, (1..=3).map(|i| format!("e{i}")).collect())
    } else {
        let mut mats = Vec::new();
        let mut names = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut m = zero_matrix::<S>(n);
                m[i][j] = S::one();
                m[j][i] = -S::one();
                mats.push(m);
                names.push(format!("L{}{}", i + 1, j + 1));
            }
        }
        (mats, names)
    };
    let dual = (1..=mats.len()).map(|i| format!("t{i}")).collect();
    let real = MatrixRealization::new(mats)?;
    let data = real.lie_data(&format!("so({n})"), basis, dual)?;
    let form = BilinearForm::identity(data.dim());
    debug_assert!(form.is_invariant(&data));
    Ok(LieModel { data, realization: Some(real), form: Some(form) })
}

/// Real 2k×2k block form of a complex k×k matrix given by real and imaginary
/// parts.
fn realify<S: Scalar>(re: &Matrix<S>, im: &Matrix<S>) -> Matrix<S> {
    let k = re.len();
    let mut m = zero_matrix::<S>(2 * k);
    for i in 0..k {
        for j in 0..k {
            m[2 * i][2 * j] = re[i][j].clone();
            m[2 * i][2 * j + 1] = -im[i][j].clone();
            m[2 * i + 1][2 * j] = im[i][j].clone();
            m[2 * i + 1][2 * j + 1] = re[i][j].clone();
        }
    }
    m
}

/// `su(k)` realified as 2k×2k rational matrices, with basis
/// `A_jl = E_jl - E_lj`, `S_jl = i(E_jl + E_lj)` for `j < l`, and
/// `H_j = i(E_jj - E_{j+1,j+1})`.
pub fn su<S: Scalar>(k: usize) -> Result<LieModel<S>> {
    if k < 2 {
        return Err(Error::InvalidArgument("su(k) needs k ≥ 2".into()));
    }
    let mut mats = Vec::new();
    let mut names = Vec::new();
    for j in 0..k {
        for l in j + 1..k {
            let mut re = zero_matrix::<S>(k);
            re[j][l] = S::one();
            re[l][j] = -S::one();
            mats.push(realify(&re, &zero_matrix(k)));
            names.push(format!("A{}{}", j + 1, l + 1));
            let mut im = zero_matrix::<S>(k);
            im[j][l] = S::one();
            im[l][j] = S::one();
            mats.push(realify(&zero_matrix(k), &im));
            names.push(format!("S{}{}", j + 1, l + 1));
        }
    }
    for j in 0..k - 1 {
        let mut im = zero_matrix::<S>(k);
        im[j][j] = S::one();
        im[j + 1][j + 1] = -S::one();
        mats.push(realify(&zero_matrix(k), &im));
        names.push(format!("H{}", j + 1));
    }
    let dual = (1..=mats.len()).map(|i| format!("t{i}")).collect();
    let real = MatrixRealization::new(mats)?;
    let data = real.lie_data(&format!("su({k})"), names, dual)?;
    Ok(LieModel { data, realization: Some(real), form: None })
}

/// `u(1)` with its 1×1 realization.
pub fn u1<S: Scalar>() -> Result<LieModel<S>> {
    let real = MatrixRealization::new(vec![vec![vec![S::one()]]])?;
    let data = real.lie_data("u(1)", vec!["e".into()], vec!["t".into()])?;
    Ok(LieModel { data, realization: Some(real), form: Some(BilinearForm::identity(1)) })
}

/// `CE(u(1) → u(k))`: generators `t0`, the `su(k)` generators `t1..`, and `b`
/// in degree 2, with `d t0 = -b` and `d b = 0`.
pub fn ce_u1_to_uk<S: Scalar>(k: usize) -> Result<DgcAlgebra<S>> {
    let sub: Option<LieData<S>> = if k >= 2 { Some(su::<S>(k)?.data) } else { None };
    let mut gens = vec![Generator::new("t0", 1)];
    if let Some(l) = &sub {
        gens.extend(l.dual_names().iter().map(|n| Generator::new(n.clone(), 1)));
    }
    gens.push(Generator::new("b", 2));
    let sig = Signature::new(gens)?;
    let mut diff = vec![-Poly::named(&sig, "b")?];
    if let Some(l) = &sub {
        let ce = ce_of_lie(l)?;
        for p in ce.differentials() {
            diff.push(p.embed(&sig)?);
        }
    }
    diff.push(Poly::zero(&sig));
    DgcAlgebra::verified(format!("CE(u(1)->u({k}))"), sig, diff)
}

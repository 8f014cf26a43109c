//! Exact sparse Gaussian elimination.
//!
//! Vectors are sparse maps from coordinate index to nonzero value. Pivots are
//! always the first nonzero coordinate, so results are deterministic.

use std::collections::BTreeMap;


use crate::scalar::Scalar;

pub type SparseVec<S> = BTreeMap<usize, S>;

/// `v += c * w`, dropping cancelled entries.
pub fn axpy<S: Scalar>(v: &mut SparseVec<S>, c: &S, w: &SparseVec<S>) {
    for (k, x) in w {
        let add = c.clone() * x.clone();
        match v.get_mut(k) {
            Some(y) => {
                *y = y.clone() + add;
                if y.is_zero() {
                    v.remove(k);
                }
            }
            None => {
                if !add.is_zero() {
                    v.insert(*k, add);
                }
            }
        }
    }
}

pub fn scale<S: Scalar>(v: &SparseVec<S>, c: &S) -> SparseVec<S> {
    v.iter().map(|(k, x)| (*k, x.clone() * c.clone())).collect()
}

#[derive(Clone, Debug)]
struct Row<S> {
    vec: SparseVec<S>,
    tag: SparseVec<S>,
}

/// An incrementally built row-echelon basis. Each row carries a tag vector
/// recording the combination of inserted inputs it came from.
#[derive(Clone, Debug, Default)]
pub struct Echelon<S> {
    rows: Vec<Row<S>>,
    pivots: BTreeMap<usize, usize>,
}

impl<S: Scalar> Echelon<S> {
    pub fn new() -> Self {
        Echelon { rows: Vec::new(), pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `(v, tag)` against the rows; the returned vector has no entry
    /// on any pivot column and `tag` is updated by the same operations.
    pub fn reduce(&self, mut v: SparseVec<S>, mut tag: SparseVec<S>) -> (SparseVec<S>, SparseVec<S>) {
        let mut cursor = 0usize;
        loop {
            let next = v
                .range(cursor..)
                .find(|(k, _)| self.pivots.contains_key(k))
                .map(|(k, x)| (*k, x.clone()));
            let Some((col, c)) = next else { break };
            let row = &self.rows[self.pivots[&col]];
            let neg = -c;
            axpy(&mut v, &neg, &row.vec);
            axpy(&mut tag, &neg, &row.tag);
            cursor = col + 1;
        }
        (v, tag)
    }

    /// Inserts a vector; returns `Err(tag)` with the dependency relation if it
    /// reduces to zero, otherwise the new pivot column.
    pub fn insert(&mut self, v: SparseVec<S>, tag: SparseVec<S>) -> Result<usize, SparseVec<S>> {
        let (v, tag) = self.reduce(v, tag);
        let Some((&p, lead)) = v.iter().next() else {
            return Err(tag);
        };
        let inv = S::one() / lead.clone();
        let row = Row { vec: scale(&v, &inv), tag: scale(&tag, &inv) };
        self.pivots.insert(p, self.rows.len());
        self.rows.push(row);
        Ok(p)
    }

    pub fn contains(&self, v: &SparseVec<S>) -> bool {
        self.reduce(v.clone(), SparseVec::new()).0.is_empty()
    }
}

/// Basis of the kernel of the map sending input `j` to `images[j]`, as
/// coefficient vectors over the inputs.
pub fn kernel<S: Scalar>(images: &[SparseVec<S>]) -> Vec<SparseVec<S>> {
    let mut ech = Echelon::new();
    let mut out = Vec::new();
    for (j, w) in images.iter().enumerate() {
        let tag = SparseVec::from([(j, S::one())]);
        if let Err(rel) = ech.insert(w.clone(), tag) {
            out.push(rel);
        }
    }
    out
}

/// Rank of a set of vectors.
pub fn rank<S: Scalar>(vectors: &[SparseVec<S>]) -> usize {
    let mut ech = Echelon::new();
    for v in vectors {
        let _ = ech.insert(v.clone(), SparseVec::new());
    }
    ech.rank()
}

/// Some `x` with `Σ x_j columns[j] = target`, or `None` if inconsistent.
pub fn solve<S: Scalar>(columns: &[SparseVec<S>], target: &SparseVec<S>) -> Option<SparseVec<S>> {
    let mut ech = Echelon::new();
    for (j, w) in columns.iter().enumerate() {
        let _ = ech.insert(w.clone(), SparseVec::from([(j, S::one())]));
    }
    let (res, tag) = ech.reduce(target.clone(), SparseVec::new());
    res.is_empty().then(|| scale(&tag, &-S::one()))
}

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A generator of a free graded-commutative algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: usize,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: usize) -> Self {
        Generator { name: name.into(), degree }
    }

    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

/// An ordered generator set. Declaration order is the canonical order used
/// for normal forms.
#[derive(Debug, Clone)]
pub struct Signature {
    gens: Vec<Generator>,
    index: HashMap<String, usize>,
}

impl PartialEq for Signature {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for Signature {}

impl Signature {
    /// Builds a signature, rejecting duplicate names.
    pub fn new(gens: Vec<Generator>) -> Result<Arc<Self>> {
        let mut index = HashMap::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            if g.name.is_empty() {
                return Err(Error::InvalidArgument("empty generator name".into()));
            }
            if index.insert(g.name.clone(), i).is_some() {
                return Err(Error::NameCollision(g.name.clone()));
            }
        }
        Ok(Arc::new(Signature { gens, index }))
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn get(&self, i: usize) -> &Generator {
        &self.gens[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.gens[i].degree
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.gens[i].degree % 2 == 1
    }

    pub fn name(&self, i: usize) -> &str {
        &self.gens[i].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Index map sending each generator of `self` to the same-named generator
    /// of `target`, with matching degree.
    pub fn name_map(&self, target: &Signature) -> Result<Vec<usize>> {
        self.gens
            .iter()
            .map(|g| {
                let j = target.require(&g.name)?;
                if target.degree(j) != g.degree {
                    return Err(Error::DegreeMismatch {
                        what: g.name.clone(),
                        expected: g.degree as i64,
                        found: target.degree(j) as i64,
                    });
                }
                Ok(j)
            })
            .collect()
    }

    /// Whether `self` consists of the first generators of `other`.
    pub fn is_prefix_of(&self, other: &Signature) -> bool {
        other.gens.len() >= self.gens.len() && other.gens[..self.gens.len()] == self.gens[..]
    }
}

/// Pointer-or-content equality for shared signatures.
pub fn same_signature(a: &Arc<Signature>, b: &Arc<Signature>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

//! Free graded-commutative algebras, graded derivations and dg-algebras.

mod algebra;
mod derivation;
mod hom;
mod map;
mod monomial;
mod poly;
mod signature;
mod term_limit;

pub use algebra::{graded_component_basis, DgcAlgebra};
pub use derivation::{partial_derivative, Derivation};
pub use hom::Substitution;
pub use map::AlgebraMap;
pub use monomial::Monomial;
pub use poly::{times, Poly};
pub use signature::{same_signature, Generator, Signature};
pub use term_limit::{set_term_limit, term_limit, TermLimitExceeded, DEFAULT_TERM_LIMIT};


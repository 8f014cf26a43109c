//! Exact computations with L∞-algebras presented by their Chevalley–Eilenberg
//! dg-algebras: Weil algebras, invariant polynomials, transgression, weak
//! cokernel cones, representations, twisted differential forms and
//! characteristic-class arithmetic.
//!
//! All algorithms are generic over a [`scalar::Scalar`] field. The aliases at
//! the crate root fix the exact rational field used by the command line tool
//! and the acceptance checks.

pub mod charclass;
pub mod cohomology;
pub mod constructions;
pub mod error;
pub mod gca;
pub mod lie;
pub mod linalg;
pub mod reps;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;
pub type Poly = gca::Poly<Rational>;
pub type Algebra = gca::DgcAlgebra<Rational>;
pub type Map = gca::AlgebraMap<Rational>;
pub type LieData = lie::LieData<Rational>;
pub type WeilAlgebra = constructions::WeilAlgebra<Rational>;
pub type Transgression = constructions::Transgression<Rational>;
pub type CharPoly = charclass::CharPoly<Rational>;

/// Rational `n / d`.
pub fn q(n: i64, d: i64) -> Rational {
    scalar::ratio(n, d)
}

//! Coefficient fields.
//!
//! Every algebraic routine is generic over [`Scalar`]. Exactness guarantees
//! (nilpotency, chain-map and transgression checks) only hold for exact fields
//! such as [`num_rational::BigRational`]; floating point scalars are accepted
//! for exploratory use where every structure constant is a small integer.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// A field of characteristic zero usable as a coefficient ring.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + PartialEq + Num + Neg<Output = T> + FromPrimitive + Send + Sync + 'static
{
}

/// The scalar `n / d`.
///
/// Panics if `d == 0`.
pub fn ratio<S: Scalar>(n: i64, d: i64) -> S {
    assert!(d != 0, "zero denominator");
    S::from_i64(n).expect("integer embeds") / S::from_i64(d).expect("integer embeds")
}

/// The scalar `n`.
pub fn int<S: Scalar>(n: i64) -> S {
    S::from_i64(n).expect("integer embeds")
}

/// `(-1)^k` as a scalar.
pub fn sign<S: Scalar>(odd: bool) -> S {
    if odd {
        -S::one()
    } else {
        S::one()
    }
}

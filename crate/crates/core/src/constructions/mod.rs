//! Constructions on dg-algebras: Weil algebras, invariant polynomials,
//! transgression, string-like extensions, weak cokernel cones, opposites and
//! direct sums.

mod cone;
mod extension;
mod transgression;
mod weil;

pub use cone::{weak_cokernel_cone, weak_cokernel_cone_layers, ConeComponent, ConeLayer, WeakCokernelCone};
pub use extension::{direct_sum, opposite_algebra, opposite_morphism, string_like_extension, string_like_extension_in_degree};
pub use transgression::{align_transgression, transgress, transgression_for, Transgression};
pub use weil::{basic_elements, ce_restriction, weil_algebra, BasicElements, ShiftMap, WeilAlgebra};

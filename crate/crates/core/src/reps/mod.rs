//! Representations up to homotopy, connection presets with their derived
//! Bianchi identities, and twisted de Rham checks.

mod connection;
mod presets;
mod rep;
mod section;
mod twisted;

pub use connection::{Boxed, ConnectionPreset, Label, Relation, RelationSet};
pub use presets::{derive_twisted_bianchi, preset, rep_preset, PresetOptions, PRESETS};
pub use section::section_covariant_derivative;
pub use rep::{
    adjoint_rep, matrix_rep, rep_algebra, rep_residuals, rep_weil, standard_rep_published_table, standard_rep_shifted_u1, RepData,
    TableClaim,
};
pub use twisted::{
    twisted_chern_character_check, twisted_de_rham_check, ChernCharacterReport, TwistedDeRhamReport,
};

//! Formal intersection theory with rational coefficients.
//!
//! Classes live in a truncated graded polynomial ring on named generators;
//! a model supplies the degree of each top-codimension monomial. Chern
//! classes, Chern characters and Todd classes are converted through the
//! universal formulas up to codimension 4.

mod bundle;
mod model;
mod ring;

pub use bundle::{
    c_from_ch, ch_components, ch_from_c, ch_total, chern_difference, todd_from_c, whitney_solve,
    BundleClass,
};
pub use model::{
    canonical_class_replay, chi_polynomial, degeneracy_value, derive_section8, grr_push,
    hirzebruch_chi, hrr_chi, thom_porteous_table, CanonicalReplay, EmbeddingModel, Relation,
    Section8, VarietyModel,
};
pub use ring::{rat, ratio, ClassRing, FormalClass};

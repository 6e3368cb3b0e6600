//! Vertex-degree-based invariants of digraphs.
//!
//! An invariant weighs every arc `uv` by `phi(out(u), in(v))` and takes half
//! the total. This crate evaluates such invariants, builds the digraph
//! families that attain their extremal values, checks when the extremal
//! theorems apply, and confirms every bound by exhaustive search over all
//! small digraphs without isolated vertices.

pub mod catalog;
pub mod digraph;
pub mod error;
pub mod families;
pub mod index;
pub mod oracle;
pub mod phi;
pub mod sample;
pub mod spectrum;
pub mod theorems;

pub use catalog::{catalog_for, corollary_catalog, BoundStatement, EqualityClass};
pub use digraph::{mask_hex, Digraph};
pub use error::{Error, Result};
pub use families::{family_index, star_orientations, FamilyId, FamilyKind};
pub use index::{doubled_integer_index, graph_index, index_arc_sum, index_spectrum_sum};
pub use oracle::{
    extremal_search, verify_all, verify_bound, ExtremalReport, Extremum, SearchOptions,
    VerificationOutcome,
};
pub use phi::{Family, PhiSpec};
pub use spectrum::{classify_condition, degree_spectrum, Condition, DegreeSpectrum};
pub use theorems::{
    bound_value, check_hypothesis, minimal_n, threshold_l, threshold_m, HypothesisReport, Side,
    Theorem, TheoremCase,
};

//! Minimum-arc critical digraphs: canonical forms, closed-form counts and
//! exhaustive search.

pub mod canonical;
pub mod formulas;
pub mod search;

pub use canonical::{canonical_form, CanonicalForm};
pub use formulas::{bound_checks, ext_formula_digraph, ext_formula_graph, BoundReport};
pub use search::{
    compute_ext, enumerate_critical, verify_extremal_family, Enumeration, ExtremalFamilyVerdict,
    ExtremalSearchResult, SearchOptions,
};

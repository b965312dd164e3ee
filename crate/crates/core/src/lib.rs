//! Exact tools for the dichromatic number and critical digraphs.
//!
//! The crate is organised bottom-up:
//!
//! - [`digraph`]: dense bitset digraphs and undirected graphs, plus the
//!   arclist / adjacency-matrix text formats in [`io`].
//! - [`coloring`]: acyclic colorings, the exact branching solver and a
//!   brute-force oracle.
//! - [`criticality`]: `k`-criticality certificates and the basic necessary
//!   conditions every critical digraph satisfies.
//! - [`constructions`]: Dirac and Hajós joins, Dirac–Gallai digraphs and
//!   the extremal family.
//! - [`decomposition`]: complement components, dominating vertices and
//!   dominating directed cycles.
//! - [`extremal`]: canonical forms, closed-form arc counts and the
//!   isomorphism-reduced exhaustive search for minimum-arc critical digraphs.

pub mod bits;
pub mod coloring;
pub mod constructions;
pub mod criticality;
pub mod decomposition;
pub mod digraph;
mod error;
pub mod extremal;
pub mod io;

pub use coloring::{
    brute_force_dichromatic, chromatic_number, dichromatic_number, exists_acyclic_k_coloring,
    is_acyclic_coloring, Coloring, SolveOutcome,
};
pub use criticality::{is_k_critical, CriticalityCertificate};
pub use digraph::{Arc, Digraph, Graph, VertexMap, MAX_ORDER};
pub use error::{Error, Result};
pub use extremal::{canonical_form, CanonicalForm, ExtremalSearchResult};

/// Version tag written into every JSON document this crate produces.
pub const SCHEMA: &str = "dicrit/1";

//! Total co-independent domination on trees.
//!
//! A set `D` of vertices is a *total co-independent dominating set* when every
//! vertex has a neighbor in `D`, and `V \ D` is a non-empty independent set.
//! Its minimum size is written `γ_t,coi`. For trees of diameter at least three
//! it is sandwiched between `n - β` and `n - |L|`.
//!
//! This crate is `no_std` (it needs `alloc`). It provides:
//!
//! * [`Tree`] with edge-list and graph6 text formats, structural vertex
//!   classes and canonical codes,
//! * exact tree dynamic programs for `β`, `γ_t` and `γ_t,coi` with
//!   lexicographically smallest witnesses, plus a bitmask brute-force oracle,
//! * the four attach operations and the extremal families,
//! * membership tests for the lower- and upper-bound families and a
//!   certificate machinery that decomposes lower-bound trees down to `P_4`,
//! * non-isomorphic tree enumeration and per-tree theorem checks.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod canon;
pub mod census;
pub mod characterize;
mod error;
pub mod format;
pub mod generators;
pub mod ops;
pub mod solvers;
pub mod structure;
mod tree;

pub use canon::{canonical_code, centers, is_isomorphic, CanonicalCode};
pub use error::{Error, NotATreeReason};
pub use structure::{diameter, distance, structure, StructureReport};
pub use tree::{Tree, Vertex, VertexSet};

pub type Result<T, E = Error> = core::result::Result<T, E>;

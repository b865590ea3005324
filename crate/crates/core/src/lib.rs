//! Cayley and bi-Cayley graphs over dihedral groups: constructions, explicit
//! isomorphisms and automorphisms, and decision procedures for
//! vertex-transitivity, arc-transitivity, Cayley-ness and normality.

pub mod analysis;
pub mod census;
pub mod constructions;
pub mod error;
pub mod graphs;
pub mod groups;
pub mod parse;
pub mod perms;
pub mod suites;
pub mod witnesses;

pub use error::{Error, Result};

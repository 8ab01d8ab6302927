//! Exact computation of boxicity, local boxicity, and union boxicity.
//!
//! A graph `h` is the intersection graph of axis-parallel boxes in `d`
//! dimensions iff the edge set of its complement can be covered by `d`
//! co-interval graphs. This crate works on that covering side: it
//! recognizes interval and co-interval graphs, searches for minimum covers
//! under two bag classes and two cost measures (bag count and per-vertex
//! load), converts covers to and from geometric box representations and
//! folded covers, and verifies every certificate independently of the
//! search that produced it.
//!
//! The narrative guide lives in `book/`; its code snippets are compiled as
//! doc-tests through the `guide` module, so the book and the library
//! cannot drift apart silently.

pub mod acyclic;
pub mod boxes;
pub mod certificate;
pub mod cover;
pub mod error;
pub mod families;
pub mod folded;
pub mod graph;
pub mod graph6;
pub mod interval;
pub mod solver;

#[cfg(doctest)]
mod guide;

pub use cover::{CoCover, CoverClass, CoverStats};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};

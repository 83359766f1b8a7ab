//! d2tk: a toolkit for 2-distance coloring of plane graphs.
//!
//! The crate works with simple connected plane graphs given as rotation
//! systems and provides:
//!
//! - [`planegraph`]: the graph representation, face derivation, and the
//!   delete-plus-chords surgery primitive;
//! - [`rotg`]: the ROTG text format;
//! - [`analysis`]: per-vertex statistics (face incidences, second
//!   neighborhoods, vertex classes) and the square graph;
//! - [`catalog`]: detectors for reducible configurations at maximum degree
//!   6, 7 and 8, with machine-checked reducibility certificates;
//! - [`discharge`]: exact rational charge ledgers and the three
//!   discharging rule sets;
//! - [`color`]: constructive, exact and greedy 2-distance colorers plus a
//!   validity checker;
//! - [`gen`]: deterministic fixtures and random plane-graph generation.

pub mod analysis;
pub mod catalog;
pub mod color;
pub mod discharge;
pub mod gen;
pub mod planegraph;
pub mod rotg;

pub use planegraph::{FaceRecord, PlaneGraph, Surgery, SurgeryOutcome, VertexId};

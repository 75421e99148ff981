//! Edge-colored graph encodings ("gems") of compact PL manifolds.
//!
//! The crate covers the colored-graph model and its text format, residue
//! censuses and the boundary graph, the face vector of the induced complex,
//! regular-genus and complexity machinery, the standard constructions
//! (double, 1-dipole removal, connected sums, interval product), an identity
//! harness and a small catalog of example crystallizations.
//!
//! Vertices are 0-based throughout the API. The GEM text format and error
//! messages use 1-based vertex numbers.

pub mod boundary;
pub mod catalog;
pub mod census;
pub mod colors;
pub mod constructions;
pub mod error;
pub mod faces;
pub mod format;
pub mod graph;
pub mod invariants;
pub mod validate;
pub mod verify;

pub use boundary::{boundary_graph, BoundaryGraph};
pub use census::{census, residue_components, BoundaryCensus, Residue, ResidueCensus};
pub use colors::ColorSet;
pub use error::{GemError, Result};
pub use faces::{face_vector, FaceVector};
pub use format::{parse_gem, write_gem};
pub use graph::{ColoredGraph, VertexTally, MAX_DIM};
pub use validate::{is_bipartite, is_connected, is_contracted, validate, Crystallization, ValidationReport};

/// Exact rational used for genus values.
pub type Ratio = num_rational::Ratio<i64>;

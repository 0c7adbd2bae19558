//! Exact χ, Γ and ψ for small graphs, the extremal constructions realizing
//! prescribed triples, and exhaustive verification by enumerating connected
//! graphs up to isomorphism.

pub mod canon;
pub mod coloring;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod suite;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling, CanonicalForm};
pub use coloring::{Coloring, InvariantReport};
pub use constructions::{LVariant, Triple};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use graph6::{parse_graph6, write_graph6};

//! Coloring ideals and coloring complexes of labeled simple graphs.
//!
//! The crate computes permutation cut statistics and the W-polynomial of a
//! graph, the coloring ideal in the face ring of the Boolean order complex
//! (with its monomial ↔ coloring codec), and the coloring complex with its
//! facets, edge-spheres, f- and h-vectors and Euler characteristic. Every
//! identity between these objects has an independent brute-force oracle in
//! [`graph`].

pub mod complex;
pub mod config;
pub mod cuts;
pub mod error;
mod exec;
pub mod graph;
pub mod ideal;
pub mod json;
pub mod poly;
pub mod poly_lab;
pub mod verify;

pub use config::{Config, Execution, Limits};
pub use error::{Error, Result};
pub use graph::{Coloring, Edge, Graph, VertexSet};
pub use poly::IntPolynomial;

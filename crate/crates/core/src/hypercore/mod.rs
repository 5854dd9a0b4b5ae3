//! Core representations: hypergraphs, multi-edge hypergraphs, incidence
//! graphs, simple graphs and permutations, and the `.hyg`/`.elg` text
//! formats.

mod graph;
mod hypergraph;
mod incidence;
pub mod io;
mod multi;
mod perm;

pub use graph::Graph;
pub use hypergraph::Hypergraph;
pub use incidence::IncidenceGraph;
pub use multi::MultiHypergraph;
pub use perm::Permutation;

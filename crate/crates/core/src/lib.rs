//! Linear, uniform, regular hypergraphs of high Berge girth.
//!
//! The crate is organised around a small set of immutable representations
//! ([`Hypergraph`], [`MultiHypergraph`], [`Permutation`]) and pure functions
//! over them:
//!
//! * [`girth`]: exact Berge girth, distances, diameter and cycle counting,
//!   plus an exhaustive oracle used for cross-validation.
//! * [`bounds`]: Moore-type lower bounds on vertex counts and the log-scale
//!   girth bounds that follow from them.
//! * [`constructions`]: grid hypergraphs, random 2-covers and the
//!   girth-boosting lift, vertex-removal surgery, and two graph-derived
//!   constructions.
//! * [`randmodels`]: the configuration model and random Cayley hypergraphs
//!   on the symmetric group, with a seeded Monte Carlo harness.
//! * [`neg_girth`]: brute-force `(-k)`-girth of small 3-uniform hypergraphs.

pub mod bounds;
pub mod constructions;
mod error;
pub mod girth;
pub mod hypercore;
pub mod neg_girth;
pub mod randmodels;
pub mod seed;

pub use error::{Error, Result};
pub use hypercore::{Graph, Hypergraph, IncidenceGraph, MultiHypergraph, Permutation};

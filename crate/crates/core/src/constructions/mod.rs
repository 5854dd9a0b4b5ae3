//! Building high-girth hypergraphs: the grid base case, random 2-covers and
//! the girth-boosting lift, vertex-removal surgery, and constructions from
//! graphs.

mod cover;
mod graphs;
mod grid;
mod lift;
mod surgery;

pub use cover::{random_two_cover, trivial_cover, ClosedWalk, CoverMap, CycleLift};
pub use graphs::{bipartite_1_factorization, midpoint_construction, star_partition_construction};
pub use grid::{fano_plane, grid_hypergraph, GRID_MAX_VERTICES};
pub use lift::{lift_to_girth, LiftConfig, LiftOutcome, LiftRound};
pub use surgery::{find_scattered, surgery_minimize, surgery_step, SurgeryOutcome, SurgeryStep};

pub use crate::hypercore::Graph;

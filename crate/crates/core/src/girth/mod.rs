//! Berge girth, distances and cycle counts.
//!
//! A Berge cycle of length `l` in `H` is the same thing as a simple cycle of
//! length `2l` in the incidence graph of `H`, and a shortest `u`-`v` edge
//! sequence is a shortest `u`-`v` path there. Everything in this module
//! except [`berge_girth_oracle`] works on the incidence graph.

mod count;
mod oracle;
mod search;

pub use count::{count_cycles, count_cycles_with_budget, DEFAULT_COUNT_BUDGET};
pub use oracle::{berge_girth_oracle, DEFAULT_ORACLE_BUDGET};
pub use search::{berge_girth, diameter, distance, shortest_path};

use std::collections::HashSet;
use std::fmt;

use crate::Hypergraph;

/// Outcome of a girth search.
///
/// `AtLeast(c)` means no cycle shorter than `c` exists; it is returned when
/// the search was capped at `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
    AtLeast(usize),
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            _ => None,
        }
    }

    /// True if the girth is certainly at least `g`.
    pub fn at_least(self, g: usize) -> bool {
        match self {
            Girth::Finite(l) => l >= g,
            Girth::Infinite => true,
            Girth::AtLeast(c) => c >= g,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
            Girth::AtLeast(c) => write!(f, ">={c}"),
        }
    }
}

/// A Berge cycle: distinct edges `e_1..e_l` and distinct vertices
/// `v_1..v_l` with `v_i` in both `e_i` and `e_{i+1}` (indices mod `l`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleWitness {
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GirthResult {
    pub girth: Girth,
    /// Present iff `girth` is finite.
    pub witness: Option<CycleWitness>,
}

impl GirthResult {
    pub(crate) fn unbounded(girth: Girth) -> Self {
        Self { girth, witness: None }
    }
}

pub fn validate_cycle(h: &Hypergraph, w: &CycleWitness) -> bool {
    let l = w.edges.len();
    if l < 2 || w.vertices.len() != l {
        return false;
    }
    if w.edges.iter().any(|&e| e >= h.m()) || w.vertices.iter().any(|&v| v >= h.n()) {
        return false;
    }
    let distinct_edges: HashSet<_> = w.edges.iter().collect();
    let distinct_vertices: HashSet<_> = w.vertices.iter().collect();
    if distinct_edges.len() != l || distinct_vertices.len() != l {
        return false;
    }
    (0..l).all(|i| {
        let v = w.vertices[i];
        h.contains(w.edges[i], v) && h.contains(w.edges[(i + 1) % l], v)
    })
}

/// True if `edges` is a `u`-`v` path: distinct edges, `u` in the first,
/// `v` in the last, consecutive edges meet and non-consecutive ones are
/// disjoint.
pub fn is_geodesic_path(h: &Hypergraph, u: usize, v: usize, edges: &[usize]) -> bool {
    let (Some(&first), Some(&last)) = (edges.first(), edges.last()) else {
        return false;
    };
    if !h.contains(first, u) || !h.contains(last, v) {
        return false;
    }
    let meets = |a: usize, b: usize| h.edge(a).iter().any(|&x| h.contains(b, x));
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if edges[i] == edges[j] || meets(edges[i], edges[j]) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{fano_plane, grid_hypergraph};

    #[test]
    fn validate_examples() {
        let h = Hypergraph::new(4, [[0, 1, 2], [1, 2, 3]]).unwrap();
        assert!(validate_cycle(&h, &CycleWitness { edges: vec![0, 1], vertices: vec![1, 2] }));
        assert!(!validate_cycle(&h, &CycleWitness { edges: vec![0, 1], vertices: vec![1, 1] }));
        assert!(!validate_cycle(&h, &CycleWitness { edges: vec![0], vertices: vec![1] }));
        assert!(!validate_cycle(&h, &CycleWitness { edges: vec![0, 0], vertices: vec![1, 2] }));
        assert!(!validate_cycle(&h, &CycleWitness { edges: vec![0, 1], vertices: vec![0, 1] }));

        let g = grid_hypergraph(3, 2).unwrap();
        let row0 = g.edges().iter().position(|e| e == &[0, 1, 2]).unwrap();
        let row1 = g.edges().iter().position(|e| e == &[3, 4, 5]).unwrap();
        let col0 = g.edges().iter().position(|e| e == &[0, 3, 6]).unwrap();
        let col1 = g.edges().iter().position(|e| e == &[1, 4, 7]).unwrap();
        let w = CycleWitness { edges: vec![row0, col0, row1, col1], vertices: vec![0, 3, 4, 1] };
        assert!(validate_cycle(&g, &w));
    }

    #[test]
    fn geodesic_check() {
        let h = Hypergraph::new(7, [[0, 1, 2], [2, 3, 4], [4, 5, 6]]).unwrap();
        assert!(is_geodesic_path(&h, 0, 6, &[0, 1, 2]));
        assert!(!is_geodesic_path(&h, 0, 6, &[0, 2]));
        let f = fano_plane();
        assert!(!is_geodesic_path(&f, 1, 3, &[0, 1]) || f.contains(1, 3));
    }
}

use std::collections::BTreeSet;

use crate::hypercore::Hypergraph;
use crate::{Error, Result};

/// Hypergraph whose edges are multisets, with repeated edges allowed.
///
/// This is the raw output of the configuration model before conditioning on
/// simplicity and linearity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiHypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

/// Shortest degenerate structure present in a multi-hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    /// An edge contains some vertex more than once (a length-1 cycle).
    Loop { edge: usize },
    /// Two edges share two or more points, counted with multiplicity
    /// (a length-2 cycle; covers repeated edges).
    Double { first: usize, second: usize },
}

impl MultiHypergraph {
    pub fn new(n: usize, raw_edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut edges = raw_edges;
        for (idx, edge) in edges.iter_mut().enumerate() {
            if edge.is_empty() {
                return Err(Error::EmptyEdge { edge: idx });
            }
            if let Some(&vertex) = edge.iter().find(|&&v| v >= n) {
                return Err(Error::IndexOutOfRange { vertex, n });
            }
            edge.sort_unstable();
        }
        Ok(Self { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Total multiplicity of each vertex over all edges.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for edge in &self.edges {
            for &v in edge {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Loops take precedence over doubles; among doubles the pair with the
    /// smallest `(first, second)` is reported.
    pub fn degeneracy(&self) -> Option<Degeneracy> {
        if let Some(edge) = self.edges.iter().position(|e| e.windows(2).any(|w| w[0] == w[1])) {
            return Some(Degeneracy::Loop { edge });
        }
        let mut incident = vec![Vec::new(); self.n];
        for (e, edge) in self.edges.iter().enumerate() {
            for &v in edge {
                incident[v].push(e);
            }
        }
        let mut doubles = BTreeSet::new();
        let mut seen = BTreeSet::new();
        for inc in &incident {
            for (i, &e) in inc.iter().enumerate() {
                for &f in &inc[i + 1..] {
                    if !seen.insert((e, f)) {
                        doubles.insert((e, f));
                    }
                }
            }
        }
        doubles.first().map(|&(first, second)| Degeneracy::Double { first, second })
    }

    /// True iff there is no loop and no pair of edges sharing two points,
    /// i.e. the multi-hypergraph is a simple linear hypergraph.
    pub fn is_linear_simple(&self) -> bool {
        self.degeneracy().is_none()
    }

    /// Converts to a [`Hypergraph`]; fails on loops or repeated edges.
    pub fn to_hypergraph(&self) -> Result<Hypergraph> {
        Hypergraph::new(self.n, self.edges.clone())
    }
}

impl From<&Hypergraph> for MultiHypergraph {
    fn from(h: &Hypergraph) -> Self {
        Self { n: h.n(), edges: h.edges().to_vec() }
    }
}

use std::collections::HashMap;

use crate::hypercore::IncidenceGraph;
use crate::{Error, Result};

/// A finite hypergraph on vertices `0..n` with pairwise distinct edges.
///
/// Edges are stored as strictly increasing vertex lists. The per-vertex
/// incidence index is built once at construction; the value is immutable
/// afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    incidence: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Canonicalises `raw_edges` (each edge is sorted) and validates them.
    pub fn new<E, I>(n: usize, raw_edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let mut edges = Vec::new();
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
        for (idx, raw) in raw_edges.into_iter().enumerate() {
            let mut edge: Vec<usize> = raw.into_iter().collect();
            if edge.is_empty() {
                return Err(Error::EmptyEdge { edge: idx });
            }
            edge.sort_unstable();
            if let Some(&vertex) = edge.iter().find(|&&v| v >= n) {
                return Err(Error::IndexOutOfRange { vertex, n });
            }
            if let Some(w) = edge.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVertexInEdge { edge: idx, vertex: w[0] });
            }
            if let Some(&first) = seen.get(&edge) {
                return Err(Error::DuplicateEdge { edge: idx, first });
            }
            seen.insert(edge.clone(), idx);
            edges.push(edge);
        }
        let mut incidence = vec![Vec::new(); n];
        for (e, edge) in edges.iter().enumerate() {
            for &v in edge {
                incidence[v].push(e);
            }
        }
        Ok(Self { n, edges, incidence })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new(), incidence: vec![Vec::new(); n] }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &[usize] {
        &self.edges[e]
    }

    /// Indices of the edges containing `v`, ascending.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn contains(&self, e: usize, v: usize) -> bool {
        self.edges[e].binary_search(&v).is_ok()
    }

    /// Common uniformity, if every edge has the same size.
    pub fn uniformity(&self) -> Option<usize> {
        let r = self.edges.first()?.len();
        self.is_uniform(r).then_some(r)
    }

    /// Common degree, if every vertex has the same degree.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.incidence.first()?.len();
        self.is_regular(d).then_some(d)
    }

    pub fn is_uniform(&self, r: usize) -> bool {
        self.edges.iter().all(|e| e.len() == r)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.incidence.iter().all(|inc| inc.len() == d)
    }

    /// True iff any two distinct edges share at most one vertex.
    pub fn is_linear(&self) -> bool {
        self.nonlinear_pair().is_none()
    }

    /// First pair of edges (in index order of the shared vertex scan)
    /// sharing two or more vertices.
    pub fn nonlinear_pair(&self) -> Option<(usize, usize)> {
        let mut last_shared: HashMap<(usize, usize), usize> = HashMap::new();
        for (v, inc) in self.incidence.iter().enumerate() {
            for (i, &e) in inc.iter().enumerate() {
                for &f in &inc[i + 1..] {
                    if last_shared.insert((e, f), v).is_some() {
                        return Some((e, f));
                    }
                }
            }
        }
        None
    }

    pub fn incidence_graph(&self) -> IncidenceGraph {
        IncidenceGraph::new(self)
    }

    /// Sum of edge sizes, i.e. the number of vertex-edge incidences.
    pub fn links(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }
}

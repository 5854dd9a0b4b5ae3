use std::collections::{HashSet, VecDeque};

use crate::{Error, Result};

/// Simple undirected graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edges are normalised to `u < v` and kept in input order.
    pub fn new(n: usize, raw_edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut edges = Vec::new();
        let mut seen = HashSet::new();
        let mut adj = vec![Vec::new(); n];
        for (idx, (a, b)) in raw_edges.into_iter().enumerate() {
            let (u, v) = (a.min(b), a.max(b));
            if v >= n {
                return Err(Error::IndexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::RepeatedVertexInEdge { edge: idx, vertex: u });
            }
            if !seen.insert((u, v)) {
                let first = edges.iter().position(|&e| e == (u, v)).unwrap_or(0);
                return Err(Error::DuplicateEdge { edge: idx, first });
            }
            adj[u].push(v);
            adj[v].push(u);
            edges.push((u, v));
        }
        Ok(Self { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Common degree, if the graph is regular and non-empty.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    /// Two-colouring (`false` = first side). Each component's least vertex
    /// gets `false`. `None` if some component has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for root in 0..self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    /// Length of the shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.fill(usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, edges).expect("complete graph")
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Self::new(a + b, edges).expect("complete bipartite graph")
    }

    pub fn cycle(n: usize) -> Self {
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle graph")
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        Self::new(10, outer.chain(inner).chain(spokes)).expect("Petersen graph")
    }

    /// Incidence graph of the Fano plane: 14 vertices, cubic, girth 6.
    pub fn heawood() -> Self {
        // the 14-cycle with chords i -- i+5 for even i
        let ring = (0..14).map(|i| (i, (i + 1) % 14));
        let chords = (0..14).step_by(2).map(|i| (i, (i + 5) % 14));
        Self::new(14, ring.chain(chords)).expect("Heawood graph")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(Graph::complete(4).girth(), Some(3));
        assert_eq!(Graph::complete_bipartite(3, 3).girth(), Some(4));
        assert_eq!(Graph::petersen().girth(), Some(5));
        assert_eq!(Graph::petersen().regularity(), Some(3));
        assert_eq!(Graph::heawood().girth(), Some(6));
        assert_eq!(Graph::heawood().regularity(), Some(3));
        assert!(Graph::heawood().bipartition().is_some());
        assert!(Graph::petersen().bipartition().is_none());
        assert_eq!(Graph::cycle(8).girth(), Some(8));
        let path = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.girth(), None);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Graph::new(3, [(0, 0)]), Err(Error::RepeatedVertexInEdge { .. })));
        assert!(matches!(Graph::new(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge { .. })));
        assert!(matches!(Graph::new(3, [(0, 3)]), Err(Error::IndexOutOfRange { .. })));
    }
}

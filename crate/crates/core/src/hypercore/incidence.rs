use crate::hypercore::Hypergraph;

/// Bipartite vertex/edge incidence graph of a hypergraph.
///
/// Nodes `0..n` are vertex-nodes and nodes `n..n+m` are edge-nodes; node
/// `n + e` stands for edge `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceGraph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
}

impl IncidenceGraph {
    pub fn new(h: &Hypergraph) -> Self {
        let (n, m) = (h.n(), h.m());
        let mut adj = vec![Vec::new(); n + m];
        for (e, edge) in h.edges().iter().enumerate() {
            for &v in edge {
                adj[v].push(n + e);
                adj[n + e].push(v);
            }
        }
        Self { n, m, adj }
    }

    pub fn vertex_nodes(&self) -> usize {
        self.n
    }

    pub fn edge_nodes(&self) -> usize {
        self.m
    }

    pub fn node_count(&self) -> usize {
        self.n + self.m
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adj[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adj[node].len()
    }

    pub fn is_edge_node(&self, node: usize) -> bool {
        node >= self.n
    }

    pub fn edge_node(&self, e: usize) -> usize {
        self.n + e
    }

    /// Edge index of an edge-node.
    pub fn edge_of(&self, node: usize) -> usize {
        node - self.n
    }

    pub fn link_count(&self) -> usize {
        self.adj[..self.n].iter().map(Vec::len).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_and_empty() {
        let h = Hypergraph::new(3, [[0, 1, 2]]).unwrap();
        let g = h.incidence_graph();
        assert_eq!(g.node_count(), 4);
        assert_eq!(g.degree(3), 3);
        assert!((0..3).all(|v| g.neighbors(v) == [3]));

        let g = Hypergraph::empty(5).incidence_graph();
        assert_eq!(g.node_count(), 5);
        assert!((0..5).all(|v| g.degree(v) == 0));
    }

    #[test]
    fn fano_is_cubic_bipartite() {
        let h = Hypergraph::new(
            7,
            [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]],
        )
        .unwrap();
        let g = h.incidence_graph();
        assert_eq!(g.node_count(), 14);
        for node in 0..14 {
            assert_eq!(g.degree(node), 3);
            assert!(g.neighbors(node).iter().all(|&w| g.is_edge_node(w) != g.is_edge_node(node)));
        }
        assert_eq!(g.link_count(), 21);
    }
}

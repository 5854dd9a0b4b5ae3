use super::{CycleWitness, Girth, GirthResult};
use crate::{Error, Hypergraph, Result};

pub const DEFAULT_ORACLE_BUDGET: u64 = 200_000_000;

struct Search<'a> {
    h: &'a Hypergraph,
    budget: u64,
    steps: u64,
    best: usize,
    witness: Option<CycleWitness>,
    edges: Vec<usize>,
    vertices: Vec<usize>,
    edge_used: Vec<bool>,
    vertex_used: Vec<bool>,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        Ok(())
    }

    /// Extends the current edge sequence through a vertex of its last edge,
    /// either closing back into the first edge or stepping to a new edge
    /// with a larger index than the first.
    fn extend(&mut self) -> Result<()> {
        let h = self.h;
        let start = self.edges[0];
        let current = *self.edges.last().unwrap();
        let depth = self.edges.len();
        for &v in h.edge(current) {
            if self.vertex_used[v] {
                continue;
            }
            self.tick()?;
            if depth >= 2 && depth < self.best && h.contains(start, v) {
                self.best = depth;
                let mut vertices = self.vertices.clone();
                vertices.push(v);
                self.witness = Some(CycleWitness { edges: self.edges.clone(), vertices });
            }
            if depth + 1 >= self.best {
                continue;
            }
            self.vertex_used[v] = true;
            self.vertices.push(v);
            for &f in h.incident(v) {
                if f <= start || self.edge_used[f] {
                    continue;
                }
                self.edge_used[f] = true;
                self.edges.push(f);
                self.extend()?;
                self.edges.pop();
                self.edge_used[f] = false;
                if depth + 1 >= self.best {
                    break;
                }
            }
            self.vertices.pop();
            self.vertex_used[v] = false;
        }
        Ok(())
    }
}

/// Exhaustive Berge-girth search by direct enumeration of edge sequences
/// and witness vertices, independent of the incidence-graph search.
///
/// Looks for cycles shorter than `cap`; every cycle is enumerated from its
/// least edge index. Same result contract as [`super::berge_girth`].
pub fn berge_girth_oracle(h: &Hypergraph, cap: usize, budget: u64) -> Result<GirthResult> {
    let mut search = Search {
        h,
        budget,
        steps: 0,
        best: cap,
        witness: None,
        edges: Vec::new(),
        vertices: Vec::new(),
        edge_used: vec![false; h.m()],
        vertex_used: vec![false; h.n()],
    };
    for start in 0..h.m() {
        search.edges.push(start);
        search.edge_used[start] = true;
        search.extend()?;
        search.edge_used[start] = false;
        search.edges.pop();
    }
    Ok(match search.witness {
        Some(w) => GirthResult { girth: Girth::Finite(w.len()), witness: Some(w) },
        None if h.m() == 0 || cap > h.n().min(h.m()) => GirthResult::unbounded(Girth::Infinite),
        None => GirthResult::unbounded(Girth::AtLeast(cap)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{fano_plane, grid_hypergraph};
    use crate::girth::validate_cycle;

    #[test]
    fn oracle_examples() {
        let f = fano_plane();
        let r = berge_girth_oracle(&f, 8, DEFAULT_ORACLE_BUDGET).unwrap();
        assert_eq!(r.girth, Girth::Finite(3));
        assert!(validate_cycle(&f, r.witness.as_ref().unwrap()));

        let g = grid_hypergraph(3, 2).unwrap();
        assert_eq!(berge_girth_oracle(&g, 8, DEFAULT_ORACLE_BUDGET).unwrap().girth, Girth::Finite(4));
        assert_eq!(berge_girth_oracle(&g, 4, DEFAULT_ORACLE_BUDGET).unwrap().girth, Girth::AtLeast(4));

        let single = Hypergraph::new(3, [[0, 1, 2]]).unwrap();
        assert_eq!(berge_girth_oracle(&single, 8, DEFAULT_ORACLE_BUDGET).unwrap().girth, Girth::Infinite);

        let overlap = Hypergraph::new(4, [[0, 1, 2], [1, 2, 3]]).unwrap();
        assert_eq!(berge_girth_oracle(&overlap, 8, DEFAULT_ORACLE_BUDGET).unwrap().girth, Girth::Finite(2));
    }

    #[test]
    fn budget_is_enforced() {
        let g = grid_hypergraph(3, 3).unwrap();
        assert_eq!(berge_girth_oracle(&g, 20, 10).unwrap_err(), Error::BudgetExceeded(10));
    }
}

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::{Error, Hypergraph, IncidenceGraph, Result};

pub const DEFAULT_COUNT_BUDGET: u64 = 500_000_000;

struct Walker<'a> {
    g: &'a IncidenceGraph,
    start: usize,
    target: usize,
    path: Vec<usize>,
    on_path: Vec<bool>,
    found: HashSet<Vec<usize>>,
    steps: u64,
}

impl Walker<'_> {
    fn walk(&mut self, spent: &AtomicU64, budget: u64) -> Result<()> {
        let u = *self.path.last().unwrap();
        for &w in self.g.neighbors(u) {
            self.steps += 1;
            if self.steps.is_multiple_of(4096) && spent.fetch_add(4096, Ordering::Relaxed) + 4096 > budget {
                return Err(Error::BudgetExceeded(budget));
            }
            if w == self.start && self.path.len() == self.target {
                let mut set = self.path.clone();
                set.sort_unstable();
                self.found.insert(set);
                continue;
            }
            if w <= self.start || self.on_path[w] || self.path.len() == self.target {
                continue;
            }
            self.on_path[w] = true;
            self.path.push(w);
            self.walk(spent, budget)?;
            self.path.pop();
            self.on_path[w] = false;
        }
        Ok(())
    }
}

/// Number of Berge `l`-cycles, counting each simple `2l`-cycle of the
/// incidence graph once by its node set.
pub fn count_cycles(h: &Hypergraph, l: usize) -> Result<u64> {
    count_cycles_with_budget(h, l, DEFAULT_COUNT_BUDGET)
}

pub fn count_cycles_with_budget(h: &Hypergraph, l: usize, budget: u64) -> Result<u64> {
    if l < 2 {
        return Err(Error::InvalidParams(format!("cycle length {l} < 2")));
    }
    let g = h.incidence_graph();
    let spent = AtomicU64::new(0);
    // node sets rooted at different least nodes are distinct, so the
    // per-root counts add up
    (0..g.node_count())
        .into_par_iter()
        .map(|start| {
            let mut walker = Walker {
                g: &g,
                start,
                target: 2 * l,
                path: vec![start],
                on_path: vec![false; g.node_count()],
                found: HashSet::new(),
                steps: 0,
            };
            walker.on_path[start] = true;
            walker.walk(&spent, budget)?;
            if spent.fetch_add(walker.steps % 4096, Ordering::Relaxed) + walker.steps % 4096 > budget {
                return Err(Error::BudgetExceeded(budget));
            }
            Ok(walker.found.len() as u64)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{fano_plane, grid_hypergraph};

    #[test]
    fn count_examples() {
        let overlap = Hypergraph::new(4, [[0, 1, 2], [1, 2, 3]]).unwrap();
        assert_eq!(count_cycles(&overlap, 2).unwrap(), 1);
        let g = grid_hypergraph(3, 2).unwrap();
        assert_eq!(count_cycles(&g, 4).unwrap(), 9);
        assert_eq!(count_cycles(&g, 3).unwrap(), 0);
        assert_eq!(count_cycles(&fano_plane(), 2).unwrap(), 0);
        // 28 triangles: any 3 non-concurrent lines, C(7,3) - 7
        assert_eq!(count_cycles(&fano_plane(), 3).unwrap(), 28);
        assert!(count_cycles(&g, 1).is_err());
        assert_eq!(count_cycles_with_budget(&g, 6, 100).unwrap_err(), Error::BudgetExceeded(100));
    }
}

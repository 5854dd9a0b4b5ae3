use std::collections::VecDeque;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::{CycleWitness, Girth, GirthResult};
use crate::{Hypergraph, IncidenceGraph};

const UNSEEN: usize = usize::MAX;

/// Result of one breadth-first search from an edge-node.
struct RootScan {
    /// Shortest closing value found (in incidence-graph nodes), with the
    /// non-tree link that produced it.
    best: Option<(usize, usize, usize)>,
    saw_non_tree: bool,
    cut: bool,
}

/// Breadth-first search from `root`, looking for non-tree links that close
/// cycles of fewer than `limit` incidence nodes. Stops once no shorter
/// cycle is possible, or the depth exceeds `shared` (a global best that only
/// prunes; ties with it are still found).
fn scan_root(
    g: &IncidenceGraph,
    root: usize,
    limit: usize,
    shared: &AtomicUsize,
    dist: &mut [usize],
    parent: &mut [usize],
    touched: &mut Vec<usize>,
) -> RootScan {
    for &x in touched.iter() {
        dist[x] = UNSEEN;
    }
    touched.clear();
    dist[root] = 0;
    parent[root] = UNSEEN;
    touched.push(root);
    let mut queue = VecDeque::from([root]);
    let mut local = limit;
    let mut scan = RootScan { best: None, saw_non_tree: false, cut: false };
    while let Some(u) = queue.pop_front() {
        if 2 * dist[u] >= local || 2 * dist[u] > shared.load(Ordering::Relaxed) {
            scan.cut = true;
            break;
        }
        for &w in g.neighbors(u) {
            if dist[w] == UNSEEN {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                touched.push(w);
                queue.push_back(w);
            } else if parent[u] != w {
                scan.saw_non_tree = true;
                let value = dist[u] + dist[w] + 1;
                if value < local {
                    local = value;
                    scan.best = Some((value, u, w));
                    shared.fetch_min(value, Ordering::Relaxed);
                }
            }
        }
    }
    scan
}

fn tree_path(parent: &[usize], mut x: usize) -> Vec<usize> {
    let mut path = vec![x];
    while parent[x] != UNSEEN {
        x = parent[x];
        path.push(x);
    }
    path.reverse();
    path
}

/// Turns the closed walk `root -> .. -> u, w -> .. -> root` into a witness.
/// At the minimising root the two tree paths meet only at the root.
fn witness_from(g: &IncidenceGraph, parent: &[usize], u: usize, w: usize) -> CycleWitness {
    let mut nodes = tree_path(parent, u);
    let mut back = tree_path(parent, w);
    back.reverse();
    back.pop();
    nodes.extend(back);
    // nodes[0] is the root, an edge-node; odd positions are vertex-nodes
    let edges = nodes.iter().step_by(2).map(|&x| g.edge_of(x)).collect();
    let vertices = nodes.iter().skip(1).step_by(2).copied().collect();
    CycleWitness { edges, vertices }
}

/// Exact Berge girth with a shortest-cycle witness.
///
/// With `cap = Some(c)` only cycles shorter than `c` are looked for and
/// the answer is `AtLeast(c)` if there are none. `Infinite` is returned only
/// when the whole incidence graph was seen to be a forest.
pub fn berge_girth(h: &Hypergraph, cap: Option<usize>) -> GirthResult {
    let g = h.incidence_graph();
    let limit = match cap {
        Some(c) => 2 * c,
        None => usize::MAX,
    };
    if h.m() == 0 || limit <= 4 {
        // no cycle is shorter than 2
        return match (h.m(), cap) {
            (0, _) => GirthResult::unbounded(Girth::Infinite),
            (_, Some(c)) => GirthResult::unbounded(Girth::AtLeast(c)),
            _ => unreachable!(),
        };
    }
    let shared = AtomicUsize::new(limit);
    let nodes = g.node_count();
    let scans: Vec<(usize, RootScan)> = (0..h.m())
        .into_par_iter()
        .map_init(
            || (vec![UNSEEN; nodes], vec![UNSEEN; nodes], Vec::new()),
            |(dist, parent, touched), e| {
                let root = g.edge_node(e);
                (e, scan_root(&g, root, limit, &shared, dist, parent, touched))
            },
        )
        .collect();

    let winner = scans
        .iter()
        .filter_map(|(e, s)| s.best.map(|(value, _, _)| (value, *e)))
        .min();
    match winner {
        Some((_, e)) => {
            let mut dist = vec![UNSEEN; nodes];
            let mut parent = vec![UNSEEN; nodes];
            let never = AtomicUsize::new(usize::MAX);
            let root = g.edge_node(e);
            let scan = scan_root(&g, root, limit, &never, &mut dist, &mut parent, &mut Vec::new());
            let (value, u, w) = scan.best.expect("rescan of the winning root");
            let witness = witness_from(&g, &parent, u, w);
            debug_assert_eq!(witness.len() * 2, value);
            GirthResult { girth: Girth::Finite(value / 2), witness: Some(witness) }
        }
        None => {
            let acyclic = scans.iter().all(|(_, s)| !s.saw_non_tree && !s.cut);
            match (acyclic, cap) {
                (true, _) | (false, None) => GirthResult::unbounded(Girth::Infinite),
                (false, Some(c)) => GirthResult::unbounded(Girth::AtLeast(c)),
            }
        }
    }
}

fn bfs_from_vertex(g: &IncidenceGraph, u: usize) -> (Vec<usize>, Vec<usize>) {
    let mut dist = vec![UNSEEN; g.node_count()];
    let mut parent = vec![UNSEEN; g.node_count()];
    dist[u] = 0;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if dist[y] == UNSEEN {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    (dist, parent)
}

/// Number of edges on a shortest `u`-`v` path; `None` if disconnected.
pub fn distance(h: &Hypergraph, u: usize, v: usize) -> Option<usize> {
    let g = h.incidence_graph();
    let (dist, _) = bfs_from_vertex(&g, u);
    (dist[v] != UNSEEN).then(|| dist[v] / 2)
}

/// Edge sequence of a shortest `u`-`v` path (empty for `u == v`).
pub fn shortest_path(h: &Hypergraph, u: usize, v: usize) -> Option<Vec<usize>> {
    let g = h.incidence_graph();
    let (dist, parent) = bfs_from_vertex(&g, u);
    if dist[v] == UNSEEN {
        return None;
    }
    let mut nodes = tree_path(&parent, v);
    nodes.retain(|&x| g.is_edge_node(x));
    Some(nodes.into_iter().map(|x| g.edge_of(x)).collect())
}

/// Largest pairwise distance; `None` if some pair is disconnected.
pub fn diameter(h: &Hypergraph) -> Option<usize> {
    let g = h.incidence_graph();
    (0..h.n())
        .into_par_iter()
        .map(|u| {
            let (dist, _) = bfs_from_vertex(&g, u);
            dist[..h.n()].iter().try_fold(0, |acc, &d| (d != UNSEEN).then(|| acc.max(d / 2)))
        })
        .try_reduce(|| 0, |a, b| Some(a.max(b)))
}

use std::collections::{HashSet, VecDeque};

use crate::girth::berge_girth;
use crate::{Error, Hypergraph, Result};

/// Marks every vertex within distance `radius` of `v`.
fn mark_ball(h: &Hypergraph, v: usize, radius: usize, marked: &mut [bool]) {
    let mut dist = vec![usize::MAX; h.n()];
    let mut edge_seen = vec![false; h.m()];
    dist[v] = 0;
    marked[v] = true;
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        if dist[u] == radius {
            continue;
        }
        for &e in h.incident(u) {
            if std::mem::replace(&mut edge_seen[e], true) {
                continue;
            }
            for &w in h.edge(e) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    marked[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
}

/// Greedy set of vertices at pairwise distance greater than `g`, scanning
/// in ascending vertex order and stopping at `k` vertices.
pub fn find_scattered(h: &Hypergraph, g: usize, k: usize) -> Vec<usize> {
    let mut blocked = vec![false; h.n()];
    let mut chosen = Vec::new();
    for v in 0..h.n() {
        if chosen.len() == k {
            break;
        }
        if !blocked[v] {
            chosen.push(v);
            mark_ball(h, v, g, &mut blocked);
        }
    }
    chosen
}

/// One successful vertex-removal step.
#[derive(Debug, Clone)]
pub struct SurgeryStep {
    pub hypergraph: Hypergraph,
    /// Deleted vertices, in the input's labels.
    pub removed: Vec<usize>,
    /// Added edges, in the input's labels.
    pub new_edges: Vec<Vec<usize>>,
    /// `old_to_new[v]` is the label of surviving vertex `v`.
    pub old_to_new: Vec<Option<usize>>,
}

fn check_input(h: &Hypergraph, g: usize) -> Result<(usize, usize)> {
    if g < 3 {
        return Err(Error::InvalidParams(format!("surgery needs g >= 3 (got {g})")));
    }
    let fail = |msg: &str| Error::InvariantViolation(msg.to_string());
    let r = h.uniformity().ok_or_else(|| fail("input is not uniform"))?;
    let d = h.regularity().ok_or_else(|| fail("input is not regular"))?;
    if !h.is_linear() {
        return Err(fail("input is not linear"));
    }
    if !berge_girth(h, Some(g)).girth.at_least(g) {
        return Err(Error::InvariantViolation(format!("input girth is below {g}")));
    }
    Ok((r, d))
}

/// Deletes `r` vertices at pairwise distance greater than `g` together with
/// their edges, and closes the `d(r-1)` open slots around each deleted
/// vertex with `d(r-1)` new disjoint transversal edges.
///
/// With `W_i` the neighbours of the `i`-th deleted vertex in ascending
/// order, new edge `t` is `{W_1[t], .., W_r[t]}`. Surviving vertices keep
/// their relative order. Returns `None` when no scattered `r`-set exists.
pub fn surgery_step(h: &Hypergraph, g: usize) -> Result<Option<SurgeryStep>> {
    let (r, d) = check_input(h, g)?;
    let removed = find_scattered(h, g, r);
    if removed.len() < r {
        return Ok(None);
    }
    let mut dead_edge = vec![false; h.m()];
    let mut neighbourhoods = Vec::with_capacity(r);
    for &v in &removed {
        let mut w: Vec<usize> = Vec::with_capacity(d * (r - 1));
        for &e in h.incident(v) {
            dead_edge[e] = true;
            w.extend(h.edge(e).iter().copied().filter(|&x| x != v));
        }
        w.sort_unstable();
        if w.len() != d * (r - 1) || w.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::InvariantViolation(format!("neighbourhood of {v} has the wrong size")));
        }
        neighbourhoods.push(w);
    }
    let all: HashSet<usize> = neighbourhoods.iter().flatten().copied().collect();
    if all.len() != r * d * (r - 1) || removed.iter().any(|v| all.contains(v)) {
        return Err(Error::InvariantViolation("neighbourhoods of deleted vertices overlap".into()));
    }

    let new_edges: Vec<Vec<usize>> = (0..d * (r - 1))
        .map(|t| {
            let mut e: Vec<usize> = neighbourhoods.iter().map(|w| w[t]).collect();
            e.sort_unstable();
            e
        })
        .collect();
    let original: HashSet<&[usize]> = h.edges().iter().map(Vec::as_slice).collect();
    if new_edges.iter().any(|e| original.contains(e.as_slice())) {
        return Err(Error::InvariantViolation("a new edge already exists".into()));
    }

    let mut old_to_new = vec![None; h.n()];
    let mut next = 0;
    for (v, slot) in old_to_new.iter_mut().enumerate() {
        if !removed.contains(&v) {
            *slot = Some(next);
            next += 1;
        }
    }
    let relabel = |e: &[usize]| e.iter().map(|&v| old_to_new[v].expect("surviving vertex")).collect::<Vec<_>>();
    let kept = h.edges().iter().enumerate().filter(|(i, _)| !dead_edge[*i]).map(|(_, e)| relabel(e));
    let edges: Vec<Vec<usize>> = kept.chain(new_edges.iter().map(|e| relabel(e))).collect();
    let out = Hypergraph::new(next, edges)?;

    if out.n() + r != h.n() || !out.is_uniform(r) || !out.is_regular(d) || !out.is_linear() {
        return Err(Error::InvariantViolation("surgery output lost uniformity, regularity or linearity".into()));
    }
    if !berge_girth(&out, Some(g)).girth.at_least(g) {
        return Err(Error::InvariantViolation(format!("surgery output has girth below {g}")));
    }
    Ok(Some(SurgeryStep { hypergraph: out, removed, new_edges, old_to_new }))
}

#[derive(Debug, Clone)]
pub struct SurgeryOutcome {
    pub hypergraph: Hypergraph,
    /// Vertex count after each step.
    pub vertex_counts: Vec<usize>,
}

/// Applies [`surgery_step`] until no scattered `r`-set remains.
pub fn surgery_minimize(h: &Hypergraph, g: usize) -> Result<SurgeryOutcome> {
    let mut current = h.clone();
    let mut vertex_counts = Vec::new();
    while let Some(step) = surgery_step(&current, g)? {
        current = step.hypergraph;
        vertex_counts.push(current.n());
    }
    Ok(SurgeryOutcome { hypergraph: current, vertex_counts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{fano_plane, grid_hypergraph, lift_to_girth, LiftConfig};
    use crate::girth::distance;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn scattered_sets() {
        assert_eq!(find_scattered(&fano_plane(), 3, 3), vec![0]);
        let disjoint = Hypergraph::new(6, [[0, 1, 2], [3, 4, 5]]).unwrap();
        assert_eq!(find_scattered(&disjoint, 3, 2), vec![0, 3]);
        assert_eq!(find_scattered(&fano_plane(), 0, 2), vec![0, 1]);
        assert!(find_scattered(&fano_plane(), 1, 0).is_empty());
    }

    #[test]
    fn scattered_distances_exceed_threshold() {
        let h = lift_to_girth(&grid_hypergraph(3, 2).unwrap(), 6, &mut ChaCha8Rng::seed_from_u64(2), LiftConfig::default())
            .unwrap()
            .hypergraph;
        for g in 1..5 {
            let s = find_scattered(&h, g, usize::MAX);
            for (i, &a) in s.iter().enumerate() {
                for &b in &s[i + 1..] {
                    assert!(distance(&h, a, b).is_none_or(|x| x > g));
                }
            }
            // maximal: every vertex is within g of the set
            for v in 0..h.n() {
                assert!(s.iter().any(|&a| distance(&h, a, v).is_some_and(|x| x <= g)));
            }
        }
    }

    #[test]
    fn fano_admits_no_step() {
        let f = fano_plane();
        assert!(surgery_step(&f, 3).unwrap().is_none());
        let out = surgery_minimize(&f, 3).unwrap();
        assert_eq!(out.hypergraph, f);
        assert!(out.vertex_counts.is_empty());
    }

    #[test]
    fn step_on_lifted_grid() {
        let h = lift_to_girth(&grid_hypergraph(3, 2).unwrap(), 5, &mut ChaCha8Rng::seed_from_u64(11), LiftConfig::default())
            .unwrap()
            .hypergraph;
        let step = surgery_step(&h, 3).unwrap().expect("a scattered triple in a lifted grid");
        let out = &step.hypergraph;
        assert_eq!(out.n(), h.n() - 3);
        assert!(out.is_linear() && out.is_regular(2) && out.is_uniform(3));
        assert!(berge_girth(out, None).girth.at_least(3));
        let mut seen = HashSet::new();
        for e in &step.new_edges {
            assert!(e.iter().all(|v| seen.insert(*v)));
            assert!(!h.edges().contains(e));
        }
        let min = surgery_minimize(&h, 3).unwrap();
        let mut prev = h.n();
        for &c in &min.vertex_counts {
            assert_eq!(c + 3, prev);
            prev = c;
        }
        assert!(berge_girth(&min.hypergraph, None).girth.at_least(3));
    }

    #[test]
    fn rejects_bad_input() {
        let h = Hypergraph::new(4, [[0, 1, 2], [1, 2, 3]]).unwrap();
        assert!(matches!(surgery_step(&h, 3), Err(Error::InvariantViolation(_))));
        let g = grid_hypergraph(3, 2).unwrap();
        assert!(matches!(surgery_step(&g, 5), Err(Error::InvariantViolation(_))));
    }
}

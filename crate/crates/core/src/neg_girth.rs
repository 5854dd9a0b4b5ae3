//! `(-k)`-girth of 3-uniform hypergraphs: the least `g` above a floor such
//! that some `g` vertices span at least `g - k` edges.
//!
//! A set spans an edge when it contains all of its vertices. Floors are
//! `4` for `k = 1, 2` and `6` for `k = 3`.

use std::collections::HashSet;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::{Error, Hypergraph, Result};

/// Largest accepted search cap.
pub const MAX_CAP: usize = 14;

pub fn floor_for(k: usize) -> Result<usize> {
    match k {
        1 | 2 => Ok(4),
        3 => Ok(6),
        _ => Err(Error::InvalidParams(format!("offset k must be 1, 2 or 3 (got {k})"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NegGirth {
    Found(usize),
    /// No qualifying set of size at most the cap.
    NotFound(usize),
}

impl fmt::Display for NegGirth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NegGirth::Found(g) => write!(f, "{g}"),
            NegGirth::NotFound(cap) => write!(f, "none<={cap}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegGirthResult {
    pub k: usize,
    pub g: NegGirth,
    /// Sorted vertex set of size `g`; present iff found.
    pub witness: Option<Vec<usize>>,
}

/// Number of edges of `h` inside `set`.
pub fn spanned_edges(h: &Hypergraph, set: &[usize]) -> usize {
    let inside: HashSet<usize> = set.iter().copied().collect();
    h.edges().iter().filter(|e| e.iter().all(|v| inside.contains(v))).count()
}

/// Edges inside the sorted vertex set `u`, in ascending order.
fn closure(h: &Hypergraph, u: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = u
        .iter()
        .flat_map(|&v| h.incident(v).iter().copied())
        .filter(|&e| h.edge(e).iter().all(|x| u.binary_search(x).is_ok()))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

struct Search<'a> {
    h: &'a Hypergraph,
    k: usize,
    floor: usize,
    cap: usize,
    start: usize,
    shared: &'a AtomicUsize,
    best: Option<(usize, Vec<usize>)>,
    seen: HashSet<Vec<usize>>,
}

impl Search<'_> {
    fn value(&self, u: &[usize]) -> usize {
        u.len().max(self.floor)
    }

    fn pruned(&self, value: usize) -> bool {
        value > self.cap
            || value > self.shared.load(Ordering::Relaxed)
            || self.best.as_ref().is_some_and(|(b, _)| value >= *b)
    }

    fn visit(&mut self, u: Vec<usize>) {
        let value = self.value(&u);
        if self.pruned(value) || self.seen.contains(&u) {
            return;
        }
        let spanned = closure(self.h, &u);
        if spanned[0] < self.start {
            return;
        }
        self.seen.insert(u.clone());
        if spanned.len() + self.k >= value {
            self.shared.fetch_min(value, Ordering::Relaxed);
            self.best = Some((value, u));
            return;
        }
        let mut frontier: Vec<usize> = u
            .iter()
            .flat_map(|&v| self.h.incident(v).iter().copied())
            .filter(|&e| e > self.start && spanned.binary_search(&e).is_err())
            .collect();
        frontier.sort_unstable();
        frontier.dedup();
        for e in frontier {
            let mut next = u.clone();
            next.extend_from_slice(self.h.edge(e));
            next.sort_unstable();
            next.dedup();
            self.visit(next);
        }
    }
}

/// Smallest `g` in `[floor, cap]` such that some `g`-set spans at least
/// `g - k` edges.
///
/// Only unions of connected edge sets are enumerated: a qualifying set
/// always contains one whose spanned edges form a single component, and
/// padding that union with arbitrary vertices up to the floor keeps it
/// qualifying. The witness is such a union padded with the least unused
/// vertices.
pub fn minus_k_girth(h: &Hypergraph, k: usize, cap: usize) -> Result<NegGirthResult> {
    let floor = floor_for(k)?;
    if cap > MAX_CAP {
        return Err(Error::CapTooLarge { cap, max: MAX_CAP });
    }
    if let Some((edge, e)) = h.edges().iter().enumerate().find(|(_, e)| e.len() != 3) {
        return Err(Error::NotThreeUniform { edge, size: e.len() });
    }
    let not_found = NegGirthResult { k, g: NegGirth::NotFound(cap), witness: None };
    let limit = cap.min(h.n());
    if limit < floor {
        return Ok(not_found);
    }
    let shared = AtomicUsize::new(usize::MAX);
    let per_start: Vec<Option<(usize, Vec<usize>)>> = (0..h.m())
        .into_par_iter()
        .map(|start| {
            let mut s = Search { h, k, floor, cap: limit, start, shared: &shared, best: None, seen: HashSet::new() };
            s.visit(h.edge(start).to_vec());
            s.best
        })
        .collect();
    let Some((g, union)) = per_start.into_iter().flatten().min_by_key(|(g, _)| *g) else {
        return Ok(not_found);
    };
    let mut witness = union;
    let mut v = 0;
    while witness.len() < g {
        if witness.binary_search(&v).is_err() {
            witness.push(v);
            witness.sort_unstable();
        }
        v += 1;
    }
    debug_assert!(spanned_edges(h, &witness) + k >= g);
    Ok(NegGirthResult { k, g: NegGirth::Found(g), witness: Some(witness) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{fano_plane, grid_hypergraph};

    /// Exhaustive over all vertex subsets; small `n` only.
    fn brute(h: &Hypergraph, k: usize, cap: usize) -> NegGirth {
        let floor = floor_for(k).unwrap();
        let n = h.n();
        for g in floor..=cap.min(n) {
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != g {
                    continue;
                }
                let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                if spanned_edges(h, &set) + k >= g {
                    return NegGirth::Found(g);
                }
            }
        }
        NegGirth::NotFound(cap)
    }

    fn check(h: &Hypergraph, k: usize, cap: usize) -> NegGirthResult {
        let res = minus_k_girth(h, k, cap).unwrap();
        assert_eq!(res.g, brute(h, k, cap), "k={k} cap={cap}");
        if let (NegGirth::Found(g), Some(w)) = (res.g, &res.witness) {
            assert_eq!(w.len(), g);
            assert!(spanned_edges(h, w) + k >= g);
        }
        res
    }

    #[test]
    fn fano_values() {
        let f = fano_plane();
        // the complement of any point spans the four lines avoiding it
        let r = check(&f, 2, 7);
        assert_eq!(r.g, NegGirth::Found(6));
        assert_eq!(spanned_edges(&f, &r.witness.unwrap()), 4);
        assert_eq!(check(&f, 1, 7).g, NegGirth::Found(7));
        assert_eq!(check(&f, 3, 7).g, NegGirth::Found(6));
        assert_eq!(check(&f, 2, 5).g, NegGirth::NotFound(5));
    }

    #[test]
    fn matches_brute_force() {
        let cases = vec![
            Hypergraph::new(3, [[0, 1, 2]]).unwrap(),
            Hypergraph::new(4, [[0, 1, 2], [1, 2, 3]]).unwrap(),
            Hypergraph::new(5, [[0, 1, 2], [2, 3, 4]]).unwrap(),
            Hypergraph::new(6, [[0, 1, 2], [0, 1, 3], [3, 4, 5], [2, 4, 5]]).unwrap(),
            Hypergraph::new(8, [[0, 1, 2], [2, 3, 4], [4, 5, 6], [6, 7, 0], [1, 3, 5]]).unwrap(),
            grid_hypergraph(3, 2).unwrap(),
            fano_plane(),
        ];
        for h in &cases {
            for k in 1..=3 {
                for cap in [4, 6, 8, 10] {
                    check(h, k, cap);
                }
            }
        }
    }

    #[test]
    fn four_iff_non_linear() {
        let nonlinear = Hypergraph::new(4, [[0, 1, 2], [1, 2, 3]]).unwrap();
        assert_eq!(minus_k_girth(&nonlinear, 2, 8).unwrap().g, NegGirth::Found(4));
        for h in [fano_plane(), grid_hypergraph(3, 2).unwrap()] {
            assert_ne!(minus_k_girth(&h, 2, 10).unwrap().g, NegGirth::Found(4));
        }
    }

    #[test]
    fn errors_and_trivial_cases() {
        let single = Hypergraph::new(3, [[0, 1, 2]]).unwrap();
        assert_eq!(minus_k_girth(&single, 1, 10).unwrap().g, NegGirth::NotFound(10));
        assert!(matches!(minus_k_girth(&single, 2, 15), Err(Error::CapTooLarge { cap: 15, max: 14 })));
        assert!(matches!(minus_k_girth(&single, 4, 10), Err(Error::InvalidParams(_))));
        let mixed = Hypergraph::new(4, vec![vec![0, 1, 2], vec![0, 3]]).unwrap();
        assert!(matches!(minus_k_girth(&mixed, 2, 6), Err(Error::NotThreeUniform { edge: 1, size: 2 })));
    }

    #[test]
    fn witness_carries_to_next_offset() {
        let h = Hypergraph::new(8, [[0, 1, 2], [2, 3, 4], [4, 5, 6], [6, 7, 0], [1, 3, 5]]).unwrap();
        for k in 1..3 {
            if let Some(w) = minus_k_girth(&h, k, 10).unwrap().witness {
                if w.len() >= floor_for(k + 1).unwrap() {
                    assert!(spanned_edges(&h, &w) + k + 1 >= w.len());
                }
            }
        }
    }
}

use std::collections::{HashMap, VecDeque};

use super::symmetric::{condition6_violation, CayleySpec};
use crate::girth::Girth;
use crate::{Error, Hypergraph, Permutation, Result};

/// Materialisation cap: `8!` vertices.
pub const DEFAULT_CAYLEY_MAX_VERTICES: u64 = 40_320;

fn require_condition6(spec: &CayleySpec) -> Result<()> {
    match condition6_violation(spec) {
        Some((i, k, j, l)) => Err(Error::Condition6Violated { i, k, j, l }),
        None => Ok(()),
    }
}

/// Hypergraph on `S_n` whose edges are the left cosets
/// `{s, s t_i, .., s t_i^(r-1)}` of every generator. Vertex `v` is the
/// permutation of lexicographic rank `v`.
///
/// Edges are listed generator by generator, and within a generator by the
/// least rank in the coset.
pub fn cayley_hypergraph(spec: &CayleySpec, max_vertices: u64) -> Result<Hypergraph> {
    require_condition6(spec)?;
    let n = spec.n();
    let order = (1..=n as u64).try_fold(1u64, |acc, i| acc.checked_mul(i));
    let order = match order {
        Some(o) if o <= max_vertices => o as usize,
        _ => return Err(Error::BudgetExceeded(max_vertices)),
    };
    let elements: Vec<Permutation> = (0..order as u64).map(|k| Permutation::unrank(n, k)).collect();
    let powers = spec.powers();
    let mut edges = Vec::with_capacity(spec.d() * order / spec.r());
    for pows in &powers {
        let mut covered = vec![false; order];
        for (v, sigma) in elements.iter().enumerate() {
            if covered[v] {
                continue;
            }
            let coset: Vec<usize> = pows.iter().map(|t| sigma.compose_unchecked(t).rank() as usize).collect();
            for &u in &coset {
                covered[u] = true;
            }
            edges.push(coset);
        }
    }
    Hypergraph::new(order, edges)
}

/// A shortest Berge cycle through the identity: vertices `s_0 = id, s_1,
/// ..` and steps with `s_{i+1} = s_i t_{j_i}^{m_i}`, where consecutive
/// steps use different generators (cyclically).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyWitness {
    /// 0-based generator index of each step.
    pub generators: Vec<usize>,
    /// Exponent of each step, in `1..r`.
    pub powers: Vec<usize>,
    pub vertices: Vec<Permutation>,
}

impl CayleyWitness {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// True if the steps compose to the identity, consecutive generators
    /// differ and the visited vertices are distinct.
    pub fn is_valid(&self, spec: &CayleySpec) -> bool {
        let l = self.len();
        if l < 2 || self.powers.len() != l || self.vertices.len() != l {
            return false;
        }
        if !self.vertices[0].is_identity() {
            return false;
        }
        let mut distinct = self.vertices.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() != l {
            return false;
        }
        (0..l).all(|i| {
            let (j, m) = (self.generators[i], self.powers[i]);
            if j >= spec.d() || m == 0 || m >= spec.r() || self.generators[(i + 1) % l] == j {
                return false;
            }
            let step = spec.taus()[j].power(m as i64);
            self.vertices[i].compose_unchecked(&step) == self.vertices[(i + 1) % l]
        })
    }

    pub fn vertex_ranks(&self) -> Vec<u64> {
        self.vertices.iter().map(Permutation::rank).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyGirth {
    pub girth: Girth,
    /// Present iff `girth` is finite.
    pub witness: Option<CayleyWitness>,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Node {
    Vertex(Permutation),
    /// Generator index and the least element of the coset.
    Coset(usize, Permutation),
}

/// Exact girth of the Cayley hypergraph without materialising `S_n`.
///
/// Breadth-first search of the incidence graph from the identity; left
/// multiplication is transitive on vertices, so some shortest cycle passes
/// through it. With `cap = Some(c)` only cycles shorter than `c` are
/// searched for.
pub fn cayley_girth(spec: &CayleySpec, cap: Option<usize>) -> Result<CayleyGirth> {
    require_condition6(spec)?;
    let powers = spec.powers();
    let coset_of = |sigma: &Permutation, j: usize| {
        let min = powers[j].iter().map(|t| sigma.compose_unchecked(t)).min().expect("r >= 3");
        Node::Coset(j, min)
    };
    let neighbours = |node: &Node| -> Vec<Node> {
        match node {
            Node::Vertex(sigma) => (0..spec.d()).map(|j| coset_of(sigma, j)).collect(),
            Node::Coset(j, c) => powers[*j].iter().map(|t| Node::Vertex(c.compose_unchecked(t))).collect(),
        }
    };

    let limit = cap.map_or(usize::MAX, |c| c.saturating_mul(2));
    let mut ids: HashMap<Node, usize> = HashMap::new();
    let mut nodes: Vec<Node> = Vec::new();
    let mut dist: Vec<usize> = Vec::new();
    let mut parent: Vec<usize> = Vec::new();
    let root = Node::Vertex(Permutation::identity(spec.n()));
    ids.insert(root.clone(), 0);
    nodes.push(root);
    dist.push(0);
    parent.push(usize::MAX);
    let mut queue = VecDeque::from([0usize]);
    let mut best: Option<(usize, usize, usize)> = None;
    let mut truncated = false;

    while let Some(u) = queue.pop_front() {
        let bound = best.map_or(limit, |(b, _, _)| b.min(limit));
        if 2 * dist[u] + 2 >= bound {
            truncated = best.is_none();
            break;
        }
        for w in neighbours(&nodes[u]) {
            match ids.get(&w) {
                Some(&x) if x == parent[u] => {}
                Some(&x) => {
                    let value = dist[u] + dist[x] + 1;
                    if best.is_none_or(|(b, _, _)| value < b) {
                        best = Some((value, u, x));
                    }
                }
                None => {
                    let x = nodes.len();
                    ids.insert(w.clone(), x);
                    nodes.push(w);
                    dist.push(dist[u] + 1);
                    parent.push(u);
                    queue.push_back(x);
                }
            }
        }
    }

    let Some((value, a, b)) = best.filter(|&(v, _, _)| v < limit) else {
        let girth = match cap {
            Some(c) if best.is_some() || truncated || !queue.is_empty() => Girth::AtLeast(c),
            _ => Girth::Infinite,
        };
        return Ok(CayleyGirth { girth, witness: None });
    };

    let path = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p.reverse();
        p
    };
    let (pa, pb) = (path(a), path(b));
    if pa[1..].iter().any(|x| pb[1..].contains(x)) {
        return Err(Error::InvariantViolation("identity-rooted search found a non-simple closed walk".into()));
    }
    // root .. a, then b .. back to the root
    let cycle: Vec<usize> = pa.iter().copied().chain(pb[1..].iter().rev().copied()).collect();
    debug_assert_eq!(cycle.len(), value);
    let l = cycle.len() / 2;
    let mut vertices = Vec::with_capacity(l);
    let mut generators = Vec::with_capacity(l);
    let mut steps = Vec::with_capacity(l);
    for i in 0..l {
        let Node::Vertex(s) = &nodes[cycle[2 * i]] else { unreachable!("even positions are vertices") };
        let Node::Coset(j, _) = &nodes[cycle[2 * i + 1]] else { unreachable!("odd positions are cosets") };
        vertices.push(s.clone());
        generators.push(*j);
    }
    for i in 0..l {
        let t = &vertices[(i + 1) % l];
        let step = vertices[i].inverse().compose_unchecked(t);
        let m = (1..spec.r()).find(|&m| powers[generators[i]][m] == step).expect("consecutive vertices share a coset");
        steps.push(m);
    }
    let witness = CayleyWitness { generators, powers: steps, vertices };
    debug_assert!(witness.is_valid(spec));
    Ok(CayleyGirth { girth: Girth::Finite(l), witness: Some(witness) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::girth::berge_girth;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn valid_spec(n: usize, d: usize, seed: u64) -> CayleySpec {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let spec = CayleySpec::random(n, 3, d, &mut rng).unwrap();
            if condition6_violation(&spec).is_none() {
                return spec;
            }
        }
    }

    #[test]
    fn rejects_condition6_failures() {
        let t = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        let spec = CayleySpec::new(3, 3, vec![t.clone(), t.power(2)]).unwrap();
        assert!(matches!(cayley_hypergraph(&spec, 100), Err(Error::Condition6Violated { .. })));
        assert!(matches!(cayley_girth(&spec, None), Err(Error::Condition6Violated { .. })));
    }

    #[test]
    fn materialised_structure() {
        let spec = valid_spec(6, 2, 4);
        let h = cayley_hypergraph(&spec, DEFAULT_CAYLEY_MAX_VERTICES).unwrap();
        assert_eq!((h.n(), h.m()), (720, 480));
        assert!(h.is_linear() && h.is_regular(2) && h.is_uniform(3));
        // each generator's cosets partition the group
        for j in 0..2 {
            let mut seen = vec![false; 720];
            for e in &h.edges()[j * 240..(j + 1) * 240] {
                for &v in e {
                    assert!(!std::mem::replace(&mut seen[v], true));
                }
            }
            assert!(seen.iter().all(|&s| s));
        }
        assert!(matches!(cayley_hypergraph(&spec, 719), Err(Error::BudgetExceeded(719))));
    }

    #[test]
    fn implicit_girth_matches_materialised() {
        for seed in 0..6 {
            for d in [2, 3] {
                let spec = valid_spec(6, d, seed);
                let h = cayley_hypergraph(&spec, DEFAULT_CAYLEY_MAX_VERTICES).unwrap();
                let implicit = cayley_girth(&spec, None).unwrap();
                assert_eq!(implicit.girth, berge_girth(&h, None).girth, "seed {seed} d {d}");
                let w = implicit.witness.unwrap();
                assert!(w.is_valid(&spec));
                assert!(implicit.girth.at_least(3));
                let ranks = w.vertex_ranks();
                for i in 0..w.len() {
                    let (a, b) = (ranks[i] as usize, ranks[(i + 1) % w.len()] as usize);
                    assert!(h.incident(a).iter().any(|&e| h.contains(e, b)));
                }
            }
        }
    }

    #[test]
    fn capped_search() {
        let spec = valid_spec(6, 2, 1);
        let g = cayley_girth(&spec, None).unwrap().girth.finite().unwrap();
        assert_eq!(cayley_girth(&spec, Some(g)).unwrap().girth, Girth::AtLeast(g));
        assert_eq!(cayley_girth(&spec, Some(g + 1)).unwrap().girth, Girth::Finite(g));
    }
}

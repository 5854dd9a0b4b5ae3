use rand::Rng;

use crate::girth::CycleWitness;
use crate::{Error, Hypergraph, Result};

/// A 2-cover of `base` together with the coin flips that built it.
///
/// Cover vertex `(v, b)` is encoded as `v + b * n`. Base edge `e`, with its
/// vertices `v_1 < .. < v_r`, lifts to cover edges `2e` (sheet 0) and
/// `2e + 1` (sheet 1); sheet `i` is
/// `{(v_1, i), (v_2, i ^ c_e[0]), .., (v_r, i ^ c_e[r-2])}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverMap {
    base: Hypergraph,
    cover: Hypergraph,
    coins: Vec<Vec<bool>>,
}

/// Closed walk in the base obtained by projecting a cover cycle; edges may
/// repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedWalk {
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
}

/// Preimage of a base cycle under the cover map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleLift {
    /// Two vertex-disjoint cycles of the base length.
    Split(CycleWitness, CycleWitness),
    /// One cycle of twice the base length.
    Single(CycleWitness),
}

impl CoverMap {
    /// `coins[e]` holds `|e| - 1` bits for base edge `e`.
    pub fn from_coins(base: &Hypergraph, coins: Vec<Vec<bool>>) -> Result<Self> {
        if coins.len() != base.m() {
            return Err(Error::SizeMismatch { left: coins.len(), right: base.m() });
        }
        let n = base.n();
        let mut edges = Vec::with_capacity(2 * base.m());
        for (edge, c) in base.edges().iter().zip(&coins) {
            if c.len() + 1 != edge.len() {
                return Err(Error::SizeMismatch { left: c.len() + 1, right: edge.len() });
            }
            for sheet in 0..2 {
                edges.push(
                    edge.iter()
                        .enumerate()
                        .map(|(p, &v)| v + n * (sheet ^ usize::from(p > 0 && c[p - 1])))
                        .collect::<Vec<_>>(),
                );
            }
        }
        let cover = Hypergraph::new(2 * n, edges)?;
        Ok(Self { base: base.clone(), cover, coins })
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn cover(&self) -> &Hypergraph {
        &self.cover
    }

    pub fn into_cover(self) -> Hypergraph {
        self.cover
    }

    pub fn coins(&self) -> &[Vec<bool>] {
        &self.coins
    }

    pub fn project_vertex(&self, v: usize) -> usize {
        v % self.base.n()
    }

    pub fn sheet_of(&self, v: usize) -> usize {
        v / self.base.n()
    }

    pub fn project_edge(&self, e: usize) -> usize {
        e / 2
    }

    /// Coin bit of `v` within base edge `e` (`false` for the least vertex).
    fn offset(&self, e: usize, v: usize) -> usize {
        let p = self.base.edge(e).binary_search(&v).expect("vertex of the base edge");
        usize::from(p > 0 && self.coins[e][p - 1])
    }

    /// Cover edge over base edge `e` through cover vertex `(v, bit)`, and
    /// the cover copy of `to` in that edge.
    fn step(&self, e: usize, v: usize, bit: usize, to: usize) -> (usize, usize) {
        let sheet = bit ^ self.offset(e, v);
        (2 * e + sheet, sheet ^ self.offset(e, to))
    }

    /// Projects a cover cycle edge by edge and vertex by vertex.
    pub fn project_witness(&self, w: &CycleWitness) -> ClosedWalk {
        ClosedWalk {
            edges: w.edges.iter().map(|&e| self.project_edge(e)).collect(),
            vertices: w.vertices.iter().map(|&v| self.project_vertex(v)).collect(),
        }
    }

    /// Follows a base cycle through the cover starting from sheet 0 of its
    /// last witness vertex.
    pub fn lift_cycle(&self, w: &CycleWitness) -> CycleLift {
        let n = self.base.n();
        let l = w.len();
        let trace = |start_bit: usize, laps: usize| {
            let mut edges = Vec::with_capacity(l * laps);
            let mut vertices = Vec::with_capacity(l * laps);
            let mut at = w.vertices[l - 1];
            let mut bit = start_bit;
            for i in 0..l * laps {
                let e = w.edges[i % l];
                let to = w.vertices[i % l];
                let (ce, next) = self.step(e, at, bit, to);
                edges.push(ce);
                vertices.push(to + n * next);
                at = to;
                bit = next;
            }
            (CycleWitness { edges, vertices }, bit)
        };
        let (first, end_bit) = trace(0, 1);
        if end_bit == 0 {
            CycleLift::Split(first, trace(1, 1).0)
        } else {
            CycleLift::Single(trace(0, 2).0)
        }
    }
}

impl ClosedWalk {
    /// Every vertex lies in the edges before and after it.
    pub fn is_closed_walk_in(&self, h: &Hypergraph) -> bool {
        let l = self.edges.len();
        l == self.vertices.len()
            && (0..l).all(|i| h.contains(self.edges[i], self.vertices[i]) && h.contains(self.edges[(i + 1) % l], self.vertices[i]))
    }
}

/// A uniformly random 2-cover: `|e| - 1` fair coins per base edge.
pub fn random_two_cover<R: Rng + ?Sized>(h: &Hypergraph, rng: &mut R) -> CoverMap {
    let coins = h.edges().iter().map(|e| (1..e.len()).map(|_| rng.random::<bool>()).collect()).collect();
    CoverMap::from_coins(h, coins).expect("coins sized from the base")
}

/// Two disjoint copies of `h`.
pub fn trivial_cover(h: &Hypergraph) -> CoverMap {
    let coins = h.edges().iter().map(|e| vec![false; e.len() - 1]).collect();
    CoverMap::from_coins(h, coins).expect("coins sized from the base")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{fano_plane, grid_hypergraph};
    use crate::girth::{berge_girth, validate_cycle};
    use rand::rand_core::{impls, RngCore};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Every draw is zero, so every coin comes up `false`.
    struct Zeros;

    impl RngCore for Zeros {
        fn next_u32(&mut self) -> u32 {
            0
        }
        fn next_u64(&mut self) -> u64 {
            0
        }
        fn fill_bytes(&mut self, dst: &mut [u8]) {
            impls::fill_bytes_via_next(self, dst)
        }
    }

    #[test]
    fn rigged_coins_give_trivial_cover() {
        let g = grid_hypergraph(3, 2).unwrap();
        let c = random_two_cover(&g, &mut Zeros);
        assert_eq!(c, trivial_cover(&g));
        // two vertex-disjoint copies: sheet-0 edges lie in 0..n, sheet-1 in n..2n
        for (i, e) in c.cover().edges().iter().enumerate() {
            assert!(e.iter().all(|&v| c.sheet_of(v) == i % 2));
            assert_eq!(e.iter().map(|&v| v % 9).collect::<Vec<_>>(), g.edge(i / 2));
        }
    }

    #[test]
    fn cover_structure() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for h in [grid_hypergraph(3, 2).unwrap(), fano_plane(), grid_hypergraph(4, 2).unwrap()] {
            let c = random_two_cover(&h, &mut rng);
            let cov = c.cover();
            assert_eq!(cov.n(), 2 * h.n());
            assert_eq!(cov.m(), 2 * h.m());
            assert!(cov.is_linear());
            assert!(cov.is_uniform(h.uniformity().unwrap()));
            assert!(cov.is_regular(h.regularity().unwrap()));
            for (i, e) in cov.edges().iter().enumerate() {
                let mut proj: Vec<usize> = e.iter().map(|&v| c.project_vertex(v)).collect();
                proj.sort_unstable();
                assert_eq!(proj, h.edge(c.project_edge(i)));
            }
        }
        let g = grid_hypergraph(3, 2).unwrap();
        let c = random_two_cover(&g, &mut ChaCha8Rng::seed_from_u64(1));
        assert!(berge_girth(c.cover(), None).girth.at_least(4));
    }

    #[test]
    fn lifted_cycles_are_cycles() {
        let g = grid_hypergraph(3, 2).unwrap();
        let base = berge_girth(&g, None).witness.unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let (mut split, mut single) = (0, 0);
        for _ in 0..64 {
            let c = random_two_cover(&g, &mut rng);
            match c.lift_cycle(&base) {
                CycleLift::Split(a, b) => {
                    split += 1;
                    assert!(validate_cycle(c.cover(), &a) && validate_cycle(c.cover(), &b));
                    assert!(a.vertices.iter().all(|v| !b.vertices.contains(v)));
                }
                CycleLift::Single(w) => {
                    single += 1;
                    assert_eq!(w.len(), 8);
                    assert!(validate_cycle(c.cover(), &w));
                    assert!(c.project_witness(&w).is_closed_walk_in(&g));
                }
            }
        }
        assert!(split > 0 && single > 0);
    }

    #[test]
    fn coin_shape_is_checked() {
        let g = grid_hypergraph(3, 2).unwrap();
        assert!(CoverMap::from_coins(&g, vec![vec![false; 2]; 5]).is_err());
        assert!(CoverMap::from_coins(&g, vec![vec![false; 1]; 6]).is_err());
    }
}

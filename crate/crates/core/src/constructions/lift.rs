use std::fmt;

use rand::Rng;
use rayon::prelude::*;

use super::cover::random_two_cover;
use crate::girth::{berge_girth, count_cycles, Girth};
use crate::{seed, Error, Hypergraph, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LiftConfig {
    /// Covers sampled per round before giving up.
    pub attempts_per_round: usize,
    /// Refuse to grow past this many vertices.
    pub max_vertices: usize,
}

impl Default for LiftConfig {
    fn default() -> Self {
        Self { attempts_per_round: 200, max_vertices: 1 << 22 }
    }
}

/// One accepted doubling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftRound {
    /// Girth being worked towards (current girth + 1).
    pub target: usize,
    /// Length of the cycles being eliminated (current girth).
    pub cycle_len: usize,
    pub count_before: u64,
    pub count_after: u64,
    /// Vertex count after the round.
    pub vertices: usize,
    /// 1-based index of the accepted attempt.
    pub attempts: usize,
}

impl fmt::Display for LiftRound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "target {} cycles(len {}) {} -> {} vertices {} attempts {}",
            self.target, self.cycle_len, self.count_before, self.count_after, self.vertices, self.attempts
        )
    }
}

#[derive(Debug, Clone)]
pub struct LiftOutcome {
    pub hypergraph: Hypergraph,
    pub rounds: Vec<LiftRound>,
}

fn check_input(h: &Hypergraph) -> Result<()> {
    if h.uniformity().is_none() || h.regularity().is_none() {
        return Err(Error::InvariantViolation("lift needs a uniform, regular hypergraph".into()));
    }
    if !h.is_linear() {
        return Err(Error::InvariantViolation("lift needs a linear hypergraph (girth >= 3)".into()));
    }
    Ok(())
}

/// Repeatedly replaces `h` by a random 2-cover with strictly fewer cycles of
/// the current girth, until the girth reaches `target`.
///
/// Each round draws one seed from `rng`; attempt `a` of the round samples
/// its cover from [`seed::trial_rng`]`(round_seed, a)`. Attempts are
/// evaluated in parallel batches and the lowest-indexed improving attempt
/// wins, so the output depends only on `rng`.
pub fn lift_to_girth<R: Rng + ?Sized>(
    h: &Hypergraph,
    target: usize,
    rng: &mut R,
    config: LiftConfig,
) -> Result<LiftOutcome> {
    check_input(h)?;
    let mut current = h.clone();
    let mut rounds = Vec::new();
    loop {
        let girth = match berge_girth(&current, Some(target)).girth {
            Girth::Finite(l) => l,
            Girth::Infinite | Girth::AtLeast(_) => return Ok(LiftOutcome { hypergraph: current, rounds }),
        };
        if 2 * current.n() > config.max_vertices {
            return Err(Error::SizeBudgetExceeded {
                size: 2 * current.n() as u128,
                budget: config.max_vertices as u128,
            });
        }
        let before = count_cycles(&current, girth)?;
        let round_seed = rng.random::<u64>();
        let batch = rayon::current_num_threads().max(1);
        let mut accepted = None;
        let mut start = 0;
        while accepted.is_none() && start < config.attempts_per_round {
            let end = (start + batch).min(config.attempts_per_round);
            let results: Vec<Result<Option<(usize, u64, Hypergraph)>>> = (start..end)
                .into_par_iter()
                .map(|a| {
                    let cover = random_two_cover(&current, &mut seed::trial_rng(round_seed, a as u64)).into_cover();
                    let after = count_cycles(&cover, girth)?;
                    Ok((after < before).then_some((a, after, cover)))
                })
                .collect();
            for r in results {
                if let Some(hit) = r? {
                    accepted = Some(hit);
                    break;
                }
            }
            start = end;
        }
        let Some((a, after, cover)) = accepted else {
            return Err(Error::BudgetExceeded(config.attempts_per_round as u64));
        };
        current = cover;
        rounds.push(LiftRound {
            target: girth + 1,
            cycle_len: girth,
            count_before: before,
            count_after: after,
            vertices: current.n(),
            attempts: a + 1,
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::grid_hypergraph;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn already_high_girth_is_unchanged() {
        let g = grid_hypergraph(3, 2).unwrap();
        let out = lift_to_girth(&g, 4, &mut ChaCha8Rng::seed_from_u64(7), LiftConfig::default()).unwrap();
        assert_eq!(out.hypergraph, g);
        assert!(out.rounds.is_empty());
    }

    #[test]
    fn lifts_grid_to_girth_five_and_six() {
        let g = grid_hypergraph(3, 2).unwrap();
        for target in [5, 6] {
            let out = lift_to_girth(&g, target, &mut ChaCha8Rng::seed_from_u64(7), LiftConfig::default()).unwrap();
            let h = &out.hypergraph;
            assert!(berge_girth(h, None).girth.at_least(target));
            assert!(h.is_linear() && h.is_regular(2) && h.is_uniform(3));
            let k = out.rounds.len() as u32;
            assert_eq!(h.n(), 9 * 2usize.pow(k));
            assert!(out.rounds.iter().all(|r| r.count_after < r.count_before));
        }
    }

    #[test]
    fn deterministic_given_seed() {
        let g = grid_hypergraph(3, 2).unwrap();
        let a = lift_to_girth(&g, 6, &mut ChaCha8Rng::seed_from_u64(3), LiftConfig::default()).unwrap();
        let b = lift_to_girth(&g, 6, &mut ChaCha8Rng::seed_from_u64(3), LiftConfig::default()).unwrap();
        assert_eq!(a.hypergraph, b.hypergraph);
        assert_eq!(a.rounds, b.rounds);
    }

    #[test]
    fn rejects_nonlinear_input() {
        let h = Hypergraph::new(4, [[0, 1, 2], [1, 2, 3]]).unwrap();
        let err = lift_to_girth(&h, 4, &mut ChaCha8Rng::seed_from_u64(0), LiftConfig::default()).unwrap_err();
        assert!(matches!(err, Error::InvariantViolation(_)));
    }
}

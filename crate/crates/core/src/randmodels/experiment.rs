use std::fmt::Write as _;

use rayon::prelude::*;

use super::cayley::cayley_girth;
use super::config::{girth_prob_paper, girth_prob_poisson, sample_config_model};
use super::symmetric::{check_condition6, CayleySpec};
use crate::girth::{berge_girth, Girth};
use crate::{seed, Error, Result};

/// One table row: estimated probability that the girth is at least `g`
/// among accepted trials.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRow {
    pub g: usize,
    pub accepted: u64,
    /// Accepted trials with girth at least `g`.
    pub hits: u64,
    /// `None` when no trial was accepted.
    pub empirical: Option<f64>,
    pub poisson: Option<f64>,
    pub paper: Option<f64>,
    pub stderr: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentTable {
    pub seed: u64,
    pub trials: u64,
    /// Trials excluded from the estimate (non-linear samples, or Cayley
    /// specs failing the power condition).
    pub rejected: u64,
    pub rows: Vec<ExperimentRow>,
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map_or_else(|| "NA".to_string(), |v| format!("{v:.6}"))
}

impl ExperimentTable {
    fn from_outcomes(
        seed: u64,
        trials: u64,
        g_max: usize,
        outcomes: &[Option<Girth>],
        predict: impl Fn(usize) -> (Option<f64>, Option<f64>),
    ) -> Self {
        let accepted: Vec<Girth> = outcomes.iter().flatten().copied().collect();
        let n = accepted.len() as u64;
        let rows = (3..=g_max)
            .map(|g| {
                let hits = accepted.iter().filter(|x| x.at_least(g)).count() as u64;
                let empirical = (n > 0).then(|| hits as f64 / n as f64);
                let stderr = empirical.map(|p| (p * (1.0 - p) / n as f64).sqrt());
                let (poisson, paper) = predict(g);
                ExperimentRow { g, accepted: n, hits, empirical, poisson, paper, stderr }
            })
            .collect();
        Self { seed, trials, rejected: trials - n, rows }
    }

    /// CSV with a `# seed=.. version=..` line, then
    /// `g,accepted_trials,empirical,poisson_pred,paper_pred,stderr`.
    /// Missing values are written as `NA`.
    pub fn to_csv(&self, version: &str) -> String {
        let mut out = format!("# seed={} version={version}\n", self.seed);
        let _ = writeln!(out, "# trials={} rejected={}", self.trials, self.rejected);
        out.push_str("g,accepted_trials,empirical,poisson_pred,paper_pred,stderr\n");
        for row in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                row.g,
                row.accepted,
                fmt_opt(row.empirical),
                fmt_opt(row.poisson),
                fmt_opt(row.paper),
                fmt_opt(row.stderr)
            );
        }
        out
    }
}

fn check_trials(g_max: usize) -> Result<()> {
    if g_max < 3 {
        return Err(Error::InvalidParams(format!("g_max must be at least 3 (got {g_max})")));
    }
    Ok(())
}

/// Samples `trials` configuration-model hypergraphs, discards those with a
/// loop or a pair of edges sharing two points, and tabulates the girth of
/// the rest for `g` in `3..=g_max` next to both predictions.
///
/// Trial `t` draws from [`seed::trial_rng`]`(seed, t)`, so the table does
/// not depend on the thread count.
pub fn girth_distribution_experiment(
    n: usize,
    r: usize,
    d: usize,
    g_max: usize,
    trials: u64,
    seed: u64,
) -> Result<ExperimentTable> {
    check_trials(g_max)?;
    sample_config_model(n, r, d, &mut seed::trial_rng(seed, 0))?;
    girth_prob_poisson(r, d, 3)?;
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|t| {
            let m = sample_config_model(n, r, d, &mut seed::trial_rng(seed, t))?;
            if !m.is_linear_simple() {
                return Ok(None);
            }
            Ok(Some(berge_girth(&m.to_hypergraph()?, Some(g_max)).girth))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExperimentTable::from_outcomes(seed, trials, g_max, &outcomes, |g| {
        (girth_prob_poisson(r, d, g).ok(), girth_prob_paper(r, d, g).ok())
    }))
}

/// Same table for random Cayley hypergraphs on `S_n` with `d` generators
/// from `X(n, r)`; specs failing the power condition are rejected. There
/// is no prediction column for this model.
pub fn cayley_girth_experiment(
    n: usize,
    r: usize,
    d: usize,
    g_max: usize,
    trials: u64,
    seed: u64,
) -> Result<ExperimentTable> {
    check_trials(g_max)?;
    CayleySpec::random(n, r, d, &mut seed::trial_rng(seed, 0))?;
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|t| {
            let spec = CayleySpec::random(n, r, d, &mut seed::trial_rng(seed, t))?;
            if !check_condition6(&spec) {
                return Ok(None);
            }
            Ok(Some(cayley_girth(&spec, Some(g_max))?.girth))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExperimentTable::from_outcomes(seed, trials, g_max, &outcomes, |_| (None, None)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_consistent() {
        let a = girth_distribution_experiment(30, 3, 2, 6, 400, 7).unwrap();
        let b = girth_distribution_experiment(30, 3, 2, 6, 400, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_csv("x"), b.to_csv("x"));
        assert_eq!(a.rows.len(), 4);
        assert_eq!(a.rows[0].empirical, Some(1.0));
        for w in a.rows.windows(2) {
            assert!(w[1].hits <= w[0].hits);
        }
        let accepted = a.rows[0].accepted;
        assert_eq!(accepted + a.rejected, 400);
    }

    #[test]
    fn empty_rows_are_flagged() {
        // trials = 0 leaves every row without an estimate
        let t = girth_distribution_experiment(12, 3, 2, 4, 0, 1).unwrap();
        assert!(t.rows.iter().all(|r| r.accepted == 0 && r.empirical.is_none()));
        let csv = t.to_csv("0.1.0");
        assert!(csv.starts_with("# seed=1 version=0.1.0\n"));
        assert!(csv.lines().any(|l| l == "3,0,NA,1.000000,0.156518,NA"), "{csv}");
    }

    #[test]
    fn parameter_errors() {
        assert!(girth_distribution_experiment(10, 3, 2, 4, 5, 0).is_err());
        assert!(girth_distribution_experiment(12, 3, 2, 2, 5, 0).is_err());
        assert!(cayley_girth_experiment(7, 3, 2, 4, 5, 0).is_err());
    }

    #[test]
    fn cayley_table() {
        let t = cayley_girth_experiment(6, 3, 2, 6, 20, 3).unwrap();
        assert_eq!(t, cayley_girth_experiment(6, 3, 2, 6, 20, 3).unwrap());
        assert!(t.rows.iter().all(|r| r.poisson.is_none() && r.paper.is_none()));
        assert!(t.rows[0].accepted > 0);
        assert_eq!(t.rows[0].empirical, Some(1.0));
    }
}

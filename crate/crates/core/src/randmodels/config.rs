use rand::seq::SliceRandom;
use rand::Rng;

use crate::{Error, MultiHypergraph, Result};

/// Configuration model: `n*d` points, `d` per vertex, partitioned uniformly
/// into groups of `r`, each group projected to a multiset edge.
pub fn sample_config_model<R: Rng + ?Sized>(n: usize, r: usize, d: usize, rng: &mut R) -> Result<MultiHypergraph> {
    if n == 0 || r == 0 || d == 0 || !(n * d).is_multiple_of(r) {
        return Err(Error::InvalidParams(format!("configuration model needs r dividing n*d (got n={n}, r={r}, d={d})")));
    }
    let mut points: Vec<usize> = (0..n * d).collect();
    points.shuffle(rng);
    let edges = points.chunks(r).map(|g| g.iter().map(|&p| p / d).collect()).collect();
    MultiHypergraph::new(n, edges)
}

/// Limiting mean number of length-`i` cycles, `(r-1)^i (d-1)^i / (2i)`.
pub fn lambda(r: usize, d: usize, i: usize) -> Result<f64> {
    if i == 0 || r < 2 || d < 2 {
        return Err(Error::InvalidParams(format!("lambda needs i >= 1, r >= 2, d >= 2 (got r={r}, d={d}, i={i})")));
    }
    let base = ((r - 1) * (d - 1)) as f64;
    Ok(base.powi(i as i32) / (2 * i) as f64)
}

fn lambda_sum(r: usize, d: usize, range: std::ops::Range<usize>) -> Result<f64> {
    range.map(|l| lambda(r, d, l)).sum()
}

fn check_g(r: usize, d: usize, g: usize) -> Result<()> {
    if g < 3 {
        return Err(Error::InvalidParams(format!("girth probability needs g >= 3 (got {g})")));
    }
    lambda(r, d, 1).map(|_| ())
}

/// `exp(-sum_{l<g} lambda_l) / (1 - exp(-(lambda_1 + lambda_2)))`.
pub fn girth_prob_paper(r: usize, d: usize, g: usize) -> Result<f64> {
    check_g(r, d, g)?;
    let linear = lambda_sum(r, d, 1..3)?;
    Ok((-lambda_sum(r, d, 1..g)?).exp() / (1.0 - (-linear).exp()))
}

/// `exp(-sum_{3<=l<g} lambda_l)`: girth at least `g` given linearity, with
/// independent Poisson cycle counts.
pub fn girth_prob_poisson(r: usize, d: usize, g: usize) -> Result<f64> {
    check_g(r, d, g)?;
    Ok((-lambda_sum(r, d, 3..g)?).exp())
}

/// The two girth predictions for fixed `(r, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GirthDistribution {
    pub r: usize,
    pub d: usize,
}

impl GirthDistribution {
    pub fn new(r: usize, d: usize) -> Result<Self> {
        lambda(r, d, 1)?;
        Ok(Self { r, d })
    }

    pub fn lambda(&self, i: usize) -> Result<f64> {
        lambda(self.r, self.d, i)
    }

    pub fn prob_paper(&self, g: usize) -> Result<f64> {
        girth_prob_paper(self.r, self.d, g)
    }

    pub fn prob_poisson(&self, g: usize) -> Result<f64> {
        girth_prob_poisson(self.r, self.d, g)
    }
}

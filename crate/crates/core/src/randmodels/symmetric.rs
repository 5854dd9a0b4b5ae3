use num_bigint::BigUint;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::{Error, Permutation, Result};

/// Uniform element of `X(n, r)`, the permutations of `0..n` made of `n/r`
/// disjoint `r`-cycles.
///
/// A uniform shuffle is cut into consecutive blocks of `r`, each read as a
/// cycle; every target permutation has the same number of preimages.
pub fn sample_x<R: Rng + ?Sized>(n: usize, r: usize, rng: &mut R) -> Result<Permutation> {
    if r < 2 || !n.is_multiple_of(r) {
        return Err(Error::InvalidParams(format!("X(n, r) needs r >= 2 dividing n (got n={n}, r={r})")));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut image = vec![0; n];
    for block in order.chunks(r) {
        for (i, &a) in block.iter().enumerate() {
            image[a] = block[(i + 1) % r];
        }
    }
    Permutation::new(image)
}

/// `|X(n, r)| = n! / ((n/r)! r^(n/r))`.
pub fn x_size(n: usize, r: usize) -> Result<BigUint> {
    if r == 0 || !n.is_multiple_of(r) {
        return Err(Error::InvalidParams(format!("x_size needs r >= 1 dividing n (got n={n}, r={r})")));
    }
    let blocks = n / r;
    let mut num = BigUint::one();
    for i in 1..=n {
        num *= i;
    }
    let mut den = BigUint::from(r).pow(blocks as u32);
    for i in 1..=blocks {
        den *= i;
    }
    Ok(num / den)
}

/// Generators `tau_1..tau_d` of a Cayley hypergraph on `S_n`, each a
/// product of `n/r` disjoint `r`-cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleySpec {
    n: usize,
    r: usize,
    taus: Vec<Permutation>,
}

impl CayleySpec {
    pub fn new(n: usize, r: usize, taus: Vec<Permutation>) -> Result<Self> {
        if r < 3 || !n.is_multiple_of(r) {
            return Err(Error::InvalidParams(format!("need r >= 3 dividing n (got n={n}, r={r})")));
        }
        if taus.len() < 2 {
            return Err(Error::InvalidParams(format!("need at least 2 generators (got {})", taus.len())));
        }
        for (i, t) in taus.iter().enumerate() {
            if t.len() != n || t.cycle_type().iter().any(|&c| c != r) {
                return Err(Error::InvalidParams(format!("generator {i} is not a product of {r}-cycles on {n} points")));
            }
        }
        Ok(Self { n, r, taus })
    }

    /// `d` independent uniform draws from `X(n, r)`.
    pub fn random<R: Rng + ?Sized>(n: usize, r: usize, d: usize, rng: &mut R) -> Result<Self> {
        if r < 3 {
            return Err(Error::InvalidParams(format!("need r >= 3 (got {r})")));
        }
        let taus = (0..d).map(|_| sample_x(n, r, rng)).collect::<Result<Vec<_>>>()?;
        Self::new(n, r, taus)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn d(&self) -> usize {
        self.taus.len()
    }

    pub fn taus(&self) -> &[Permutation] {
        &self.taus
    }

    /// `powers()[j][m] = tau_j^m` for `m` in `0..r`.
    pub(crate) fn powers(&self) -> Vec<Vec<Permutation>> {
        self.taus
            .iter()
            .map(|t| (0..self.r as i64).map(|m| t.power(m)).collect())
            .collect()
    }
}

/// First `(i, k, j, l)`, generators 1-based and `i < j`, with
/// `tau_i^k = tau_j^l` for `k, l` in `1..r`.
pub fn condition6_violation(spec: &CayleySpec) -> Option<(usize, usize, usize, usize)> {
    let powers = spec.powers();
    for i in 0..spec.d() {
        for j in i + 1..spec.d() {
            for k in 1..spec.r {
                for l in 1..spec.r {
                    if powers[i][k] == powers[j][l] {
                        return Some((i + 1, k, j + 1, l));
                    }
                }
            }
        }
    }
    None
}

/// True iff no nontrivial power of one generator equals a nontrivial power
/// of another.
pub fn check_condition6(spec: &CayleySpec) -> bool {
    condition6_violation(spec).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashMap;

    fn enumerate_x(n: usize, r: usize) -> Vec<Permutation> {
        let total: u64 = (1..=n as u64).product();
        (0..total)
            .map(|k| Permutation::unrank(n, k))
            .filter(|p| p.cycle_type().iter().all(|&c| c == r))
            .collect()
    }

    #[test]
    fn sizes() {
        assert_eq!(x_size(6, 3).unwrap(), BigUint::from(40u32));
        assert_eq!(x_size(6, 2).unwrap(), BigUint::from(15u32));
        assert_eq!(x_size(7, 7).unwrap(), BigUint::from(720u32));
        assert_eq!(x_size(4, 1).unwrap(), BigUint::one());
        for (n, r) in [(6, 3), (6, 2), (4, 2), (8, 4), (8, 2), (6, 6)] {
            assert_eq!(x_size(n, r).unwrap(), BigUint::from(enumerate_x(n, r).len()));
        }
        assert!(x_size(7, 3).is_err());
        assert!(x_size(3, 0).is_err());
    }

    #[test]
    fn sampler_shape_and_support() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(sample_x(7, 3, &mut rng).is_err());
        assert!(sample_x(4, 1, &mut rng).is_err());
        let mut counts = HashMap::new();
        for _ in 0..10_000 {
            let p = sample_x(3, 3, &mut rng).unwrap();
            assert_eq!(p.cycle_type(), vec![3]);
            *counts.entry(p).or_insert(0u32) += 1;
        }
        assert_eq!(counts.len(), 2);
        // 4 sigma around 5000 with sigma = 50
        assert!(counts.values().all(|&c| (4800..=5200).contains(&c)));
    }

    #[test]
    fn spec_validation() {
        let t = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        assert!(CayleySpec::new(3, 3, vec![t.clone()]).is_err());
        assert!(CayleySpec::new(3, 3, vec![t.clone(), Permutation::identity(3)]).is_err());
        assert!(CayleySpec::new(4, 3, vec![t.clone(), t.clone()]).is_err());
        let spec = CayleySpec::new(3, 3, vec![t.clone(), t.clone()]).unwrap();
        assert_eq!(condition6_violation(&spec), Some((1, 1, 2, 1)));
        let spec = CayleySpec::new(3, 3, vec![t.clone(), t.power(2)]).unwrap();
        assert_eq!(condition6_violation(&spec), Some((1, 1, 2, 2)));
        assert!(!check_condition6(&spec));
    }

    #[test]
    fn condition6_usually_holds_at_n6() {
        let ok = (0..1000u64)
            .filter(|&s| check_condition6(&CayleySpec::random(6, 3, 2, &mut ChaCha8Rng::seed_from_u64(s)).unwrap()))
            .count();
        assert!(ok >= 900, "{ok}");
    }
}

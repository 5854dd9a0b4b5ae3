use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A bijection on `0..n`, stored as its image array.
///
/// Products compose right to left: `p.compose(&q)` maps `i` to `p(q(i))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("{image:?}")));
            }
        }
        Ok(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self { image: (0..n).collect() }
    }

    /// Builds a permutation from disjoint cycles; `[a, b, c]` maps
    /// `a -> b -> c -> a`. Points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a >= n || std::mem::replace(&mut touched[a], true) {
                    return Err(Error::InvalidPermutation(format!("cycles {cycles:?}")));
                }
                image[a] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Self { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch { left: self.len(), right: other.len() });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Self { image: other.image.iter().map(|&x| self.image[x]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.len()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x] = i;
        }
        Self { image }
    }

    /// `self^k`; negative exponents give powers of the inverse.
    pub fn power(&self, k: i64) -> Self {
        let mut image = vec![0; self.len()];
        for cycle in self.cycles() {
            let len = cycle.len() as i64;
            let shift = k.rem_euclid(len) as usize;
            for (i, &a) in cycle.iter().enumerate() {
                image[a] = cycle[(i + shift) % cycle.len()];
            }
        }
        Self { image }
    }

    /// Disjoint cycles including fixed points, each starting at its least
    /// element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.image[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths in ascending order; they sum to `n`.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    /// Position in the lexicographic order of `S_n` (Lehmer code).
    pub fn rank(&self) -> u64 {
        let n = self.len();
        let mut rank = 0u64;
        for i in 0..n {
            let smaller_after = self.image[i + 1..].iter().filter(|&&x| x < self.image[i]).count();
            rank = rank * (n - i) as u64 + smaller_after as u64;
        }
        rank
    }

    /// Inverse of [`Permutation::rank`]; `rank` must be below `n!`.
    pub fn unrank(n: usize, mut rank: u64) -> Self {
        let mut digits = vec![0usize; n];
        for i in (0..n).rev() {
            let base = (n - i) as u64;
            digits[i] = (rank % base) as usize;
            rank /= base;
        }
        let mut pool: Vec<usize> = (0..n).collect();
        let image = digits.into_iter().map(|d| pool.remove(d)).collect();
        Self { image }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.image {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let image = s
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|e| Error::InvalidPermutation(format!("{t}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(image)
    }
}

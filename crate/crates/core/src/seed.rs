//! Deterministic seed splitting.
//!
//! Trial `t` of a job with master seed `s` draws from a ChaCha8 stream
//! seeded with `derive(s, t)`, where
//!
//! ```text
//! splitmix64(x):
//!     z = x + 0x9E3779B97F4A7C15            (wrapping)
//!     z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//!     z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//!     return z ^ (z >> 31)
//! derive(s, t) = splitmix64(s ^ splitmix64(t))
//! ```
//!
//! The stream of trial `t` is therefore independent of scheduling and of
//! how many other trials run.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn derive(master: u64, index: u64) -> u64 {
    splitmix64(master ^ splitmix64(index))
}

pub fn trial_rng(master: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive(master, index))
}

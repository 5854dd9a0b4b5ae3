//! Closed-form girth and order bounds.
//!
//! Vertex-count bounds are exact big integers; the log-scale bounds use the
//! natural logarithm.

use std::fmt::Write;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Result};

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond { Ok(()) } else { Err(Error::InvalidParams(msg())) }
}

fn check_rdg(r: usize, d: usize, g: usize) -> Result<()> {
    check(r >= 3 && d >= 2 && g >= 3, || format!("need r >= 3, d >= 2, g >= 3 (got r={r}, d={d}, g={g})"))
}

/// `sum_{i<k} q^i`
fn geometric(q: &BigUint, k: usize) -> BigUint {
    let mut sum = BigUint::zero();
    let mut term = BigUint::one();
    for _ in 0..k {
        sum += &term;
        term *= q;
    }
    sum
}

/// Minimum vertex count of a linear `r`-uniform `d`-regular hypergraph of
/// girth `g`: the size of a radius-`k` ball for `g = 2k+1`, or of the
/// distance-`(k-1)` neighbourhood of an edge for `g = 2k`.
pub fn moore_min_vertices(r: usize, d: usize, g: usize) -> Result<BigUint> {
    check_rdg(r, d, g)?;
    let q = BigUint::from((d - 1) * (r - 1));
    let k = g / 2;
    let sum = geometric(&q, k);
    Ok(if g % 2 == 1 { BigUint::one() + BigUint::from(d * (r - 1)) * sum } else { BigUint::from(r) * sum })
}

/// Moore bound `n_0(g, d)` for `d`-regular graphs of girth `g`.
pub fn graph_moore_bound(d: usize, g: usize) -> Result<BigUint> {
    check(d >= 3 && g >= 3, || format!("need d >= 3, g >= 3 (got d={d}, g={g})"))?;
    let q = BigUint::from(d - 1);
    let k = g / 2;
    let sum = geometric(&q, k);
    Ok(if g % 2 == 1 { BigUint::one() + BigUint::from(d) * sum } else { BigUint::from(2u32) * sum })
}

fn check_nrd(n: usize, r: usize, d: usize) -> Result<()> {
    check(n >= 1 && r >= 3 && d >= 2, || format!("need n >= 1, r >= 3, d >= 2 (got n={n}, r={r}, d={d})"))
}

fn log_branching(r: usize, d: usize) -> f64 {
    ((r - 1) as f64).ln() + ((d - 1) as f64).ln()
}

/// Largest girth compatible with the Moore-type bound:
/// `2 ln n / (ln(r-1) + ln(d-1)) + 2`.
pub fn girth_upper_bound(n: usize, r: usize, d: usize) -> Result<f64> {
    check_nrd(n, r, d)?;
    Ok(2.0 * (n as f64).ln() / log_branching(r, d) + 2.0)
}

/// Girth guaranteed for a vertex-minimal hypergraph on (at least) `n`
/// vertices: `(ln n - ln 4) / (ln(d-1) + ln(r-1)) - 1`.
pub fn girth_lower_bound_existential(n: usize, r: usize, d: usize) -> Result<f64> {
    check_nrd(n, r, d)?;
    Ok(((n as f64).ln() - 4f64.ln()) / log_branching(r, d) - 1.0)
}

/// Upper bound on the order of a vertex-minimal linear `r`-uniform
/// `d`-regular hypergraph of girth at least `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexUpperBound {
    /// `(r-1)(1 + d(r-1) sum_{i<g} ((d-1)(r-1))^i)`
    pub exact: BigUint,
    /// `4((d-1)(r-1))^(g+1)`
    pub crude: BigUint,
}

pub fn es_vertex_upper(r: usize, d: usize, g: usize) -> Result<VertexUpperBound> {
    check_rdg(r, d, g)?;
    let q = BigUint::from((d - 1) * (r - 1));
    let ball = BigUint::one() + BigUint::from(d * (r - 1)) * geometric(&q, g);
    let exact = BigUint::from(r - 1) * ball;
    let crude = BigUint::from(4u32) * q.pow((g + 1) as u32);
    if exact >= crude {
        return Err(Error::InvariantViolation(format!("exact bound {exact} >= crude bound {crude}")));
    }
    Ok(VertexUpperBound { exact, crude })
}

/// `c0 sqrt(n ln n / (r(r-1)(ln(d-1) + ln(r-1))))`, the high-probability
/// girth of a random Cayley hypergraph on `S_n`. `c0` must lie in `[0, 1/2)`.
pub fn cayley_girth_bound(n: usize, r: usize, d: usize, c0: f64) -> Result<f64> {
    check(r >= 3 && d >= 2 && n >= r && n.is_multiple_of(r), || {
        format!("need r >= 3, d >= 2, r | n (got n={n}, r={r}, d={d})")
    })?;
    check((0.0..0.5).contains(&c0), || format!("c0 = {c0} outside [0, 1/2)"))?;
    let n_f = n as f64;
    let denom = (r * (r - 1)) as f64 * log_branching(r, d);
    Ok(c0 * (n_f * n_f.ln() / denom).sqrt())
}

/// All bounds for one parameter triple.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundsReport {
    pub n: usize,
    pub r: usize,
    pub d: usize,
    /// `(g, moore_min_vertices(r, d, g))` for each tabulated `g`.
    pub moore_min_vertices: Vec<(usize, BigUint)>,
    pub girth_upper: f64,
    pub girth_lower_exist: f64,
    pub es_vertex_upper: Vec<(usize, VertexUpperBound)>,
    /// `(c0, bound)`; absent when `r` does not divide `n`.
    pub cayley_bound: Option<(f64, f64)>,
}

impl BoundsReport {
    /// Tabulates the per-`g` bounds for `g` in `3..=g_max`.
    pub fn new(n: usize, r: usize, d: usize, g_max: usize, c0: f64) -> Result<Self> {
        check_nrd(n, r, d)?;
        check(g_max >= 3, || format!("g_max = {g_max} < 3"))?;
        let moore = (3..=g_max).map(|g| moore_min_vertices(r, d, g).map(|b| (g, b))).collect::<Result<_>>()?;
        let es = (3..=g_max).map(|g| es_vertex_upper(r, d, g).map(|b| (g, b))).collect::<Result<_>>()?;
        let cayley_bound = if n.is_multiple_of(r) && n >= r { Some((c0, cayley_girth_bound(n, r, d, c0)?)) } else { None };
        Ok(Self {
            n,
            r,
            d,
            moore_min_vertices: moore,
            girth_upper: girth_upper_bound(n, r, d)?,
            girth_lower_exist: girth_lower_bound_existential(n, r, d)?,
            es_vertex_upper: es,
            cayley_bound,
        })
    }

    /// Flat `key value` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n {}\nr {}\nd {}", self.n, self.r, self.d).unwrap();
        writeln!(out, "girth_upper {:.6}", self.girth_upper).unwrap();
        writeln!(out, "girth_lower_exist {:.6}", self.girth_lower_exist).unwrap();
        if let Some((c0, b)) = self.cayley_bound {
            writeln!(out, "cayley_bound c0={c0} {b:.6}").unwrap();
        }
        for (g, b) in &self.moore_min_vertices {
            writeln!(out, "moore_min_vertices g={g} {b}").unwrap();
        }
        for (g, b) in &self.es_vertex_upper {
            writeln!(out, "es_vertex_upper g={g} {} crude={}", b.exact, b.crude).unwrap();
        }
        out
    }

    /// One row per `g`; scalar bounds are repeated on every row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,r,d,g,moore_min_vertices,es_vertex_upper,es_vertex_crude,girth_upper,girth_lower_exist,cayley_c0,cayley_bound\n");
        let (c0, cb) = match self.cayley_bound {
            Some((c0, b)) => (c0.to_string(), format!("{b:.6}")),
            None => ("NA".into(), "NA".into()),
        };
        for ((g, moore), (_, es)) in self.moore_min_vertices.iter().zip(&self.es_vertex_upper) {
            writeln!(
                out,
                "{},{},{},{g},{moore},{},{},{:.6},{:.6},{c0},{cb}",
                self.n, self.r, self.d, es.exact, es.crude, self.girth_upper, self.girth_lower_exist
            )
            .unwrap();
        }
        out
    }
}

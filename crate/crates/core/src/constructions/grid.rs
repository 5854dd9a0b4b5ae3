use crate::{Error, Hypergraph, Result};

/// Largest vertex count [`grid_hypergraph`] will build.
pub const GRID_MAX_VERTICES: usize = 1 << 24;

/// All axis-parallel lines of `Z_r^d`.
///
/// The point `x` is encoded as `sum_i x_i r^i`. Edges are listed axis by
/// axis, each axis in ascending order of the line's base point (`x_i = 0`).
/// The result is linear, `r`-uniform and `d`-regular with `d r^(d-1)` edges.
pub fn grid_hypergraph(r: usize, d: usize) -> Result<Hypergraph> {
    if r < 3 || d < 2 {
        return Err(Error::InvalidParams(format!("grid needs r >= 3, d >= 2 (got r={r}, d={d})")));
    }
    let size = (r as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    if size > GRID_MAX_VERTICES as u128 {
        return Err(Error::SizeBudgetExceeded { size, budget: GRID_MAX_VERTICES as u128 });
    }
    let n = size as usize;
    let mut edges = Vec::with_capacity(d * n / r);
    let mut stride = 1;
    for _axis in 0..d {
        for x in 0..n {
            if (x / stride) % r == 0 {
                edges.push((0..r).map(|t| x + t * stride).collect::<Vec<_>>());
            }
        }
        stride *= r;
    }
    Hypergraph::new(n, edges)
}

/// The Fano plane: seven points, seven lines, `PG(2, 2)`.
pub fn fano_plane() -> Hypergraph {
    Hypergraph::new(7, [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]])
        .expect("Fano plane")
}

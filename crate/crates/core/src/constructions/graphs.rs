use std::collections::BTreeSet;

use crate::{Error, Graph, Hypergraph, Result};

/// Hypergraph on the edges of a cubic graph, with one hyperedge per graph
/// vertex made of its three incident edges. Vertex `i` of the result is
/// edge `i` of `g`; hyperedge `w` comes from graph vertex `w`.
///
/// The result is 3-uniform, 2-regular and has the girth of `g`.
pub fn midpoint_construction(g: &Graph) -> Result<Hypergraph> {
    if let Some(w) = (0..g.n()).find(|&w| g.degree(w) != 3) {
        return Err(Error::NotCubic { vertex: w, degree: g.degree(w) });
    }
    let mut incident = vec![Vec::with_capacity(3); g.n()];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    Hypergraph::new(g.m(), incident)
}

/// Sides of a regular bipartite graph with equal sides, and its degree.
fn regular_bipartite_sides(g: &Graph) -> Result<(Vec<bool>, usize)> {
    let side = g
        .bipartition()
        .ok_or_else(|| Error::NotBipartiteRegular("graph has an odd cycle".into()))?;
    let right = side.iter().filter(|&&s| s).count();
    if 2 * right != g.n() {
        return Err(Error::NotBipartiteRegular(format!("sides have {} and {right} vertices", g.n() - right)));
    }
    let k = if g.n() == 0 { 0 } else { g.regularity().ok_or_else(|| Error::NotBipartiteRegular("graph is not regular".into()))? };
    Ok((side, k))
}

/// Augmenting-path search from left vertex `x` through the residual graph.
fn augment(x: usize, adj: &[BTreeSet<usize>], mate: &mut [Option<usize>], visited: &mut [bool]) -> bool {
    for &y in &adj[x] {
        if std::mem::replace(&mut visited[y], true) {
            continue;
        }
        if mate[y].is_none_or(|x2| augment(x2, adj, mate, visited)) {
            mate[y] = Some(x);
            return true;
        }
    }
    false
}

/// Perfect matchings partitioning the edges, each as `partner[v]`.
fn factorize(g: &Graph, side: &[bool], k: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(u, v) in g.edges() {
        let (x, y) = if side[u] { (v, u) } else { (u, v) };
        adj[x].insert(y);
    }
    let left: Vec<usize> = (0..n).filter(|&v| !side[v]).collect();
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        let mut mate = vec![None; n];
        for &x in &left {
            let mut visited = vec![false; n];
            if !augment(x, &adj, &mut mate, &mut visited) {
                return Err(Error::InvariantViolation("regular bipartite residual without a perfect matching".into()));
            }
        }
        let mut partner = vec![usize::MAX; n];
        for (y, x) in mate.iter().enumerate() {
            if let Some(x) = *x {
                partner[x] = y;
                partner[y] = x;
                adj[x].remove(&y);
            }
        }
        out.push(partner);
    }
    Ok(out)
}

/// Splits a `k`-regular bipartite graph with equal sides into `k`
/// edge-disjoint perfect matchings, by repeated maximum matching on what is
/// left. Each matching lists its edges as `(u, v)`, `u < v`, ascending.
pub fn bipartite_1_factorization(g: &Graph) -> Result<Vec<Vec<(usize, usize)>>> {
    let (side, k) = regular_bipartite_sides(g)?;
    let partners = factorize(g, &side, k)?;
    Ok(partners
        .into_iter()
        .map(|p| (0..g.n()).filter(|&v| p[v] > v).map(|v| (v, p[v])).collect())
        .collect())
}

/// Groups the edges of a `2(r-1)s`-regular bipartite graph into
/// `(r-1)`-edge stars so that every vertex lies in `rs` stars, and returns
/// the hypergraph of star vertex sets.
///
/// The graph is split into perfect matchings `M_0, M_1, ..`; round `j`
/// (of `s`) takes the next `r - 1` matchings for stars centred on the first
/// side and the following `r - 1` for stars centred on the second. Vertex
/// labels are those of `g`.
pub fn star_partition_construction(g: &Graph, r: usize, s: usize) -> Result<Hypergraph> {
    if r < 3 || s < 1 {
        return Err(Error::ParamMismatch(format!("need r >= 3 and s >= 1 (got r={r}, s={s})")));
    }
    let side = g
        .bipartition()
        .ok_or_else(|| Error::NotBipartiteRegular("graph has an odd cycle".into()))?;
    let right = side.iter().filter(|&&b| b).count();
    if 2 * right != g.n() {
        return Err(Error::ParamMismatch(format!("sides have {} and {right} vertices", g.n() - right)));
    }
    let want = 2 * (r - 1) * s;
    match g.regularity() {
        Some(k) if k == want => {}
        other => return Err(Error::ParamMismatch(format!("need a {want}-regular graph, degree is {other:?}"))),
    }
    let matchings = factorize(g, &side, want)?;
    let mut edges = Vec::with_capacity(g.m() / (r - 1));
    for round in 0..s {
        for (half, centre_side) in [false, true].into_iter().enumerate() {
            let first = (2 * round + half) * (r - 1);
            let group = &matchings[first..first + r - 1];
            for c in (0..g.n()).filter(|&v| side[v] == centre_side) {
                let mut star = vec![c];
                star.extend(group.iter().map(|p| p[c]));
                edges.push(star);
            }
        }
    }
    Hypergraph::new(g.n(), edges)
}

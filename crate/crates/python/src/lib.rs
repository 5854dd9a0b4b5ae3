//! Python bindings: `import pyhygirth`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hygirth::constructions::{self, LiftConfig};
use hygirth::girth::{self as g, Girth};
use hygirth::hypercore::io;
use hygirth::neg_girth::{self, NegGirth};
use hygirth::{bounds, randmodels};

fn err(e: hygirth::Error) -> PyErr {
    PyValueError::new_err(format!("{}: {e}", e.kind()))
}

/// `(value, exact)`: the girth and whether it is exact; a capped search
/// that found nothing gives `(cap, False)`. Infinite girth is `None`.
fn girth_tuple(girth: Girth) -> (Option<usize>, bool) {
    match girth {
        Girth::Finite(l) => (Some(l), true),
        Girth::Infinite => (None, true),
        Girth::AtLeast(c) => (Some(c), false),
    }
}

#[pyclass(name = "Hypergraph", frozen)]
struct PyHypergraph {
    inner: hygirth::Hypergraph,
}

#[pymethods]
impl PyHypergraph {
    #[new]
    fn new(n: usize, edges: Vec<Vec<usize>>) -> PyResult<Self> {
        hygirth::Hypergraph::new(n, edges).map(|inner| Self { inner }).map_err(err)
    }

    #[staticmethod]
    fn from_hyg(text: &str) -> PyResult<Self> {
        let inner = io::parse_hyg(text).and_then(io::HygFile::into_simple).map_err(err)?;
        Ok(Self { inner })
    }

    fn to_hyg(&self) -> String {
        io::write_hyg(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<Vec<usize>> {
        self.inner.edges().to_vec()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(err(hygirth::Error::IndexOutOfRange { vertex: v, n: self.inner.n() }));
        }
        Ok(self.inner.degree(v))
    }

    fn is_linear(&self) -> bool {
        self.inner.is_linear()
    }

    fn is_uniform(&self, r: usize) -> bool {
        self.inner.is_uniform(r)
    }

    fn is_regular(&self, d: usize) -> bool {
        self.inner.is_regular(d)
    }

    #[pyo3(signature = (cap=None))]
    fn girth(&self, cap: Option<usize>) -> (Option<usize>, bool) {
        girth_tuple(g::berge_girth(&self.inner, cap).girth)
    }

    /// Edges and vertices of a shortest Berge cycle, if any.
    fn shortest_cycle(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        g::berge_girth(&self.inner, None).witness.map(|w| (w.edges, w.vertices))
    }

    fn count_cycles(&self, length: usize) -> PyResult<u64> {
        g::count_cycles(&self.inner, length).map_err(err)
    }

    fn distance(&self, u: usize, v: usize) -> Option<usize> {
        g::distance(&self.inner, u, v)
    }

    fn __repr__(&self) -> String {
        format!("Hypergraph(n={}, m={})", self.inner.n(), self.inner.m())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

fn wrap(inner: hygirth::Hypergraph) -> PyHypergraph {
    PyHypergraph { inner }
}

#[pyfunction]
fn grid_hypergraph(r: usize, d: usize) -> PyResult<PyHypergraph> {
    constructions::grid_hypergraph(r, d).map(wrap).map_err(err)
}

#[pyfunction]
fn fano_plane() -> PyHypergraph {
    wrap(constructions::fano_plane())
}

#[pyfunction]
#[pyo3(signature = (h, girth, seed=0, budget=200))]
fn lift_to_girth(py: Python<'_>, h: &PyHypergraph, girth: usize, seed: u64, budget: usize) -> PyResult<PyHypergraph> {
    let config = LiftConfig { attempts_per_round: budget, ..LiftConfig::default() };
    py.detach(|| constructions::lift_to_girth(&h.inner, girth, &mut ChaCha8Rng::seed_from_u64(seed), config))
        .map(|o| wrap(o.hypergraph))
        .map_err(err)
}

#[pyfunction]
fn surgery_minimize(h: &PyHypergraph, girth: usize) -> PyResult<PyHypergraph> {
    constructions::surgery_minimize(&h.inner, girth).map(|o| wrap(o.hypergraph)).map_err(err)
}

#[pyfunction]
fn moore_min_vertices(r: usize, d: usize, girth: usize) -> PyResult<num_bigint::BigUint> {
    bounds::moore_min_vertices(r, d, girth).map_err(err)
}

#[pyfunction]
fn girth_upper_bound(n: usize, r: usize, d: usize) -> PyResult<f64> {
    bounds::girth_upper_bound(n, r, d).map_err(err)
}

#[pyfunction]
fn x_size(n: usize, r: usize) -> PyResult<num_bigint::BigUint> {
    randmodels::x_size(n, r).map_err(err)
}

/// Image array of a uniform element of `X(n, r)`.
#[pyfunction]
#[pyo3(signature = (n, r, seed=0))]
fn sample_x(n: usize, r: usize, seed: u64) -> PyResult<Vec<usize>> {
    randmodels::sample_x(n, r, &mut ChaCha8Rng::seed_from_u64(seed)).map(|p| p.image().to_vec()).map_err(err)
}

/// Girth of the Cayley hypergraph on `S_n` with generators given as image
/// arrays.
#[pyfunction]
#[pyo3(signature = (r, taus, cap=None))]
fn cayley_girth(py: Python<'_>, r: usize, taus: Vec<Vec<usize>>, cap: Option<usize>) -> PyResult<(Option<usize>, bool)> {
    let n = taus.first().map_or(0, Vec::len);
    let taus = taus.into_iter().map(hygirth::Permutation::new).collect::<hygirth::Result<Vec<_>>>().map_err(err)?;
    let spec = randmodels::CayleySpec::new(n, r, taus).map_err(err)?;
    py.detach(|| randmodels::cayley_girth(&spec, cap)).map(|res| girth_tuple(res.girth)).map_err(err)
}

#[pyfunction]
fn lambda_(r: usize, d: usize, i: usize) -> PyResult<f64> {
    randmodels::lambda(r, d, i).map_err(err)
}

/// CSV table of the configuration-model girth experiment.
#[pyfunction]
fn config_experiment(py: Python<'_>, n: usize, r: usize, d: usize, g_max: usize, trials: u64, seed: u64) -> PyResult<String> {
    py.detach(|| randmodels::girth_distribution_experiment(n, r, d, g_max, trials, seed))
        .map(|t| t.to_csv(env!("CARGO_PKG_VERSION")))
        .map_err(err)
}

/// `(g, witness)`, `g` is `None` when nothing qualifies up to `cap`.
#[pyfunction]
#[pyo3(signature = (h, k, cap=10))]
fn minus_k_girth(h: &PyHypergraph, k: usize, cap: usize) -> PyResult<(Option<usize>, Option<Vec<usize>>)> {
    let res = neg_girth::minus_k_girth(&h.inner, k, cap).map_err(err)?;
    let g = match res.g {
        NegGirth::Found(g) => Some(g),
        NegGirth::NotFound(_) => None,
    };
    Ok((g, res.witness))
}

#[pymodule]
fn pyhygirth(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHypergraph>()?;
    m.add_function(wrap_pyfunction!(grid_hypergraph, m)?)?;
    m.add_function(wrap_pyfunction!(fano_plane, m)?)?;
    m.add_function(wrap_pyfunction!(lift_to_girth, m)?)?;
    m.add_function(wrap_pyfunction!(surgery_minimize, m)?)?;
    m.add_function(wrap_pyfunction!(moore_min_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(girth_upper_bound, m)?)?;
    m.add_function(wrap_pyfunction!(x_size, m)?)?;
    m.add_function(wrap_pyfunction!(sample_x, m)?)?;
    m.add_function(wrap_pyfunction!(cayley_girth, m)?)?;
    m.add("lambda_", wrap_pyfunction!(lambda_, m)?)?;
    m.add_function(wrap_pyfunction!(config_experiment, m)?)?;
    m.add_function(wrap_pyfunction!(minus_k_girth, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}

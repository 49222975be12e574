//! Python bindings: `import ddmop`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use ddmop_core::generators::{self, InnerTriangulation};
use ddmop_core::{exact, graphfile, peel, rainbow, recognition, Error, VertexSet};

pyo3::create_exception!(ddmop, BudgetExceeded, PyRuntimeError);
pyo3::create_exception!(ddmop, InvariantViolation, PyRuntimeError);

fn to_py(err: Error) -> PyErr {
    match err {
        Error::BudgetExceeded { .. } => BudgetExceeded::new_err(err.to_string()),
        Error::InvariantViolation(_) => InvariantViolation::new_err(err.to_string()),
        _ => PyValueError::new_err(err.to_string()),
    }
}

#[pyclass(name = "Graph", module = "ddmop", frozen)]
struct PyGraph {
    inner: ddmop_core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        ddmop_core::Graph::new(n, &edges).map(|inner| PyGraph { inner }).map_err(to_py)
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        graphfile::read_graph(text).map(|inner| PyGraph { inner }).map_err(to_py)
    }

    fn to_edge_list(&self) -> String {
        graphfile::write_graph(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn closed_neighborhood(&self, v: usize) -> PyResult<Vec<usize>> {
        self.inner.closed_neighborhood(v).map(|s| s.to_vec()).map_err(to_py)
    }

    fn degree_two_vertices(&self) -> Vec<usize> {
        self.inner.degree_two_vertices().to_vec()
    }

    fn is_double_dominating(&self, vertices: Vec<usize>) -> PyResult<bool> {
        let s = VertexSet::from_vertices(self.inner.n(), vertices);
        self.inner.is_double_dominating(&s).map_err(to_py)
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }
}

#[pyclass(name = "Embedding", module = "ddmop", frozen, get_all)]
struct PyEmbedding {
    cycle: Vec<usize>,
    chords: Vec<(usize, usize)>,
    internal_triangles: Vec<(usize, usize, usize)>,
    striped: bool,
}

#[pymethods]
impl PyEmbedding {
    fn __repr__(&self) -> String {
        format!("Embedding(cycle={:?}, chords={:?}, striped={})", self.cycle, self.chords, self.striped)
    }
}

#[pyclass(name = "DominationResult", module = "ddmop", frozen, get_all)]
struct PyDominationResult {
    set: Vec<usize>,
    method: String,
    claimed_bound: Option<usize>,
}

#[pymethods]
impl PyDominationResult {
    fn __len__(&self) -> usize {
        self.set.len()
    }

    fn __repr__(&self) -> String {
        format!("DominationResult(method={:?}, size={}, claimed_bound={:?})", self.method, self.set.len(), self.claimed_bound)
    }
}

impl From<ddmop_core::DominationResult> for PyDominationResult {
    fn from(r: ddmop_core::DominationResult) -> Self {
        PyDominationResult { set: r.set.to_vec(), method: r.method.name().to_string(), claimed_bound: r.claimed_bound }
    }
}

#[pyclass(name = "SolverReport", module = "ddmop", frozen, get_all)]
struct PySolverReport {
    optimum: usize,
    witness: Vec<usize>,
    nodes_explored: u64,
    elapsed_seconds: f64,
}

#[pymethods]
impl PySolverReport {
    fn __repr__(&self) -> String {
        format!("SolverReport(optimum={}, nodes_explored={})", self.optimum, self.nodes_explored)
    }
}

impl From<exact::SolverReport> for PySolverReport {
    fn from(r: exact::SolverReport) -> Self {
        PySolverReport {
            optimum: r.optimum,
            witness: r.witness.to_vec(),
            nodes_explored: r.nodes_explored,
            elapsed_seconds: r.elapsed.as_secs_f64(),
        }
    }
}

fn wrap(g: PyResult<ddmop_core::Graph>) -> PyResult<PyGraph> {
    g.map(|inner| PyGraph { inner })
}

#[pyfunction]
fn recognize_mop(g: &PyGraph) -> PyResult<PyEmbedding> {
    let emb = recognition::recognize_mop(&g.inner).map_err(to_py)?;
    let internal = recognition::internal_triangles(&emb, &g.inner).map_err(to_py)?;
    Ok(PyEmbedding {
        cycle: emb.cycle().to_vec(),
        chords: emb.chords().to_vec(),
        striped: internal.is_empty(),
        internal_triangles: internal.into_iter().map(|[a, b, c]| (a, b, c)).collect(),
    })
}

/// Returns `(steps, kernel)` where each step is `(removed, left, right)`.
#[pyfunction]
#[allow(clippy::type_complexity)]
fn recognize_two_tree(g: &PyGraph) -> PyResult<(Vec<(usize, usize, usize)>, (usize, usize, usize))> {
    let p = recognition::recognize_two_tree(&g.inner).map_err(to_py)?;
    let [a, b, c] = p.kernel;
    Ok((p.steps.iter().map(|s| (s.removed, s.left, s.right)).collect(), (a, b, c)))
}

#[pyfunction]
fn peel_three_coloring(g: &PyGraph) -> PyResult<Vec<usize>> {
    let p = recognition::recognize_two_tree(&g.inner).map_err(to_py)?;
    peel::peel_three_coloring(&g.inner, &p).map(|c| c.color_of).map_err(to_py)
}

#[pyfunction]
fn rainbow_four_coloring(g: &PyGraph) -> PyResult<Vec<usize>> {
    let emb = recognition::recognize_mop(&g.inner).map_err(to_py)?;
    rainbow::rainbow_four_coloring(&g.inner, &emb).map(|c| c.color_of).map_err(to_py)
}

#[pyfunction]
fn peel_double_domination(g: &PyGraph) -> PyResult<PyDominationResult> {
    peel::peel_double_domination(&g.inner).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn rainbow_double_domination(g: &PyGraph) -> PyResult<PyDominationResult> {
    let emb = recognition::recognize_mop(&g.inner).map_err(to_py)?;
    rainbow::rainbow_double_domination(&g.inner, &emb).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn degree_set_double_domination(g: &PyGraph) -> PyResult<PyDominationResult> {
    rainbow::degree_set_double_domination(&g.inner).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn dispatch_bound(g: &PyGraph) -> PyResult<PyDominationResult> {
    rainbow::dispatch_bound(&g.inner).map(Into::into).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (g, budget=None))]
fn exact_gamma_x2(py: Python<'_>, g: &PyGraph, budget: Option<u64>) -> PyResult<PySolverReport> {
    let graph = g.inner.clone();
    py.detach(move || exact::exact_gamma_x2(&graph, budget)).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn brute_force_gamma_x2(py: Python<'_>, g: &PyGraph) -> PyResult<PySolverReport> {
    let graph = g.inner.clone();
    py.detach(move || exact::brute_force_gamma_x2(&graph)).map(Into::into).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (k, inner="fan", seed=None))]
fn family_u(k: usize, inner: &str, seed: Option<u64>) -> PyResult<PyGraph> {
    let inner = match inner {
        "fan" => InnerTriangulation::Fan,
        "random" => InnerTriangulation::RandomBinary,
        other => return Err(PyValueError::new_err(format!("inner must be 'fan' or 'random', got {other:?}"))),
    };
    wrap(generators::generate_family_u(k, inner, seed).map_err(to_py))
}

#[pyfunction]
fn family_a(q: usize) -> PyResult<PyGraph> {
    wrap(generators::generate_family_a(q).map_err(to_py))
}

#[pyfunction]
fn fan(n: usize) -> PyResult<PyGraph> {
    wrap(generators::generate_fan(n).map_err(to_py))
}

#[pyfunction]
fn random_mop(n: usize, seed: u64) -> PyResult<PyGraph> {
    wrap(generators::generate_random_mop(n, seed).map_err(to_py))
}

#[pymodule]
fn ddmop(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyEmbedding>()?;
    m.add_class::<PyDominationResult>()?;
    m.add_class::<PySolverReport>()?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    m.add("InvariantViolation", m.py().get_type::<InvariantViolation>())?;
    m.add_function(wrap_pyfunction!(recognize_mop, m)?)?;
    m.add_function(wrap_pyfunction!(recognize_two_tree, m)?)?;
    m.add_function(wrap_pyfunction!(peel_three_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(rainbow_four_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(peel_double_domination, m)?)?;
    m.add_function(wrap_pyfunction!(rainbow_double_domination, m)?)?;
    m.add_function(wrap_pyfunction!(degree_set_double_domination, m)?)?;
    m.add_function(wrap_pyfunction!(dispatch_bound, m)?)?;
    m.add_function(wrap_pyfunction!(exact_gamma_x2, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_gamma_x2, m)?)?;
    m.add_function(wrap_pyfunction!(family_u, m)?)?;
    m.add_function(wrap_pyfunction!(family_a, m)?)?;
    m.add_function(wrap_pyfunction!(fan, m)?)?;
    m.add_function(wrap_pyfunction!(random_mop, m)?)?;
    Ok(())
}

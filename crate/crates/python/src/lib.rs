//! Python bindings for `rainbow_core`.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

use rainbow_core::bcc::{self, BccInstance};
use rainbow_core::error::Error;
use rainbow_core::exact::{self, DEFAULT_EDGE_LIMIT};
use rainbow_core::graph::{self, Graph};
use rainbow_core::rainbow::{self, EdgeColouring, DEFAULT_MASK_BUDGET};
use rainbow_core::reduction::{self, CnfFormula};
use rainbow_core::{dot, equivalence, formats, split_rc};

create_exception!(rainbow_py, CapacityError, PyException);
create_exception!(rainbow_py, DisconnectedError, PyException);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Capacity { .. } => CapacityError::new_err(e.to_string()),
        Error::Disconnected => DisconnectedError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: Graph::new(n, edges).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: formats::parse_graph(text).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        PyGraph {
            inner: Graph::complete(n),
        }
    }

    #[staticmethod]
    fn path(n: usize) -> Self {
        PyGraph {
            inner: Graph::path(n),
        }
    }

    #[staticmethod]
    fn cycle(n: usize) -> Self {
        PyGraph {
            inner: Graph::cycle(n),
        }
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn neighbours(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.vertex_count() {
            return Err(PyValueError::new_err(format!("no vertex {v}")));
        }
        Ok(self.inner.neighbours(v).to_vec())
    }

    fn to_text(&self) -> String {
        formats::write_graph(&self.inner)
    }

    /// Graphviz source; edges are coloured when `colours` is given.
    #[pyo3(signature = (colours=None))]
    fn to_dot(&self, colours: Option<Vec<u32>>) -> PyResult<String> {
        let c = colours.map(|c| colouring(&self.inner, c)).transpose()?;
        Ok(dot::export_dot(&self.inner, c.as_ref()))
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, m={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

fn colouring(g: &Graph, colours: Vec<u32>) -> PyResult<EdgeColouring> {
    let k = colours.iter().max().map_or(1, |&c| c as usize + 1);
    EdgeColouring::new(g, k, colours).map_err(to_py)
}

/// `(clique, independent)` or `None` when the graph is not split.
#[pyfunction]
fn recognize_split(g: &PyGraph) -> Option<(Vec<usize>, Vec<usize>)> {
    graph::recognize_split(&g.inner).map(|sp| (sp.clique, sp.independent))
}

#[pyfunction]
fn is_threshold(g: &PyGraph) -> bool {
    graph::is_threshold(&g.inner)
}

/// `(ok, failing_pair)`; `failing_pair` is the smallest pair without a
/// rainbow path.
#[pyfunction]
#[pyo3(signature = (g, colours, budget=DEFAULT_MASK_BUDGET))]
fn verify_rainbow(
    g: &PyGraph,
    colours: Vec<u32>,
    budget: usize,
) -> PyResult<(bool, Option<(usize, usize)>)> {
    let c = colouring(&g.inner, colours)?;
    let r = rainbow::verify_rainbow_with_budget(&g.inner, &c, budget).map_err(to_py)?;
    Ok((r.connected, r.failing_pair))
}

#[pyfunction]
fn rc_lower_bound(g: &PyGraph) -> PyResult<usize> {
    rainbow::rc_lower_bound(&g.inner).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (g, edge_limit=DEFAULT_EDGE_LIMIT))]
fn rc_exact(g: &PyGraph, edge_limit: usize) -> PyResult<(usize, Vec<u32>)> {
    let (k, c) = exact::rc_exact(&g.inner, edge_limit).map_err(to_py)?;
    Ok((k, c.colours().to_vec()))
}

/// Split graphs only.
#[pyfunction]
#[pyo3(signature = (g, edge_limit=DEFAULT_EDGE_LIMIT))]
fn rc_split(g: &PyGraph, edge_limit: usize) -> PyResult<(usize, Vec<u32>)> {
    let (k, c) = split_rc::rc_split(&g.inner, edge_limit).map_err(to_py)?;
    Ok((k, c.colours().to_vec()))
}

/// Whether a split graph has a rainbow colouring with `k >= 4` colours.
#[pyfunction]
fn decide_rc_at_most_k(g: &PyGraph, k: usize) -> PyResult<bool> {
    split_rc::decide_rc_at_most_k(&g.inner, k).map_err(to_py)
}

#[pyfunction]
fn colour_with_k(g: &PyGraph, k: usize) -> PyResult<Vec<u32>> {
    let c = split_rc::colour_with_k(&g.inner, k).map_err(to_py)?;
    Ok(c.colours().to_vec())
}

/// A 2-colour rainbow colouring, or `None`.
#[pyfunction]
fn solve_rc2(g: &PyGraph) -> PyResult<Option<Vec<u32>>> {
    let c = exact::solve_rc2(&g.inner).map_err(to_py)?;
    Ok(c.map(|c| c.colours().to_vec()))
}

fn formula(num_vars: usize, clauses: Vec<[i32; 3]>) -> PyResult<CnfFormula> {
    CnfFormula::new(num_vars, clauses).map_err(to_py)
}

/// Base graph edges and family of the BCC instance built from a 3-CNF.
#[pyfunction]
fn sat_to_bcc(num_vars: usize, clauses: Vec<[i32; 3]>) -> PyResult<(PyGraph, Vec<Vec<usize>>)> {
    let (inst, _) = reduction::sat_to_bcc(&formula(num_vars, clauses)?);
    Ok((PyGraph { inner: inst.base }, inst.family))
}

/// The graph that has `rc <= 2` exactly when the 3-CNF is satisfiable.
#[pyfunction]
fn sat_to_rc2(num_vars: usize, clauses: Vec<[i32; 3]>) -> PyResult<PyGraph> {
    let (inst, _) = reduction::sat_to_bcc(&formula(num_vars, clauses)?);
    let (g, _) = reduction::bcc_to_rc2(&inst);
    Ok(PyGraph { inner: g })
}

/// `X(T_i)` per set, or `None` when no bipartitioning covers the base graph.
#[pyfunction]
#[pyo3(signature = (base, family, budget=rainbow_core::parity::DEFAULT_NODE_BUDGET))]
fn solve_bcc(
    base: &PyGraph,
    family: Vec<Vec<usize>>,
    budget: u64,
) -> PyResult<Option<Vec<Vec<usize>>>> {
    let inst = BccInstance::new(base.inner.clone(), family).map_err(to_py)?;
    let x = bcc::solve_bcc(&inst, budget).map_err(to_py)?;
    Ok(x.map(|x| x.x_of))
}

#[pyfunction]
fn threshold_kraft(g: &PyGraph) -> PyResult<bool> {
    equivalence::threshold_kraft(&g.inner).map_err(to_py)
}

#[pymodule]
fn rainbow_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add("CapacityError", m.py().get_type::<CapacityError>())?;
    m.add("DisconnectedError", m.py().get_type::<DisconnectedError>())?;
    m.add_function(wrap_pyfunction!(recognize_split, m)?)?;
    m.add_function(wrap_pyfunction!(is_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(verify_rainbow, m)?)?;
    m.add_function(wrap_pyfunction!(rc_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(rc_exact, m)?)?;
    m.add_function(wrap_pyfunction!(rc_split, m)?)?;
    m.add_function(wrap_pyfunction!(decide_rc_at_most_k, m)?)?;
    m.add_function(wrap_pyfunction!(colour_with_k, m)?)?;
    m.add_function(wrap_pyfunction!(solve_rc2, m)?)?;
    m.add_function(wrap_pyfunction!(sat_to_bcc, m)?)?;
    m.add_function(wrap_pyfunction!(sat_to_rc2, m)?)?;
    m.add_function(wrap_pyfunction!(solve_bcc, m)?)?;
    m.add_function(wrap_pyfunction!(threshold_kraft, m)?)?;
    Ok(())
}

//! Python bindings. Reports and certificates cross the boundary as JSON
//! strings; graphs are wrapped in the `Graph` class.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use kpham::constructions::{self, FamilySpec};
use kpham::graph::{self as kgraph};
use kpham::harness::{self, RunOptions};
use kpham::{conditions, solver, CycleCertificate, Error, KPartiteGraph};

create_exception!(kpham_py, GuardExceeded, PyRuntimeError, "The input is larger than the configured size guard.");

fn py_err(e: Error) -> PyErr {
    match e {
        Error::GuardExceeded { .. } => GuardExceeded::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("values serialize")
}

/// A balanced k-partite graph.
#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: KPartiteGraph,
}

#[pymethods]
impl PyGraph {
    /// Graph with the given parts (lists of vertex ids) and edges.
    #[new]
    fn new(parts: Vec<Vec<usize>>, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self { inner: KPartiteGraph::from_parts(&parts, &edges).map_err(py_err)? })
    }

    /// Parts `{0..m-1}, {m..2m-1}, ...` with `m = n / k`.
    #[staticmethod]
    fn block(n: usize, k: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self { inner: KPartiteGraph::with_block_parts(n, k, &edges).map_err(py_err)? })
    }

    /// Graph with every vertex in its own part.
    #[staticmethod]
    fn general(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self { inner: KPartiteGraph::general(n, &edges).map_err(py_err)? })
    }

    #[staticmethod]
    fn decode(text: &str) -> PyResult<Self> {
        Ok(Self { inner: kgraph::decode(text).map_err(py_err)? })
    }

    fn encode(&self) -> String {
        kgraph::encode(&self.inner)
    }

    fn to_dot(&self) -> String {
        kgraph::export_dot(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k()
    }

    fn parts(&self) -> Vec<Vec<usize>> {
        self.inner.parts().to_vec()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_edge(u, v)
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(py_err(Error::VertexOutOfRange { vertex: v, n: self.inner.n() }));
        }
        Ok(self.inner.degree(v))
    }

    fn min_degree(&self) -> usize {
        self.inner.min_degree()
    }

    fn independence_number(&self) -> PyResult<usize> {
        kgraph::independence_number(&self.inner, 64).map_err(py_err)
    }

    fn vertex_connectivity(&self) -> usize {
        kgraph::vertex_connectivity(&self.inner)
    }

    /// A Hamiltonian cycle as a vertex list, or `None`.
    fn hamiltonian_cycle(&self) -> PyResult<Option<Vec<usize>>> {
        Ok(solver::find_hamiltonian_cycle(&self.inner).map_err(py_err)?.map(|c| c.vertices))
    }

    fn longest_cycle(&self) -> PyResult<Vec<usize>> {
        Ok(solver::longest_cycle(&self.inner).map_err(py_err)?.vertices)
    }

    fn longest_cycles(&self) -> PyResult<Vec<Vec<usize>>> {
        Ok(solver::enumerate_longest_cycles(&self.inner).map_err(py_err)?.into_iter().map(|c| c.vertices).collect())
    }

    fn verify_cycle(&self, cycle: Vec<usize>) -> bool {
        solver::verify_cycle(&self.inner, &CycleCertificate::new(cycle))
    }

    /// A non-Hamiltonicity certificate as JSON, or `None`.
    fn witness(&self) -> Option<String> {
        solver::non_hamiltonicity_witness(&self.inner).map(|w| to_json(&w))
    }

    fn check_witness(&self, witness_json: &str) -> PyResult<bool> {
        let w: solver::NonHamWitness =
            serde_json::from_str(witness_json).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(w.check(&self.inner))
    }

    fn is_strongly_dominating(&self, cycle: Vec<usize>) -> PyResult<bool> {
        conditions::is_strongly_dominating(&self.inner, &CycleCertificate::new(cycle)).map_err(py_err)
    }

    /// `"holds"`, `"not_applicable"` or `"violated"`.
    fn domcycle_lemma(&self) -> PyResult<String> {
        Ok(match conditions::check_domcycle_lemma(&self.inner).map_err(py_err)? {
            conditions::DomCycleOutcome::Holds => "holds",
            conditions::DomCycleOutcome::NotApplicable => "not_applicable",
            conditions::DomCycleOutcome::Violated(_) => "violated",
        }
        .to_string())
    }

    /// The bipartite degree condition on the graph between `side_a` and
    /// `side_b`, with `side_b` as `V`.
    fn chvatal(&self, side_a: Vec<usize>, side_b: Vec<usize>) -> PyResult<bool> {
        let a = self.inner.vertex_set(side_a);
        let b = self.inner.vertex_set(side_b);
        let h = self.inner.induced_bipartite(&a, &b).map_err(py_err)?;
        conditions::chvatal_bipartite_condition(&h, 1).map_err(py_err)
    }

    /// `"InF1"`, `"IsoF2"`, `"InF3"` or `"None"`.
    fn recognize(&self) -> PyResult<String> {
        Ok(format!("{:?}", constructions::recognize(&self.inner).map_err(py_err)?))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, k={}, edges={})", self.inner.n(), self.inner.k(), self.inner.edge_count())
    }
}

#[pyfunction]
fn theorem_threshold(n: usize, k: usize) -> PyResult<i64> {
    kpham::theorem_threshold(n, k).map_err(py_err)
}

#[pyfunction]
fn required_degree(n: usize, k: usize) -> PyResult<i64> {
    kpham::required_degree(n, k).map_err(py_err)
}

#[pyfunction]
fn is_exception(n: usize, k: usize) -> PyResult<bool> {
    kpham::is_exception(n, k).map_err(py_err)
}

/// The older rational bound as `(numerator, denominator)`.
#[pyfunction]
fn cfgjl_bound(n: usize, k: usize) -> PyResult<(i64, i64)> {
    let r = kpham::cfgjl_bound(n, k).map_err(py_err)?;
    Ok((*r.numer(), *r.denom()))
}

#[pyfunction]
fn classify_rounding(n: usize, k: usize) -> PyResult<String> {
    Ok(format!("{:?}", kpham::classify_rounding(n, k).map_err(py_err)?))
}

/// Every threshold quantity for `(n, k)` as JSON.
#[pyfunction]
fn threshold_profile(n: usize, k: usize) -> PyResult<String> {
    Ok(to_json(&kpham::ThresholdProfile::new(n, k).map_err(py_err)?))
}

#[pyfunction]
#[pyo3(signature = (k, m, sizes=None))]
fn build_family_f(k: usize, m: usize, sizes: Option<Vec<usize>>) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: constructions::build_family_f(k, m, sizes.as_deref()).map_err(py_err)? })
}

#[pyfunction]
#[pyo3(signature = (k, choices=None))]
fn build_family_f1(k: usize, choices: Option<Vec<Vec<usize>>>) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: constructions::build_family_f1(k, choices.as_deref()).map_err(py_err)? })
}

#[pyfunction]
fn build_f2() -> PyGraph {
    PyGraph { inner: constructions::build_f2() }
}

#[pyfunction]
fn build_family_f3(k: usize) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: constructions::build_family_f3(k, &Default::default()).map_err(py_err)? })
}

/// Builds a member from a TOML family spec, e.g. `family = "F3"`, `k = 4`,
/// `y_prime = 7`.
#[pyfunction]
fn build_family(spec_toml: &str) -> PyResult<PyGraph> {
    let spec = FamilySpec::from_toml(spec_toml).map_err(py_err)?;
    Ok(PyGraph { inner: spec.build().map_err(py_err)? })
}

fn opts(jobs: usize) -> RunOptions {
    RunOptions { jobs: jobs.max(1), ..RunOptions::default() }
}

/// JSON report of an exhaustive run.
#[pyfunction]
#[pyo3(signature = (n, k, floor=None, jobs=1))]
fn exhaustive_verify(py: Python<'_>, n: usize, k: usize, floor: Option<usize>, jobs: usize) -> PyResult<String> {
    py.detach(|| harness::exhaustive_verify(n, k, floor, None, &opts(jobs))).map(|r| r.to_json()).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (n, k, trials, seed, floor=None, jobs=1))]
fn sample_verify(
    py: Python<'_>,
    n: usize,
    k: usize,
    trials: u64,
    seed: u64,
    floor: Option<usize>,
    jobs: usize,
) -> PyResult<String> {
    py.detach(|| harness::sample_verify(n, k, trials, seed, floor, &opts(jobs))).map(|r| r.to_json()).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (n, k, jobs=1))]
fn characterization_check(py: Python<'_>, n: usize, k: usize, jobs: usize) -> PyResult<String> {
    py.detach(|| harness::characterization_check(n, k, None, &opts(jobs))).map(|r| r.to_json()).map_err(py_err)
}

#[pyfunction]
fn tightness_scan(k_max: usize, m_max: usize) -> PyResult<String> {
    harness::tightness_scan(k_max, m_max, &RunOptions::default()).map(|r| r.to_json()).map_err(py_err)
}

#[pyfunction]
fn facts_report(k_max: usize, m_max: usize) -> PyResult<String> {
    harness::facts_report(k_max, m_max, &RunOptions::default()).map(|r| r.to_json()).map_err(py_err)
}

#[pymodule]
fn kpham_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add("GuardExceeded", m.py().get_type::<GuardExceeded>())?;
    m.add_function(wrap_pyfunction!(theorem_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(required_degree, m)?)?;
    m.add_function(wrap_pyfunction!(is_exception, m)?)?;
    m.add_function(wrap_pyfunction!(cfgjl_bound, m)?)?;
    m.add_function(wrap_pyfunction!(classify_rounding, m)?)?;
    m.add_function(wrap_pyfunction!(threshold_profile, m)?)?;
    m.add_function(wrap_pyfunction!(build_family_f, m)?)?;
    m.add_function(wrap_pyfunction!(build_family_f1, m)?)?;
    m.add_function(wrap_pyfunction!(build_f2, m)?)?;
    m.add_function(wrap_pyfunction!(build_family_f3, m)?)?;
    m.add_function(wrap_pyfunction!(build_family, m)?)?;
    m.add_function(wrap_pyfunction!(exhaustive_verify, m)?)?;
    m.add_function(wrap_pyfunction!(sample_verify, m)?)?;
    m.add_function(wrap_pyfunction!(characterization_check, m)?)?;
    m.add_function(wrap_pyfunction!(tightness_scan, m)?)?;
    m.add_function(wrap_pyfunction!(facts_report, m)?)?;
    Ok(())
}

//! Python bindings: the hypergraph type plus the construction, counting,
//! density, and pipeline entry points. Exact counts cross the boundary as
//! Python ints; verdicts and reports as plain strings and dicts.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use hypercycle::constructions as cons;
use hypercycle::counting;
use hypercycle::oracles;
use hypercycle::sidorenko;
use hypercycle::supersat;
use hypercycle::textio;
use hypercycle::RngSeed;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An immutable r-uniform hypergraph on vertices `0..n`.
#[pyclass(name = "Hypergraph", frozen, from_py_object)]
#[derive(Clone)]
struct PyHypergraph {
    inner: hypercycle::Hypergraph,
}

#[pymethods]
impl PyHypergraph {
    #[new]
    fn new(r: usize, n: usize, edges: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(PyHypergraph { inner: hypercycle::Hypergraph::new(r, n, edges).map_err(value_err)? })
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyHypergraph { inner: textio::parse_hypergraph(text).map_err(value_err)? })
    }

    fn to_text(&self) -> String {
        textio::format_hypergraph(&self.inner)
    }

    #[getter]
    fn r(&self) -> usize {
        self.inner.uniformity()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<Vec<usize>> {
        self.inner.edges().to_vec()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.vertex_count() {
            return Err(value_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn has_edge(&self, vertices: Vec<usize>) -> bool {
        self.inner.has_edge(&vertices)
    }

    fn codegree(&self, subset: Vec<usize>) -> PyResult<u64> {
        self.inner.codegree(&subset).map_err(value_err)
    }

    fn max_codegree(&self, j: usize) -> PyResult<u64> {
        self.inner.max_codegree(j).map_err(value_err)
    }

    fn is_linear(&self) -> bool {
        self.inner.is_linear()
    }

    /// (subgraph, old_of_new): the induced subgraph on `keep`, densely
    /// relabeled, with the original label of each new vertex.
    fn induced_subgraph(&self, keep: Vec<usize>) -> (PyHypergraph, Vec<usize>) {
        let (sub, relab) = self.inner.induced_subgraph(&keep);
        (PyHypergraph { inner: sub }, relab)
    }

    fn peel_min_degree(&self, d_min: usize) -> (PyHypergraph, Vec<usize>) {
        let (sub, relab) = self.inner.peel_min_degree(d_min);
        (PyHypergraph { inner: sub }, relab)
    }

    fn distance_layers(&self, x: usize, depth: usize) -> PyResult<Vec<u64>> {
        self.inner.distance_layers(x, depth).map_err(value_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Hypergraph(r={}, n={}, edges={})",
            self.inner.uniformity(),
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }

    fn __eq__(&self, other: &PyHypergraph) -> bool {
        self.inner == other.inner
    }
}

#[pyfunction]
fn single_edge(r: usize) -> PyResult<PyHypergraph> {
    Ok(PyHypergraph { inner: cons::single_edge(r).map_err(value_err)? })
}

#[pyfunction]
fn linear_cycle(r: usize, l: usize) -> PyResult<PyHypergraph> {
    Ok(PyHypergraph { inner: cons::linear_cycle(r, l).map_err(value_err)? })
}

#[pyfunction]
fn linear_path(r: usize, l: usize) -> PyResult<PyHypergraph> {
    Ok(PyHypergraph { inner: cons::linear_path(r, l).map_err(value_err)? })
}

#[pyfunction]
fn steiner_triple_9() -> PyHypergraph {
    PyHypergraph { inner: cons::steiner_triple_9() }
}

#[pyfunction]
fn blow_up(h: &PyHypergraph, t: usize) -> PyResult<PyHypergraph> {
    Ok(PyHypergraph { inner: cons::blow_up(&h.inner, t).map_err(value_err)? })
}

#[pyfunction]
fn tensor_product(h1: &PyHypergraph, h2: &PyHypergraph) -> PyResult<PyHypergraph> {
    Ok(PyHypergraph { inner: cons::tensor_product(&h1.inner, &h2.inner).map_err(value_err)? })
}

#[pyfunction]
fn random_uniform(n: usize, r: usize, m: u64, seed: u64) -> PyResult<PyHypergraph> {
    Ok(PyHypergraph { inner: cons::random_uniform(n, r, m, RngSeed(seed)).map_err(value_err)? })
}

#[pyfunction]
fn percolate_vertices(py: Python<'_>, h: &PyHypergraph, p: f64, seed: u64) -> PyResult<Py<PyDict>> {
    let outcome = cons::percolate_vertices(&h.inner, p, RngSeed(seed)).map_err(value_err)?;
    let dict = PyDict::new(py);
    dict.set_item("graph", PyHypergraph { inner: outcome.graph }.into_pyobject(py)?)?;
    dict.set_item("kept", outcome.kept)?;
    dict.set_item("kept_count", outcome.kept_count)?;
    dict.set_item("surviving_edges", outcome.surviving_edges)?;
    Ok(dict.into())
}

#[pyfunction]
#[pyo3(signature = (n, r, g_min, attempts=2000, seed=0))]
fn greedy_high_girth(
    n: usize,
    r: usize,
    g_min: usize,
    attempts: u64,
    seed: u64,
) -> PyResult<PyHypergraph> {
    Ok(PyHypergraph {
        inner: cons::greedy_high_girth(n, r, g_min, attempts, RngSeed(seed)).map_err(value_err)?,
    })
}

#[pyfunction]
fn hom_count(pattern: &PyHypergraph, host: &PyHypergraph) -> PyResult<BigUint> {
    Ok(counting::hom_count(&pattern.inner, &host.inner).map_err(value_err)?.value)
}

#[pyfunction]
fn labeled_copy_count(pattern: &PyHypergraph, host: &PyHypergraph) -> PyResult<BigUint> {
    Ok(counting::labeled_copy_count(&pattern.inner, &host.inner).map_err(value_err)?.value)
}

#[pyfunction]
fn automorphism_count(pattern: &PyHypergraph) -> BigUint {
    counting::automorphism_count(&pattern.inner)
}

/// A Berge cycle witness: (vertices, edge ids).
type Witness = (Vec<usize>, Vec<usize>);

/// Berge girth with a witness: `(girth_or_None, witness_or_None)`.
#[pyfunction]
fn berge_girth(h: &PyHypergraph) -> (Option<usize>, Option<Witness>) {
    let report = counting::berge_girth(&h.inner);
    (report.girth, report.witness.map(|w| (w.vertices, w.edges)))
}

#[pyfunction]
fn count_linear_trees(h: &PyHypergraph, max_edges: usize) -> PyResult<BigUint> {
    counting::count_linear_trees(&h.inner, max_edges).map_err(value_err)
}

/// Histogram over homomorphic images keyed by `(is_linear_tree, edges)`.
#[pyfunction]
fn homomorphic_image_profile(
    py: Python<'_>,
    pattern: &PyHypergraph,
    host: &PyHypergraph,
) -> PyResult<Py<PyDict>> {
    let profile =
        counting::homomorphic_image_profile(&pattern.inner, &host.inner).map_err(value_err)?;
    let dict = PyDict::new(py);
    for (&(tree, k), &count) in &profile.histogram {
        dict.set_item((tree, k), count)?;
    }
    Ok(dict.into())
}

#[pyfunction]
fn sidorenko_check(pattern: &PyHypergraph, host: &PyHypergraph) -> PyResult<String> {
    let verdict = sidorenko::sidorenko_check(&pattern.inner, &host.inner).map_err(value_err)?;
    Ok(match verdict {
        sidorenko::SidorenkoVerdict::Holds => "holds".into(),
        sidorenko::SidorenkoVerdict::Violated => "violated".into(),
        sidorenko::SidorenkoVerdict::Undefined => "undefined".into(),
    })
}

#[pyfunction]
fn gap_estimate(pattern: &PyHypergraph, host: &PyHypergraph) -> PyResult<f64> {
    sidorenko::gap_estimate(&pattern.inner, &host.inner).map_err(value_err)
}

#[pyfunction]
fn hom_density(py: Python<'_>, pattern: &PyHypergraph, host: &PyHypergraph) -> PyResult<Py<PyDict>> {
    let report = sidorenko::hom_density(&pattern.inner, &host.inner).map_err(value_err)?;
    let dict = PyDict::new(py);
    dict.set_item("hom", report.hom)?;
    dict.set_item("log_tf", report.log_tf)?;
    dict.set_item("log_tk", report.log_tk)?;
    dict.set_item("gap_estimate", report.gap_estimate)?;
    Ok(dict.into())
}

#[pyfunction]
#[pyo3(signature = (h, delta, epsilon, pattern, seed=0))]
fn rescale_witness(
    py: Python<'_>,
    h: &PyHypergraph,
    delta: f64,
    epsilon: f64,
    pattern: &PyHypergraph,
    seed: u64,
) -> PyResult<Py<PyDict>> {
    let report = sidorenko::rescale_witness(&h.inner, delta, epsilon, &pattern.inner, RngSeed(seed))
        .map_err(value_err)?;
    let dict = PyDict::new(py);
    dict.set_item("target_delta", report.target_delta)?;
    dict.set_item("delta_prime", report.source_delta_prime)?;
    dict.set_item("achieved_delta", report.achieved_delta)?;
    dict.set_item("achieved_vertices", report.achieved_vertices)?;
    dict.set_item("achieved_edges", report.achieved_edges)?;
    dict.set_item("copies", report.copy_upper_observed)?;
    dict.set_item("trials", report.trials)?;
    match report.branch {
        sidorenko::RescaleBranch::BlowUp { t, copy_bound } => {
            dict.set_item("branch", "blow-up")?;
            dict.set_item("t", t)?;
            dict.set_item("copy_bound", copy_bound)?;
        }
        sidorenko::RescaleBranch::Percolation { p_raw, p, capped, success, .. } => {
            dict.set_item("branch", "percolation")?;
            dict.set_item("p_raw", p_raw)?;
            dict.set_item("p", p)?;
            dict.set_item("capped", capped)?;
            dict.set_item("success", success)?;
        }
    }
    dict.set_item("graph", PyHypergraph { inner: report.graph }.into_pyobject(py)?)?;
    Ok(dict.into())
}

/// Exponent algebra; rationals come back as `(numerator, denominator)`.
#[pyfunction]
#[pyo3(signature = (r, ell, n, edges, slack=0.0))]
fn bound_values(
    py: Python<'_>,
    r: usize,
    ell: usize,
    n: usize,
    edges: u64,
    slack: f64,
) -> PyResult<Py<PyDict>> {
    let b = supersat::bound_values(r, ell, n, edges, slack).map_err(value_err)?;
    let ratio = |x: &num_rational::BigRational| (x.numer().to_string(), x.denom().to_string());
    let dict = PyDict::new(py);
    dict.set_item("f_r", ratio(&b.f_r))?;
    dict.set_item("f_r_minus_1", b.f_r_minus_1.as_ref().map(ratio))?;
    dict.set_item("weaker_exponent", ratio(&b.weaker_exponent))?;
    dict.set_item("conditional_lower_gap", ratio(&b.conditional_lower_gap))?;
    dict.set_item("threshold_a", b.threshold_a)?;
    dict.set_item("delta", b.delta)?;
    dict.set_item("main_lower_bound_log", b.main_lower_bound_log)?;
    dict.set_item("conditional_copy_exponent", b.conditional_copy_exponent)?;
    Ok(dict.into())
}

fn certificate_dict(py: Python<'_>, cert: &supersat::CycleCertificate) -> PyResult<Py<PyDict>> {
    let dict = PyDict::new(py);
    dict.set_item("ell", cert.ell)?;
    dict.set_item("hinges", cert.hinges.clone())?;
    dict.set_item("interiors", cert.interiors.clone())?;
    dict.set_item("edges", cert.edges.clone())?;
    Ok(dict.into())
}

/// Runs the supersaturation pipeline; returns a dict with `certificates`,
/// `records`, and the `count` lower bound.
#[pyfunction]
#[pyo3(signature = (g, ell, mode="shadow", budget=32, seed=0))]
fn supersat_pipeline(
    py: Python<'_>,
    g: &PyHypergraph,
    ell: usize,
    mode: &str,
    budget: u64,
    seed: u64,
) -> PyResult<Py<PyDict>> {
    let mode = match mode {
        "induction" => supersat::PipelineMode::Induction,
        "shadow" => supersat::PipelineMode::Shadow,
        other => return Err(value_err(format!("mode must be induction or shadow, got {other}"))),
    };
    let outcome =
        supersat::supersat_pipeline(&g.inner, ell, mode, budget, RngSeed(seed)).map_err(value_err)?;
    let certs = PyList::empty(py);
    for cert in &outcome.certificates {
        certs.append(certificate_dict(py, cert)?)?;
    }
    let records = PyList::empty(py);
    for rec in &outcome.records {
        let d = PyDict::new(py);
        d.set_item("name", &rec.name)?;
        d.set_item("anchor", &rec.anchor)?;
        d.set_item("pass", rec.pass)?;
        d.set_item("values", rec.values.clone())?;
        records.append(d)?;
    }
    let dict = PyDict::new(py);
    dict.set_item("certificates", certs)?;
    dict.set_item("records", records)?;
    dict.set_item("count", outcome.certificate_count)?;
    Ok(dict.into())
}

/// Greedy cycle expansion on a host whose (r-1)-shadows all have codegree
/// at least `a`; returns certificates and the count report.
#[pyfunction]
#[pyo3(signature = (h, a, ell, budget=16, seed=0, sample=false))]
fn greedy_expand_cycles(
    py: Python<'_>,
    h: &PyHypergraph,
    a: u64,
    ell: usize,
    budget: u64,
    seed: u64,
    sample: bool,
) -> PyResult<Py<PyDict>> {
    let mode = if sample { supersat::ExpandMode::Sample } else { supersat::ExpandMode::Exhaustive };
    let outcome = supersat::greedy_expand_cycles(&h.inner, a, ell, budget, RngSeed(seed), mode)
        .map_err(value_err)?;
    let certs = PyList::empty(py);
    for cert in &outcome.certificates {
        certs.append(certificate_dict(py, cert)?)?;
    }
    let dict = PyDict::new(py);
    dict.set_item("certificates", certs)?;
    dict.set_item("count", outcome.count)?;
    dict.set_item("count_is_exact", outcome.count_is_exact)?;
    dict.set_item("floor", outcome.floor)?;
    dict.set_item("fast_path", outcome.fast_path)?;
    Ok(dict.into())
}

#[pyfunction]
fn brute_hom(pattern: &PyHypergraph, host: &PyHypergraph) -> PyResult<BigUint> {
    let budget = oracles::OracleBudget {
        max_pattern_vertices: pattern.inner.vertex_count(),
        max_host_vertices: host.inner.vertex_count(),
        max_sequence_length: 8,
    };
    oracles::brute_hom(&pattern.inner, &host.inner, budget).map_err(value_err)
}

#[pyfunction]
fn brute_copies(pattern: &PyHypergraph, host: &PyHypergraph) -> PyResult<BigUint> {
    let budget = oracles::OracleBudget {
        max_pattern_vertices: pattern.inner.vertex_count(),
        max_host_vertices: host.inner.vertex_count(),
        max_sequence_length: 8,
    };
    oracles::brute_copies(&pattern.inner, &host.inner, budget).map_err(value_err)
}

#[pymodule]
fn hypercycle_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHypergraph>()?;
    m.add_function(wrap_pyfunction!(single_edge, m)?)?;
    m.add_function(wrap_pyfunction!(linear_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(linear_path, m)?)?;
    m.add_function(wrap_pyfunction!(steiner_triple_9, m)?)?;
    m.add_function(wrap_pyfunction!(blow_up, m)?)?;
    m.add_function(wrap_pyfunction!(tensor_product, m)?)?;
    m.add_function(wrap_pyfunction!(random_uniform, m)?)?;
    m.add_function(wrap_pyfunction!(percolate_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_high_girth, m)?)?;
    m.add_function(wrap_pyfunction!(hom_count, m)?)?;
    m.add_function(wrap_pyfunction!(labeled_copy_count, m)?)?;
    m.add_function(wrap_pyfunction!(automorphism_count, m)?)?;
    m.add_function(wrap_pyfunction!(berge_girth, m)?)?;
    m.add_function(wrap_pyfunction!(count_linear_trees, m)?)?;
    m.add_function(wrap_pyfunction!(homomorphic_image_profile, m)?)?;
    m.add_function(wrap_pyfunction!(sidorenko_check, m)?)?;
    m.add_function(wrap_pyfunction!(gap_estimate, m)?)?;
    m.add_function(wrap_pyfunction!(hom_density, m)?)?;
    m.add_function(wrap_pyfunction!(rescale_witness, m)?)?;
    m.add_function(wrap_pyfunction!(bound_values, m)?)?;
    m.add_function(wrap_pyfunction!(supersat_pipeline, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_expand_cycles, m)?)?;
    m.add_function(wrap_pyfunction!(brute_hom, m)?)?;
    m.add_function(wrap_pyfunction!(brute_copies, m)?)?;
    Ok(())
}

//! Python bindings: the classifier, the built-in catalog, and both
//! numerical labs. Exact quantities cross the boundary as rational strings
//! ("3/2"); bracket entries use 1-based indices like the JSON file format.

use lpcoh_core::classifier;
use lpcoh_core::isoperimetry;
use lpcoh_core::rat::{format_rat, parse_rat, Rat};
use lpcoh_core::threshold;
use num_traits::Signed;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn rat_from_str(s: &str) -> PyResult<Rat> {
    parse_rat(s).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn tol_from_opt(tol: Option<&str>) -> PyResult<Rat> {
    match tol {
        None => Ok(lpcoh_core::rat::default_tol()),
        Some(s) => {
            let t = rat_from_str(s)?;
            if !t.is_positive() {
                return Err(PyValueError::new_err("tol must be positive"));
            }
            Ok(t)
        }
    }
}

fn weights_from_strs(weights: Vec<String>) -> PyResult<threshold::HeintzeModel> {
    let ws: PyResult<Vec<Rat>> = weights.iter().map(|w| rat_from_str(w)).collect();
    threshold::HeintzeModel::new(ws?).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Solvable Lie algebra over the rationals, given by bracket entries
/// (i, j, k, coef) meaning [e_i, e_j] = ... + coef * e_k with 1-based
/// indices; the reversed pair is filled by antisymmetry.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct LieAlgebra {
    inner: lpcoh_core::liealg::LieAlgebra,
}

#[pymethods]
impl LieAlgebra {
    #[new]
    #[pyo3(signature = (dim, brackets, basis=None))]
    fn new(
        dim: usize,
        brackets: Vec<(usize, usize, usize, String)>,
        basis: Option<Vec<String>>,
    ) -> PyResult<Self> {
        if dim < 1 {
            return Err(PyValueError::new_err("dim must be at least 1"));
        }
        if let Some(b) = &basis {
            if b.len() != dim {
                return Err(PyValueError::new_err("basis length must equal dim"));
            }
        }
        let mut entries = Vec::with_capacity(brackets.len());
        for (i, j, k, coef) in &brackets {
            if *i < 1 || *i > dim || *j < 1 || *j > dim || *k < 1 || *k > dim {
                return Err(PyValueError::new_err("bracket index out of range"));
            }
            if i == j {
                return Err(PyValueError::new_err("diagonal bracket entries must be zero"));
            }
            entries.push((i - 1, j - 1, k - 1, rat_from_str(coef)?));
        }
        Ok(LieAlgebra {
            inner: lpcoh_core::liealg::LieAlgebra::from_antisymmetric_entries(
                dim, basis, &entries,
            ),
        })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn basis_names(&self) -> Vec<String> {
        self.inner.basis_names().to_vec()
    }

    /// Violated structure identities, as strings; empty means valid.
    fn validate(&self) -> Vec<String> {
        self.inner.validate().violations.iter().map(|v| v.to_string()).collect()
    }

    fn is_solvable(&self) -> bool {
        self.inner.is_solvable()
    }

    fn is_nilpotent(&self) -> bool {
        self.inner.is_nilpotent()
    }

    /// The covector tau (trace of ad), as rational strings.
    fn modular_character(&self) -> Vec<String> {
        self.inner.modular_character().tau.iter().map(format_rat).collect()
    }

    #[pyo3(signature = (tol=None))]
    fn classify(&self, tol: Option<&str>) -> PyResult<Classification> {
        let t = tol_from_opt(tol)?;
        classifier::classify(&self.inner, &t)
            .map(Classification::from_core)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// "yes" | "no" | "indeterminate": nonconstant harmonic functions with
    /// L^2 gradient exist iff heintze with exponent below 2.
    #[pyo3(signature = (tol=None))]
    fn harmonic_l2_query(&self, tol: Option<&str>) -> PyResult<String> {
        let t = tol_from_opt(tol)?;
        classifier::harmonic_l2_query(&self.inner, &t)
            .map(|q| {
                match q {
                    classifier::HarmonicL2::Yes => "yes",
                    classifier::HarmonicL2::No => "no",
                    classifier::HarmonicL2::Indeterminate => "indeterminate",
                }
                .to_string()
            })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        format!("LieAlgebra(dim={})", self.inner.dim())
    }
}

/// Three-way verdict with the certified exponent enclosure.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Classification {
    #[pyo3(get)]
    verdict: String,
    /// (lo, hi) rational strings; None unless the verdict is "heintze".
    #[pyo3(get)]
    exponent: Option<(String, String)>,
    #[pyo3(get)]
    statements: Vec<String>,
    #[pyo3(get)]
    tau_is_zero: bool,
    #[pyo3(get)]
    kernel_nilpotent: Option<bool>,
    /// Ascending coefficients of the charpoly of ad_xi0 on ker tau.
    #[pyo3(get)]
    char_poly: Option<Vec<String>>,
}

impl Classification {
    fn from_core(c: classifier::Classification) -> Self {
        Classification {
            verdict: c.verdict.to_string(),
            exponent: c.exponent.as_ref().map(|e| (format_rat(&e.lo), format_rat(&e.hi))),
            statements: c.statements.iter().map(|s| s.to_string()).collect(),
            tau_is_zero: c.provenance.tau_is_zero,
            kernel_nilpotent: c.provenance.kernel_nilpotent,
            char_poly: c
                .provenance
                .char_poly
                .as_ref()
                .map(|p| p.coeffs().iter().map(format_rat).collect()),
        }
    }
}

#[pymethods]
impl Classification {
    fn __repr__(&self) -> String {
        match &self.exponent {
            Some((lo, hi)) => format!("Classification({}, exponent=[{lo}, {hi}])", self.verdict),
            None => format!("Classification({})", self.verdict),
        }
    }
}

/// Built-in catalog as (name, algebra, expected_verdict, expected_exponent).
#[pyfunction]
fn catalog() -> Vec<(String, LieAlgebra, String, Option<String>)> {
    lpcoh_core::catalog::entries()
        .into_iter()
        .map(|e| {
            (
                e.name.to_string(),
                LieAlgebra { inner: e.algebra },
                e.expected_verdict.to_string(),
                e.expected_exponent.as_ref().map(format_rat),
            )
        })
        .collect()
}

/// Exact rate analysis on a diagonal model: returns
/// (verdict, term_rates, critical_exponent) with rationals as strings.
#[pyfunction]
fn rate_analysis(weights: Vec<String>, p: &str) -> PyResult<(String, Vec<String>, String)> {
    let model = weights_from_strs(weights)?;
    let report = threshold::rate_analysis(&model, &rat_from_str(p)?)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok((
        match report.verdict {
            threshold::RateVerdict::Convergent => "convergent".to_string(),
            threshold::RateVerdict::Divergent => "divergent".to_string(),
        },
        report.term_rates.iter().map(format_rat).collect(),
        format_rat(&report.critical_exponent),
    ))
}

/// tau / lambda_1 for positive rational weights, exact.
#[pyfunction]
fn critical_exponent(weights: Vec<String>) -> PyResult<String> {
    Ok(format_rat(&weights_from_strs(weights)?.critical_exponent()))
}

/// ||du||_p^p of the step-times-bump test function, restricted to
/// t in [-cutoff, cutoff].
#[pyfunction]
#[pyo3(signature = (weights, p, cutoff=20.0, resolution=64))]
fn quadrature_norm(weights: Vec<String>, p: &str, cutoff: f64, resolution: usize) -> PyResult<f64> {
    let model = weights_from_strs(weights)?;
    let tf = threshold::TestFunction::standard(model.weights().len());
    threshold::quadrature_norm(&model, &tf, &rat_from_str(p)?, cutoff, resolution)
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Relative error of the flow-decay identity at time t.
#[pyfunction]
#[pyo3(signature = (weights, p, t, window=10.0, resolution=64))]
fn flow_decay_error(
    weights: Vec<String>,
    p: &str,
    t: f64,
    window: f64,
    resolution: usize,
) -> PyResult<f64> {
    let model = weights_from_strs(weights)?;
    let f = threshold::FlowTestFn::standard(model.weights().len());
    threshold::flow_decay_check(&model, &f, &rat_from_str(p)?, t, window, resolution)
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Word-metric ball in a model group ("grid:2", "sol:2,1,1,1",
/// "heisenberg", "tree:3").
#[pyclass(frozen)]
struct Graph {
    inner: isoperimetry::Graph,
}

#[pymethods]
impl Graph {
    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edges().len()
    }

    #[getter]
    fn interior_count(&self) -> usize {
        self.inner.interior_count()
    }

    fn edges(&self) -> Vec<(u32, u32)> {
        self.inner.edges().to_vec()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(vertices={}, edges={})",
            self.inner.vertex_count(),
            self.inner.edges().len()
        )
    }
}

#[pyfunction]
fn generate_ball(model: &str, radius: usize) -> PyResult<Graph> {
    let m: isoperimetry::BallModel =
        model.parse().map_err(|e: isoperimetry::IsoError| PyValueError::new_err(e.to_string()))?;
    isoperimetry::generate_ball(&m, radius)
        .map(|g| Graph { inner: g })
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// (lower, upper, method) enclosure of the Cheeger constant.
#[pyfunction]
fn cheeger_estimate(graph: &Graph) -> PyResult<(f64, f64, String)> {
    isoperimetry::cheeger_estimate(&graph.inner)
        .map(|c| (c.lower, c.upper, format!("{:?}", c.method)))
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Dirichlet p-Sobolev constant min ||du||_p / ||u||_p over functions
/// vanishing on the outermost shell.
#[pyfunction]
fn sobolev_p_constant(graph: &Graph, p: f64) -> PyResult<f64> {
    isoperimetry::sobolev_p_constant(&graph.inner, p)
        .map(|e| e.value)
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Radius scan: returns (rows, trend) where each row is
/// (radius, vertices, cheeger_lower, cheeger_upper, sobolev).
#[pyfunction]
#[pyo3(signature = (model, radii, p=1.0))]
fn dichotomy_scan(
    model: &str,
    radii: Vec<usize>,
    p: f64,
) -> PyResult<(Vec<(usize, usize, f64, f64, f64)>, String)> {
    let m: isoperimetry::BallModel =
        model.parse().map_err(|e: isoperimetry::IsoError| PyValueError::new_err(e.to_string()))?;
    let scan = isoperimetry::dichotomy_scan(&m, &radii, p)
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok((
        scan.rows
            .iter()
            .map(|r| (r.radius, r.vertices, r.cheeger.lower, r.cheeger.upper, r.sobolev))
            .collect(),
        format!("{:?}", scan.trend),
    ))
}

#[pymodule]
fn lpcoh(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<LieAlgebra>()?;
    m.add_class::<Classification>()?;
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(rate_analysis, m)?)?;
    m.add_function(wrap_pyfunction!(critical_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(quadrature_norm, m)?)?;
    m.add_function(wrap_pyfunction!(flow_decay_error, m)?)?;
    m.add_function(wrap_pyfunction!(generate_ball, m)?)?;
    m.add_function(wrap_pyfunction!(cheeger_estimate, m)?)?;
    m.add_function(wrap_pyfunction!(sobolev_p_constant, m)?)?;
    m.add_function(wrap_pyfunction!(dichotomy_scan, m)?)?;
    Ok(())
}

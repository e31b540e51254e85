//! Python bindings. Reports are returned as plain dicts and lists.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyModule;

use ::partor::analysis;
use ::partor::catalog;
use ::partor::clifford::{self, CliffordRep};
use ::partor::space::{self, SpaceFile};
use ::partor::suite::{self, SuiteOptions};
use ::partor::tensors;
use ::partor::Error;

create_exception!(partor, PartorError, PyException);
create_exception!(partor, InvalidInput, PartorError);
create_exception!(partor, CheckFailed, PartorError);
create_exception!(partor, UnknownSpace, PartorError);

fn to_py(err: Error) -> PyErr {
    let msg = err.to_string();
    match err.exit_code() {
        4 => UnknownSpace::new_err(msg),
        3 => CheckFailed::new_err(msg),
        _ => InvalidInput::new_err(msg),
    }
}

fn to_object<T: serde::Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PartorError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn options(tol: f64, seed: u64, max_clifford_dim: usize, perturb_tau: f64) -> SuiteOptions {
    SuiteOptions { tol, seed, max_clifford_dim, perturb_tau, ..SuiteOptions::default() }
}

fn rows(m: &nalgebra::DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows()).map(|i| m.row(i).iter().copied().collect()).collect()
}

/// A validated homogeneous space with its normal metric.
#[pyclass(module = "partor", frozen)]
struct Space {
    inner: space::Space,
    tol: f64,
}

#[pymethods]
impl Space {
    /// Look up a catalog entry by name.
    #[staticmethod]
    #[pyo3(signature = (name, tol = 1e-9))]
    fn catalog(name: &str, tol: f64) -> PyResult<Self> {
        let entry = catalog::get_space(name, tol).map_err(to_py)?;
        Ok(Self { inner: entry.space, tol })
    }

    /// Parse a space from its JSON description.
    #[staticmethod]
    #[pyo3(signature = (text, tol = 1e-9))]
    fn from_json(text: &str, tol: f64) -> PyResult<Self> {
        let inner = SpaceFile::from_json(text).and_then(|f| f.into_space(tol)).map_err(to_py)?;
        Ok(Self { inner, tol })
    }

    #[getter]
    fn name(&self) -> &str {
        &self.inner.name
    }

    /// `dim G/H`.
    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn dim_g(&self) -> usize {
        self.inner.algebra.dim()
    }

    #[getter]
    fn dim_h(&self) -> usize {
        self.inner.split.dim_h()
    }

    fn to_json(&self) -> String {
        self.inner.to_file().to_json()
    }

    /// `tau[i][j][k]` of the reductive connection.
    fn torsion(&self) -> PyResult<Vec<Vec<Vec<f64>>>> {
        let tau = tensors::reductive_torsion(&self.inner.split, self.tol).map_err(to_py)?;
        let m = tau.m();
        Ok((0..m).map(|i| (0..m).map(|j| (0..m).map(|k| tau.get(i, j, k)).collect()).collect()).collect())
    }

    /// Curvature operator on `Λ²p`, pairs `i<j` in lexicographic order.
    fn curvature_operator(&self) -> PyResult<Vec<Vec<f64>>> {
        let curv = tensors::reductive_curvature(&self.inner.split, self.tol).map_err(to_py)?;
        Ok(rows(curv.operator()))
    }

    fn curvature_eigenvalues(&self) -> PyResult<Vec<f64>> {
        let curv = tensors::reductive_curvature(&self.inner.split, self.tol).map_err(to_py)?;
        Ok(curv.eigenvalues())
    }

    /// Ricci tensor of the normal metric.
    fn ricci(&self) -> PyResult<Vec<Vec<f64>>> {
        let geo = suite::geometry(&self.inner, &options(self.tol, 42, 6, 0.0)).map_err(to_py)?;
        Ok(rows(&geo.pkg.ricci))
    }

    fn scalar_curvature(&self) -> PyResult<f64> {
        let geo = suite::geometry(&self.inner, &options(self.tol, 42, 6, 0.0)).map_err(to_py)?;
        Ok(geo.pkg.scalar)
    }

    /// Full analysis report as a dict.
    #[pyo3(signature = (full = false, seed = 42, max_clifford_dim = 6, perturb_tau = 0.0))]
    fn analyze(
        &self,
        py: Python<'_>,
        full: bool,
        seed: u64,
        max_clifford_dim: usize,
        perturb_tau: f64,
    ) -> PyResult<Py<PyAny>> {
        let opts = options(self.tol, seed, max_clifford_dim, perturb_tau);
        let report = analysis::analyze(&self.inner, &opts, full).map_err(to_py)?;
        to_object(py, &report)
    }

    /// Run suites (`lemma`, `normal`, `blw`, `rep`, `parity` or `all`); returns a list of reports.
    #[pyo3(signature = (suite = "all", seed = 42, max_clifford_dim = 6, perturb_tau = 0.0))]
    fn verify(
        &self,
        py: Python<'_>,
        suite: &str,
        seed: u64,
        max_clifford_dim: usize,
        perturb_tau: f64,
    ) -> PyResult<Py<PyAny>> {
        let kinds =
            analysis::suites_for(suite).ok_or_else(|| InvalidInput::new_err(format!("unknown suite '{suite}'")))?;
        let opts = options(self.tol, seed, max_clifford_dim, perturb_tau);
        let reports = suite::run_suites(&self.inner, &kinds, &opts).map_err(to_py)?;
        to_object(py, &reports)
    }

    fn __repr__(&self) -> String {
        format!("Space('{}', dim_g={}, m={})", self.inner.name, self.inner.algebra.dim(), self.inner.m())
    }
}

#[pyfunction]
fn list_spaces() -> Vec<&'static str> {
    catalog::list_spaces().to_vec()
}

/// Largest violation of the Clifford relations for the `m`-generator representation.
#[pyfunction]
fn clifford_relation_residual(m: usize) -> PyResult<f64> {
    Ok(CliffordRep::new(m).map_err(to_py)?.relation_residual())
}

/// Sign of the square of the volume element in dimension `m`.
#[pyfunction]
fn volume_square_sign(m: usize) -> f64 {
    clifford::volume_square_sign(m)
}

#[pymodule]
fn partor(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<Space>()?;
    m.add_function(wrap_pyfunction!(list_spaces, m)?)?;
    m.add_function(wrap_pyfunction!(clifford_relation_residual, m)?)?;
    m.add_function(wrap_pyfunction!(volume_square_sign, m)?)?;
    m.add("PartorError", py.get_type::<PartorError>())?;
    m.add("InvalidInput", py.get_type::<InvalidInput>())?;
    m.add("CheckFailed", py.get_type::<CheckFailed>())?;
    m.add("UnknownSpace", py.get_type::<UnknownSpace>())?;
    Ok(())
}

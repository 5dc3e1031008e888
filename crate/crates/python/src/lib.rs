//! Python bindings: exact scalars, forms, Lie algebras, and the analysis
//! entry points, mirroring the command-line surface.

use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyType;
use so3ni::error::Error;
use so3ni::exterior::{KForm, Vector};
use so3ni::liealg::{spec_from_json, spec_to_json, LieAlgebraSpec};
use so3ni::report::{analyze, analyze_product};
use so3ni::scalar::Scalar as CoreScalar;
use so3ni::search::{SearchConfig, SearchFilter};
use so3ni::su3::Factor;
use std::str::FromStr;

fn err(e: Error) -> PyErr {
    match e {
        Error::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// Exact element of Q(sqrt 3).
#[pyclass(name = "Scalar", frozen)]
#[derive(Clone)]
struct PyScalar(CoreScalar);

#[pymethods]
impl PyScalar {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        CoreScalar::from_str(text).map(PyScalar).map_err(err)
    }

    #[classmethod]
    fn sqrt3(_cls: &Bound<'_, PyType>) -> Self {
        PyScalar(CoreScalar::sqrt3())
    }

    #[classmethod]
    fn of(_cls: &Bound<'_, PyType>, numer: i64, denom: i64) -> PyResult<Self> {
        if denom == 0 {
            return Err(PyZeroDivisionError::new_err("zero denominator"));
        }
        Ok(PyScalar(CoreScalar::from_ratio(numer, denom)))
    }

    fn __add__(&self, other: &PyScalar) -> PyScalar {
        PyScalar(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &PyScalar) -> PyScalar {
        PyScalar(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &PyScalar) -> PyScalar {
        PyScalar(&self.0 * &other.0)
    }

    fn __truediv__(&self, other: &PyScalar) -> PyResult<PyScalar> {
        let inv = other.0.inv().map_err(err)?;
        Ok(PyScalar(&self.0 * &inv))
    }

    fn __neg__(&self) -> PyScalar {
        PyScalar(-&self.0)
    }

    fn __richcmp__(&self, other: &PyScalar, op: pyo3::basic::CompareOp) -> bool {
        let ord = self.0.cmp(&other.0);
        op.matches(ord)
    }

    fn inv(&self) -> PyResult<PyScalar> {
        self.0.inv().map(PyScalar).map_err(err)
    }

    fn sign(&self) -> i32 {
        self.0.sign()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Scalar('{}')", self.0)
    }
}

/// Alternating form on R^n with exact coefficients.
#[pyclass(name = "Form", frozen)]
#[derive(Clone)]
struct PyForm(KForm);

#[pymethods]
impl PyForm {
    /// A single term c * e^{indices} on R^n.
    #[new]
    fn new(n: u8, indices: Vec<u8>, c: &PyScalar) -> PyResult<Self> {
        if indices.iter().any(|&i| i == 0 || i > n) {
            return Err(PyValueError::new_err("indices must lie in 1..=n"));
        }
        Ok(PyForm(KForm::term(n, &indices, c.0.clone())))
    }

    #[classmethod]
    fn zero(_cls: &Bound<'_, PyType>, n: u8, k: u8) -> Self {
        PyForm(KForm::zero(n, k))
    }

    fn __add__(&self, other: &PyForm) -> PyResult<PyForm> {
        self.0.add(&other.0).map(PyForm).map_err(err)
    }

    fn __xor__(&self, other: &PyForm) -> PyResult<PyForm> {
        self.0.wedge(&other.0).map(PyForm).map_err(err)
    }

    fn wedge(&self, other: &PyForm) -> PyResult<PyForm> {
        self.0.wedge(&other.0).map(PyForm).map_err(err)
    }

    fn hodge(&self) -> PyForm {
        PyForm(self.0.hodge())
    }

    fn contract(&self, x: Vec<PyScalar>) -> PyResult<PyForm> {
        let v = Vector::from_components(x.into_iter().map(|s| s.0).collect());
        self.0.contract(&v).map(PyForm).map_err(err)
    }

    fn evaluate(&self, xs: Vec<Vec<PyScalar>>) -> PyResult<PyScalar> {
        let vs: Vec<Vector> = xs
            .into_iter()
            .map(|x| Vector::from_components(x.into_iter().map(|s| s.0).collect()))
            .collect();
        self.0.evaluate(&vs).map(PyScalar).map_err(err)
    }

    fn coefficient(&self, indices: Vec<u8>) -> PyScalar {
        PyScalar(self.0.coeff(&indices))
    }

    fn degree(&self) -> u8 {
        self.0.k
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Form('{}')", self.0)
    }
}

/// Lie algebra given by its structure equations.
#[pyclass(name = "LieAlgebra", frozen)]
#[derive(Clone)]
struct PyLieAlgebra(LieAlgebraSpec);

#[pymethods]
impl PyLieAlgebra {
    /// From the JSON spec encoding (same format as the CLI files).
    #[new]
    fn new(json: &str) -> PyResult<Self> {
        let value: serde_json::Value =
            serde_json::from_str(json).map_err(|e| PyValueError::new_err(e.to_string()))?;
        spec_from_json(&value).map(PyLieAlgebra).map_err(err)
    }

    #[classmethod]
    fn abelian(_cls: &Bound<'_, PyType>, dim: u8) -> Self {
        PyLieAlgebra(LieAlgebraSpec::abelian(dim))
    }

    fn dim(&self) -> u8 {
        self.0.dim
    }

    fn to_json(&self) -> String {
        spec_to_json(&self.0).to_string()
    }

    fn is_jacobi(&self) -> bool {
        self.0.is_jacobi()
    }

    fn bracket(&self, x: Vec<PyScalar>, y: Vec<PyScalar>) -> PyResult<Vec<PyScalar>> {
        let xv = Vector::from_components(x.into_iter().map(|s| s.0).collect());
        let yv = Vector::from_components(y.into_iter().map(|s| s.0).collect());
        let out = self.0.bracket(&xv, &yv).map_err(err)?;
        Ok(out.components.into_iter().map(PyScalar).collect())
    }

    fn d(&self, form: &PyForm) -> PyForm {
        PyForm(self.0.d(&form.0))
    }

    /// Full analysis report as a JSON string.
    fn analyze(&self) -> PyResult<String> {
        let report = analyze(&self.0).map_err(err)?;
        serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))
    }
}

#[pyfunction]
fn analyze_json(spec_json: &str) -> PyResult<String> {
    PyLieAlgebra::new(spec_json)?.analyze()
}

#[pyfunction]
#[pyo3(signature = (spec_json, factor, deep = false))]
fn analyze_su3(spec_json: &str, factor: &str, deep: bool) -> PyResult<String> {
    let algebra = PyLieAlgebra::new(spec_json)?;
    let factor = match factor {
        "abelian3" => Factor::Abelian3,
        "so3" => Factor::So3,
        other => return Err(PyValueError::new_err(format!("unknown factor {other:?}"))),
    };
    let report = analyze_product(&algebra.0, factor, deep).map_err(err)?;
    serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pyfunction]
fn hypo_check(spec_json: &str) -> PyResult<bool> {
    so3ni::su3::hypo_check(&PyLieAlgebra::new(spec_json)?.0).map_err(err)
}

#[pyfunction]
fn halfflat_check(spec_json: &str) -> PyResult<bool> {
    so3ni::su3::halfflat_check(&PyLieAlgebra::new(spec_json)?.0).map_err(err)
}

#[pyfunction]
fn catalog_ids() -> Vec<String> {
    so3ni::catalog::ids().into_iter().map(String::from).collect()
}

#[pyfunction]
#[pyo3(signature = (id, params = None))]
fn catalog_dump(id: &str, params: Option<Vec<PyScalar>>) -> PyResult<String> {
    let entry = so3ni::catalog::find(id).map_err(err)?;
    let params = match params {
        None => entry.default_params(),
        Some(p) => p.into_iter().map(|s| s.0).collect(),
    };
    let spec = entry.build_validated(&params).map_err(err)?;
    Ok(spec_to_json(&spec).to_string())
}

#[pyfunction]
#[pyo3(signature = (id, params = None))]
fn catalog_verify(id: &str, params: Option<Vec<PyScalar>>) -> PyResult<String> {
    let entry = so3ni::catalog::find(id).map_err(err)?;
    let params = match params {
        None => entry.default_params(),
        Some(p) => p.into_iter().map(|s| s.0).collect(),
    };
    let outcome = so3ni::catalog::verify(&entry, &params).map_err(err)?;
    serde_json::to_string(&outcome).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pyfunction]
#[pyo3(signature = (support, values, filter = None, cap = 2_000_000))]
fn grid_search(
    support: Vec<usize>,
    values: Vec<PyScalar>,
    filter: Option<&str>,
    cap: u128,
) -> PyResult<String> {
    let filter = filter.map(SearchFilter::from_str).transpose().map_err(err)?;
    let config = SearchConfig {
        support,
        values: values.into_iter().map(|s| s.0).collect(),
        filter,
        cap,
    };
    let hits = so3ni::search::search(&config).map_err(err)?;
    let list: Vec<serde_json::Value> = hits
        .iter()
        .map(|h| {
            serde_json::json!({
                "b": h.b.0,
                "report": serde_json::to_value(&h.report).unwrap(),
            })
        })
        .collect();
    Ok(serde_json::to_string(&list).unwrap())
}

#[pyfunction]
fn ni_audit() -> String {
    so3ni::so3::ni::audit().to_markdown()
}

#[pymodule]
fn so3ni_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyScalar>()?;
    m.add_class::<PyForm>()?;
    m.add_class::<PyLieAlgebra>()?;
    m.add_function(wrap_pyfunction!(analyze_json, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_su3, m)?)?;
    m.add_function(wrap_pyfunction!(hypo_check, m)?)?;
    m.add_function(wrap_pyfunction!(halfflat_check, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_ids, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_dump, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_verify, m)?)?;
    m.add_function(wrap_pyfunction!(grid_search, m)?)?;
    m.add_function(wrap_pyfunction!(ni_audit, m)?)?;
    Ok(())
}

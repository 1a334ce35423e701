//! Python bindings. Spectra come back as lists of floats, records as dicts
//! keyed like the CLI's CSV columns.

use incomparable::cases::CaseVerdict;
use incomparable::majorization::PairLabel;
use incomparable::scenarios::{self, CubicSpectrum};
use incomparable::{sweep, Complex64, Error, SchmidtVector, SweepRecord};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Dimension(_) | Error::NotNormalized { .. } | Error::Precondition(_) => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn schmidt(v: Vec<f64>) -> PyResult<SchmidtVector> {
    SchmidtVector::new(v).map_err(py_err)
}

#[pyclass(name = "UnitaryParams", frozen, from_py_object)]
#[derive(Clone, Copy)]
pub struct PyUnitaryParams {
    inner: incomparable::UnitaryParams,
}

#[pymethods]
impl PyUnitaryParams {
    #[new]
    #[pyo3(signature = (theta=0.0, phi_a=0.0, phi_b=0.0))]
    fn new(theta: f64, phi_a: f64, phi_b: f64) -> PyResult<Self> {
        let inner = incomparable::UnitaryParams::new(theta, phi_a, phi_b).map_err(py_err)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn flipper() -> Self {
        Self {
            inner: incomparable::UnitaryParams::flipper(),
        }
    }

    #[getter]
    fn theta(&self) -> f64 {
        self.inner.theta
    }

    #[getter]
    fn phi_a(&self) -> f64 {
        self.inner.phi_a
    }

    #[getter]
    fn phi_b(&self) -> f64 {
        self.inner.phi_b
    }

    fn __repr__(&self) -> String {
        let p = self.inner;
        format!(
            "UnitaryParams(theta={}, phi_a={}, phi_b={})",
            p.theta, p.phi_a, p.phi_b
        )
    }
}

#[pyclass(name = "IppParams", frozen, from_py_object)]
#[derive(Clone, Copy)]
pub struct PyIppParams {
    inner: incomparable::IppParams,
}

#[pymethods]
impl PyIppParams {
    /// Requires `|alpha|^2 + |beta|^2 = 1` within 1e-12.
    #[new]
    fn new(alpha: Complex64, beta: Complex64) -> PyResult<Self> {
        let inner = incomparable::IppParams::new(alpha, beta).map_err(py_err)?;
        Ok(Self { inner })
    }

    /// `alpha = cos(phi)`, `beta = e^{i delta} sin(phi)`.
    #[staticmethod]
    #[pyo3(signature = (phi, delta=0.0))]
    fn from_angles(phi: f64, delta: f64) -> Self {
        Self {
            inner: incomparable::IppParams::from_angles(phi, delta),
        }
    }

    #[staticmethod]
    fn identity() -> Self {
        Self {
            inner: incomparable::IppParams::identity(),
        }
    }

    #[staticmethod]
    fn flipping() -> Self {
        Self {
            inner: incomparable::IppParams::flipping(),
        }
    }

    #[staticmethod]
    fn hadamard() -> Self {
        Self {
            inner: incomparable::IppParams::hadamard(),
        }
    }

    #[getter]
    fn alpha(&self) -> Complex64 {
        self.inner.alpha()
    }

    #[getter]
    fn beta(&self) -> Complex64 {
        self.inner.beta()
    }

    fn __repr__(&self) -> String {
        format!(
            "IppParams(alpha={}, beta={})",
            self.inner.alpha(),
            self.inner.beta()
        )
    }
}

/// Schmidt coefficients of a `dim_a x dim_b` state given row-major.
#[pyfunction]
pub fn schmidt_vector(
    amplitudes: Vec<Complex64>,
    dim_a: usize,
    dim_b: usize,
) -> PyResult<Vec<f64>> {
    let s = incomparable::BipartiteState::new(dim_a, dim_b, amplitudes).map_err(py_err)?;
    Ok(incomparable::schmidt_vector(&s)
        .map_err(py_err)?
        .coefficients()
        .to_vec())
}

/// Entropy of entanglement in bits.
#[pyfunction]
pub fn entropy(schmidt_coefficients: Vec<f64>) -> PyResult<f64> {
    Ok(incomparable::entropy_of_entanglement(&schmidt(
        schmidt_coefficients,
    )?))
}

/// Label of (src, dst): `CONVERTIBLE_FORWARD` when src converts to dst.
#[pyfunction]
pub fn classify_pair(src: Vec<f64>, dst: Vec<f64>) -> PyResult<&'static str> {
    let label: PairLabel = incomparable::classify_pair(&schmidt(src)?, &schmidt(dst)?).label;
    Ok(label.as_str())
}

/// True when `a` is majorized by `b`.
#[pyfunction]
pub fn majorizes(b: Vec<f64>, a: Vec<f64>) -> PyResult<bool> {
    Ok(incomparable::majorizes(&schmidt(b)?, &schmidt(a)?))
}

#[pyfunction]
pub fn incomparable_strict3(a: Vec<f64>, b: Vec<f64>) -> PyResult<bool> {
    incomparable::incomparable_strict3(&schmidt(a)?, &schmidt(b)?).map_err(py_err)
}

#[pyfunction]
pub fn chi_initial_spectrum() -> PyResult<Vec<f64>> {
    let v = incomparable::schmidt_vector(&scenarios::build_chi_initial()).map_err(py_err)?;
    Ok(v.coefficients().to_vec())
}

#[pyfunction]
pub fn pi_initial_spectrum() -> PyResult<Vec<f64>> {
    let v = incomparable::schmidt_vector(&scenarios::build_pi_initial()).map_err(py_err)?;
    Ok(v.coefficients().to_vec())
}

/// Traced spectrum after the anti-unitary.
#[pyfunction]
pub fn chi_final_spectrum(params: PyUnitaryParams) -> PyResult<Vec<f64>> {
    let s = scenarios::chi_final(&params.inner).map_err(py_err)?;
    Ok(incomparable::schmidt_vector(&s)
        .map_err(py_err)?
        .coefficients()
        .to_vec())
}

/// Traced spectrum after the inner-product-preserving map.
#[pyfunction]
pub fn pi_final_spectrum(params: PyIppParams) -> PyResult<Vec<f64>> {
    let s = scenarios::pi_final(&params.inner).map_err(py_err)?;
    Ok(incomparable::schmidt_vector(&s)
        .map_err(py_err)?
        .coefficients()
        .to_vec())
}

#[pyfunction]
pub fn pqr(params: PyIppParams) -> (Complex64, Complex64, Complex64) {
    let c = scenarios::pqr(&params.inner);
    (c.p, c.q, c.r)
}

/// `(A, B)` of the final-state cubic.
#[pyfunction]
pub fn cubic_coefficients(params: PyIppParams) -> (f64, f64) {
    scenarios::cubic_coefficients(&scenarios::pqr(&params.inner))
}

#[pyfunction]
pub fn real_ab(alpha: f64, beta: f64) -> PyResult<(f64, f64)> {
    scenarios::real_ab(alpha, beta).map_err(py_err)
}

fn spectrum_dict(py: Python<'_>, s: CubicSpectrum) -> PyResult<Bound<'_, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("A", s.big_a)?;
    d.set_item("B", s.big_b)?;
    d.set_item("eigen_angle", s.eigen_angle)?;
    d.set_item("eigenvalues", s.eigenvalues.to_vec())?;
    Ok(d)
}

#[pyfunction]
pub fn spectrum_from_ab(py: Python<'_>, big_a: f64, big_b: f64) -> PyResult<Bound<'_, PyDict>> {
    spectrum_dict(
        py,
        scenarios::spectrum_from_ab(big_a, big_b).map_err(py_err)?,
    )
}

/// Closed-form final spectrum for the inner-product-preserving map.
#[pyfunction]
pub fn ipp_spectrum(py: Python<'_>, params: PyIppParams) -> PyResult<Bound<'_, PyDict>> {
    spectrum_dict(py, scenarios::ipp_spectrum(&params.inner).map_err(py_err)?)
}

fn verdict_dict<'py>(py: Python<'py>, v: &CaseVerdict) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("case", v.case_id.as_str())?;
    d.set_item("subcase", v.subcase.as_str())?;
    d.set_item("predicted", v.predicted.as_str())?;
    d.set_item("condition_value", v.condition_value)?;
    d.set_item("boundary_form", v.boundary.map(|b| b.form.as_str()))?;
    d.set_item(
        "implies_incomparable",
        v.boundary.map(|b| b.implies_incomparable),
    )?;
    Ok(d)
}

#[pyfunction]
pub fn predict_case(py: Python<'_>, big_a: f64, big_b: f64) -> PyResult<Bound<'_, PyDict>> {
    verdict_dict(py, &incomparable::predict_case(big_a, big_b))
}

#[pyfunction]
pub fn verify_prediction(py: Python<'_>, params: PyIppParams) -> PyResult<Bound<'_, PyDict>> {
    let c = incomparable::verify_prediction(&params.inner).map_err(py_err)?;
    let d = verdict_dict(py, &c.predicted)?;
    d.set_item("A", c.big_a)?;
    d.set_item("B", c.big_b)?;
    d.set_item("observed", c.observed.label.as_str())?;
    d.set_item("entropy_i", c.entropy_initial)?;
    d.set_item("entropy_f", c.entropy_final)?;
    d.set_item("entropy_delta", c.entropy_delta)?;
    d.set_item("agree", c.agree)?;
    Ok(d)
}

fn record_dict<'py>(py: Python<'py>, r: &SweepRecord) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("phi", r.phi)?;
    d.set_item("delta", r.delta)?;
    d.set_item("A", r.big_a)?;
    d.set_item("B", r.big_b)?;
    d.set_item("lam1", r.lam1)?;
    d.set_item("lam2", r.lam2)?;
    d.set_item("lam3", r.lam3)?;
    d.set_item("entropy_i", r.entropy_initial)?;
    d.set_item("entropy_f", r.entropy_final)?;
    d.set_item("observed", r.observed.as_str())?;
    d.set_item("predicted", r.predicted.as_str())?;
    d.set_item("agree", r.agree)?;
    Ok(d)
}

fn records<'py>(py: Python<'py>, rs: &[SweepRecord]) -> PyResult<Vec<Bound<'py, PyDict>>> {
    rs.iter().map(|r| record_dict(py, r)).collect()
}

#[pyfunction]
pub fn sweep_real(py: Python<'_>, n: usize) -> PyResult<Vec<Bound<'_, PyDict>>> {
    let rs = py.detach(|| sweep::sweep_real(n)).map_err(py_err)?;
    records(py, &rs)
}

#[pyfunction]
pub fn sweep_complex(
    py: Python<'_>,
    n_phi: usize,
    n_delta: usize,
) -> PyResult<Vec<Bound<'_, PyDict>>> {
    let rs = py
        .detach(|| sweep::sweep_complex(n_phi, n_delta))
        .map_err(py_err)?;
    records(py, &rs)
}

#[pyfunction]
pub fn sweep_gamma(
    py: Python<'_>,
    n_theta: usize,
    n_a: usize,
    n_b: usize,
) -> PyResult<Bound<'_, PyDict>> {
    let s = py
        .detach(|| sweep::sweep_gamma(n_theta, n_a, n_b))
        .map_err(py_err)?;
    let d = PyDict::new(py);
    d.set_item("points", s.points)?;
    d.set_item("max_deviation", s.max_deviation)?;
    d.set_item("worst", (s.worst.theta, s.worst.phi_a, s.worst.phi_b))?;
    Ok(d)
}

#[pymodule]
pub fn pyincomparable(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyUnitaryParams>()?;
    m.add_class::<PyIppParams>()?;
    m.add_function(wrap_pyfunction!(schmidt_vector, m)?)?;
    m.add_function(wrap_pyfunction!(entropy, m)?)?;
    m.add_function(wrap_pyfunction!(classify_pair, m)?)?;
    m.add_function(wrap_pyfunction!(majorizes, m)?)?;
    m.add_function(wrap_pyfunction!(incomparable_strict3, m)?)?;
    m.add_function(wrap_pyfunction!(chi_initial_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(pi_initial_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(chi_final_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(pi_final_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(pqr, m)?)?;
    m.add_function(wrap_pyfunction!(cubic_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(real_ab, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum_from_ab, m)?)?;
    m.add_function(wrap_pyfunction!(ipp_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(predict_case, m)?)?;
    m.add_function(wrap_pyfunction!(verify_prediction, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_real, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_complex, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_gamma, m)?)?;
    Ok(())
}

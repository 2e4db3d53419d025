use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use wbroadcast::analysis::{point_params, to_csv_string, OutputAnalysis};
use wbroadcast::{ComplexMatrix, OutputPair, SweepGrid};

fn err(e: wbroadcast::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Squared amplitudes (alpha2, beta2, gamma2) of a W-type state.
#[pyclass(name = "WParams", frozen, from_py_object)]
#[derive(Clone)]
struct PyWParams(wbroadcast::WParams);

#[pymethods]
impl PyWParams {
    #[new]
    fn new(alpha2: f64, beta2: f64, gamma2: f64) -> PyResult<Self> {
        wbroadcast::WParams::new(alpha2, beta2, gamma2)
            .map(Self)
            .map_err(err)
    }

    /// beta2 = gamma2 = (1 - alpha2)/2.
    #[staticmethod]
    fn symmetric(alpha2: f64) -> PyResult<Self> {
        wbroadcast::WParams::symmetric(alpha2)
            .map(Self)
            .map_err(err)
    }

    #[getter]
    fn alpha2(&self) -> f64 {
        self.0.alpha2
    }

    #[getter]
    fn beta2(&self) -> f64 {
        self.0.beta2
    }

    #[getter]
    fn gamma2(&self) -> f64 {
        self.0.gamma2
    }

    fn __repr__(&self) -> String {
        format!(
            "WParams(alpha2={}, beta2={}, gamma2={})",
            self.0.alpha2, self.0.beta2, self.0.gamma2
        )
    }
}

#[pyclass(name = "DensityMatrix", frozen)]
struct PyDensityMatrix(wbroadcast::DensityMatrix);

#[pymethods]
impl PyDensityMatrix {
    /// A two-qubit density matrix from a 4x4 nested list.
    #[new]
    fn new(rows: Vec<Vec<Complex64>>) -> PyResult<Self> {
        if rows.iter().any(|r| r.len() != rows.len()) {
            return Err(PyValueError::new_err("matrix must be square"));
        }
        let m = ComplexMatrix::from_vec(rows.into_iter().flatten().collect()).map_err(err)?;
        wbroadcast::DensityMatrix::two_qubit(m)
            .map(Self)
            .map_err(err)
    }

    fn matrix(&self) -> Vec<Vec<Complex64>> {
        self.0.matrix().rows().map(|r| r.to_vec()).collect()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.0.labels().iter().map(|l| l.to_string()).collect()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn trace(&self) -> f64 {
        self.0.trace()
    }

    fn purity(&self) -> f64 {
        self.0.purity()
    }

    fn eigenvalues(&self) -> PyResult<Vec<f64>> {
        self.0.eigenvalues().map_err(err)
    }

    fn partial_trace(&self, keep: Vec<String>) -> PyResult<Self> {
        let labels = keep
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<wbroadcast::Label>, _>>()
            .map_err(err)?;
        self.0.partial_trace(&labels).map(Self).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "DensityMatrix(labels={:?}, dim={})",
            self.labels(),
            self.0.dim()
        )
    }
}

/// rho_1245, rho_15, rho_14, rho_25 and rho_42 after cloning qubits 1 and 2.
#[pyfunction]
fn broadcast_pipeline<'py>(py: Python<'py>, p: &PyWParams) -> PyResult<Bound<'py, PyDict>> {
    let out = wbroadcast::broadcast_pipeline(&p.0).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("rho_1245", PyDensityMatrix(out.rho_1245.clone()))?;
    for pair in OutputPair::ALL {
        d.set_item(pair.name(), PyDensityMatrix(out.get(pair).clone()))?;
    }
    Ok(d)
}

/// (W3, W4) of the partial transpose on the second qubit.
#[pyfunction]
fn w3_w4(rho: &PyDensityMatrix) -> PyResult<(f64, f64)> {
    wbroadcast::w3_w4(&rho.0).map_err(err)
}

#[pyfunction]
fn ppt_verdict<'py>(py: Python<'py>, rho: &PyDensityMatrix) -> PyResult<Bound<'py, PyDict>> {
    let v = wbroadcast::ppt_verdict(&rho.0).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("w3", v.w3)?;
    d.set_item("w4", v.w4)?;
    d.set_item("min_pt_eigenvalue", v.min_pt_eigenvalue)?;
    d.set_item("negativity", v.negativity)?;
    d.set_item("separable", v.separable)?;
    Ok(d)
}

#[pyfunction]
fn concurrence(rho: &PyDensityMatrix) -> PyResult<f64> {
    wbroadcast::concurrence(&rho.0).map_err(err)
}

#[pyfunction]
fn eof(c: f64) -> PyResult<f64> {
    wbroadcast::eof(c).map_err(err)
}

#[pyfunction]
fn linear_entropy(rho: &PyDensityMatrix) -> PyResult<f64> {
    wbroadcast::linear_entropy(&rho.0).map_err(err)
}

fn output_dict<'py>(py: Python<'py>, o: &OutputAnalysis) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("w3", o.w3)?;
    d.set_item("w4", o.w4)?;
    d.set_item("min_pt_eigenvalue", o.min_pt_eigenvalue)?;
    d.set_item("negativity", o.negativity)?;
    d.set_item("separable", o.separable)?;
    d.set_item("concurrence", o.concurrence)?;
    d.set_item("eof", o.eof)?;
    d.set_item("linear_entropy", o.linear_entropy)?;
    Ok(d)
}

/// Full record at one point; beta2 defaults to (1 - alpha2)/2.
#[pyfunction]
#[pyo3(signature = (alpha2, beta2=None))]
fn analyze<'py>(py: Python<'py>, alpha2: f64, beta2: Option<f64>) -> PyResult<Bound<'py, PyDict>> {
    let r = wbroadcast::analyze(&point_params(alpha2, beta2).map_err(err)?).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("alpha2", r.alpha2)?;
    for pair in OutputPair::ALL {
        d.set_item(pair.name(), output_dict(py, r.get(pair))?)?;
    }
    Ok(d)
}

/// CSV text of a symmetric sweep, identical to the command-line output.
#[pyfunction]
#[pyo3(signature = (start, stop, steps, parallel=true))]
fn sweep_csv(
    py: Python<'_>,
    start: f64,
    stop: f64,
    steps: usize,
    parallel: bool,
) -> PyResult<String> {
    let grid = SweepGrid::new(start, stop, steps).map_err(err)?;
    py.detach(|| wbroadcast::sweep(&grid, parallel).and_then(|r| to_csv_string(&r)))
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (tol=wbroadcast::separability::DEFAULT_THRESHOLD_TOL))]
fn thresholds<'py>(py: Python<'py>, tol: f64) -> PyResult<Bound<'py, PyDict>> {
    let t = wbroadcast::thresholds(tol).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("local_sep_root", t.local_sep_root)?;
    d.set_item("nonlocal_insep_root", t.nonlocal_insep_root)?;
    d.set_item("concurrence_root", t.concurrence_root)?;
    d.set_item("local_exact", t.local_exact)?;
    d.set_item("nonlocal_exact", t.nonlocal_exact)?;
    Ok(d)
}

/// Rendered range table and erratum audit.
#[pyfunction]
fn table2(py: Python<'_>) -> PyResult<String> {
    py.detach(|| wbroadcast::table2(true).map(|r| r.to_string()))
        .map_err(err)
}

#[pymodule(name = "wbroadcast")]
fn wbroadcast_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWParams>()?;
    m.add_class::<PyDensityMatrix>()?;
    m.add_function(wrap_pyfunction!(broadcast_pipeline, m)?)?;
    m.add_function(wrap_pyfunction!(w3_w4, m)?)?;
    m.add_function(wrap_pyfunction!(ppt_verdict, m)?)?;
    m.add_function(wrap_pyfunction!(concurrence, m)?)?;
    m.add_function(wrap_pyfunction!(eof, m)?)?;
    m.add_function(wrap_pyfunction!(linear_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_csv, m)?)?;
    m.add_function(wrap_pyfunction!(thresholds, m)?)?;
    m.add_function(wrap_pyfunction!(table2, m)?)?;
    Ok(())
}

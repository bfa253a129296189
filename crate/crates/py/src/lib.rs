//! Python bindings: `import dequant`.
//!
//! Exact values cross the boundary as the wrapper classes `Rat`, `GaussRat`
//! and `Surd2`; classifications as the strings `"Constant"` / `"Balanced"`.

use pyo3::exceptions::{PyOverflowError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use dequant_core::dequant::{self as dq, FamilySign};
use dequant_core::oracle::{self, BitFn, OracleHandle};
use dequant_core::quantum::{self, Mat4, State4};
use dequant_core::report::{self, FamilyParams, Format, Method};
use dequant_core::selftest::{self, Fixture};
use dequant_core::{Error, GaussRat, Rat, Surd2};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Overflow => PyOverflowError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

#[pyclass(
    name = "Rat",
    module = "dequant",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct PyRat(Rat);

#[pymethods]
impl PyRat {
    #[new]
    #[pyo3(signature = (num, den = 1))]
    fn new(num: i64, den: i64) -> PyResult<Self> {
        Rat::new(num, den).map(PyRat).map_err(to_py)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(PyRat).map_err(to_py)
    }

    #[getter]
    fn num(&self) -> i64 {
        self.0.num()
    }

    #[getter]
    fn den(&self) -> i64 {
        self.0.den()
    }

    fn __add__(&self, other: PyRef<'_, PyRat>) -> PyResult<Self> {
        self.0.checked_add(other.0).map(PyRat).map_err(to_py)
    }

    fn __sub__(&self, other: PyRef<'_, PyRat>) -> PyResult<Self> {
        self.0.checked_sub(other.0).map(PyRat).map_err(to_py)
    }

    fn __mul__(&self, other: PyRef<'_, PyRat>) -> PyResult<Self> {
        self.0.checked_mul(other.0).map(PyRat).map_err(to_py)
    }

    fn __neg__(&self) -> PyResult<Self> {
        self.0.checked_neg().map(PyRat).map_err(to_py)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Rat('{}')", self.0)
    }
}

#[pyclass(
    name = "GaussRat",
    module = "dequant",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct PyGauss(GaussRat);

#[pymethods]
impl PyGauss {
    #[new]
    fn new(re: PyRef<'_, PyRat>, im: PyRef<'_, PyRat>) -> Self {
        PyGauss(GaussRat::new(re.0, im.0))
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(PyGauss).map_err(to_py)
    }

    #[getter]
    fn re(&self) -> PyRat {
        PyRat(self.0.re)
    }

    #[getter]
    fn im(&self) -> PyRat {
        PyRat(self.0.im)
    }

    fn conj(&self) -> Self {
        PyGauss(self.0.conj())
    }

    fn is_real(&self) -> bool {
        self.0.is_real()
    }

    fn norm_sqr(&self) -> PyResult<PyRat> {
        self.0.norm_sqr().map(PyRat).map_err(to_py)
    }

    fn __add__(&self, other: PyRef<'_, PyGauss>) -> PyResult<Self> {
        self.0.checked_add(other.0).map(PyGauss).map_err(to_py)
    }

    fn __sub__(&self, other: PyRef<'_, PyGauss>) -> PyResult<Self> {
        self.0.checked_sub(other.0).map(PyGauss).map_err(to_py)
    }

    fn __mul__(&self, other: PyRef<'_, PyGauss>) -> PyResult<Self> {
        self.0.checked_mul(other.0).map(PyGauss).map_err(to_py)
    }

    fn __neg__(&self) -> PyResult<Self> {
        self.0.checked_neg().map(PyGauss).map_err(to_py)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GaussRat('{}')", self.0)
    }
}

#[pyclass(
    name = "Surd2",
    module = "dequant",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct PySurd(Surd2);

#[pymethods]
impl PySurd {
    #[new]
    fn new(a: i64, b: i64) -> Self {
        PySurd(Surd2::new(a, b))
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(PySurd).map_err(to_py)
    }

    #[getter]
    fn a(&self) -> i64 {
        self.0.a
    }

    #[getter]
    fn b(&self) -> i64 {
        self.0.b
    }

    fn conj(&self) -> Self {
        PySurd(self.0.conj())
    }

    fn is_rational(&self) -> bool {
        self.0.is_rational()
    }

    fn norm(&self) -> PyResult<i64> {
        self.0.norm().map_err(to_py)
    }

    fn __add__(&self, other: PyRef<'_, PySurd>) -> PyResult<Self> {
        self.0.checked_add(other.0).map(PySurd).map_err(to_py)
    }

    fn __mul__(&self, other: PyRef<'_, PySurd>) -> PyResult<Self> {
        self.0.checked_mul(other.0).map(PySurd).map_err(to_py)
    }

    fn __neg__(&self) -> PyResult<Self> {
        self.0.checked_neg().map(PySurd).map_err(to_py)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Surd2('{}')", self.0)
    }
}

#[pyclass(name = "Mat4", module = "dequant", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMat4(Mat4);

#[pymethods]
impl PyMat4 {
    fn entry(&self, row: usize, col: usize) -> PyResult<PyGauss> {
        if row >= 4 || col >= 4 {
            return Err(PyValueError::new_err("index out of range"));
        }
        Ok(PyGauss(self.0.entry(row, col)))
    }

    fn with_entry(&self, row: usize, col: usize, value: PyRef<'_, PyGauss>) -> PyResult<Self> {
        if row >= 4 || col >= 4 {
            return Err(PyValueError::new_err("index out of range"));
        }
        Ok(PyMat4(self.0.with_entry(row, col, value.0)))
    }

    fn is_unitary(&self) -> bool {
        self.0.is_unitary()
    }

    fn __matmul__(&self, other: PyRef<'_, PyMat4>) -> PyResult<Self> {
        self.0.checked_mul(&other.0).map(PyMat4).map_err(to_py)
    }

    /// Applies to a 4-element state given as a list of `GaussRat`.
    fn apply(&self, state: Vec<PyRef<'_, PyGauss>>) -> PyResult<Vec<PyGauss>> {
        let out = self.0.apply(&state_from_py(&state)?).map_err(to_py)?;
        Ok(state_to_py(&out))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

fn state_from_py(state: &[PyRef<'_, PyGauss>]) -> PyResult<State4> {
    let amp: [GaussRat; 4] = state
        .iter()
        .map(|z| z.0)
        .collect::<Vec<_>>()
        .try_into()
        .map_err(|_| PyValueError::new_err("state must have 4 amplitudes"))?;
    Ok(State4::new(amp))
}

fn state_to_py(v: &State4) -> Vec<PyGauss> {
    v.amplitudes().iter().copied().map(PyGauss).collect()
}

/// Black-box oracle with a query counter.
#[pyclass(name = "Oracle", module = "dequant")]
struct PyOracle(Option<OracleHandle>);

impl PyOracle {
    fn handle(&mut self) -> PyResult<&mut OracleHandle> {
        self.0
            .as_mut()
            .ok_or_else(|| PyRuntimeError::new_err("oracle has been revealed"))
    }
}

#[pymethods]
impl PyOracle {
    /// `Oracle("01")`: truth table `f(0) f(1)`.
    #[new]
    fn new(table: &str) -> PyResult<Self> {
        let f: BitFn = table.parse().map_err(to_py)?;
        Ok(PyOracle(Some(OracleHandle::new(f))))
    }

    fn query(&mut self, x: u8) -> PyResult<u8> {
        let x = match x {
            0 => false,
            1 => true,
            _ => return Err(PyValueError::new_err("query input must be 0 or 1")),
        };
        Ok(self.handle()?.query(x) as u8)
    }

    #[getter]
    fn query_count(&mut self) -> PyResult<u64> {
        Ok(self.handle()?.query_count())
    }

    /// Consumes the oracle and returns its truth table, e.g. `"01"`.
    fn reveal(&mut self) -> PyResult<String> {
        self.handle()?;
        Ok(self.0.take().expect("checked above").reveal().to_string())
    }
}

fn parse_sign(sign: &str) -> PyResult<FamilySign> {
    sign.parse().map_err(to_py)
}

#[pyfunction]
fn classify_baseline(oracle: &mut PyOracle) -> PyResult<String> {
    Ok(oracle::classify_baseline(oracle.handle()?).to_string())
}

/// Returns `(probabilities, classification)`.
#[pyfunction]
fn run_deutsch(oracle: &mut PyOracle) -> PyResult<(Vec<PyRat>, String)> {
    let (d, c) = quantum::run_deutsch(oracle.handle()?).map_err(to_py)?;
    Ok((
        d.probabilities().into_iter().map(PyRat).collect(),
        c.to_string(),
    ))
}

#[pyfunction]
fn kickback_state(oracle: &mut PyOracle) -> PyResult<Vec<PyGauss>> {
    Ok(state_to_py(&quantum::kickback_state(oracle.handle()?)))
}

/// Charged application of the oracle gate to a 4-amplitude state.
#[pyfunction]
fn apply_oracle(oracle: &mut PyOracle, state: Vec<PyRef<'_, PyGauss>>) -> PyResult<Vec<PyGauss>> {
    let state = state_from_py(&state)?;
    let out = quantum::OracleGate::new(oracle.handle()?)
        .apply(&state)
        .map_err(to_py)?;
    Ok(state_to_py(&out))
}

#[pyfunction]
fn hadamard4() -> PyMat4 {
    PyMat4(quantum::hadamard4())
}

/// The oracle unitary for a known truth table such as `"10"`.
#[pyfunction]
fn oracle_matrix(table: &str) -> PyResult<PyMat4> {
    Ok(PyMat4(quantum::oracle_matrix(
        table.parse().map_err(to_py)?,
    )))
}

/// Returns `(classification, product)`.
#[pyfunction]
fn solve_gauss(oracle: &mut PyOracle) -> PyResult<(String, PyGauss)> {
    let v = dq::solve_gauss(oracle.handle()?);
    Ok((v.classification.to_string(), PyGauss(v.product)))
}

#[pyfunction]
#[pyo3(signature = (oracle, a, sign = "plus"))]
fn solve_gauss_family(
    oracle: &mut PyOracle,
    a: PyRef<'_, PyRat>,
    sign: &str,
) -> PyResult<(String, PyGauss)> {
    let sign = parse_sign(sign)?;
    let v = dq::solve_gauss_family(oracle.handle()?, a.0, sign).map_err(to_py)?;
    Ok((v.classification.to_string(), PyGauss(v.product)))
}

#[pyfunction]
fn solve_surd(oracle: &mut PyOracle) -> PyResult<(String, PySurd)> {
    let v = dq::solve_surd(oracle.handle()?);
    Ok((v.classification.to_string(), PySurd(v.product)))
}

/// One evaluation of the ℚ[i] embedding; costs one query.
#[pyfunction]
fn cf_eval(oracle: &mut PyOracle, z: PyRef<'_, PyGauss>) -> PyResult<PyGauss> {
    Ok(PyGauss(dq::CfBox::new(oracle.handle()?).eval(z.0)))
}

/// One evaluation of the ℤ[√2] embedding; costs one query.
#[pyfunction]
fn cf_eval_surd(oracle: &mut PyOracle, s: PyRef<'_, PySurd>) -> PyResult<PySurd> {
    Ok(PySurd(dq::CfBox::new(oracle.handle()?).eval_surd(s.0)))
}

/// Runs solvers and renders the report in `format` (text, csv or json).
#[pyfunction]
#[pyo3(signature = (oracle = "all", method = "all", a = "1", sign = "plus", format = "csv"))]
fn run(oracle: &str, method: &str, a: &str, sign: &str, format: &str) -> PyResult<String> {
    let oracles = if oracle == "all" {
        BitFn::ALL.to_vec()
    } else {
        vec![oracle.parse().map_err(to_py)?]
    };
    let methods = if method == "all" {
        Method::ALL.to_vec()
    } else {
        vec![method.parse().map_err(to_py)?]
    };
    let params = FamilyParams::new(a.parse().map_err(to_py)?, parse_sign(sign)?).map_err(to_py)?;
    let format: Format = format.parse().map_err(to_py)?;
    let reports = report::run_grid(&oracles, &methods, params).map_err(to_py)?;
    Ok(report::render(&reports, format))
}

#[pyfunction]
#[pyo3(signature = (format = "text"))]
fn table(format: &str) -> PyResult<String> {
    let format: Format = format.parse().map_err(to_py)?;
    Ok(report::render(
        &report::full_table().map_err(to_py)?,
        format,
    ))
}

/// Returns `(all_passed, summary)`.
#[pyfunction]
#[pyo3(name = "selftest")]
fn run_selftest() -> (bool, String) {
    let r = selftest::run_all(&Fixture::default());
    (r.all_passed(), r.to_string())
}

#[pymodule]
fn dequant(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRat>()?;
    m.add_class::<PyGauss>()?;
    m.add_class::<PySurd>()?;
    m.add_class::<PyMat4>()?;
    m.add_class::<PyOracle>()?;
    m.add_function(wrap_pyfunction!(classify_baseline, m)?)?;
    m.add_function(wrap_pyfunction!(run_deutsch, m)?)?;
    m.add_function(wrap_pyfunction!(kickback_state, m)?)?;
    m.add_function(wrap_pyfunction!(apply_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(hadamard4, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(solve_gauss, m)?)?;
    m.add_function(wrap_pyfunction!(solve_gauss_family, m)?)?;
    m.add_function(wrap_pyfunction!(solve_surd, m)?)?;
    m.add_function(wrap_pyfunction!(cf_eval, m)?)?;
    m.add_function(wrap_pyfunction!(cf_eval_surd, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add_function(wrap_pyfunction!(run_selftest, m)?)?;
    Ok(())
}

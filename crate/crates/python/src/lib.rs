//! Python bindings for `nstep-core`.
//!
//! Integers cross the boundary as Python `int`s of any size. Indices are
//! 1-based, as in the Rust API.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use nstep_core::construction;
use nstep_core::identities::{self, VerificationRecord};
use nstep_core::seq::companion_matrix as core_companion;
use nstep_core::{IntMatrix, NStepSequence, SeqConvention};

fn value_error(e: nstep_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn convention(name: &str) -> PyResult<SeqConvention> {
    name.parse().map_err(value_error)
}

fn sequence(n: usize, conv: &str) -> PyResult<NStepSequence> {
    NStepSequence::new(n, convention(conv)?).map_err(value_error)
}

/// Dense matrix of arbitrary-precision integers.
#[pyclass(name = "IntMatrix", module = "nstep_fib", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyIntMatrix {
    inner: IntMatrix,
}

impl From<IntMatrix> for PyIntMatrix {
    fn from(inner: IntMatrix) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyIntMatrix {
    #[new]
    fn new(rows: Vec<Vec<BigInt>>) -> PyResult<Self> {
        IntMatrix::from_rows(rows)
            .map(Self::from)
            .map_err(value_error)
    }

    /// Parses the literal format "1 2; 0 1".
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse::<IntMatrix>()
            .map(Self::from)
            .map_err(value_error)
    }

    #[staticmethod]
    fn identity(n: usize) -> PyResult<Self> {
        IntMatrix::identity(n).map(Self::from).map_err(value_error)
    }

    #[getter]
    fn rows(&self) -> usize {
        self.inner.rows()
    }

    #[getter]
    fn cols(&self) -> usize {
        self.inner.cols()
    }

    fn to_list(&self) -> Vec<Vec<BigInt>> {
        (1..=self.inner.rows())
            .map(|i| self.inner.row(i).to_vec())
            .collect()
    }

    /// Entry at 1-based (row, column).
    fn get(&self, i: usize, k: usize) -> PyResult<BigInt> {
        if !(1..=self.inner.rows()).contains(&i) || !(1..=self.inner.cols()).contains(&k) {
            return Err(PyValueError::new_err(format!(
                "position ({i}, {k}) outside matrix"
            )));
        }
        Ok(self.inner.get(i, k).clone())
    }

    /// Determinant by fraction-free elimination.
    fn det(&self) -> PyResult<BigInt> {
        self.inner.det_bareiss().map_err(value_error)
    }

    /// Determinant by cofactor expansion (order at most 8).
    fn det_laplace(&self) -> PyResult<BigInt> {
        self.inner.det_laplace().map_err(value_error)
    }

    fn transpose(&self) -> Self {
        self.inner.transpose().into()
    }

    fn reverse_columns(&self) -> Self {
        self.inner.reverse_columns().into()
    }

    fn select_columns(&self, kept: Vec<usize>) -> PyResult<Self> {
        self.inner
            .select_columns(&kept)
            .map(Self::from)
            .map_err(value_error)
    }

    fn sum_columns(&self, lo: usize, hi: usize) -> PyResult<Vec<BigInt>> {
        self.inner.sum_columns(lo, hi).map_err(value_error)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("IntMatrix.parse({:?})", self.inner.to_string())
    }
}

/// An n-step Fibonacci sequence under a named convention
/// ("classic", "paper" or "custom:a,b,...").
#[pyclass(name = "Sequence", module = "nstep_fib", frozen)]
struct PySequence {
    inner: NStepSequence,
}

#[pymethods]
impl PySequence {
    #[new]
    #[pyo3(signature = (n, convention = "classic"))]
    fn new(n: usize, convention: &str) -> PyResult<Self> {
        Ok(Self {
            inner: sequence(n, convention)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn convention(&self) -> String {
        self.inner.convention().name()
    }

    #[getter]
    fn seeds(&self) -> Vec<BigInt> {
        self.inner.seeds().to_vec()
    }

    fn term(&self, k: i64) -> BigInt {
        self.inner.term(k)
    }

    fn terms(&self, lo: i64, hi: i64) -> PyResult<Vec<BigInt>> {
        self.inner.terms_range(lo, hi).map_err(value_error)
    }

    fn term_fast(&self, k: i64) -> PyResult<BigInt> {
        self.inner.term_fast(k).map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!(
            "Sequence({}, {:?})",
            self.inner.n(),
            self.inner.convention().name()
        )
    }
}

/// Outcome of one identity check.
#[pyclass(name = "VerificationRecord", module = "nstep_fib", frozen, get_all)]
struct PyRecord {
    kind: String,
    n: usize,
    r: usize,
    s: Option<usize>,
    p: Option<usize>,
    q: Option<usize>,
    convention: String,
    lhs: BigInt,
    rhs: BigInt,
    passed: bool,
}

impl From<VerificationRecord> for PyRecord {
    fn from(v: VerificationRecord) -> Self {
        Self {
            kind: v.case.kind.name().to_string(),
            n: v.case.n,
            r: v.case.r,
            s: v.case.s,
            p: v.case.p,
            q: v.case.q,
            convention: v.case.convention.name(),
            lhs: v.lhs,
            rhs: v.rhs,
            passed: v.pass,
        }
    }
}

#[pymethods]
impl PyRecord {
    fn __repr__(&self) -> String {
        format!(
            "VerificationRecord(kind={:?}, n={}, r={}, lhs={}, rhs={}, passed={})",
            self.kind,
            self.n,
            self.r,
            self.lhs,
            self.rhs,
            if self.passed { "True" } else { "False" }
        )
    }
}

/// Both sides of the signed-minor identity for one deletion.
#[pyclass(name = "Prop1Record", module = "nstep_fib", frozen, get_all)]
struct PyProp1Record {
    deleted: Vec<usize>,
    kept: Vec<usize>,
    minor_value: BigInt,
    sign: i32,
    det_q: BigInt,
    det_a: BigInt,
    rhs: BigInt,
    passed: bool,
}

#[pyfunction]
fn build_p(n: usize, r: usize) -> PyResult<PyIntMatrix> {
    construction::build_p(n, r)
        .map(Into::into)
        .map_err(value_error)
}

#[pyfunction]
fn build_q(n: usize, r: usize, rows: Vec<usize>) -> PyResult<PyIntMatrix> {
    construction::build_q(n, r, &rows)
        .map(Into::into)
        .map_err(value_error)
}

#[pyfunction]
fn extend_columns(a: &PyIntMatrix, r: usize) -> PyResult<PyIntMatrix> {
    construction::extend_columns(&a.inner, r)
        .map(Into::into)
        .map_err(value_error)
}

#[pyfunction]
fn minor_by_deletion(aext: &PyIntMatrix, deleted: Vec<usize>) -> PyResult<PyIntMatrix> {
    construction::minor_by_deletion(&aext.inner, &deleted)
        .map(Into::into)
        .map_err(value_error)
}

#[pyfunction]
fn sign_from_deleted(n: usize, r: usize, deleted: Vec<usize>) -> PyResult<i32> {
    construction::MinorSelection::from_deleted(n, r, &deleted).map_err(value_error)?;
    Ok(construction::sign_from_deleted(n, r, &deleted).value())
}

#[pyfunction]
fn sign_from_kept(n: usize, kept: Vec<usize>) -> i32 {
    construction::sign_from_kept(n, &kept).value()
}

#[pyfunction]
fn check_prop1(a: &PyIntMatrix, r: usize, deleted: Vec<usize>) -> PyResult<PyProp1Record> {
    let rec = construction::check_prop1(&a.inner, r, &deleted).map_err(value_error)?;
    Ok(PyProp1Record {
        deleted: rec.selection.deleted().to_vec(),
        kept: rec.selection.kept().to_vec(),
        minor_value: rec.minor_value,
        sign: rec.sign.value(),
        det_q: rec.det_q,
        det_a: rec.det_a,
        rhs: rec.rhs,
        passed: rec.pass,
    })
}

#[pyfunction]
fn q_fib_det(n: usize, r: usize) -> PyResult<BigInt> {
    construction::q_fib_det(n, r).map_err(value_error)
}

#[pyfunction]
fn companion_matrix(n: usize) -> PyResult<PyIntMatrix> {
    core_companion(n).map(Into::into).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (n, r, convention = "classic"))]
fn cassini_matrix(n: usize, r: usize, convention: &str) -> PyResult<PyIntMatrix> {
    identities::cassini_matrix(&sequence(n, convention)?, r)
        .map(Into::into)
        .map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (n, r, s, convention = "classic"))]
fn docagne_matrix(n: usize, r: usize, s: usize, convention: &str) -> PyResult<PyIntMatrix> {
    identities::docagne_matrix(&sequence(n, convention)?, r, s)
        .map(Into::into)
        .map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (n, r, p, q, convention = "classic"))]
fn vajda_matrix(n: usize, r: usize, p: usize, q: usize, convention: &str) -> PyResult<PyIntMatrix> {
    identities::vajda_matrix(&sequence(n, convention)?, r, p, q)
        .map(Into::into)
        .map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (n, r, convention = "classic"))]
fn verify_cassini(n: usize, r: usize, convention: &str) -> PyResult<PyRecord> {
    identities::verify_cassini(&sequence(n, convention)?, r)
        .map(Into::into)
        .map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (n, r, s, convention = "classic"))]
fn verify_docagne(n: usize, r: usize, s: usize, convention: &str) -> PyResult<PyRecord> {
    identities::verify_docagne(&sequence(n, convention)?, r, s)
        .map(Into::into)
        .map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (n, r, p, q, convention = "classic"))]
fn verify_vajda(n: usize, r: usize, p: usize, q: usize, convention: &str) -> PyResult<PyRecord> {
    identities::verify_vajda(&sequence(n, convention)?, r, p, q)
        .map(Into::into)
        .map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (n, r, p, convention = "classic"))]
fn verify_catalan(n: usize, r: usize, p: usize, convention: &str) -> PyResult<PyRecord> {
    identities::verify_catalan(&sequence(n, convention)?, r, p)
        .map(Into::into)
        .map_err(value_error)
}

#[pyfunction]
fn generalized_docagne(a: &PyIntMatrix, r: usize) -> PyResult<PyRecord> {
    identities::generalized_docagne(&a.inner, r)
        .map(Into::into)
        .map_err(value_error)
}

#[pyfunction]
fn ratio_invariance(a: &PyIntMatrix, b: &PyIntMatrix, r: usize) -> PyResult<PyRecord> {
    identities::ratio_invariance(&a.inner, &b.inner, r)
        .map(Into::into)
        .map_err(value_error)
}

/// Runs the `nstep` command line; returns (exit_code, stdout, stderr).
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("nstep".to_string()).chain(args);
    let code = nstep_core::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}

#[pymodule]
fn nstep_fib(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyIntMatrix>()?;
    m.add_class::<PySequence>()?;
    m.add_class::<PyRecord>()?;
    m.add_class::<PyProp1Record>()?;
    m.add_function(wrap_pyfunction!(build_p, m)?)?;
    m.add_function(wrap_pyfunction!(build_q, m)?)?;
    m.add_function(wrap_pyfunction!(extend_columns, m)?)?;
    m.add_function(wrap_pyfunction!(minor_by_deletion, m)?)?;
    m.add_function(wrap_pyfunction!(sign_from_deleted, m)?)?;
    m.add_function(wrap_pyfunction!(sign_from_kept, m)?)?;
    m.add_function(wrap_pyfunction!(check_prop1, m)?)?;
    m.add_function(wrap_pyfunction!(q_fib_det, m)?)?;
    m.add_function(wrap_pyfunction!(companion_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(cassini_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(docagne_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(vajda_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(verify_cassini, m)?)?;
    m.add_function(wrap_pyfunction!(verify_docagne, m)?)?;
    m.add_function(wrap_pyfunction!(verify_vajda, m)?)?;
    m.add_function(wrap_pyfunction!(verify_catalan, m)?)?;
    m.add_function(wrap_pyfunction!(generalized_docagne, m)?)?;
    m.add_function(wrap_pyfunction!(ratio_invariance, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}

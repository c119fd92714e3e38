//! Python module `riccati`.
//!
//! Rationals cross the boundary as `"p/q"` strings (ints and
//! `fractions.Fraction` are accepted on input). Coefficients may be given
//! as expression text or as `Poly` / `TrigPoly` objects.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::pyclass::CompareOp;

use riccati_cli::parse::{parse_poly_expr, parse_trig_expr};
use riccati_cli::sample::sample_curves_csv;
use riccati_core::qpoly::{format_rational, parse_rational, to_f64, Poly, Rational};
use riccati_core::riccati_poly::{self, Provenance, RiccatiEq, SolutionSet};
use riccati_core::riccati_trig::{self, TrigRiccatiEq, TrigSolutionSet};
use riccati_core::trigring::{phi_forward, phi_inverse_parts, TrigPoly};
use riccati_core::Error;

create_exception!(riccati, RiccatiError, PyValueError);
create_exception!(riccati, BoundViolationError, RiccatiError);

fn err(e: Error) -> PyErr {
    match e {
        Error::BoundViolation { .. } => BoundViolationError::new_err(e.to_string()),
        _ => RiccatiError::new_err(e.to_string()),
    }
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(n) = obj.extract::<i64>() {
        return Ok(Rational::from_integer(n.into()));
    }
    let text = obj.str()?.to_string();
    parse_rational(text.trim()).ok_or_else(|| PyValueError::new_err(format!("'{text}' is not a rational number")))
}

fn rationals(items: &[Bound<'_, PyAny>]) -> PyResult<Vec<Rational>> {
    items.iter().map(rational).collect()
}

fn provenance(p: &Provenance) -> (String, Option<String>) {
    match p {
        Provenance::Seeded => ("seeded".into(), None),
        Provenance::BaseSearch => ("base-search".into(), None),
        Provenance::Closure(c) => ("closure".into(), Some(format_rational(c))),
    }
}

/// Polynomial with rational coefficients, ascending order.
#[pyclass(name = "Poly", module = "riccati", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyPoly {
    inner: Poly,
}

#[pymethods]
impl PyPoly {
    #[new]
    fn new(coeffs: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        Ok(PyPoly { inner: Poly::from_coeffs(rationals(&coeffs)?) })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_poly_expr(text).map(|inner| PyPoly { inner }).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn coeffs(&self) -> Vec<String> {
        self.inner.coeffs().iter().map(format_rational).collect()
    }

    /// `None` for the zero polynomial.
    #[getter]
    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    fn derivative(&self) -> Self {
        PyPoly { inner: self.inner.derivative() }
    }

    fn eval(&self, x: &Bound<'_, PyAny>) -> PyResult<String> {
        Ok(format_rational(&self.inner.eval(&rational(x)?)))
    }

    fn __add__(&self, other: PolyArg) -> PyResult<Self> {
        Ok(PyPoly { inner: &self.inner + &other.poly()? })
    }

    fn __sub__(&self, other: PolyArg) -> PyResult<Self> {
        Ok(PyPoly { inner: &self.inner - &other.poly()? })
    }

    fn __mul__(&self, other: PolyArg) -> PyResult<Self> {
        Ok(PyPoly { inner: &self.inner * &other.poly()? })
    }

    fn __richcmp__(&self, other: PolyArg, op: CompareOp) -> PyResult<bool> {
        let other = other.poly()?;
        match op {
            CompareOp::Eq => Ok(self.inner == other),
            CompareOp::Ne => Ok(self.inner != other),
            _ => Err(pyo3::exceptions::PyTypeError::new_err("polynomials are not ordered")),
        }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.inner)
    }
}

/// Real trigonometric polynomial `a0 + sum cos_k cos(kt) + sin_k sin(kt)`.
#[pyclass(name = "TrigPoly", module = "riccati", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyTrigPoly {
    inner: TrigPoly,
}

#[pymethods]
impl PyTrigPoly {
    #[new]
    #[pyo3(signature = (a0, cos = Vec::new(), sin = Vec::new()))]
    fn new(a0: &Bound<'_, PyAny>, cos: Vec<Bound<'_, PyAny>>, sin: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        Ok(PyTrigPoly { inner: TrigPoly::new(rational(a0)?, rationals(&cos)?, rationals(&sin)?) })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_trig_expr(text).map(|inner| PyTrigPoly { inner }).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[getter]
    fn a0(&self) -> String {
        format_rational(self.inner.a0())
    }

    #[getter]
    fn cos(&self) -> Vec<String> {
        self.inner.cos_coeffs().iter().map(format_rational).collect()
    }

    #[getter]
    fn sin(&self) -> Vec<String> {
        self.inner.sin_coeffs().iter().map(format_rational).collect()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn derivative(&self) -> Self {
        PyTrigPoly { inner: self.inner.derivative() }
    }

    fn eval(&self, theta: f64) -> f64 {
        self.inner.eval_f64(theta)
    }

    /// Half-angle image `(numerator coefficients, nu)`.
    fn to_rational_form(&self) -> (Vec<String>, usize) {
        let form = phi_forward(&self.inner);
        (form.numerator().coeffs().iter().map(format_rational).collect(), form.nu())
    }

    #[staticmethod]
    fn from_rational_form(numerator: Vec<Bound<'_, PyAny>>, nu: usize) -> PyResult<Self> {
        let num = Poly::from_coeffs(rationals(&numerator)?);
        phi_inverse_parts(num, nu).map(|inner| PyTrigPoly { inner }).map_err(err)
    }

    fn __add__(&self, other: TrigArg) -> PyResult<Self> {
        Ok(PyTrigPoly { inner: &self.inner + &other.trig()? })
    }

    fn __sub__(&self, other: TrigArg) -> PyResult<Self> {
        Ok(PyTrigPoly { inner: &self.inner - &other.trig()? })
    }

    fn __mul__(&self, other: TrigArg) -> PyResult<Self> {
        Ok(PyTrigPoly { inner: &self.inner * &other.trig()? })
    }

    fn __richcmp__(&self, other: TrigArg, op: CompareOp) -> PyResult<bool> {
        let other = other.trig()?;
        match op {
            CompareOp::Eq => Ok(self.inner == other),
            CompareOp::Ne => Ok(self.inner != other),
            _ => Err(pyo3::exceptions::PyTypeError::new_err("trigonometric polynomials are not ordered")),
        }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("TrigPoly('{}')", self.inner)
    }
}

#[derive(FromPyObject)]
pub enum PolyArg {
    Obj(PyPoly),
    Int(i64),
    Text(String),
}

impl PolyArg {
    fn poly(self) -> PyResult<Poly> {
        match self {
            PolyArg::Obj(p) => Ok(p.inner),
            PolyArg::Int(n) => Ok(Poly::from_i64(&[n])),
            PolyArg::Text(s) => parse_poly_expr(&s).map_err(|e| PyValueError::new_err(e.to_string())),
        }
    }
}

#[derive(FromPyObject)]
pub enum TrigArg {
    Obj(PyTrigPoly),
    Int(i64),
    Text(String),
}

impl TrigArg {
    fn trig(self) -> PyResult<TrigPoly> {
        match self {
            TrigArg::Obj(t) => Ok(t.inner),
            TrigArg::Int(n) => Ok(TrigPoly::from_i64(n, &[], &[])),
            TrigArg::Text(s) => parse_trig_expr(&s).map_err(|e| PyValueError::new_err(e.to_string())),
        }
    }
}

/// One solution with how it was found; `c` is the closure parameter.
#[pyclass(name = "Solution", module = "riccati", frozen, get_all)]
pub struct PySolution {
    value: Py<PyAny>,
    provenance: String,
    c: Option<String>,
}

#[pymethods]
impl PySolution {
    fn __repr__(&self, py: Python<'_>) -> PyResult<String> {
        Ok(format!("Solution({}, {})", self.value.bind(py).str()?, self.provenance))
    }
}

/// Solutions in canonical order.
#[pyclass(name = "SolutionSet", module = "riccati", frozen, get_all)]
pub struct PySolutionSet {
    solutions: Vec<Py<PySolution>>,
    complete_over_rationals: bool,
    count_bound: usize,
}

#[pymethods]
impl PySolutionSet {
    fn __len__(&self) -> usize {
        self.solutions.len()
    }

    fn values(&self, py: Python<'_>) -> Vec<Py<PyAny>> {
        self.solutions.iter().map(|s| s.get().value.clone_ref(py)).collect()
    }
}

fn poly_set(py: Python<'_>, set: &SolutionSet, count_bound: usize) -> PyResult<PySolutionSet> {
    let mut solutions = Vec::new();
    for e in set.entries() {
        let (provenance, c) = provenance(&e.provenance);
        let value = Py::new(py, PyPoly { inner: e.poly.clone() })?.into_any();
        solutions.push(Py::new(py, PySolution { value, provenance, c })?);
    }
    Ok(PySolutionSet { solutions, complete_over_rationals: set.complete_over_rationals(), count_bound })
}

fn trig_set(py: Python<'_>, set: &TrigSolutionSet, count_bound: usize) -> PyResult<PySolutionSet> {
    let mut solutions = Vec::new();
    for e in set.entries() {
        let (provenance, c) = provenance(&e.provenance);
        let value = Py::new(py, PyTrigPoly { inner: e.trig.clone() })?.into_any();
        solutions.push(Py::new(py, PySolution { value, provenance, c })?);
    }
    Ok(PySolutionSet { solutions, complete_over_rationals: set.complete_over_rationals(), count_bound })
}

/// `a y' = b0 + b1 y + b2 y^2` over polynomials.
#[pyclass(name = "RiccatiEq", module = "riccati", frozen)]
pub struct PyRiccatiEq {
    inner: RiccatiEq,
}

#[pymethods]
impl PyRiccatiEq {
    #[new]
    #[pyo3(signature = (a, b1, b2, b0 = PolyArg::Int(0)))]
    fn new(a: PolyArg, b1: PolyArg, b2: PolyArg, b0: PolyArg) -> PyResult<Self> {
        RiccatiEq::new(a.poly()?, b0.poly()?, b1.poly()?, b2.poly()?).map(|inner| PyRiccatiEq { inner }).map_err(err)
    }

    #[getter]
    fn eta(&self) -> usize {
        self.inner.eta()
    }

    #[getter]
    fn degree_bound(&self) -> usize {
        self.inner.degree_bound()
    }

    #[getter]
    fn count_bound(&self) -> usize {
        self.inner.count_bound()
    }

    fn coefficients(&self) -> [PyPoly; 4] {
        [self.inner.a(), self.inner.b0(), self.inner.b1(), self.inner.b2()].map(|p| PyPoly { inner: p.clone() })
    }

    fn verify(&self, y: PolyArg) -> PyResult<bool> {
        Ok(self.inner.verify_solution(&y.poly()?))
    }

    #[pyo3(signature = (seeds = None))]
    fn solve(&self, py: Python<'_>, seeds: Option<Vec<PolyArg>>) -> PyResult<PySolutionSet> {
        let seeds = seeds.map(|s| s.into_iter().map(PolyArg::poly).collect::<PyResult<Vec<_>>>()).transpose()?;
        let set = riccati_poly::solve_all(&self.inner, seeds.as_deref()).map_err(err)?;
        poly_set(py, &set, self.inner.count_bound())
    }

    fn __repr__(&self) -> String {
        format!("RiccatiEq({})", self.inner)
    }
}

/// `A Y' = B0 + B1 Y + B2 Y^2` over trigonometric polynomials in `t`.
#[pyclass(name = "TrigRiccatiEq", module = "riccati", frozen)]
pub struct PyTrigRiccatiEq {
    inner: TrigRiccatiEq,
}

#[pymethods]
impl PyTrigRiccatiEq {
    #[new]
    #[pyo3(signature = (a, b1, b2, b0 = TrigArg::Int(0)))]
    fn new(a: TrigArg, b1: TrigArg, b2: TrigArg, b0: TrigArg) -> PyResult<Self> {
        TrigRiccatiEq::new(a.trig()?, b0.trig()?, b1.trig()?, b2.trig()?)
            .map(|inner| PyTrigRiccatiEq { inner })
            .map_err(err)
    }

    #[getter]
    fn eta(&self) -> usize {
        self.inner.eta()
    }

    #[getter]
    fn degree_bound(&self) -> usize {
        self.inner.degree_bound()
    }

    #[getter]
    fn count_bound(&self) -> usize {
        self.inner.count_bound()
    }

    fn coefficients(&self) -> [PyTrigPoly; 4] {
        [self.inner.a(), self.inner.b0(), self.inner.b1(), self.inner.b2()].map(|t| PyTrigPoly { inner: t.clone() })
    }

    fn verify(&self, y: TrigArg) -> PyResult<bool> {
        Ok(self.inner.verify_solution(&y.trig()?))
    }

    #[pyo3(signature = (seeds = None))]
    fn solve(&self, py: Python<'_>, seeds: Option<Vec<TrigArg>>) -> PyResult<PySolutionSet> {
        let seeds = seeds.map(|s| s.into_iter().map(TrigArg::trig).collect::<PyResult<Vec<_>>>()).transpose()?;
        let set = riccati_trig::solve_all_trig(&self.inner, seeds.as_deref()).map_err(err)?;
        trig_set(py, &set, self.inner.count_bound())
    }

    /// CSV with columns theta, A, Y1..Yk on `n` points of [0, 2 pi].
    fn sample_csv(&self, n: usize) -> PyResult<String> {
        let set = riccati_trig::solve_all_trig(&self.inner, None).map_err(err)?;
        sample_curves_csv(&self.inner, &set, n).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("TrigRiccatiEq({})", self.inner)
    }
}

/// Polynomial equation with `j` solutions: 0 and `-a / (x - r)` per root.
#[pyfunction]
fn gen_extremal(
    py: Python<'_>,
    eta: usize,
    j: usize,
    roots: Vec<Bound<'_, PyAny>>,
) -> PyResult<(PyRiccatiEq, PySolutionSet)> {
    let (eq, set) = riccati_poly::gen_extremal(eta, j, &rationals(&roots)?).map_err(err)?;
    let set = poly_set(py, &set, eq.count_bound())?;
    Ok((PyRiccatiEq { inner: eq }, set))
}

/// Trigonometric equation with `len(constants) + 3` solutions.
#[pyfunction]
#[pyo3(signature = (eta, constants, d1 = None, d2 = None))]
fn gen_extremal_trig(
    py: Python<'_>,
    eta: usize,
    constants: Vec<Bound<'_, PyAny>>,
    d1: Option<Bound<'_, PyAny>>,
    d2: Option<Bound<'_, PyAny>>,
) -> PyResult<(PyTrigRiccatiEq, PySolutionSet)> {
    let d1 = d1.map(|d| rational(&d)).transpose()?.unwrap_or_else(|| Rational::from_integer(1.into()));
    let d2 = d2.map(|d| rational(&d)).transpose()?.unwrap_or_else(|| Rational::from_integer((-1).into()));
    let (eq, set) = riccati_trig::gen_extremal_trig(eta, &rationals(&constants)?, &d1, &d2).map_err(err)?;
    let set = trig_set(py, &set, eq.count_bound())?;
    Ok((PyTrigRiccatiEq { inner: eq }, set))
}

#[pyfunction]
fn cross_ratio(y1: PolyArg, y2: PolyArg, y3: PolyArg, y4: PolyArg) -> PyResult<String> {
    let r = riccati_poly::cross_ratio(&y1.poly()?, &y2.poly()?, &y3.poly()?, &y4.poly()?).map_err(err)?;
    Ok(format_rational(&r))
}

#[pyfunction]
fn trig_cross_ratio(y1: TrigArg, y2: TrigArg, y3: TrigArg, y4: TrigArg) -> PyResult<String> {
    let r = riccati_trig::trig_cross_ratio(&y1.trig()?, &y2.trig()?, &y3.trig()?, &y4.trig()?).map_err(err)?;
    Ok(format_rational(&r))
}

/// Float value of a `"p/q"` string.
#[pyfunction]
fn rational_to_float(value: &Bound<'_, PyAny>) -> PyResult<f64> {
    Ok(to_f64(&rational(value)?))
}

#[pymodule]
fn riccati(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyPoly>()?;
    m.add_class::<PyTrigPoly>()?;
    m.add_class::<PyRiccatiEq>()?;
    m.add_class::<PyTrigRiccatiEq>()?;
    m.add_class::<PySolution>()?;
    m.add_class::<PySolutionSet>()?;
    m.add_function(wrap_pyfunction!(gen_extremal, m)?)?;
    m.add_function(wrap_pyfunction!(gen_extremal_trig, m)?)?;
    m.add_function(wrap_pyfunction!(cross_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(trig_cross_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(rational_to_float, m)?)?;
    m.add("RiccatiError", py.get_type::<RiccatiError>())?;
    m.add("BoundViolationError", py.get_type::<BoundViolationError>())?;
    Ok(())
}

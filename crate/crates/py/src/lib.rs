//! Python bindings: `import hilbert_fock`.
//!
//! Rationals cross the boundary as `Rational` objects, Python ints or
//! strings like `"-3/4"`; partitions as lists of ints.

use hilbert_fock::hilbert::{self, ClassName, ClassSpec, Target};
use hilbert_fock::json::fock_to_json;
use hilbert_fock::partition::{self, Partition};
use hilbert_fock::verify::{self, Suite};
use hilbert_fock::{Error, FockElement, Rational, TruncatedSeries};
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyString;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(r) = obj.cast::<PyRational>() {
        return Ok(r.get().0.clone());
    }
    if let Ok(s) = obj.cast::<PyString>() {
        return s.to_str()?.trim().parse().map_err(py_err);
    }
    if let Ok(i) = obj.extract::<i64>() {
        return Ok(Rational::from(i));
    }
    // arbitrary-size Python ints
    obj.str()?.to_str()?.parse().map_err(py_err)
}

fn to_rationals(seq: &Bound<'_, PyAny>) -> PyResult<Vec<Rational>> {
    seq.try_iter()?.map(|item| to_rational(&item?)).collect()
}

fn to_partition(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts).map_err(py_err)
}

#[pyclass(name = "Rational", module = "hilbert_fock", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyRational(Rational);

#[pymethods]
impl PyRational {
    #[new]
    #[pyo3(signature = (value, denominator = None))]
    fn new(value: &Bound<'_, PyAny>, denominator: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        let num = to_rational(value)?;
        match denominator {
            None => Ok(PyRational(num)),
            Some(d) => Ok(PyRational(num.checked_div(&to_rational(d)?).map_err(py_err)?)),
        }
    }

    #[getter]
    fn numerator(&self) -> String {
        self.0.numer().to_string()
    }

    #[getter]
    fn denominator(&self) -> String {
        self.0.denom().to_string()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Rational('{}')", self.0)
    }

    fn __float__(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{DefaultHasher, Hash, Hasher};
        let mut h = DefaultHasher::new();
        self.0.to_string().hash(&mut h);
        h.finish()
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        to_rational(other).is_ok_and(|o| o == self.0)
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyRational(&self.0 + &to_rational(other)?))
    }

    fn __radd__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__add__(other)
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyRational(&self.0 - &to_rational(other)?))
    }

    fn __rsub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyRational(&to_rational(other)? - &self.0))
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyRational(&self.0 * &to_rational(other)?))
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__mul__(other)
    }

    fn __truediv__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyRational(self.0.checked_div(&to_rational(other)?).map_err(py_err)?))
    }

    fn __rtruediv__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyRational(to_rational(other)?.checked_div(&self.0).map_err(py_err)?))
    }

    fn __neg__(&self) -> Self {
        PyRational(-self.0.clone())
    }
}

/// A power series truncated at a fixed order.
#[pyclass(name = "Series", module = "hilbert_fock", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PySeries(TruncatedSeries);

#[pymethods]
impl PySeries {
    /// `Series([1, "1/2", 0], order=None)`; missing coefficients up to
    /// `order` are zero.
    #[new]
    #[pyo3(signature = (coeffs, order = None))]
    fn new(coeffs: &Bound<'_, PyAny>, order: Option<usize>) -> PyResult<Self> {
        let cs = to_rationals(coeffs)?;
        if cs.is_empty() {
            return Err(PyValueError::new_err("a series needs at least one coefficient"));
        }
        let order = order.unwrap_or(cs.len() - 1);
        let keep = cs.len().min(order + 1);
        Ok(PySeries(TruncatedSeries::from_rationals(&cs[..keep], order).map_err(py_err)?))
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn coeffs(&self) -> Vec<PyRational> {
        self.0.coeffs().iter().cloned().map(PyRational).collect()
    }

    fn coeff(&self, k: usize) -> PyResult<PyRational> {
        if k > self.0.order() {
            return Err(PyValueError::new_err(format!("exponent {k} exceeds order {}", self.0.order())));
        }
        Ok(PyRational(self.0.coeff(k).clone()))
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.0)
    }

    fn __len__(&self) -> usize {
        self.0.order() + 1
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other.cast::<PySeries>().is_ok_and(|o| o.get().0 == self.0)
    }

    fn __add__(&self, other: &PySeries) -> PyResult<Self> {
        Ok(PySeries(self.0.add(&other.0).map_err(py_err)?))
    }

    fn __sub__(&self, other: &PySeries) -> PyResult<Self> {
        Ok(PySeries(self.0.sub(&other.0).map_err(py_err)?))
    }

    fn __mul__(&self, other: &PySeries) -> PyResult<Self> {
        Ok(PySeries(self.0.mul(&other.0).map_err(py_err)?))
    }

    fn __truediv__(&self, other: &PySeries) -> PyResult<Self> {
        Ok(PySeries(self.0.div(&other.0).map_err(py_err)?))
    }

    fn __neg__(&self) -> Self {
        PySeries(self.0.neg())
    }

    fn __pow__(&self, e: u32, _modulo: Option<&Bound<'_, PyAny>>) -> Self {
        PySeries(self.0.pow(e))
    }

    fn exp(&self) -> PyResult<Self> {
        Ok(PySeries(self.0.exp().map_err(py_err)?))
    }

    fn log(&self) -> PyResult<Self> {
        Ok(PySeries(self.0.log().map_err(py_err)?))
    }

    fn sqrt(&self) -> PyResult<Self> {
        Ok(PySeries(self.0.sqrt_unit().map_err(py_err)?))
    }

    fn derivative(&self) -> Self {
        PySeries(self.0.derivative())
    }

    /// `self(inner(x))`.
    fn compose(&self, inner: &PySeries) -> PyResult<Self> {
        Ok(PySeries(TruncatedSeries::compose(&self.0, &inner.0).map_err(py_err)?))
    }

    fn revert(&self) -> PyResult<Self> {
        Ok(PySeries(self.0.revert().map_err(py_err)?))
    }

    /// `g` with `∂g/∂t (x / F) = F`, `F = self`.
    fn lagrange_g(&self, order: usize) -> PyResult<Self> {
        Ok(PySeries(TruncatedSeries::lagrange_g(&self.0, order).map_err(py_err)?))
    }
}

/// A linear combination of `q_λ|0⟩`, truncated at a weight bound.
#[pyclass(name = "FockElement", module = "hilbert_fock", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyFockElement(FockElement);

#[pymethods]
impl PyFockElement {
    /// `FockElement([((2, 1), "1/2"), ((3,), 1)], weight_bound)`
    #[new]
    fn new(terms: Vec<(Vec<usize>, Bound<'_, PyAny>)>, weight_bound: usize) -> PyResult<Self> {
        let mut parsed = Vec::with_capacity(terms.len());
        for (parts, c) in terms {
            parsed.push((to_partition(parts)?, to_rational(&c)?));
        }
        if let Some((l, _)) = parsed.iter().find(|(l, _)| l.weight() > weight_bound) {
            return Err(PyValueError::new_err(format!("{l} exceeds weight bound {weight_bound}")));
        }
        Ok(PyFockElement(FockElement::from_terms(weight_bound, parsed)))
    }

    #[staticmethod]
    fn unit(n: usize) -> Self {
        PyFockElement(FockElement::unit(n))
    }

    #[getter]
    fn weight_bound(&self) -> usize {
        self.0.weight_bound()
    }

    fn terms(&self) -> Vec<(Vec<usize>, PyRational)> {
        self.0.terms().map(|(l, c)| (l.parts().to_vec(), PyRational(c.clone()))).collect()
    }

    fn coeff(&self, parts: Vec<usize>) -> PyResult<PyRational> {
        let lambda = to_partition(parts)?;
        Ok(PyRational(self.0.coeff(&lambda).cloned().unwrap_or_else(Rational::zero)))
    }

    fn component(&self, n: usize) -> PyResult<Self> {
        Ok(PyFockElement(self.0.component(n).map_err(py_err)?))
    }

    fn degree_component(&self, d: usize) -> Self {
        PyFockElement(self.0.degree_component(d))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn to_json(&self) -> String {
        fock_to_json(&self.0).to_string()
    }

    fn __len__(&self) -> usize {
        self.0.num_terms()
    }

    fn __repr__(&self) -> String {
        format!("FockElement({})", self.to_json())
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other.cast::<PyFockElement>().is_ok_and(|o| o.get().0 == self.0)
    }

    fn __add__(&self, other: &PyFockElement) -> PyResult<Self> {
        Ok(PyFockElement(self.0.add(&other.0).map_err(py_err)?))
    }

    fn __sub__(&self, other: &PyFockElement) -> PyResult<Self> {
        Ok(PyFockElement(self.0.sub(&other.0).map_err(py_err)?))
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(PyFockElement(self.0.scale(&to_rational(other)?)))
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__mul__(other)
    }

    fn __neg__(&self) -> Self {
        PyFockElement(self.0.neg())
    }
}

fn class_name(name: &str, r: Option<&Bound<'_, PyAny>>, f: Option<&Bound<'_, PyAny>>) -> PyResult<ClassName> {
    let named = match name {
        "chern" => ClassName::Chern,
        "segre" => ClassName::Segre,
        "sqrt-todd" | "sqrt_todd" => ClassName::SqrtTodd,
        "todd" => ClassName::Todd,
        "cprime-pow" | "cprime_pow" => {
            let r = r.ok_or_else(|| PyValueError::new_err("cprime-pow needs r"))?;
            ClassName::CprimePow(to_rational(r)?)
        }
        "custom" => {
            let f = f.ok_or_else(|| PyValueError::new_err("custom needs f"))?;
            ClassName::Custom(to_rationals(f)?)
        }
        other => return Err(PyValueError::new_err(format!("unknown class {other:?}"))),
    };
    Ok(named)
}

fn class_spec(
    name: &str,
    target: &str,
    order: usize,
    r: Option<&Bound<'_, PyAny>>,
    f: Option<&Bound<'_, PyAny>>,
) -> PyResult<ClassSpec> {
    let target: Target = target.parse().map_err(py_err)?;
    let series = class_name(name, r, f)?.series(order.max(1)).map_err(py_err)?;
    ClassSpec::new(series, target).map_err(py_err)
}

/// The defining series `f` of a named class.
#[pyfunction]
#[pyo3(signature = (name, order, r = None, f = None))]
fn class_series(
    name: &str,
    order: usize,
    r: Option<&Bound<'_, PyAny>>,
    f: Option<&Bound<'_, PyAny>>,
) -> PyResult<PySeries> {
    Ok(PySeries(class_name(name, r, f)?.series(order).map_err(py_err)?))
}

#[pyfunction]
fn tangent_g(f: &PySeries, order: usize) -> PyResult<PySeries> {
    Ok(PySeries(hilbert::tangent_g(&f.0, order).map_err(py_err)?))
}

#[pyfunction]
fn taut_g(f: &PySeries, order: usize) -> PyResult<PySeries> {
    Ok(PySeries(hilbert::taut_g(&f.0, order).map_err(py_err)?))
}

/// `g_0..g_order` for a named class on `"tangent"` or `"tautological"`.
#[pyfunction]
#[pyo3(signature = (name, target, order, r = None, f = None))]
fn g_series(
    name: &str,
    target: &str,
    order: usize,
    r: Option<&Bound<'_, PyAny>>,
    f: Option<&Bound<'_, PyAny>>,
) -> PyResult<PySeries> {
    let spec = class_spec(name, target, order, r, f)?;
    Ok(PySeries(hilbert::g_series(&spec, order).map_err(py_err)?))
}

/// `exp(Σ g_k q_k(1))|0⟩` on all weights up to `weight`.
#[pyfunction]
#[pyo3(signature = (name, target, weight, r = None, f = None))]
fn hilbert_class(
    name: &str,
    target: &str,
    weight: usize,
    r: Option<&Bound<'_, PyAny>>,
    f: Option<&Bound<'_, PyAny>>,
) -> PyResult<PyFockElement> {
    let spec = class_spec(name, target, weight, r, f)?;
    Ok(PyFockElement(hilbert::hilbert_class(&spec, weight).map_err(py_err)?))
}

/// `q_ν|0⟩ ∪ q_ν'|0⟩`.
#[pyfunction]
fn cup_basis(left: Vec<usize>, right: Vec<usize>) -> PyResult<PyFockElement> {
    let product = hilbert::cup_basis(&to_partition(left)?, &to_partition(right)?).map_err(py_err)?;
    Ok(PyFockElement(product))
}

/// Cup product of two classes supported in weight `n`.
#[pyfunction]
fn cup(py: Python<'_>, a: &PyFockElement, b: &PyFockElement, n: usize) -> PyResult<PyFockElement> {
    let (a, b) = (a.0.clone(), b.0.clone());
    let product = py.detach(move || hilbert::cup(&a, &b, n)).map_err(py_err)?;
    Ok(PyFockElement(product))
}

#[pyfunction]
fn oracle_top_tangent(f: &PySeries, n: usize) -> PyResult<PyRational> {
    Ok(PyRational(hilbert::oracle_top_tangent(&f.0, n).map_err(py_err)?))
}

#[pyfunction]
fn oracle_top_taut(f: &PySeries, n: usize) -> PyResult<PyRational> {
    Ok(PyRational(hilbert::oracle_top_taut(&f.0, n).map_err(py_err)?))
}

#[pyfunction]
fn partitions(n: usize) -> Vec<Vec<usize>> {
    partition::enumerate(n).into_iter().map(|p| p.parts().to_vec()).collect()
}

/// Runs a check suite; returns `(passed, [(name, passed, detail), ...])`.
#[pyfunction]
fn run_verify(py: Python<'_>, suite: &str) -> PyResult<(bool, Vec<(String, bool, Option<String>)>)> {
    let suite: Suite = suite.parse().map_err(py_err)?;
    let checks = py.detach(move || verify::run(suite)).map_err(py_err)?;
    let passed = checks.iter().all(|c| c.passed);
    Ok((passed, checks.into_iter().map(|c| (c.name, c.passed, c.detail)).collect()))
}

#[pymodule]
#[pyo3(name = "hilbert_fock")]
fn hilbert_fock_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyRational>()?;
    m.add_class::<PySeries>()?;
    m.add_class::<PyFockElement>()?;
    m.add_function(wrap_pyfunction!(class_series, m)?)?;
    m.add_function(wrap_pyfunction!(tangent_g, m)?)?;
    m.add_function(wrap_pyfunction!(taut_g, m)?)?;
    m.add_function(wrap_pyfunction!(g_series, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_class, m)?)?;
    m.add_function(wrap_pyfunction!(cup_basis, m)?)?;
    m.add_function(wrap_pyfunction!(cup, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_top_tangent, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_top_taut, m)?)?;
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}

//! Python bindings for the colorful necklace and bracelet counts.
//!
//! Sequence values come back as Python `int`s of arbitrary size.

use ::colorful_necklaces as core;
use ::colorful_necklaces::{Arrangement, Count, GroupKind, Oracle, S3Perm, SequenceKind};
use num_bigint::{BigInt, BigUint};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn to_py_err(err: core::Error) -> PyErr {
    match err {
        core::Error::Internal(_) => PyRuntimeError::new_err(err.to_string()),
        _ => PyValueError::new_err(err.to_string()),
    }
}

fn big(result: core::Result<Count>) -> PyResult<BigUint> {
    result.map(Count::into_biguint).map_err(to_py_err)
}

fn arrangement(kind: &str) -> PyResult<Arrangement> {
    match kind {
        "necklace" => Ok(Arrangement::Necklace),
        "bracelet" => Ok(Arrangement::Bracelet),
        other => Err(PyValueError::new_err(format!(
            "kind must be 'necklace' or 'bracelet', got {other:?}"
        ))),
    }
}

fn group_kind(kind: &str) -> PyResult<GroupKind> {
    Ok(match arrangement(kind)? {
        Arrangement::Necklace => GroupKind::Rotations,
        Arrangement::Bracelet => GroupKind::Dihedral,
    })
}

/// An element `(sigma, eps, shift)` of the color-permutation and
/// rotation/reflection group for words of length `n`.
#[pyclass(
    name = "GroupElement",
    module = "colorful_necklaces",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyGroupElement {
    inner: core::GroupElement,
}

#[pymethods]
impl PyGroupElement {
    #[new]
    #[pyo3(signature = (n, sigma="id", eps=0, shift=0))]
    fn new(n: u64, sigma: &str, eps: u8, shift: i64) -> PyResult<Self> {
        if eps > 1 {
            return Err(PyValueError::new_err("eps must be 0 or 1"));
        }
        let sigma: S3Perm = sigma.parse().map_err(to_py_err)?;
        let inner = core::GroupElement::new(n, sigma, eps == 1, shift).map_err(to_py_err)?;
        Ok(PyGroupElement { inner })
    }

    #[getter]
    fn n(&self) -> u64 {
        self.inner.n()
    }

    #[getter]
    fn sigma(&self) -> &'static str {
        self.inner.sigma().name()
    }

    #[getter]
    fn eps(&self) -> u8 {
        self.inner.eps()
    }

    #[getter]
    fn shift(&self) -> u64 {
        self.inner.shift()
    }

    /// Acts on a colorful word given as a string over "123".
    fn apply(&self, word: &str) -> PyResult<String> {
        let word: core::ColorfulWord = word.parse().map_err(to_py_err)?;
        Ok(core::apply(&self.inner, &word)
            .map_err(to_py_err)?
            .to_string())
    }

    fn compose(&self, other: &PyGroupElement) -> PyResult<PyGroupElement> {
        let inner = self.inner.compose(&other.inner).map_err(to_py_err)?;
        Ok(PyGroupElement { inner })
    }

    fn inverse(&self) -> PyGroupElement {
        PyGroupElement {
            inner: self.inner.inverse(),
        }
    }

    /// Closed-form number of colorful words fixed by this element.
    fn fixed_points(&self) -> PyResult<BigUint> {
        big(core::fixed_points(&self.inner))
    }

    fn __repr__(&self) -> String {
        format!(
            "GroupElement(n={}, sigma='{}', eps={}, shift={})",
            self.inner.n(),
            self.inner.sigma(),
            self.inner.eps(),
            self.inner.shift()
        )
    }
}

#[pyfunction]
fn divisors(n: u64) -> PyResult<Vec<u64>> {
    core::number_theory::divisors(n).map_err(to_py_err)
}

#[pyfunction]
fn euler_phi(n: u64) -> PyResult<u64> {
    core::number_theory::euler_phi(n).map_err(to_py_err)
}

#[pyfunction]
fn moebius(n: u64) -> PyResult<i8> {
    core::number_theory::moebius(n).map_err(to_py_err)
}

#[pyfunction]
fn nu3(n: u64) -> PyResult<u32> {
    core::number_theory::nu3(n).map_err(to_py_err)
}

#[pyfunction]
fn signed_phi_divisor_sum(n: u64) -> PyResult<BigInt> {
    core::number_theory::signed_phi_divisor_sum(n).map_err(to_py_err)
}

#[pyfunction]
fn alpha(n: u64) -> PyResult<BigUint> {
    big(core::alpha(n))
}

#[pyfunction]
fn chi(k: u64) -> PyResult<u8> {
    core::chi(k).map_err(to_py_err)
}

#[pyfunction]
#[pyo3(signature = (n, sigma, eps, shift))]
fn fixed_points(n: u64, sigma: &str, eps: u8, shift: i64) -> PyResult<BigUint> {
    PyGroupElement::new(n, sigma, eps, shift)?.fixed_points()
}

#[pyfunction]
fn necklace_count(n: u64) -> PyResult<BigUint> {
    big(core::necklace_count(n))
}

#[pyfunction]
fn bracelet_count(n: u64) -> PyResult<BigUint> {
    big(core::bracelet_count(n))
}

#[pyfunction]
fn reflection_term(n: u64) -> PyResult<BigUint> {
    big(core::reflection_term(n))
}

/// `(a, b, c)` with `K(n) = (a + 3b + 2c) / (6n)`.
#[pyfunction]
fn necklace_count_components(n: u64) -> PyResult<(BigUint, BigUint, BigUint)> {
    let parts = core::necklace_count_components(n).map_err(to_py_err)?;
    Ok((
        parts.a.into_biguint(),
        parts.b.into_biguint(),
        parts.c.into_biguint(),
    ))
}

#[pyfunction]
#[pyo3(signature = (n, kind="necklace"))]
fn exact_color_count(n: u64, kind: &str) -> PyResult<BigUint> {
    big(core::exact_color_count(n, arrangement(kind)?))
}

#[pyfunction]
#[pyo3(signature = (n, kind="necklace"))]
fn exact_period_count(n: u64, kind: &str) -> PyResult<BigUint> {
    big(core::exact_period_count(n, arrangement(kind)?))
}

#[pyfunction]
fn classical_necklace(n: u64, colors: u64) -> PyResult<BigUint> {
    big(core::classical_necklace(n, colors))
}

#[pyfunction]
fn classical_bracelet(n: u64, colors: u64) -> PyResult<BigUint> {
    big(core::classical_bracelet(n, colors))
}

/// Values of a named sequence for `n` in `start..=stop`.
#[pyfunction]
fn sequence(kind: &str, start: u64, stop: u64) -> PyResult<Vec<BigUint>> {
    let kind: SequenceKind = kind.parse().map_err(to_py_err)?;
    (start..=stop).map(|n| big(kind.value(n))).collect()
}

#[pyfunction]
#[pyo3(signature = (n, cap=core::oracle::DEFAULT_CAP))]
fn enumerate_colorful(n: u64, cap: u64) -> PyResult<Vec<String>> {
    let words = Oracle::with_cap(cap)
        .enumerate_colorful(n)
        .map_err(to_py_err)?;
    Ok(words.iter().map(|w| w.to_string()).collect())
}

/// Brute-force orbit count; `kind` is "necklace" or "bracelet".
#[pyfunction]
#[pyo3(signature = (n, kind="necklace", cap=core::oracle::DEFAULT_CAP))]
fn orbit_count(py: Python<'_>, n: u64, kind: &str, cap: u64) -> PyResult<BigUint> {
    let kind = group_kind(kind)?;
    py.detach(|| big(Oracle::with_cap(cap).orbit_count(n, kind)))
}

#[pyfunction]
#[pyo3(signature = (g, cap=core::oracle::DEFAULT_CAP))]
fn fixed_point_scan(g: &PyGroupElement, cap: u64) -> PyResult<BigUint> {
    big(Oracle::with_cap(cap).fixed_point_scan(&g.inner))
}

#[pyfunction]
#[pyo3(signature = (n, kind="necklace", cap=core::oracle::DEFAULT_CAP))]
fn exact_period_scan(py: Python<'_>, n: u64, kind: &str, cap: u64) -> PyResult<BigUint> {
    let kind = group_kind(kind)?;
    py.detach(|| big(Oracle::with_cap(cap).exact_period_scan(n, kind)))
}

#[pymodule]
#[pyo3(name = "colorful_necklaces")]
fn py_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroupElement>()?;
    m.add_function(wrap_pyfunction!(divisors, m)?)?;
    m.add_function(wrap_pyfunction!(euler_phi, m)?)?;
    m.add_function(wrap_pyfunction!(moebius, m)?)?;
    m.add_function(wrap_pyfunction!(nu3, m)?)?;
    m.add_function(wrap_pyfunction!(signed_phi_divisor_sum, m)?)?;
    m.add_function(wrap_pyfunction!(alpha, m)?)?;
    m.add_function(wrap_pyfunction!(chi, m)?)?;
    m.add_function(wrap_pyfunction!(fixed_points, m)?)?;
    m.add_function(wrap_pyfunction!(necklace_count, m)?)?;
    m.add_function(wrap_pyfunction!(bracelet_count, m)?)?;
    m.add_function(wrap_pyfunction!(reflection_term, m)?)?;
    m.add_function(wrap_pyfunction!(necklace_count_components, m)?)?;
    m.add_function(wrap_pyfunction!(exact_color_count, m)?)?;
    m.add_function(wrap_pyfunction!(exact_period_count, m)?)?;
    m.add_function(wrap_pyfunction!(classical_necklace, m)?)?;
    m.add_function(wrap_pyfunction!(classical_bracelet, m)?)?;
    m.add_function(wrap_pyfunction!(sequence, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_colorful, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_count, m)?)?;
    m.add_function(wrap_pyfunction!(fixed_point_scan, m)?)?;
    m.add_function(wrap_pyfunction!(exact_period_scan, m)?)?;
    Ok(())
}

//! Python bindings: exact-rational signatures and multivectors, plus the
//! blade, oracle and orthogonalization helpers.
//!
//! Coefficients cross the boundary as Python `int` or as strings such as
//! `"-3/4"` or `"0.25"`, and come back as canonical strings (`"a"` or `"a/b"`).

use std::sync::Arc;

use blade_core::{
    self as core, parse_scalar, GramMatrix, IndexSet, Matrix, Rational, Signature as CoreSignature,
};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

type Mv = core::Multivector<Rational>;

fn value_error(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A coefficient as accepted from Python.
#[derive(FromPyObject)]
enum Number {
    Int(i64),
    Text(String),
}

impl Number {
    fn to_rational(&self) -> PyResult<Rational> {
        match self {
            Number::Int(n) => Ok(Rational::from_integer((*n).into())),
            Number::Text(s) => parse_scalar(s).map_err(value_error),
        }
    }
}

fn rationals(values: &[Number]) -> PyResult<Vec<Rational>> {
    values.iter().map(Number::to_rational).collect()
}

fn index_set(indices: Vec<u32>) -> PyResult<IndexSet> {
    IndexSet::new(indices).map_err(value_error)
}

/// Diagonal quadratic form `q(i)` on generators `1..=n`.
#[pyclass(frozen, skip_from_py_object, module = "blade_py")]
#[derive(Clone)]
pub struct Signature {
    inner: Arc<CoreSignature<Rational>>,
}

#[pymethods]
impl Signature {
    #[new]
    fn new(squares: Vec<Number>) -> PyResult<Self> {
        Ok(Signature {
            inner: Arc::new(CoreSignature::from_diag(rationals(&squares)?)),
        })
    }

    /// `p` generators squaring to 1, then `q` to -1, then `r` to 0.
    #[staticmethod]
    fn pqr(p: usize, q: usize, r: usize) -> Self {
        Signature {
            inner: Arc::new(CoreSignature::from_pqr(p, q, r)),
        }
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn squares(&self) -> Vec<String> {
        self.inner.squares().map(|(_, q)| q.to_string()).collect()
    }

    /// Every blade as its sorted index list, in canonical order.
    fn blades(&self) -> Vec<Vec<u32>> {
        self.inner.blades().into_iter().map(|k| k.indices().to_vec()).collect()
    }

    fn __repr__(&self) -> String {
        format!("Signature([{}])", self.squares().join(", "))
    }
}

/// Element of the algebra over a [`Signature`], with rational coefficients.
#[pyclass(frozen, skip_from_py_object, module = "blade_py")]
#[derive(Clone)]
pub struct Multivector {
    inner: Mv,
}

impl Multivector {
    fn wrap(inner: Mv) -> Self {
        Multivector { inner }
    }

    fn binary(&self, other: &Self, f: impl Fn(&Mv, &Mv) -> core::Result<Mv>) -> PyResult<Self> {
        f(&self.inner, &other.inner).map(Self::wrap).map_err(value_error)
    }
}

#[pymethods]
impl Multivector {
    #[staticmethod]
    fn scalar(sig: &Signature, value: Number) -> PyResult<Self> {
        Ok(Self::wrap(Mv::scalar(&sig.inner, value.to_rational()?)))
    }

    /// The blade `e_K` for a strictly increasing index list `K`.
    #[staticmethod]
    fn blade(sig: &Signature, indices: Vec<u32>) -> PyResult<Self> {
        Mv::blade(&sig.inner, index_set(indices)?)
            .map(Self::wrap)
            .map_err(value_error)
    }

    #[staticmethod]
    fn vector(sig: &Signature, coefficients: Vec<Number>) -> PyResult<Self> {
        Mv::vector(&sig.inner, &rationals(&coefficients)?)
            .map(Self::wrap)
            .map_err(value_error)
    }

    #[getter]
    fn signature(&self) -> Signature {
        Signature {
            inner: self.inner.signature().clone(),
        }
    }

    /// `(indices, coefficient)` pairs in canonical order.
    fn terms(&self) -> Vec<(Vec<u32>, String)> {
        self.inner
            .terms()
            .map(|(k, c)| (k.indices().to_vec(), c.to_string()))
            .collect()
    }

    fn coefficient(&self, indices: Vec<u32>) -> PyResult<String> {
        Ok(self.inner.coefficient(&index_set(indices)?).to_string())
    }

    fn scalar_part(&self) -> String {
        self.inner.scalar_part().to_string()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn grades(&self) -> Vec<usize> {
        self.inner.grades().into_iter().collect()
    }

    fn gp(&self, other: &Self) -> PyResult<Self> {
        self.binary(other, Mv::gp)
    }

    fn op(&self, other: &Self) -> PyResult<Self> {
        self.binary(other, Mv::op)
    }

    /// Left contraction.
    fn lc(&self, other: &Self) -> PyResult<Self> {
        self.binary(other, Mv::lc)
    }

    /// Right contraction.
    fn rc(&self, other: &Self) -> PyResult<Self> {
        self.binary(other, Mv::rc)
    }

    fn sp(&self, other: &Self) -> PyResult<Self> {
        self.binary(other, Mv::sp)
    }

    /// Grade-`r` part; negative `r` gives zero.
    fn grade(&self, r: i64) -> Self {
        Self::wrap(self.inner.grade(r))
    }

    fn even(&self) -> Self {
        Self::wrap(self.inner.even())
    }

    fn odd(&self) -> Self {
        Self::wrap(self.inner.odd())
    }

    fn involute(&self) -> Self {
        Self::wrap(self.inner.involute())
    }

    fn reverse(&self) -> Self {
        Self::wrap(self.inner.reverse())
    }

    fn scale(&self, factor: Number) -> PyResult<Self> {
        Ok(Self::wrap(self.inner.scale(&factor.to_rational()?)))
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.binary(other, Mv::try_add)
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.binary(other, Mv::try_sub)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.gp(other)
    }

    fn __xor__(&self, other: &Self) -> PyResult<Self> {
        self.op(other)
    }

    fn __neg__(&self) -> Self {
        Self::wrap(-&self.inner)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Multivector({:?})", self.inner.to_string())
    }
}

/// Parses and evaluates an expression such as `"e[1,2]*e3 - 1/2"`.
#[pyfunction]
fn evaluate(text: &str, sig: &Signature) -> PyResult<Multivector> {
    core::evaluate(text, &sig.inner)
        .map(Multivector::wrap)
        .map_err(value_error)
}

/// Reordering sign of `e_H e_J`: `1` or `-1`.
#[pyfunction]
fn alpha(h: Vec<u32>, j: Vec<u32>) -> PyResult<i32> {
    let sign = core::alpha(&index_set(h)?, &index_set(j)?);
    Ok(if sign.is_negative() { -1 } else { 1 })
}

#[pyfunction]
fn symdiff(h: Vec<u32>, j: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(index_set(h)?.symdiff(&index_set(j)?).indices().to_vec())
}

/// Structure constant of `e_H e_J` as a rational string.
#[pyfunction]
fn sigma(h: Vec<u32>, j: Vec<u32>, sig: &Signature) -> PyResult<String> {
    core::sigma(&index_set(h)?, &index_set(j)?, &sig.inner)
        .map(|s| s.to_string())
        .map_err(value_error)
}

/// Product of generators `e_{w1} e_{w2} ...` reduced by word rewriting.
#[pyfunction]
fn rewrite_word(word: Vec<u32>, sig: &Signature) -> PyResult<Multivector> {
    core::rewrite_word(&core::Word(word), &sig.inner)
        .map(Multivector::wrap)
        .map_err(value_error)
}

#[pyfunction]
fn is_independent(vectors: Vec<PyRef<'_, Multivector>>) -> PyResult<bool> {
    let vectors: Vec<Mv> = vectors.iter().map(|v| v.inner.clone()).collect();
    core::is_independent(&vectors).map_err(value_error)
}

#[pyfunction]
fn rank(rows: Vec<Vec<Number>>) -> PyResult<usize> {
    let rows = rows.iter().map(|r| rationals(r)).collect::<PyResult<Vec<_>>>()?;
    Ok(core::rank(&rows))
}

/// Returns `(P, d)` with `P G P^T = diag(d)` and `P` invertible.
#[pyfunction]
fn orthogonalize(gram: Vec<Vec<Number>>) -> PyResult<(Vec<Vec<String>>, Vec<String>)> {
    let rows = gram.iter().map(|r| rationals(r)).collect::<PyResult<Vec<_>>>()?;
    let matrix = Matrix::from_rows(rows).map_err(value_error)?;
    let gram = GramMatrix::new(matrix).map_err(value_error)?;
    let result = core::orthogonalize(&gram);
    if !result.verify(&gram).map_err(value_error)? {
        return Err(PyRuntimeError::new_err("orthogonalization failed to verify"));
    }
    let p = result
        .p
        .rows()
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect();
    Ok((p, result.d.iter().map(ToString::to_string).collect()))
}

#[pymodule]
pub fn blade_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Signature>()?;
    m.add_class::<Multivector>()?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(alpha, m)?)?;
    m.add_function(wrap_pyfunction!(symdiff, m)?)?;
    m.add_function(wrap_pyfunction!(sigma, m)?)?;
    m.add_function(wrap_pyfunction!(rewrite_word, m)?)?;
    m.add_function(wrap_pyfunction!(is_independent, m)?)?;
    m.add_function(wrap_pyfunction!(rank, m)?)?;
    m.add_function(wrap_pyfunction!(orthogonalize, m)?)?;
    Ok(())
}

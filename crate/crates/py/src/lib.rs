//! Python bindings (float64 mode) for the polynomial multiplication library.
//!
//! Exposes the basis registry, the three polynomial types with their
//! multiply/power/lift operations, the operational and lifting matrices,
//! and the stochastic Galerkin constructors. Exact rational arithmetic is
//! CLI/Rust-only; everything here works in `f64`.

use polymul_core::bases::{DgPolynomial, RecurrenceBasis, BUILTIN_BASES};
use polymul_core::bernstein::{self, BernsteinPolynomial};
use polymul_core::galerkin;
use polymul_core::lagrange::{self, LagrangePolynomial};
use polymul_core::opmatrix::{build_h, pad_to_htilde};
use polymul_core::oracle;
use polymul_core::HCache;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use std::sync::Arc;

fn to_py_err(e: polymul_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rows_of(m: &ndarray::Array2<f64>) -> Vec<Vec<f64>> {
    m.rows().into_iter().map(|r| r.to_vec()).collect()
}

/// A degree-graded basis defined by its three-term recurrence coefficients.
#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct Basis {
    inner: Arc<RecurrenceBasis<f64>>,
}

#[pymethods]
impl Basis {
    #[new]
    #[pyo3(signature = (name, nodes=None))]
    fn new(name: &str, nodes: Option<Vec<f64>>) -> PyResult<Self> {
        Ok(Basis {
            inner: RecurrenceBasis::builtin(name, nodes).map_err(to_py_err)?,
        })
    }

    /// A basis from explicit coefficient tables.
    #[staticmethod]
    fn custom(name: &str, alpha: Vec<f64>, beta: Vec<f64>, gamma: Vec<f64>) -> PyResult<Self> {
        Ok(Basis {
            inner: RecurrenceBasis::custom(name, alpha, beta, gamma).map_err(to_py_err)?,
        })
    }

    /// Registered basis names.
    #[staticmethod]
    fn names() -> Vec<&'static str> {
        BUILTIN_BASES.to_vec()
    }

    #[getter]
    fn name(&self) -> &str {
        self.inner.name()
    }

    #[getter]
    fn orthonormal(&self) -> bool {
        self.inner.is_orthonormal()
    }

    fn alpha(&self, j: usize) -> PyResult<f64> {
        self.inner.alpha(j).map_err(to_py_err)
    }

    fn beta(&self, j: usize) -> PyResult<f64> {
        self.inner.beta(j).map_err(to_py_err)
    }

    fn gamma(&self, j: usize) -> PyResult<f64> {
        self.inner.gamma(j).map_err(to_py_err)
    }

    /// `[phi_0(x), ..., phi_n(x)]`.
    fn eval_vector(&self, n: usize, x: f64) -> PyResult<Vec<f64>> {
        self.inner.eval_vector(n, &x).map_err(to_py_err)
    }

    fn to_monomial_matrix(&self, n: usize) -> PyResult<Vec<Vec<f64>>> {
        Ok(rows_of(&self.inner.to_monomial_matrix(n).map_err(to_py_err)?))
    }

    fn __repr__(&self) -> String {
        format!("Basis('{}')", self.inner.name())
    }
}

/// A polynomial as coefficients over a degree-graded basis.
#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct DgPoly {
    inner: DgPolynomial<f64>,
}

#[pymethods]
impl DgPoly {
    #[new]
    fn new(basis: &Basis, coeffs: Vec<f64>) -> PyResult<Self> {
        Ok(DgPoly {
            inner: DgPolynomial::new(basis.inner.clone(), coeffs).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn coeffs(&self) -> Vec<f64> {
        self.inner.coeffs().to_vec()
    }

    #[getter]
    fn basis(&self) -> Basis {
        Basis {
            inner: self.inner.basis().clone(),
        }
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn mul(&self, other: &DgPoly) -> PyResult<DgPoly> {
        Ok(DgPoly {
            inner: self.inner.multiply(&other.inner).map_err(to_py_err)?,
        })
    }

    fn pow(&self, p: usize) -> PyResult<DgPoly> {
        Ok(DgPoly {
            inner: self.inner.power(p).map_err(to_py_err)?,
        })
    }

    fn eval(&self, x: f64) -> PyResult<f64> {
        self.inner.eval(&x).map_err(to_py_err)
    }

    fn __mul__(&self, other: &DgPoly) -> PyResult<DgPoly> {
        self.mul(other)
    }

    fn __repr__(&self) -> String {
        format!(
            "DgPoly(basis='{}', coeffs={:?})",
            self.inner.basis().name(),
            self.inner.coeffs()
        )
    }
}

/// A Bernstein polynomial over `[a, b]`.
#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct BernsteinPoly {
    inner: BernsteinPolynomial<f64>,
}

#[pymethods]
impl BernsteinPoly {
    #[new]
    fn new(a: f64, b: f64, coeffs: Vec<f64>) -> PyResult<Self> {
        Ok(BernsteinPoly {
            inner: BernsteinPolynomial::new(a, b, coeffs).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn interval(&self) -> (f64, f64) {
        let (a, b) = self.inner.interval();
        (*a, *b)
    }

    #[getter]
    fn coeffs(&self) -> Vec<f64> {
        self.inner.coeffs().to_vec()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    /// The same polynomial rewritten in degree `m`.
    fn lift(&self, m: usize) -> PyResult<BernsteinPoly> {
        Ok(BernsteinPoly {
            inner: self.inner.lift(m).map_err(to_py_err)?,
        })
    }

    fn mul(&self, other: &BernsteinPoly) -> PyResult<BernsteinPoly> {
        Ok(BernsteinPoly {
            inner: self.inner.multiply(&other.inner).map_err(to_py_err)?,
        })
    }

    fn pow(&self, p: usize) -> PyResult<BernsteinPoly> {
        Ok(BernsteinPoly {
            inner: self.inner.power(p).map_err(to_py_err)?,
        })
    }

    fn eval(&self, x: f64) -> PyResult<f64> {
        self.inner.eval(&x).map_err(to_py_err)
    }

    fn __mul__(&self, other: &BernsteinPoly) -> PyResult<BernsteinPoly> {
        self.mul(other)
    }

    fn __repr__(&self) -> String {
        let (a, b) = self.inner.interval();
        format!("BernsteinPoly([{a}, {b}], coeffs={:?})", self.inner.coeffs())
    }
}

/// A Lagrange interpolant `(nodes, values)`.
#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct LagrangePoly {
    inner: LagrangePolynomial<f64>,
}

#[pymethods]
impl LagrangePoly {
    #[new]
    fn new(nodes: Vec<f64>, values: Vec<f64>) -> PyResult<Self> {
        Ok(LagrangePoly {
            inner: LagrangePolynomial::new(nodes, values).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn nodes(&self) -> Vec<f64> {
        self.inner.nodes().to_vec()
    }

    #[getter]
    fn values(&self) -> Vec<f64> {
        self.inner.values().to_vec()
    }

    #[getter]
    fn weights(&self) -> Vec<f64> {
        self.inner.weights().to_vec()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    /// Rewrite over the node set extended by `extra`.
    fn lift(&self, extra: Vec<f64>) -> PyResult<LagrangePoly> {
        Ok(LagrangePoly {
            inner: self.inner.lift(&extra).map_err(to_py_err)?,
        })
    }

    /// Pointwise product; extra nodes are auto-generated when omitted.
    #[pyo3(signature = (other, extra=None))]
    fn mul(&self, other: &LagrangePoly, extra: Option<Vec<f64>>) -> PyResult<LagrangePoly> {
        Ok(LagrangePoly {
            inner: self
                .inner
                .multiply(&other.inner, extra.as_deref())
                .map_err(to_py_err)?,
        })
    }

    #[pyo3(signature = (p, extra=None))]
    fn pow(&self, p: usize, extra: Option<Vec<f64>>) -> PyResult<LagrangePoly> {
        Ok(LagrangePoly {
            inner: self.inner.power(p, extra.as_deref()).map_err(to_py_err)?,
        })
    }

    fn eval(&self, x: f64) -> f64 {
        self.inner.eval(&x)
    }

    fn __mul__(&self, other: &LagrangePoly) -> PyResult<LagrangePoly> {
        self.mul(other, None)
    }

    fn __repr__(&self) -> String {
        format!(
            "LagrangePoly(nodes={:?}, values={:?})",
            self.inner.nodes(),
            self.inner.values()
        )
    }
}

/// Operational matrix `H_{n,k}` as nested lists, optionally zero-padded to
/// `n+pad+1` columns.
#[pyfunction]
#[pyo3(signature = (basis, n, k, pad=None))]
fn operational_matrix(
    basis: &Basis,
    n: usize,
    k: usize,
    pad: Option<usize>,
) -> PyResult<Vec<Vec<f64>>> {
    let h = build_h(&basis.inner, n, k).map_err(to_py_err)?;
    match pad {
        Some(m) => Ok(rows_of(&pad_to_htilde(&h, m).map_err(to_py_err)?)),
        None => Ok(rows_of(h.entries())),
    }
}

/// Bernstein degree-elevation matrix `T_{n,m}`.
#[pyfunction]
fn bernstein_lift_matrix(n: usize, m: usize) -> PyResult<Vec<Vec<f64>>> {
    Ok(rows_of(
        bernstein::lift_matrix::<f64>(n, m).map_err(to_py_err)?.matrix(),
    ))
}

/// Lagrange node-augmentation matrix `R_{n,m} = [I | K]`.
#[pyfunction]
fn lagrange_lift_matrix(base: Vec<f64>, extra: Vec<f64>) -> PyResult<Vec<Vec<f64>>> {
    Ok(rows_of(
        lagrange::lift_matrix(&base, &extra).map_err(to_py_err)?.matrix(),
    ))
}

/// Univariate stochastic Galerkin matrix `U_{k,p}`.
#[pyfunction]
fn galerkin_u(basis: &Basis, k: usize, p: usize) -> PyResult<Vec<Vec<f64>>> {
    let cache = HCache::new();
    Ok(rows_of(
        galerkin::univariate_u(&basis.inner, k, p, &cache)
            .map_err(to_py_err)?
            .matrix(),
    ))
}

/// Multivariate Galerkin block `G_alpha` (Kronecker product, outermost
/// dimension first), one shared basis across dimensions.
#[pyfunction]
fn assemble_g(basis: &Basis, alpha: Vec<usize>, orders: Vec<usize>) -> PyResult<Vec<Vec<f64>>> {
    let bases: Vec<_> = (0..alpha.len()).map(|_| basis.inner.clone()).collect();
    let cache = HCache::new();
    Ok(rows_of(
        &galerkin::assemble_g(&bases, &alpha, &orders, &cache).map_err(to_py_err)?,
    ))
}

/// `<psi_k psi_i psi_j>` by Gauss quadrature (the independent oracle).
#[pyfunction]
fn triple_product(basis: &Basis, k: usize, i: usize, j: usize) -> PyResult<f64> {
    galerkin::triple_product_quadrature(&basis.inner, k, i, j).map_err(to_py_err)
}

/// Gauss nodes and weights for the basis weight (Golub-Welsch).
#[pyfunction]
fn gauss_rule(basis: &Basis, npoints: usize) -> PyResult<(Vec<f64>, Vec<f64>)> {
    galerkin::gauss_rule(&basis.inner, npoints).map_err(to_py_err)
}

/// Ground-truth product through monomial conversion (oracle path).
#[pyfunction]
fn mul_via_monomial(a: &DgPoly, b: &DgPoly) -> PyResult<DgPoly> {
    Ok(DgPoly {
        inner: oracle::mul_via_monomial(&a.inner, &b.inner).map_err(to_py_err)?,
    })
}

#[pymodule]
fn polymul(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Basis>()?;
    m.add_class::<DgPoly>()?;
    m.add_class::<BernsteinPoly>()?;
    m.add_class::<LagrangePoly>()?;
    m.add_function(wrap_pyfunction!(operational_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(bernstein_lift_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(lagrange_lift_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(galerkin_u, m)?)?;
    m.add_function(wrap_pyfunction!(assemble_g, m)?)?;
    m.add_function(wrap_pyfunction!(triple_product, m)?)?;
    m.add_function(wrap_pyfunction!(gauss_rule, m)?)?;
    m.add_function(wrap_pyfunction!(mul_via_monomial, m)?)?;
    Ok(())
}

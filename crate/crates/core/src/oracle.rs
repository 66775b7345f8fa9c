//! Independent brute-force verification layer.
//!
//! Ground truth for products comes from the one route the production code
//! never takes: convert to the monomial basis, convolve coefficient vectors,
//! convert back. At desk-scale degrees this is accurate enough in `f64` and
//! exact in rational mode, which is all an oracle needs to be.

use crate::bases::{DgPolynomial, RecurrenceBasis};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Scalar;
use std::sync::Arc;

/// Coefficients over the monomial basis: `coeffs[j]` multiplies `x^j`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialPoly<S: Scalar> {
    coeffs: Vec<S>,
}

impl<S: Scalar> MonomialPoly<S> {
    pub fn new(coeffs: Vec<S>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoeffs);
        }
        Ok(MonomialPoly { coeffs })
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn eval(&self, x: &S) -> S {
        // Horner
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }
}

/// Plain coefficient convolution: `c_k = sum_i a_i b_{k-i}`.
pub fn convolve<S: Scalar>(a: &MonomialPoly<S>, b: &MonomialPoly<S>) -> MonomialPoly<S> {
    let mut out = vec![S::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    MonomialPoly { coeffs: out }
}

/// Expand a degree-graded polynomial in the monomial basis.
pub fn to_monomial<S: Scalar>(p: &DgPolynomial<S>) -> Result<MonomialPoly<S>> {
    let n = p.degree();
    let v = p.basis().to_monomial_matrix(n)?;
    Ok(MonomialPoly {
        coeffs: linalg::row_times_mat(p.coeffs(), &v),
    })
}

/// Re-express a monomial polynomial over `basis`, solving the triangular
/// system `c * V = a` from the top degree down.
pub fn from_monomial<S: Scalar>(
    basis: Arc<RecurrenceBasis<S>>,
    m: &MonomialPoly<S>,
) -> Result<DgPolynomial<S>> {
    let n = m.coeffs.len() - 1;
    let v = basis.to_monomial_matrix(n)?;
    let mut residual = m.coeffs.clone();
    let mut out = vec![S::zero(); n + 1];
    for j in (0..=n).rev() {
        let cj = residual[j].clone() / v[[j, j]].clone();
        for i in 0..=j {
            residual[i] = residual[i].clone() - cj.clone() * v[[j, i]].clone();
        }
        out[j] = cj;
    }
    DgPolynomial::new(basis, out)
}

/// The down-convolve-up product: ground truth for `dgmul::multiply`.
pub fn mul_via_monomial<S: Scalar>(
    xi: &DgPolynomial<S>,
    psi: &DgPolynomial<S>,
) -> Result<DgPolynomial<S>> {
    if !xi.basis().same_basis(psi.basis()) {
        return Err(Error::BasisMismatch(
            xi.basis().name().to_string(),
            psi.basis().name().to_string(),
        ));
    }
    let a = to_monomial(xi)?;
    let b = to_monomial(psi)?;
    from_monomial(xi.basis().clone(), &convolve(&a, &b))
}

/// Anything a pointwise check can evaluate.
pub trait Evaluate<S: Scalar> {
    fn eval_at(&self, x: &S) -> Result<S>;
}

impl<S: Scalar> Evaluate<S> for MonomialPoly<S> {
    fn eval_at(&self, x: &S) -> Result<S> {
        Ok(self.eval(x))
    }
}

/// Outcome of a pointwise product check.
#[derive(Clone, Debug)]
pub struct CheckReport {
    /// max over points of |product(x) - prod factors(x)| / max(1, |expected|)
    pub max_rel_dev: f64,
    pub tol: f64,
    pub points: usize,
    pub pass: bool,
}

/// Compare `product(x)` against the product of `factors(x)` over `points`.
/// Deviations are measured relative to `max(1, |expected|)`.
pub fn pointwise_check<S: Scalar>(
    product: &dyn Evaluate<S>,
    factors: &[&dyn Evaluate<S>],
    points: &[S],
    tol: f64,
) -> Result<CheckReport> {
    let mut max_rel_dev = 0.0_f64;
    for x in points {
        let got = product.eval_at(x)?;
        let mut want = S::one();
        for f in factors {
            want = want * f.eval_at(x)?;
        }
        // subtract in the scalar mode, so exact pipelines report exactly 0
        let diff = (got - want.clone()).to_f64().abs();
        let rel = diff / want.to_f64().abs().max(1.0);
        if rel > max_rel_dev {
            max_rel_dev = rel;
        }
    }
    Ok(CheckReport {
        max_rel_dev,
        tol,
        points: points.len(),
        pass: max_rel_dev <= tol,
    })
}

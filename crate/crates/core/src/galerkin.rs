//! Stochastic Galerkin matrices from operational matrices.
//!
//! For an orthonormal family `{psi_j}` w.r.t. a probability density, the
//! block `U_{k,p}[i,j] = <psi_k psi_i psi_j>` is exactly the top-left
//! `(p+1) x (p+1)` corner of `H_{p,k}`, so no integral is ever computed on
//! the production path. Multivariate blocks are Kronecker products of
//! univariate ones, outermost dimension first:
//! `G_alpha = U_{alpha_M,p_M} ⊗ ... ⊗ U_{alpha_1,p_1}`.
//!
//! The quadrature here (Gauss rules by Golub–Welsch from the same recurrence
//! coefficients) exists to verify the triple products independently.

use crate::bases::RecurrenceBasis;
use crate::error::{Error, Result};
use crate::linalg;
use crate::opmatrix::HCache;
use crate::scalar::Scalar;
use ndarray::Array2;
use std::sync::Arc;

/// Univariate Galerkin block `U_{k,p}`.
#[derive(Clone, Debug)]
pub struct GalerkinBlock<S: Scalar> {
    basis_name: String,
    k: usize,
    p: usize,
    matrix: Array2<S>,
}

impl<S: Scalar> GalerkinBlock<S> {
    pub fn basis_name(&self) -> &str {
        &self.basis_name
    }

    pub fn pc_index(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.p
    }

    pub fn matrix(&self) -> &Array2<S> {
        &self.matrix
    }
}

/// `U_{k,p}` as the `(p+1) x (p+1)` principal submatrix of `H_{p,k}`.
/// `k = 0` short-circuits to the identity (`psi_0 = 1` and orthonormality
/// force `<psi_0 psi_i psi_j> = delta_{ij}`).
pub fn univariate_u<S: Scalar>(
    basis: &RecurrenceBasis<S>,
    k: usize,
    p: usize,
    cache: &HCache<S>,
) -> Result<GalerkinBlock<S>> {
    if !basis.is_orthonormal() {
        return Err(Error::NotOrthonormal(basis.name().to_string()));
    }
    let matrix = if k == 0 {
        let mut m = Array2::from_elem((p + 1, p + 1), S::zero());
        for i in 0..=p {
            m[[i, i]] = S::one();
        }
        m
    } else {
        let h = cache.get(basis, p, k)?;
        Array2::from_shape_fn((p + 1, p + 1), |(i, j)| h.entries()[[i, j]].clone())
    };
    Ok(GalerkinBlock {
        basis_name: basis.name().to_string(),
        k,
        p,
        matrix,
    })
}

/// Multivariate block `G_alpha = U_{alpha_M,p_M} ⊗ ... ⊗ U_{alpha_1,p_1}`
/// (dimension `M` outermost). Output is square of size `prod (p_m + 1)`.
pub fn assemble_g<S: Scalar>(
    bases: &[Arc<RecurrenceBasis<S>>],
    alpha: &[usize],
    orders: &[usize],
    cache: &HCache<S>,
) -> Result<Array2<S>> {
    if bases.len() != alpha.len() || bases.len() != orders.len() {
        return Err(Error::LengthMismatch(format!(
            "{} bases, {} alpha entries, {} orders",
            bases.len(),
            alpha.len(),
            orders.len()
        )));
    }
    if bases.is_empty() {
        return Err(Error::LengthMismatch("empty multi-index".into()));
    }
    let blocks: Vec<Array2<S>> = bases
        .iter()
        .zip(alpha)
        .zip(orders)
        .map(|((b, &k), &p)| Ok(univariate_u(b, k, p, cache)?.matrix))
        .collect::<Result<_>>()?;
    let mut acc = blocks[blocks.len() - 1].clone();
    for block in blocks[..blocks.len() - 1].iter().rev() {
        acc = linalg::kron(&acc, block);
    }
    Ok(acc)
}

/// Gauss nodes and weights for the basis's weight function, by Golub–Welsch:
/// eigen-decompose the symmetric Jacobi matrix built from the recurrence
/// (diagonal `beta_j`, off-diagonal `alpha_j`), nodes are eigenvalues and
/// weights the squared first eigenvector components (total mass 1).
pub fn gauss_rule(basis: &RecurrenceBasis<f64>, npoints: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if !basis.is_orthonormal() {
        return Err(Error::NotOrthonormal(basis.name().to_string()));
    }
    if npoints == 0 {
        return Err(Error::LengthMismatch("quadrature needs >= 1 point".into()));
    }
    let c = basis.coeffs_up_to(npoints - 1)?;
    let jac = nalgebra::DMatrix::from_fn(npoints, npoints, |r, col| {
        if r == col {
            c.beta[r]
        } else if col == r + 1 {
            c.alpha[r]
        } else if r == col + 1 {
            c.alpha[col]
        } else {
            0.0
        }
    });
    let eig = jac.symmetric_eigen();
    let mut rule: Vec<(f64, f64)> = (0..npoints)
        .map(|i| {
            let node = eig.eigenvalues[i];
            let first = eig.eigenvectors[(0, i)];
            (node, first * first)
        })
        .collect();
    rule.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(rule.into_iter().unzip())
}

/// `<psi_k psi_i psi_j>` by Gauss quadrature exact for the integrand's
/// degree: the independent oracle for [`univariate_u`].
pub fn triple_product_quadrature(
    basis: &RecurrenceBasis<f64>,
    k: usize,
    i: usize,
    j: usize,
) -> Result<f64> {
    let npoints = (k + i + j) / 2 + 1;
    let (nodes, weights) = gauss_rule(basis, npoints)?;
    let top = k.max(i).max(j);
    let mut acc = 0.0;
    for (x, w) in nodes.iter().zip(&weights) {
        let v = basis.eval_vector(top, x)?;
        acc += w * v[k] * v[i] * v[j];
    }
    Ok(acc)
}

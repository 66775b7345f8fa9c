//! Small dense helpers for generic scalars. ndarray's own arithmetic wants
//! `LinalgScalar`, which exact rationals do not satisfy, so the few products
//! we need are spelled out.

use crate::scalar::Scalar;
use ndarray::Array2;

/// Row vector times matrix: `out[c] = sum_r v[r] * m[r, c]`.
pub(crate) fn row_times_mat<S: Scalar>(v: &[S], m: &Array2<S>) -> Vec<S> {
    assert_eq!(v.len(), m.nrows(), "row/matrix shape mismatch");
    let mut out = vec![S::zero(); m.ncols()];
    for (r, vr) in v.iter().enumerate() {
        if vr.is_zero() {
            continue;
        }
        for c in 0..m.ncols() {
            let term = vr.clone() * m[[r, c]].clone();
            out[c] = out[c].clone() + term;
        }
    }
    out
}

/// Plain dense matrix product.
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn mat_mul<S: Scalar>(a: &Array2<S>, b: &Array2<S>) -> Array2<S> {
    assert_eq!(a.ncols(), b.nrows(), "matrix shape mismatch");
    let mut out = Array2::from_elem((a.nrows(), b.ncols()), S::zero());
    for r in 0..a.nrows() {
        for k in 0..a.ncols() {
            if a[[r, k]].is_zero() {
                continue;
            }
            for c in 0..b.ncols() {
                let term = a[[r, k]].clone() * b[[k, c]].clone();
                out[[r, c]] = out[[r, c]].clone() + term;
            }
        }
    }
    out
}

/// Kronecker product `a ⊗ b`.
pub(crate) fn kron<S: Scalar>(a: &Array2<S>, b: &Array2<S>) -> Array2<S> {
    let (ar, ac) = a.dim();
    let (br, bc) = b.dim();
    Array2::from_shape_fn((ar * br, ac * bc), |(r, c)| {
        a[[r / br, c / bc]].clone() * b[[r % br, c % bc]].clone()
    })
}

/// Dot product of two equal-length slices.
pub(crate) fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    assert_eq!(a.len(), b.len(), "dot length mismatch");
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

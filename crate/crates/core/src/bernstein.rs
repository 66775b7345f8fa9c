//! Bernstein-basis polynomials on an interval `[a, b]`.
//!
//! The basis of degree `n` is `b_{j,n}(x) = C(n,j) (x-a)^j (b-x)^{n-j} / (b-a)^n`.
//! Degree elevation ("lifting") from degree `n` to `m > n` is the rectangular
//! matrix
//!
//! ```text
//! T_{n,m}[r,c] = C(n,r) C(m-n,c-r) / C(m,c)   for r <= c <= r + (m-n)
//! ```
//!
//! (0-based), and products reduce to a row times a "gamma" matrix: the lift
//! matrix with the partner's coefficients laid along its diagonals. Binomials
//! are kept as exact big integers and reduced to the scalar mode on demand,
//! so rational-mode matrices are bit-true.

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Scalar;
use ndarray::Array2;
use num_bigint::{BigInt, BigUint};
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// Pascal triangle rows `0..=n` as exact integers.
fn binomial_triangle(n: usize) -> Vec<Vec<BigUint>> {
    let one = BigUint::from(1u32);
    let mut tri: Vec<Vec<BigUint>> = Vec::with_capacity(n + 1);
    tri.push(vec![one.clone()]);
    for r in 1..=n {
        let prev = &tri[r - 1];
        let mut row = Vec::with_capacity(r + 1);
        row.push(one.clone());
        for c in 1..r {
            row.push(&prev[c - 1] + &prev[c]);
        }
        row.push(one.clone());
        tri.push(row);
    }
    tri
}

fn scalar_ratio<S: Scalar>(num: &BigUint, den: &BigUint) -> S {
    S::big_ratio(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

/// A polynomial `sum_j coeffs[j] b_{j,n}` over `[a, b]`.
#[derive(Clone, Debug)]
pub struct BernsteinPolynomial<S: Scalar> {
    a: S,
    b: S,
    coeffs: Vec<S>,
}

/// Degree-elevation matrix `T_{n,m}`, upper triangular within its band.
#[derive(Clone, Debug)]
pub struct BernsteinLift<S: Scalar> {
    n: usize,
    m: usize,
    matrix: Array2<S>,
}

impl<S: Scalar> BernsteinLift<S> {
    pub fn source_degree(&self) -> usize {
        self.n
    }

    pub fn target_degree(&self) -> usize {
        self.m
    }

    pub fn matrix(&self) -> &Array2<S> {
        &self.matrix
    }
}

/// `[b_{0,n}(x), ..., b_{n,n}(x)]`; entries sum to 1.
pub fn basis_eval<S: Scalar>(n: usize, a: &S, b: &S, x: &S) -> Result<Vec<S>> {
    if !(a < b) {
        return Err(Error::DegenerateInterval(a.to_string(), b.to_string()));
    }
    let u = (x.clone() - a.clone()) / (b.clone() - a.clone());
    let v = S::one() - u.clone();
    let tri = binomial_triangle(n);
    // running powers u^j and v^{n-j}
    let mut u_pow = vec![S::one(); n + 1];
    let mut v_pow = vec![S::one(); n + 1];
    for j in 1..=n {
        u_pow[j] = u_pow[j - 1].clone() * u.clone();
        v_pow[j] = v_pow[j - 1].clone() * v.clone();
    }
    Ok((0..=n)
        .map(|j| {
            scalar_ratio::<S>(&tri[n][j], &BigUint::from(1u32))
                * u_pow[j].clone()
                * v_pow[n - j].clone()
        })
        .collect())
}

/// The lifting matrix `T_{n,m}` for `m > n` in closed form; equals the
/// product of the single-step elevations `T_{n,n+1} ... T_{m-1,m}`.
pub fn lift_matrix<S: Scalar>(n: usize, m: usize) -> Result<BernsteinLift<S>> {
    if m <= n {
        return Err(Error::LiftTargetTooSmall { n, m });
    }
    let tri = binomial_triangle(m);
    let mut matrix = Array2::from_elem((n + 1, m + 1), S::zero());
    for r in 0..=n {
        for c in r..=(r + m - n).min(m) {
            let num = &tri[n][r] * &tri[m - n][c - r];
            matrix[[r, c]] = scalar_ratio::<S>(&num, &tri[m][c]);
        }
    }
    Ok(BernsteinLift { n, m, matrix })
}

/// Row expanding `b_{j,n} * b_{k,m}` over the degree-`(n+m)` basis: a single
/// nonzero `C(m,k) C(n,j) / C(m+n,k+j)` at position `k+j`.
pub fn element_product_row<S: Scalar>(
    j: usize,
    k: usize,
    n: usize,
    m: usize,
) -> Result<Vec<S>> {
    if j > n || k > m {
        return Err(Error::IndexOutOfRange(format!(
            "element ({j},{k}) outside degrees ({n},{m})"
        )));
    }
    let tri = binomial_triangle(m + n);
    let mut row = vec![S::zero(); m + n + 1];
    let num = &tri[m][k] * &tri[n][j];
    row[k + j] = scalar_ratio::<S>(&num, &tri[m + n][k + j]);
    Ok(row)
}

/// `Gamma[r,c] = psi[c-r] * T_{d,d+deg(psi)}[r,c]` where `d` is the partner
/// factor's degree; multiplying a coefficient row by this matrix multiplies
/// the underlying polynomials.
pub fn gamma_matrix<S: Scalar>(psi: &[S], partner_degree: usize) -> Result<Array2<S>> {
    if psi.is_empty() {
        return Err(Error::EmptyCoeffs);
    }
    let d = partner_degree;
    let total = d + psi.len() - 1;
    if psi.len() == 1 {
        // degree-0 partner: T_{d,d} is the identity, Gamma a plain scaling
        let mut out = Array2::from_elem((d + 1, d + 1), S::zero());
        for r in 0..=d {
            out[[r, r]] = psi[0].clone();
        }
        return Ok(out);
    }
    let lift = lift_matrix::<S>(d, total)?;
    let mut out = Array2::from_elem((d + 1, total + 1), S::zero());
    for r in 0..=d {
        for c in r..=total.min(r + psi.len() - 1) {
            out[[r, c]] = psi[c - r].clone() * lift.matrix[[r, c]].clone();
        }
    }
    Ok(out)
}

impl<S: Scalar> BernsteinPolynomial<S> {
    pub fn new(a: S, b: S, coeffs: Vec<S>) -> Result<Self> {
        if !(a < b) {
            return Err(Error::DegenerateInterval(a.to_string(), b.to_string()));
        }
        if coeffs.is_empty() {
            return Err(Error::EmptyCoeffs);
        }
        Ok(BernsteinPolynomial { a, b, coeffs })
    }

    pub fn interval(&self) -> (&S, &S) {
        (&self.a, &self.b)
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &S) -> Result<S> {
        let v = basis_eval(self.degree(), &self.a, &self.b, x)?;
        Ok(linalg::dot(&self.coeffs, &v))
    }

    /// The same polynomial written in degree `m > n`: `d = c * T_{n,m}`.
    pub fn lift(&self, m: usize) -> Result<Self> {
        let lift = lift_matrix::<S>(self.degree(), m)?;
        Ok(BernsteinPolynomial {
            a: self.a.clone(),
            b: self.b.clone(),
            coeffs: linalg::row_times_mat(&self.coeffs, &lift.matrix),
        })
    }

    fn check_same_interval(&self, other: &Self) -> Result<()> {
        // exact equality on purpose: a silently different interval would
        // change the meaning of every coefficient
        if self.a != other.a || self.b != other.b {
            return Err(Error::IntervalMismatch(
                self.a.to_string(),
                self.b.to_string(),
                other.a.to_string(),
                other.b.to_string(),
            ));
        }
        Ok(())
    }

    /// Product over the shared interval: `c = xi * Gamma_{psi, m+n}`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_interval(other)?;
        if other.degree() == 0 {
            let s = &other.coeffs[0];
            let coeffs = self.coeffs.iter().map(|c| c.clone() * s.clone()).collect();
            return Ok(BernsteinPolynomial {
                a: self.a.clone(),
                b: self.b.clone(),
                coeffs,
            });
        }
        if self.degree() == 0 {
            return other.multiply(self);
        }
        let gamma = gamma_matrix(&other.coeffs, self.degree())?;
        Ok(BernsteinPolynomial {
            a: self.a.clone(),
            b: self.b.clone(),
            coeffs: linalg::row_times_mat(&self.coeffs, &gamma),
        })
    }

    /// `p`-th power via the chain `xi * Gamma_{xi,2n} * Gamma_{xi,3n} * ...`.
    pub fn power(&self, p: usize) -> Result<Self> {
        if p < 1 {
            return Err(Error::InvalidPower);
        }
        if p == 1 {
            return Ok(self.clone());
        }
        let n = self.degree();
        if n == 0 {
            let mut acc = self.coeffs[0].clone();
            for _ in 1..p {
                acc = acc * self.coeffs[0].clone();
            }
            return Ok(BernsteinPolynomial {
                a: self.a.clone(),
                b: self.b.clone(),
                coeffs: vec![acc],
            });
        }
        let mut acc = self.coeffs.clone();
        for j in 2..=p {
            let gamma = gamma_matrix(&self.coeffs, (j - 1) * n)?;
            acc = linalg::row_times_mat(&acc, &gamma);
        }
        Ok(BernsteinPolynomial {
            a: self.a.clone(),
            b: self.b.clone(),
            coeffs: acc,
        })
    }
}

impl<S: Scalar> crate::oracle::Evaluate<S> for BernsteinPolynomial<S> {
    fn eval_at(&self, x: &S) -> Result<S> {
        self.eval(x)
    }
}

/// Synchronized per-`(n,m)` store of lift matrices.
pub struct LiftCache<S: Scalar> {
    map: RwLock<HashMap<(usize, usize), Arc<BernsteinLift<S>>>>,
}

impl<S: Scalar> Default for LiftCache<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Scalar> LiftCache<S> {
    pub fn new() -> Self {
        LiftCache {
            map: RwLock::new(HashMap::new()),
        }
    }

    pub fn get(&self, n: usize, m: usize) -> Result<Arc<BernsteinLift<S>>> {
        {
            let map = self.map.read().expect("lift cache poisoned");
            if let Some(hit) = map.get(&(n, m)) {
                return Ok(hit.clone());
            }
        }
        let built = Arc::new(lift_matrix::<S>(n, m)?);
        let mut map = self.map.write().expect("lift cache poisoned");
        Ok(map.entry((n, m)).or_insert(built).clone())
    }
}

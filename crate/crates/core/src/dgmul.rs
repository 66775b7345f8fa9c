//! Products and powers of degree-graded polynomials.
//!
//! With `Psi = sum_k psi_k phi_k` of degree `m`, the product operator
//!
//! ```text
//! Q_{n,m} = sum_{k=0..m} psi_k * Htilde_{n,k}
//! ```
//!
//! is the `(n+1) x (n+m+1)` matrix such that `Xi * Psi` has coefficient row
//! `xi * Q_{n,m}`. For the monomial basis the operator is a banded Toeplitz
//! matrix whose rows are shifted copies of `psi` and is written down
//! directly.

use crate::bases::DgPolynomial;
use crate::error::{Error, Result};
use crate::linalg;
use crate::opmatrix::{build_h, pad_to_htilde, HCache};
use crate::scalar::Scalar;
use ndarray::Array2;

/// The multiplication operator for a fixed right factor `psi` against left
/// factors of degree `n`.
#[derive(Clone, Debug)]
pub struct ProductOperator<S: Scalar> {
    basis_name: String,
    n: usize,
    m: usize,
    matrix: Array2<S>,
}

impl<S: Scalar> ProductOperator<S> {
    /// Build from scratch; `H_{n,k}` matrices are constructed fresh. Use
    /// [`ProductOperator::build_with_cache`] to reuse a shared [`HCache`].
    pub fn build(psi: &DgPolynomial<S>, n: usize) -> Result<Self> {
        Self::build_inner(psi, n, None)
    }

    pub fn build_with_cache(psi: &DgPolynomial<S>, n: usize, cache: &HCache<S>) -> Result<Self> {
        Self::build_inner(psi, n, Some(cache))
    }

    fn build_inner(psi: &DgPolynomial<S>, n: usize, cache: Option<&HCache<S>>) -> Result<Self> {
        let basis = psi.basis();
        let m = psi.degree();
        let width = n + m + 1;
        let mut matrix = Array2::from_elem((n + 1, width), S::zero());
        if basis.is_monomial() {
            // Toeplitz fast path: row r holds psi shifted r to the right.
            for r in 0..=n {
                for (q, p) in psi.coeffs().iter().enumerate() {
                    matrix[[r, r + q]] = p.clone();
                }
            }
        } else {
            for (k, p) in psi.coeffs().iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let h = match cache {
                    Some(c) => c.get(basis, n, k)?,
                    None => std::sync::Arc::new(build_h(basis, n, k)?),
                };
                let padded = pad_to_htilde(&h, m)?;
                for r in 0..=n {
                    for col in 0..width {
                        if padded[[r, col]].is_zero() {
                            continue;
                        }
                        let term = p.clone() * padded[[r, col]].clone();
                        matrix[[r, col]] = matrix[[r, col]].clone() + term;
                    }
                }
            }
        }
        Ok(ProductOperator {
            basis_name: basis.name().to_string(),
            n,
            m,
            matrix,
        })
    }

    pub fn basis_name(&self) -> &str {
        &self.basis_name
    }

    pub fn left_degree(&self) -> usize {
        self.n
    }

    pub fn right_degree(&self) -> usize {
        self.m
    }

    pub fn matrix(&self) -> &Array2<S> {
        &self.matrix
    }

    /// Coefficient row of the product: `xi * Q_{n,m}`.
    pub fn apply(&self, xi: &[S]) -> Result<Vec<S>> {
        if xi.len() != self.n + 1 {
            return Err(Error::LengthMismatch(format!(
                "operator expects a degree-{} left factor, got length {}",
                self.n,
                xi.len()
            )));
        }
        Ok(linalg::row_times_mat(xi, &self.matrix))
    }
}

impl<S: Scalar> DgPolynomial<S> {
    /// Intra-basis product; both factors must share the basis.
    pub fn multiply(&self, psi: &Self) -> Result<Self> {
        if !self.basis().same_basis(psi.basis()) {
            return Err(Error::BasisMismatch(
                self.basis().name().to_string(),
                psi.basis().name().to_string(),
            ));
        }
        // degree-0 factors are plain scalings
        if psi.degree() == 0 {
            let s = &psi.coeffs()[0];
            let coeffs = self.coeffs().iter().map(|c| c.clone() * s.clone()).collect();
            return DgPolynomial::new(self.basis().clone(), coeffs);
        }
        if self.degree() == 0 {
            return psi.multiply(self);
        }
        let op = ProductOperator::build(psi, self.degree())?;
        DgPolynomial::new(self.basis().clone(), op.apply(self.coeffs())?)
    }

    /// `p`-th power (`p >= 1`), reduced left-to-right: each stage multiplies
    /// the running product by `self` through a fresh operator.
    pub fn power(&self, p: usize) -> Result<Self> {
        if p < 1 {
            return Err(Error::InvalidPower);
        }
        if p == 1 {
            return Ok(self.clone());
        }
        let n = self.degree();
        if n == 0 {
            let mut acc = self.coeffs()[0].clone();
            for _ in 1..p {
                acc = acc * self.coeffs()[0].clone();
            }
            return DgPolynomial::new(self.basis().clone(), vec![acc]);
        }
        let mut acc = self.coeffs().to_vec();
        for j in 1..p {
            let op = ProductOperator::build(self, j * n)?;
            acc = op.apply(&acc)?;
        }
        DgPolynomial::new(self.basis().clone(), acc)
    }

    /// `sum_j coeffs[j] * phi_j(x)`.
    pub fn eval(&self, x: &S) -> Result<S> {
        let v = self.basis().eval_vector(self.degree(), x)?;
        Ok(linalg::dot(self.coeffs(), &v))
    }
}

impl<S: Scalar> crate::oracle::Evaluate<S> for DgPolynomial<S> {
    fn eval_at(&self, x: &S) -> Result<S> {
        self.eval(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::RecurrenceBasis;
    use crate::oracle;
    use crate::scalar::Rat;
    use std::sync::Arc;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::ratio(n, d)
    }

    fn rb(name: &str) -> Arc<RecurrenceBasis<Rat>> {
        RecurrenceBasis::builtin(name, None).unwrap()
    }

    #[test]
    fn chelyshkov_operator_row() {
        // Q_{1,2} row 2 with symbolic psi: [psi1/2, psi0 + 2psi1/5 + 3psi2/5,
        // 9psi1/10 + 16psi2/35, 6psi2/7], probed with unit vectors.
        let b = rb("chelyshkov2");
        let probes = [
            (vec![rat(1, 1), rat(0, 1), rat(0, 1)], [rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1)]),
            (vec![rat(0, 1), rat(1, 1), rat(0, 1)], [rat(1, 2), rat(2, 5), rat(9, 10), rat(0, 1)]),
            (vec![rat(0, 1), rat(0, 1), rat(1, 1)], [rat(0, 1), rat(3, 5), rat(16, 35), rat(6, 7)]),
        ];
        for (psi, want_row1) in probes {
            let psi = DgPolynomial::new(b.clone(), psi).unwrap();
            let op = ProductOperator::build(&psi, 1).unwrap();
            for c in 0..4 {
                assert_eq!(op.matrix()[[1, c]], want_row1[c]);
            }
        }
    }

    #[test]
    fn chelyshkov_product_symbolic() {
        // xi = [xi0, xi1], psi = [psi0, psi1, psi2] with concrete rationals;
        // compare against the closed-form coefficient expressions.
        let b = rb("chelyshkov2");
        let (xi0, xi1) = (rat(2, 3), rat(-1, 2));
        let (p0, p1, p2) = (rat(1, 5), rat(3, 4), rat(-2, 7));
        let xi = DgPolynomial::new(b.clone(), vec![xi0.clone(), xi1.clone()]).unwrap();
        let psi =
            DgPolynomial::new(b.clone(), vec![p0.clone(), p1.clone(), p2.clone()]).unwrap();
        let prod = xi.multiply(&psi).unwrap();
        let want = [
            xi0.clone() * p0.clone() + rat(1, 2) * xi1.clone() * p1.clone(),
            xi0.clone() * p1.clone()
                + xi1.clone()
                    * (p0.clone() + rat(2, 5) * p1.clone() + rat(3, 5) * p2.clone()),
            xi0.clone() * p2.clone()
                + xi1.clone() * (rat(9, 10) * p1.clone() + rat(16, 35) * p2.clone()),
            rat(6, 7) * xi1.clone() * p2.clone(),
        ];
        assert_eq!(prod.coeffs(), &want);
        // commutativity
        let swapped = psi.multiply(&xi).unwrap();
        assert_eq!(swapped.coeffs(), prod.coeffs());
    }

    #[test]
    fn monomial_operator_is_toeplitz() {
        let b = rb("monomial");
        let psi = DgPolynomial::new(b.clone(), vec![rat(3, 1), rat(7, 1)]).unwrap();
        let op = ProductOperator::build(&psi, 2).unwrap();
        let want = [
            [rat(3, 1), rat(7, 1), rat(0, 1), rat(0, 1)],
            [rat(0, 1), rat(3, 1), rat(7, 1), rat(0, 1)],
            [rat(0, 1), rat(0, 1), rat(3, 1), rat(7, 1)],
        ];
        for r in 0..3 {
            for c in 0..4 {
                assert_eq!(op.matrix()[[r, c]], want[r][c]);
            }
        }
    }

    #[test]
    fn unit_psi_gives_identity_operator() {
        let b = rb("legendre");
        let psi = DgPolynomial::new(b.clone(), vec![rat(1, 1)]).unwrap();
        let op = ProductOperator::build(&psi, 3).unwrap();
        for r in 0..4 {
            for c in 0..4 {
                assert_eq!(op.matrix()[[r, c]], if r == c { rat(1, 1) } else { rat(0, 1) });
            }
        }
    }

    #[test]
    fn binomial_square() {
        let b = rb("monomial");
        let p = DgPolynomial::new(b.clone(), vec![rat(1, 1), rat(1, 1)]).unwrap();
        let sq = p.multiply(&p).unwrap();
        assert_eq!(sq.coeffs(), &[rat(1, 1), rat(2, 1), rat(1, 1)]);
    }

    #[test]
    fn multiply_matches_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let b = RecurrenceBasis::<f64>::builtin("hermite-orthonormal", None).unwrap();
        let xi = DgPolynomial::new(
            b.clone(),
            (0..5).map(|_| rng.random_range(-1.0..1.0)).collect(),
        )
        .unwrap();
        let psi = DgPolynomial::new(
            b.clone(),
            (0..4).map(|_| rng.random_range(-1.0..1.0)).collect(),
        )
        .unwrap();
        let fast = xi.multiply(&psi).unwrap();
        let slow = oracle::mul_via_monomial(&xi, &psi).unwrap();
        for (a, b) in fast.coeffs().iter().zip(slow.coeffs()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn power_basics() {
        let b = rb("monomial");
        let x = DgPolynomial::new(b.clone(), vec![rat(0, 1), rat(1, 1)]).unwrap();
        let cube = x.power(3).unwrap();
        assert_eq!(cube.coeffs(), &[rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 1)]);

        let cb = rb("chebyshev-t");
        let t1 = DgPolynomial::new(cb.clone(), vec![rat(0, 1), rat(1, 1)]).unwrap();
        let sq = t1.power(2).unwrap();
        assert_eq!(sq.coeffs(), &[rat(1, 2), rat(0, 1), rat(1, 2)]);

        assert!(matches!(t1.power(0), Err(Error::InvalidPower)));
        let one = t1.power(1).unwrap();
        assert_eq!(one.coeffs(), t1.coeffs());
    }

    #[test]
    fn power_equals_folded_multiply_exactly() {
        let b = rb("chelyshkov2");
        let p = DgPolynomial::new(b.clone(), vec![rat(1, 3), rat(-2, 5), rat(1, 7)]).unwrap();
        let via_power = p.power(3).unwrap();
        let left_assoc = p.multiply(&p).unwrap().multiply(&p).unwrap();
        assert_eq!(via_power.coeffs(), left_assoc.coeffs());
        // any other association agrees too
        let right_assoc = p.multiply(&p.multiply(&p).unwrap()).unwrap();
        assert_eq!(via_power.coeffs(), right_assoc.coeffs());
    }

    #[test]
    fn power_matches_pointwise_evaluation() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(19);
        let b = RecurrenceBasis::<f64>::builtin("legendre-orthonormal", None).unwrap();
        let p = DgPolynomial::new(
            b.clone(),
            (0..3).map(|_| rng.random_range(-1.0..1.0)).collect(),
        )
        .unwrap();
        let cubed = p.power(3).unwrap();
        for _ in 0..30 {
            let x: f64 = rng.random_range(-1.0..1.0);
            let want = p.eval(&x).unwrap().powi(3);
            let got = cubed.eval(&x).unwrap();
            assert!((got - want).abs() <= 1e-9 * want.abs().max(1.0));
        }
    }

    #[test]
    fn eval_basics() {
        let b = rb("monomial");
        let p =
            DgPolynomial::new(b.clone(), vec![rat(1, 1), rat(2, 1), rat(3, 1)]).unwrap();
        assert_eq!(p.eval(&rat(2, 1)).unwrap(), rat(17, 1));

        let cb = rb("chelyshkov2");
        let e0 = DgPolynomial::new(cb.clone(), vec![rat(1, 1)]).unwrap();
        assert_eq!(e0.eval(&rat(5, 9)).unwrap(), rat(1, 1));
    }

    #[test]
    fn eval_matches_monomial_route() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let b = RecurrenceBasis::<f64>::builtin("hermite-orthonormal", None).unwrap();
        let p = DgPolynomial::new(
            b.clone(),
            (0..6).map(|_| rng.random_range(-1.0..1.0)).collect(),
        )
        .unwrap();
        let mono = oracle::to_monomial(&p).unwrap();
        let got = p.eval(&0.7).unwrap();
        let want = mono.eval(&0.7);
        assert!((got - want).abs() < 1e-12);
    }

    #[test]
    fn basis_mismatch_rejected() {
        let a = DgPolynomial::new(rb("legendre"), vec![rat(1, 1)]).unwrap();
        let b = DgPolynomial::new(rb("chebyshev-t"), vec![rat(1, 1)]).unwrap();
        assert!(matches!(a.multiply(&b), Err(Error::BasisMismatch(_, _))));
    }

    #[test]
    fn bilinearity_exact() {
        let b = rb("chelyshkov2");
        let xi1 = DgPolynomial::new(b.clone(), vec![rat(1, 2), rat(1, 3)]).unwrap();
        let xi2 = DgPolynomial::new(b.clone(), vec![rat(-2, 7), rat(4, 9)]).unwrap();
        let psi = DgPolynomial::new(b.clone(), vec![rat(1, 5), rat(2, 3), rat(-3, 4)]).unwrap();
        let (a, bb) = (rat(3, 5), rat(-7, 11));
        let combo = DgPolynomial::new(
            b.clone(),
            xi1.coeffs()
                .iter()
                .zip(xi2.coeffs())
                .map(|(x, y)| a.clone() * x.clone() + bb.clone() * y.clone())
                .collect(),
        )
        .unwrap();
        let lhs = combo.multiply(&psi).unwrap();
        let p1 = xi1.multiply(&psi).unwrap();
        let p2 = xi2.multiply(&psi).unwrap();
        let rhs: Vec<Rat> = p1
            .coeffs()
            .iter()
            .zip(p2.coeffs())
            .map(|(x, y)| a.clone() * x.clone() + bb.clone() * y.clone())
            .collect();
        assert_eq!(lhs.coeffs(), &rhs[..]);
    }
}

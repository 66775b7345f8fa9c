//! Degree-graded bases defined by three-term recurrence coefficients.
//!
//! A family `{phi_j}` with `deg phi_j = j` satisfies
//!
//! ```text
//! x phi_j(x) = alpha_j phi_{j+1}(x) + beta_j phi_j(x) + gamma_j phi_{j-1}(x)
//! ```
//!
//! with `phi_{-1} = 0`, `phi_0 = 1` and `alpha_j != 0`. Everything downstream
//! (operational matrices, products, Galerkin blocks) consumes a basis only
//! through its coefficient sequences, so a basis is exactly that: a rule
//! producing `alpha_j, beta_j, gamma_j`.
//!
//! Coefficients are memoized per basis behind a lock; bases are immutable
//! after construction and safe to share across threads.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use ndarray::Array2;
use std::sync::{Arc, RwLock};

/// Names accepted by [`RecurrenceBasis::builtin`].
pub const BUILTIN_BASES: [&str; 7] = [
    "monomial",
    "newton",
    "chebyshev-t",
    "legendre",
    "legendre-orthonormal",
    "hermite-orthonormal",
    "chelyshkov2",
];

#[derive(Clone, PartialEq)]
enum CoeffRule<S: Scalar> {
    Monomial,
    Newton,
    ChebyshevT,
    Legendre,
    LegendreOrthonormal,
    HermiteOrthonormal,
    Chelyshkov2,
    Custom {
        alpha: Vec<S>,
        beta: Vec<S>,
        gamma: Vec<S>,
    },
}

impl<S: Scalar> CoeffRule<S> {
    fn needs_sqrt(&self) -> bool {
        matches!(
            self,
            CoeffRule::LegendreOrthonormal | CoeffRule::HermiteOrthonormal
        )
    }

    /// Largest usable coefficient index, when the rule is table-backed.
    fn max_index(&self, nodes: Option<&[S]>) -> Option<usize> {
        match self {
            CoeffRule::Newton => nodes.map(|n| n.len() - 1),
            CoeffRule::Custom { alpha, .. } => Some(alpha.len() - 1),
            _ => None,
        }
    }

    /// `(alpha_j, beta_j, gamma_j)`; index bounds are checked by the caller.
    fn compute(&self, j: usize, nodes: Option<&[S]>) -> (S, S, S) {
        let ji = j as i64;
        match self {
            CoeffRule::Monomial => (S::one(), S::zero(), S::zero()),
            CoeffRule::Newton => (S::one(), nodes.unwrap()[j].clone(), S::zero()),
            CoeffRule::ChebyshevT => {
                // x T_0 = T_1; x T_j = (T_{j+1} + T_{j-1}) / 2 for j >= 1
                if j == 0 {
                    (S::one(), S::zero(), S::zero())
                } else {
                    (S::ratio(1, 2), S::zero(), S::ratio(1, 2))
                }
            }
            CoeffRule::Legendre => (
                S::ratio(ji + 1, 2 * ji + 1),
                S::zero(),
                S::ratio(ji, 2 * ji + 1),
            ),
            CoeffRule::LegendreOrthonormal => {
                let alpha = S::from_int(ji + 1)
                    / S::sqrt_int(((2 * ji + 1) * (2 * ji + 3)) as u64).unwrap();
                let gamma = if j == 0 {
                    S::zero()
                } else {
                    S::from_int(ji) / S::sqrt_int(((2 * ji - 1) * (2 * ji + 1)) as u64).unwrap()
                };
                (alpha, S::zero(), gamma)
            }
            CoeffRule::HermiteOrthonormal => (
                S::sqrt_int(j as u64 + 1).unwrap(),
                S::zero(),
                S::sqrt_int(j as u64).unwrap(),
            ),
            CoeffRule::Chelyshkov2 => (
                S::ratio(ji + 2, 4 * ji + 6),
                S::ratio(-2 * (ji + 1) * (ji + 1), (2 * ji + 3) * (2 * ji + 1)),
                S::ratio(ji, 4 * ji + 2),
            ),
            CoeffRule::Custom { alpha, beta, gamma } => {
                (alpha[j].clone(), beta[j].clone(), gamma[j].clone())
            }
        }
    }
}

/// Memoized coefficient prefix `alpha[0..=j], beta[0..=j], gamma[0..=j]`.
#[derive(Clone)]
pub struct Coeffs<S> {
    pub alpha: Vec<S>,
    pub beta: Vec<S>,
    pub gamma: Vec<S>,
}

impl<S> Coeffs<S> {
    fn empty() -> Self {
        Coeffs {
            alpha: Vec::new(),
            beta: Vec::new(),
            gamma: Vec::new(),
        }
    }

    fn len(&self) -> usize {
        self.alpha.len()
    }
}

/// A degree-graded basis: a named rule producing recurrence coefficients,
/// plus interpolation nodes for the Newton case.
pub struct RecurrenceBasis<S: Scalar> {
    name: String,
    rule: CoeffRule<S>,
    nodes: Option<Vec<S>>,
    orthonormal: bool,
    memo: RwLock<Coeffs<S>>,
}

impl<S: Scalar> RecurrenceBasis<S> {
    /// Look up a registered basis by name. `nodes` is required for `newton`
    /// and rejected elsewhere.
    pub fn builtin(name: &str, nodes: Option<Vec<S>>) -> Result<Arc<Self>> {
        let rule = match name {
            "monomial" => CoeffRule::Monomial,
            "newton" => CoeffRule::Newton,
            "chebyshev-t" => CoeffRule::ChebyshevT,
            "legendre" => CoeffRule::Legendre,
            "legendre-orthonormal" => CoeffRule::LegendreOrthonormal,
            "hermite-orthonormal" => CoeffRule::HermiteOrthonormal,
            "chelyshkov2" => CoeffRule::Chelyshkov2,
            other => return Err(Error::UnknownBasis(other.to_string())),
        };
        if matches!(rule, CoeffRule::Newton) {
            let nodes = nodes.ok_or_else(|| Error::MissingNodes(name.to_string()))?;
            if nodes.is_empty() {
                return Err(Error::MissingNodes(name.to_string()));
            }
            for (i, a) in nodes.iter().enumerate() {
                if nodes[i + 1..].contains(a) {
                    return Err(Error::DuplicateNodes);
                }
            }
            return Self::from_parts(name, CoeffRule::Newton, Some(nodes), false);
        }
        if nodes.is_some() {
            return Err(Error::UnexpectedNodes(name.to_string()));
        }
        let orthonormal = rule.needs_sqrt();
        Self::from_parts(name, rule, None, orthonormal)
    }

    /// A basis from explicit coefficient tables (all three the same length).
    /// Supports coefficient indices `0..tables.len()-1`, i.e. basis elements
    /// up to degree `tables.len()`.
    pub fn custom(name: &str, alpha: Vec<S>, beta: Vec<S>, gamma: Vec<S>) -> Result<Arc<Self>> {
        if alpha.is_empty() {
            return Err(Error::EmptyCoeffs);
        }
        if alpha.len() != beta.len() || alpha.len() != gamma.len() {
            return Err(Error::LengthMismatch(
                "custom basis tables must have equal lengths".into(),
            ));
        }
        if let Some(i) = alpha.iter().position(|a| a.is_zero()) {
            return Err(Error::ZeroAlpha {
                name: name.to_string(),
                index: i,
            });
        }
        Self::from_parts(name, CoeffRule::Custom { alpha, beta, gamma }, None, false)
    }

    fn from_parts(
        name: &str,
        rule: CoeffRule<S>,
        nodes: Option<Vec<S>>,
        orthonormal: bool,
    ) -> Result<Arc<Self>> {
        if S::EXACT && rule.needs_sqrt() {
            return Err(Error::ExactUnsupported(name.to_string()));
        }
        Ok(Arc::new(RecurrenceBasis {
            name: name.to_string(),
            rule,
            nodes,
            orthonormal,
            memo: RwLock::new(Coeffs::empty()),
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_orthonormal(&self) -> bool {
        self.orthonormal
    }

    pub fn is_monomial(&self) -> bool {
        matches!(self.rule, CoeffRule::Monomial)
    }

    /// Newton interpolation nodes, when present.
    pub fn nodes(&self) -> Option<&[S]> {
        self.nodes.as_deref()
    }

    /// Two bases are interchangeable when name, nodes and rule agree.
    pub fn same_basis(&self, other: &Self) -> bool {
        self.name == other.name && self.nodes == other.nodes && self.rule == other.rule
    }

    /// Coefficients `alpha_j, beta_j, gamma_j` for `j = 0..=j_max`, memoized.
    pub fn coeffs_up_to(&self, j_max: usize) -> Result<Coeffs<S>> {
        {
            let memo = self.memo.read().expect("coeff memo poisoned");
            if memo.len() > j_max {
                return Ok(memo.clone());
            }
        }
        let mut memo = self.memo.write().expect("coeff memo poisoned");
        while memo.len() <= j_max {
            let j = memo.len();
            if let Some(max) = self.rule.max_index(self.nodes.as_deref()) {
                if j > max {
                    return Err(Error::CoeffOutOfRange {
                        name: self.name.clone(),
                        index: j,
                        max,
                    });
                }
            }
            let (a, b, g) = self.rule.compute(j, self.nodes.as_deref());
            if a.is_zero() {
                return Err(Error::ZeroAlpha {
                    name: self.name.clone(),
                    index: j,
                });
            }
            memo.alpha.push(a);
            memo.beta.push(b);
            memo.gamma.push(g);
        }
        Ok(memo.clone())
    }

    pub fn alpha(&self, j: usize) -> Result<S> {
        Ok(self.coeffs_up_to(j)?.alpha[j].clone())
    }

    pub fn beta(&self, j: usize) -> Result<S> {
        Ok(self.coeffs_up_to(j)?.beta[j].clone())
    }

    pub fn gamma(&self, j: usize) -> Result<S> {
        Ok(self.coeffs_up_to(j)?.gamma[j].clone())
    }

    /// `[phi_0(x), ..., phi_n(x)]` by the forward recurrence
    /// `phi_{j+1} = ((x - beta_j) phi_j - gamma_j phi_{j-1}) / alpha_j`.
    pub fn eval_vector(&self, n: usize, x: &S) -> Result<Vec<S>> {
        let mut out = Vec::with_capacity(n + 1);
        out.push(S::one());
        if n == 0 {
            return Ok(out);
        }
        let c = self.coeffs_up_to(n - 1)?;
        for j in 0..n {
            let prev = if j == 0 {
                S::zero()
            } else {
                c.gamma[j].clone() * out[j - 1].clone()
            };
            let next = ((x.clone() - c.beta[j].clone()) * out[j].clone() - prev)
                / c.alpha[j].clone();
            out.push(next);
        }
        Ok(out)
    }

    /// Lower-triangular `(n+1) x (n+1)` matrix whose row `j` holds the
    /// monomial coefficients of `phi_j`. Oracle support; the production
    /// paths never convert bases.
    pub fn to_monomial_matrix(&self, n: usize) -> Result<Array2<S>> {
        let mut rows: Vec<Vec<S>> = vec![vec![S::one()]];
        if n > 0 {
            let c = self.coeffs_up_to(n - 1)?;
            for j in 0..n {
                let cur = &rows[j];
                let mut next = vec![S::zero(); j + 2];
                // x * phi_j
                for (i, v) in cur.iter().enumerate() {
                    next[i + 1] = v.clone();
                }
                for (i, v) in cur.iter().enumerate() {
                    next[i] = next[i].clone() - c.beta[j].clone() * v.clone();
                }
                if j >= 1 {
                    for (i, v) in rows[j - 1].iter().enumerate() {
                        next[i] = next[i].clone() - c.gamma[j].clone() * v.clone();
                    }
                }
                for v in next.iter_mut() {
                    *v = v.clone() / c.alpha[j].clone();
                }
                rows.push(next);
            }
        }
        let mut m = Array2::from_elem((n + 1, n + 1), S::zero());
        for (j, row) in rows.iter().enumerate() {
            for (i, v) in row.iter().enumerate() {
                m[[j, i]] = v.clone();
            }
        }
        Ok(m)
    }
}

impl<S: Scalar> std::fmt::Debug for RecurrenceBasis<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RecurrenceBasis")
            .field("name", &self.name)
            .field("orthonormal", &self.orthonormal)
            .finish()
    }
}

/// A polynomial as a coefficient row over a degree-graded basis:
/// `P(x) = sum_j coeffs[j] * phi_j(x)`.
///
/// The representational degree is `coeffs.len() - 1`; trailing zeros are
/// allowed and meaningful for shape purposes.
#[derive(Clone, Debug)]
pub struct DgPolynomial<S: Scalar> {
    basis: Arc<RecurrenceBasis<S>>,
    coeffs: Vec<S>,
}

impl<S: Scalar> DgPolynomial<S> {
    pub fn new(basis: Arc<RecurrenceBasis<S>>, coeffs: Vec<S>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoeffs);
        }
        Ok(DgPolynomial { basis, coeffs })
    }

    pub fn basis(&self) -> &Arc<RecurrenceBasis<S>> {
        &self.basis
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn fb(name: &str) -> Arc<RecurrenceBasis<f64>> {
        RecurrenceBasis::builtin(name, None).unwrap()
    }

    #[test]
    fn hermite_orthonormal_coefficients() {
        let b = fb("hermite-orthonormal");
        assert_eq!(b.alpha(0).unwrap(), 1.0);
        assert_eq!(b.gamma(1).unwrap(), 1.0);
        assert_eq!(b.alpha(3).unwrap(), 2.0);
        assert_eq!(b.beta(5).unwrap(), 0.0);
    }

    #[test]
    fn monomial_degenerate_recurrence() {
        let b = fb("monomial");
        for j in 0..=64 {
            assert_eq!(b.alpha(j).unwrap(), 1.0);
            assert_eq!(b.beta(j).unwrap(), 0.0);
            assert_eq!(b.gamma(j).unwrap(), 0.0);
        }
    }

    #[test]
    fn chelyshkov2_coefficients() {
        // Magnitudes per the reference formulas; the beta/gamma signs are the
        // ones consistent with the family's product matrices (the acceptance
        // suite documents the resolution).
        let b: Arc<RecurrenceBasis<Rat>> = RecurrenceBasis::builtin("chelyshkov2", None).unwrap();
        assert_eq!(b.alpha(0).unwrap(), Rat::ratio(1, 3));
        assert_eq!(b.beta(0).unwrap(), Rat::ratio(-2, 3));
        assert_eq!(b.gamma(1).unwrap(), Rat::ratio(1, 6));
    }

    #[test]
    fn alpha_nonzero_for_all_builtins() {
        for name in BUILTIN_BASES {
            let b = if name == "newton" {
                RecurrenceBasis::<f64>::builtin(name, Some((0..=64).map(f64::from).collect()))
                    .unwrap()
            } else {
                fb(name)
            };
            for j in 0..=64 {
                assert!(b.alpha(j).unwrap() != 0.0, "{name} alpha({j})");
            }
        }
    }

    #[test]
    fn registry_errors() {
        assert!(matches!(
            RecurrenceBasis::<f64>::builtin("nope", None),
            Err(Error::UnknownBasis(_))
        ));
        assert!(matches!(
            RecurrenceBasis::<f64>::builtin("newton", None),
            Err(Error::MissingNodes(_))
        ));
        assert!(matches!(
            RecurrenceBasis::<f64>::builtin("newton", Some(vec![1.0, 2.0, 1.0])),
            Err(Error::DuplicateNodes)
        ));
        assert!(matches!(
            RecurrenceBasis::<f64>::builtin("monomial", Some(vec![1.0])),
            Err(Error::UnexpectedNodes(_))
        ));
        assert!(matches!(
            RecurrenceBasis::<Rat>::builtin("hermite-orthonormal", None),
            Err(Error::ExactUnsupported(_))
        ));
    }

    #[test]
    fn eval_monomial_powers() {
        let b = fb("monomial");
        assert_eq!(b.eval_vector(3, &2.0).unwrap(), vec![1.0, 2.0, 4.0, 8.0]);
    }

    #[test]
    fn eval_element_zero_is_one() {
        for name in ["monomial", "chebyshev-t", "legendre", "hermite-orthonormal"] {
            let b = fb(name);
            assert_eq!(b.eval_vector(4, &0.37).unwrap()[0], 1.0);
        }
    }

    /// Independent oracle: physicists' Hermite by its classical recurrence
    /// `H_{n+1} = 2x H_n - 2n H_{n-1}`, normalized `H_n(x/sqrt 2)/sqrt(2^n n!)`.
    fn hermite_orthonormal_direct(n: usize, x: f64) -> f64 {
        let y = x / 2.0_f64.sqrt();
        let mut h_prev = 1.0;
        let mut h = 2.0 * y;
        if n == 0 {
            return 1.0;
        }
        for j in 1..n {
            let h_next = 2.0 * y * h - 2.0 * (j as f64) * h_prev;
            h_prev = h;
            h = h_next;
        }
        let mut norm = 1.0_f64;
        for j in 1..=n {
            norm *= 2.0 * j as f64;
        }
        h / norm.sqrt()
    }

    #[test]
    fn hermite_eval_matches_classical_normalization() {
        let b = fb("hermite-orthonormal");
        let v = b.eval_vector(2, &0.5).unwrap();
        for (n, got) in v.iter().enumerate() {
            let want = hermite_orthonormal_direct(n, 0.5);
            assert!((got - want).abs() < 1e-12, "n={n}: {got} vs {want}");
        }
        // a couple of deeper degrees for good measure
        let v = b.eval_vector(7, &-1.3).unwrap();
        for (n, got) in v.iter().enumerate() {
            let want = hermite_orthonormal_direct(n, -1.3);
            assert!((got - want).abs() < 1e-10 * want.abs().max(1.0));
        }
    }

    #[test]
    fn newton_vanishes_at_first_node() {
        let b = RecurrenceBasis::<f64>::builtin("newton", Some(vec![1.5, 2.0, 4.0])).unwrap();
        let v = b.eval_vector(3, &1.5).unwrap();
        assert_eq!(v[0], 1.0);
        assert!(v[1..].iter().all(|&x| x == 0.0));
    }

    #[test]
    fn monomial_matrix_is_identity() {
        let b = fb("monomial");
        let m = b.to_monomial_matrix(4).unwrap();
        for r in 0..5 {
            for c in 0..5 {
                assert_eq!(m[[r, c]], if r == c { 1.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn newton_monomial_rows() {
        let b: Arc<RecurrenceBasis<Rat>> =
            RecurrenceBasis::builtin("newton", Some(vec![Rat::from_int(1), Rat::from_int(2)]))
                .unwrap();
        let m = b.to_monomial_matrix(2).unwrap();
        let want = [
            vec![1i64, 0, 0],
            vec![-1, 1, 0],
            vec![2, -3, 1],
        ];
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(m[[r, c]], Rat::from_int(want[r][c]), "[{r},{c}]");
            }
        }
    }

    #[test]
    fn chebyshev_t2_monomial_row() {
        let b: Arc<RecurrenceBasis<Rat>> = RecurrenceBasis::builtin("chebyshev-t", None).unwrap();
        let m = b.to_monomial_matrix(2).unwrap();
        let want = [[1i64, 0, 0], [0, 1, 0], [-1, 0, 2]];
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(m[[r, c]], Rat::from_int(want[r][c]), "[{r},{c}]");
            }
        }
    }

    #[test]
    fn diagonal_is_inverse_alpha_product() {
        let b = fb("chelyshkov2");
        let m = b.to_monomial_matrix(5).unwrap();
        let mut prod = 1.0;
        for j in 0..5 {
            prod /= b.alpha(j).unwrap();
        }
        assert!((m[[5, 5]] - prod).abs() < 1e-12);
    }

    #[test]
    fn eval_agrees_with_monomial_route() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for name in BUILTIN_BASES {
            let b = if name == "newton" {
                RecurrenceBasis::<f64>::builtin(
                    name,
                    Some((0..=20).map(|i| i as f64 / 7.0).collect()),
                )
                .unwrap()
            } else {
                fb(name)
            };
            let n = 16;
            let m = b.to_monomial_matrix(n).unwrap();
            for _ in 0..20 {
                let x: f64 = rng.random_range(-1.0..1.0);
                let v = b.eval_vector(n, &x).unwrap();
                let powers: Vec<f64> = (0..=n).map(|p| x.powi(p as i32)).collect();
                for j in 0..=n {
                    let via: f64 = (0..=j).map(|c| m[[j, c]] * powers[c]).sum();
                    // relative to the term-magnitude sum: the monomial route
                    // cancels catastrophically for bases with huge monomial
                    // coefficients (chelyshkov2 reaches ~1e6 by degree 16)
                    let scale: f64 = (0..=j).map(|c| (m[[j, c]] * powers[c]).abs()).sum();
                    let rel = (v[j] - via).abs() / scale.max(1.0);
                    assert!(rel <= 1e-11, "{name} j={j} x={x}: {} vs {via}", v[j]);
                }
            }
        }
    }

    /// Same agreement, bit-exact in rational mode for the rational bases.
    #[test]
    fn eval_agrees_with_monomial_route_exact() {
        for name in ["monomial", "chebyshev-t", "legendre", "chelyshkov2"] {
            let b: Arc<RecurrenceBasis<Rat>> = RecurrenceBasis::builtin(name, None).unwrap();
            let n = 12;
            let m = b.to_monomial_matrix(n).unwrap();
            for x in [Rat::ratio(3, 7), Rat::ratio(-5, 9), Rat::ratio(1, 2)] {
                let v = b.eval_vector(n, &x).unwrap();
                let mut power = Rat::from_int(1);
                let mut powers = vec![Rat::from_int(1)];
                for _ in 0..n {
                    power = power * x.clone();
                    powers.push(power.clone());
                }
                for j in 0..=n {
                    let via = (0..=j).fold(Rat::from_int(0), |acc, c| {
                        acc + m[[j, c]].clone() * powers[c].clone()
                    });
                    assert_eq!(v[j], via, "{name} j={j}");
                }
            }
        }
    }

    #[test]
    fn custom_basis_table_bounds() {
        let b = RecurrenceBasis::custom(
            "mychain",
            vec![1.0, 2.0],
            vec![0.0, 0.5],
            vec![0.0, 0.25],
        )
        .unwrap();
        assert!(b.eval_vector(2, &0.3).is_ok());
        assert!(matches!(
            b.eval_vector(3, &0.3),
            Err(Error::CoeffOutOfRange { .. })
        ));
        assert!(matches!(
            RecurrenceBasis::custom("z", vec![1.0, 0.0], vec![0.0; 2], vec![0.0; 2]),
            Err(Error::ZeroAlpha { .. })
        ));
    }
}

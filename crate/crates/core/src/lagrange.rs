//! Lagrange-basis polynomials on distinct nodes.
//!
//! A polynomial is stored as `(nodes, values)`; the basis element `L_{j,n}`
//! is 1 at node `j` and 0 at the others. Augmenting the node set ("lifting")
//! rewrites the same polynomial over more nodes through the matrix
//! `R_{n,m} = [I_{n+1} | K]` whose `K` block is built from barycentric
//! weights over node prefixes. Products are then pointwise: lift both
//! factors onto the `m+n+1`-node set and multiply values.
//!
//! Conventions: the shared nodes come first and appended nodes last; an
//! input whose shared nodes arrive in a different order is permuted
//! internally. Non-nested node sets are rejected.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use ndarray::Array2;

/// Minimum relative node separation accepted in float mode.
const FLOAT_SEPARATION: f64 = 1e-13;

/// Relative threshold used when auto-generated nodes are screened.
const AUTO_NODE_SEPARATION: f64 = 1e-12;

fn span_f64<S: Scalar>(nodes: &[S]) -> f64 {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for t in nodes {
        let v = t.to_f64();
        lo = lo.min(v);
        hi = hi.max(v);
    }
    (hi - lo).abs()
}

/// Pairwise distinctness: exact inequality in rational mode, minimum
/// separation `> 1e-13 * span` in float mode.
fn check_distinct<S: Scalar>(nodes: &[S]) -> Result<()> {
    if nodes.len() < 2 {
        return Ok(());
    }
    if S::EXACT {
        for (i, a) in nodes.iter().enumerate() {
            if nodes[i + 1..].contains(a) {
                return Err(Error::DuplicateNodes);
            }
        }
    } else {
        let tol = FLOAT_SEPARATION * span_f64(nodes);
        for (i, a) in nodes.iter().enumerate() {
            for b in &nodes[i + 1..] {
                if (a.to_f64() - b.to_f64()).abs() <= tol {
                    return Err(Error::DuplicateNodes);
                }
            }
        }
    }
    Ok(())
}

/// Barycentric weights `w_j = prod_{m != j} 1/(tau_j - tau_m)`.
pub fn barycentric_weights<S: Scalar>(nodes: &[S]) -> Result<Vec<S>> {
    check_distinct(nodes)?;
    Ok((0..nodes.len())
        .map(|j| {
            let mut w = S::one();
            for (m, t) in nodes.iter().enumerate() {
                if m != j {
                    w = w / (nodes[j].clone() - t.clone());
                }
            }
            w
        })
        .collect())
}

/// Weights for every node prefix `q = from..=to` (over `nodes[0..=q]`),
/// grown incrementally: appending node `q` divides each old weight by
/// `tau_s - tau_q` and computes the new `w_q` fresh in O(q).
fn prefix_weights<S: Scalar>(nodes: &[S], from: usize, to: usize) -> Result<Vec<Vec<S>>> {
    let mut out = Vec::with_capacity(to - from + 1);
    let mut current = barycentric_weights(&nodes[..=from])?;
    out.push(current.clone());
    for q in from + 1..=to {
        for (s, w) in current.iter_mut().enumerate() {
            *w = w.clone() / (nodes[s].clone() - nodes[q].clone());
        }
        let mut wq = S::one();
        for t in &nodes[..q] {
            wq = wq / (nodes[q].clone() - t.clone());
        }
        current.push(wq);
        out.push(current.clone());
    }
    Ok(out)
}

/// Node-augmentation lifting matrix `R_{n,m} = [I_{n+1} | K]`.
#[derive(Clone, Debug)]
pub struct LagrangeLift<S: Scalar> {
    base_nodes: Vec<S>,
    extra_nodes: Vec<S>,
    matrix: Array2<S>,
}

impl<S: Scalar> LagrangeLift<S> {
    pub fn base_nodes(&self) -> &[S] {
        &self.base_nodes
    }

    pub fn extra_nodes(&self) -> &[S] {
        &self.extra_nodes
    }

    /// Dense `(n+1) x (m+1)` matrix.
    pub fn matrix(&self) -> &Array2<S> {
        &self.matrix
    }
}

/// Build `R_{n,m}` for the node set `base ++ extra` (appended nodes last).
/// With 1-based `i = 1..n+1`, `j = 1..m-n` and `w_{q,s}` the barycentric
/// weights over the first `q+1` nodes:
///
/// ```text
/// K[i,j] = -w_{j+n,i-1}/w_{j+n,j+n}
///          - (1/w_{j+n,j+n}) * sum_{r=1}^{j-1} w_{j+n,j+n-r} K[i,j-r]
/// ```
pub fn lift_matrix<S: Scalar>(base: &[S], extra: &[S]) -> Result<LagrangeLift<S>> {
    if base.is_empty() {
        return Err(Error::EmptyCoeffs);
    }
    if extra.is_empty() {
        return Err(Error::LengthMismatch("extra node list is empty".into()));
    }
    let mut all = base.to_vec();
    all.extend_from_slice(extra);
    check_distinct(&all)?;
    let n = base.len() - 1;
    let m = all.len() - 1;
    let weights = prefix_weights(&all, n, m)?; // weights[q - n] covers nodes[0..=q]
    let cols = m - n;
    let mut k_block = Array2::from_elem((n + 1, cols), S::zero());
    for j in 1..=cols {
        let w = &weights[j]; // nodes[0..=j+n]
        let w_last = w[j + n].clone();
        for i in 1..=n + 1 {
            let mut acc = -(w[i - 1].clone() / w_last.clone());
            for r in 1..j {
                let term = w[j + n - r].clone() * k_block[[i - 1, j - r - 1]].clone();
                acc = acc - term / w_last.clone();
            }
            k_block[[i - 1, j - 1]] = acc;
        }
    }
    let mut matrix = Array2::from_elem((n + 1, m + 1), S::zero());
    for r in 0..=n {
        matrix[[r, r]] = S::one();
        for c in 0..cols {
            matrix[[r, n + 1 + c]] = k_block[[r, c]].clone();
        }
    }
    Ok(LagrangeLift {
        base_nodes: base.to_vec(),
        extra_nodes: extra.to_vec(),
        matrix,
    })
}

/// `L_{idx, nodes.len()-1}(x)` with exact node hits.
fn basis_element_eval<S: Scalar>(nodes: &[S], idx: usize, x: &S) -> S {
    for (t, node) in nodes.iter().enumerate() {
        if x == node {
            return if t == idx { S::one() } else { S::zero() };
        }
    }
    let mut acc = S::one();
    for (m, t) in nodes.iter().enumerate() {
        if m != idx {
            acc = acc * (x.clone() - t.clone()) / (nodes[idx].clone() - t.clone());
        }
    }
    acc
}

/// Row expanding `L_{k,m} * L_{j,n}` over the shared degree-`(m+n)` node
/// set: entries are the product's values at each node. At shared nodes this
/// is `delta_{j,k}` at position `j`; past both factors' node counts it is
/// `L_{k,m}(tau_i) * L_{j,n}(tau_i)`.
pub fn element_product_row<S: Scalar>(
    j: usize,
    k: usize,
    m: usize,
    n: usize,
    nodes: &[S],
) -> Result<Vec<S>> {
    if nodes.len() != m + n + 1 {
        return Err(Error::LengthMismatch(format!(
            "need {} nodes for degrees ({m},{n}), got {}",
            m + n + 1,
            nodes.len()
        )));
    }
    if j > n || k > m {
        return Err(Error::IndexOutOfRange(format!(
            "element ({j},{k}) outside degrees ({n},{m})"
        )));
    }
    check_distinct(nodes)?;
    let m_nodes = &nodes[..=m];
    let n_nodes = &nodes[..=n];
    Ok(nodes
        .iter()
        .map(|tau| {
            basis_element_eval(m_nodes, k, tau) * basis_element_eval(n_nodes, j, tau)
        })
        .collect())
}

/// Chebyshev points of the second kind on the hull of `existing`, picked
/// greedily farthest-first until `need` nodes clear the separation screen.
fn auto_extra_nodes<S: Scalar>(existing: &[S], need: usize) -> Result<Vec<S>> {
    if need == 0 {
        return Ok(Vec::new());
    }
    if S::EXACT {
        return Err(Error::ExactNodesRequired);
    }
    let lo = existing
        .iter()
        .map(|t| t.to_f64())
        .fold(f64::INFINITY, f64::min);
    let hi = existing
        .iter()
        .map(|t| t.to_f64())
        .fold(f64::NEG_INFINITY, f64::max);
    let span = if hi > lo { hi - lo } else { 1.0 };
    let (lo, hi) = if hi > lo { (lo, hi) } else { (lo - 0.5, lo + 0.5) };
    let mid = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let min_gap = AUTO_NODE_SEPARATION * span;
    let mut pool_n = 8 * (existing.len() + need) + 9;
    for _ in 0..6 {
        let candidates: Vec<f64> = (0..pool_n)
            .map(|i| mid - half * (std::f64::consts::PI * i as f64 / (pool_n - 1) as f64).cos())
            .collect();
        let mut taken: Vec<f64> = existing.iter().map(|t| t.to_f64()).collect();
        let mut chosen: Vec<f64> = Vec::with_capacity(need);
        while chosen.len() < need {
            let best = candidates
                .iter()
                .map(|&c| {
                    let d = taken
                        .iter()
                        .map(|t| (c - t).abs())
                        .fold(f64::INFINITY, f64::min);
                    (c, d)
                })
                .max_by(|a, b| a.1.total_cmp(&b.1));
            match best {
                Some((c, d)) if d > min_gap => {
                    taken.push(c);
                    chosen.push(c);
                }
                _ => break,
            }
        }
        if chosen.len() == need {
            return Ok(chosen
                .into_iter()
                .map(|c| S::from_f64(c).expect("float mode"))
                .collect());
        }
        pool_n *= 2;
    }
    Err(Error::NodeGeneration { needed: need })
}

/// An interpolant `(nodes, values)` with derived barycentric weights.
#[derive(Clone, Debug)]
pub struct LagrangePolynomial<S: Scalar> {
    nodes: Vec<S>,
    values: Vec<S>,
    weights: Vec<S>,
}

impl<S: Scalar> LagrangePolynomial<S> {
    pub fn new(nodes: Vec<S>, values: Vec<S>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::EmptyCoeffs);
        }
        if nodes.len() != values.len() {
            return Err(Error::LengthMismatch(format!(
                "{} nodes vs {} values",
                nodes.len(),
                values.len()
            )));
        }
        let weights = barycentric_weights(&nodes)?;
        Ok(LagrangePolynomial {
            nodes,
            values,
            weights,
        })
    }

    pub fn nodes(&self) -> &[S] {
        &self.nodes
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn weights(&self) -> &[S] {
        &self.weights
    }

    pub fn degree(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Second-form barycentric evaluation; node hits return the stored value.
    pub fn eval(&self, x: &S) -> S {
        for (t, node) in self.nodes.iter().enumerate() {
            if x == node {
                return self.values[t].clone();
            }
        }
        let mut num = S::zero();
        let mut den = S::zero();
        for ((node, value), w) in self.nodes.iter().zip(&self.values).zip(&self.weights) {
            let q = w.clone() / (x.clone() - node.clone());
            num = num + q.clone() * value.clone();
            den = den + q;
        }
        num / den
    }

    /// Rewrite over `nodes ++ extra`: `q = p * R_{n,m}`. Values at the
    /// original nodes are untouched (identity block).
    pub fn lift(&self, extra: &[S]) -> Result<Self> {
        let lift = lift_matrix(&self.nodes, extra)?;
        let q = crate::linalg::row_times_mat(&self.values, &lift.matrix);
        let mut nodes = self.nodes.clone();
        nodes.extend_from_slice(extra);
        LagrangePolynomial::new(nodes, q)
    }

    /// Reorder `other` so its shared nodes line up with `self`'s prefix.
    /// Errors when the node sets are not nested.
    fn align_shared(&self, other: &Self) -> Result<Self> {
        let shared = self.nodes.len().min(other.nodes.len());
        let mut nodes = Vec::with_capacity(other.nodes.len());
        let mut values = Vec::with_capacity(other.nodes.len());
        let mut used = vec![false; other.nodes.len()];
        for i in 0..shared {
            let pos = other
                .nodes
                .iter()
                .enumerate()
                .position(|(t, node)| !used[t] && node == &self.nodes[i])
                .ok_or(Error::NodesNotNested)?;
            used[pos] = true;
            nodes.push(other.nodes[pos].clone());
            values.push(other.values[pos].clone());
        }
        for t in 0..other.nodes.len() {
            if !used[t] {
                nodes.push(other.nodes[t].clone());
                values.push(other.values[t].clone());
            }
        }
        LagrangePolynomial::new(nodes, values)
    }

    /// Pointwise product after lifting both factors onto `m+n+1` nodes.
    /// When `extra` is `None` the missing nodes are generated automatically
    /// (float mode only).
    pub fn multiply(&self, other: &Self, extra: Option<&[S]>) -> Result<Self> {
        let (long, short) = if self.nodes.len() >= other.nodes.len() {
            (self.clone(), self.align_shared(other)?)
        } else {
            (other.clone(), other.align_shared(self)?)
        };
        let target = self.degree() + other.degree() + 1;
        let mut full = long.nodes.clone();
        let missing = target - full.len();
        match extra {
            Some(xs) => {
                if xs.len() < missing {
                    return Err(Error::LengthMismatch(format!(
                        "need {missing} extra nodes, got {}",
                        xs.len()
                    )));
                }
                full.extend_from_slice(&xs[..missing]);
            }
            None => {
                let gen = auto_extra_nodes(&full, missing)?;
                full.extend_from_slice(&gen);
            }
        }
        check_distinct(&full)?;
        let lift_to = |p: &Self| -> Result<Self> {
            if p.nodes.len() == full.len() {
                Ok(p.clone())
            } else {
                p.lift(&full[p.nodes.len()..])
            }
        };
        let s = lift_to(&long)?;
        let t = lift_to(&short)?;
        let values = s
            .values
            .iter()
            .zip(&t.values)
            .map(|(a, b)| a.clone() * b.clone())
            .collect();
        LagrangePolynomial::new(full, values)
    }

    /// `p`-th power: lift onto `p*n + 1` nodes, then raise values pointwise.
    pub fn power(&self, p: usize, extra: Option<&[S]>) -> Result<Self> {
        if p < 1 {
            return Err(Error::InvalidPower);
        }
        if p == 1 {
            return Ok(self.clone());
        }
        let target = p * self.degree() + 1;
        let mut full = self.nodes.clone();
        let missing = target - full.len();
        match extra {
            Some(xs) => {
                if xs.len() < missing {
                    return Err(Error::LengthMismatch(format!(
                        "need {missing} extra nodes, got {}",
                        xs.len()
                    )));
                }
                full.extend_from_slice(&xs[..missing]);
            }
            None => {
                let gen = auto_extra_nodes(&full, missing)?;
                full.extend_from_slice(&gen);
            }
        }
        check_distinct(&full)?;
        let lifted = if missing == 0 {
            self.clone()
        } else {
            self.lift(&full[self.nodes.len()..])?
        };
        let values = lifted
            .values
            .iter()
            .map(|s| {
                let mut acc = s.clone();
                for _ in 1..p {
                    acc = acc * s.clone();
                }
                acc
            })
            .collect();
        LagrangePolynomial::new(full, values)
    }
}

impl<S: Scalar> crate::oracle::Evaluate<S> for LagrangePolynomial<S> {
    fn eval_at(&self, x: &S) -> Result<S> {
        Ok(self.eval(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::ratio(n, d)
    }

    fn rats(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| Rat::from_int(x)).collect()
    }

    #[test]
    fn weights_basics() {
        let w = barycentric_weights(&rats(&[0, 1])).unwrap();
        assert_eq!(w, vec![rat(-1, 1), rat(1, 1)]);

        let w = barycentric_weights(&rats(&[0, 1, 2])).unwrap();
        assert_eq!(w, vec![rat(1, 2), rat(-1, 1), rat(1, 2)]);

        assert!(matches!(
            barycentric_weights(&rats(&[0, 1, 0])),
            Err(Error::DuplicateNodes)
        ));
    }

    #[test]
    fn equispaced_weights_follow_binomials() {
        // w_j proportional to (-1)^j C(n,j) on an equispaced grid
        let n = 6usize;
        let nodes: Vec<Rat> = (0..=n as i64).map(Rat::from_int).collect();
        let w = barycentric_weights(&nodes).unwrap();
        let binom = |n: i64, k: i64| -> i64 {
            let mut acc = 1i64;
            for i in 0..k {
                acc = acc * (n - i) / (i + 1);
            }
            acc
        };
        let scale = w[0].clone() / Rat::from_int(binom(n as i64, 0));
        for j in 0..=n {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let want = scale.clone() * Rat::from_int(sign * binom(n as i64, j as i64));
            assert_eq!(w[j], want, "j={j}");
        }
    }

    #[test]
    fn prefix_weights_match_direct() {
        let nodes = rats(&[0, 1, 2, 3, 5]);
        let ws = prefix_weights(&nodes, 1, 4).unwrap();
        for (off, w) in ws.iter().enumerate() {
            let direct = barycentric_weights(&nodes[..=1 + off]).unwrap();
            assert_eq!(w, &direct);
        }
    }

    #[test]
    fn lift_matrix_structure() {
        let base = rats(&[0, 1, 2]);
        let extra = rats(&[3, 4]);
        let lift = lift_matrix(&base, &extra).unwrap();
        assert_eq!(lift.matrix().dim(), (3, 5));
        // identity block
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(
                    lift.matrix()[[r, c]],
                    if r == c { rat(1, 1) } else { rat(0, 1) }
                );
            }
        }
        // column 4 (1-based): -w_{3,i-1}/w_{3,3}
        let w3 = barycentric_weights(&rats(&[0, 1, 2, 3])).unwrap();
        for i in 0..3 {
            assert_eq!(
                lift.matrix()[[i, 3]],
                -(w3[i].clone() / w3[3].clone()),
                "col4 row {i}"
            );
        }
        // column 5 (1-based): (w_{3,i}w_{4,3} - w_{4,i}w_{3,3}) / (w_{3,3}w_{4,4})
        let w4 = barycentric_weights(&rats(&[0, 1, 2, 3, 4])).unwrap();
        for i in 0..3 {
            let want = (w3[i].clone() * w4[3].clone() - w4[i].clone() * w3[3].clone())
                / (w3[3].clone() * w4[4].clone());
            assert_eq!(lift.matrix()[[i, 4]], want, "col5 row {i}");
        }

        assert!(lift_matrix::<Rat>(&base, &[]).is_err());
        assert!(matches!(
            lift_matrix(&base, &rats(&[1])),
            Err(Error::DuplicateNodes)
        ));
    }

    #[test]
    fn lift_rows_reproduce_low_degree_elements() {
        // row i of R applied to the degree-m basis equals L_{i,n}(x)
        let base = rats(&[0, 1, 2]);
        let extra = vec![rat(7, 2), rat(9, 2)];
        let lift = lift_matrix(&base, &extra).unwrap();
        let mut all = base.clone();
        all.extend_from_slice(&extra);
        for x in [rat(13, 5), rat(-3, 7), rat(1, 9)] {
            for i in 0..3 {
                let lhs = basis_element_eval(&base, i, &x);
                let mut rhs = Rat::zero();
                for c in 0..5 {
                    rhs = rhs
                        + lift.matrix()[[i, c]].clone() * basis_element_eval(&all, c, &x);
                }
                assert_eq!(lhs, rhs, "row {i} at {x}");
            }
        }
    }

    #[test]
    fn lift_constant_and_parabola() {
        let c = LagrangePolynomial::new(rats(&[0, 1, 2]), vec![rat(5, 3); 3]).unwrap();
        let lifted = c.lift(&rats(&[4, 7])).unwrap();
        assert!(lifted.values().iter().all(|v| *v == rat(5, 3)));

        // x^2 sampled on {0,1,2}; appending node 3 must produce value 9
        let p = LagrangePolynomial::new(rats(&[0, 1, 2]), rats(&[0, 1, 4])).unwrap();
        let lifted = p.lift(&rats(&[3])).unwrap();
        assert_eq!(lifted.values()[3], rat(9, 1));
        // original values untouched
        assert_eq!(&lifted.values()[..3], p.values());
    }

    #[test]
    fn lift_composes() {
        let p = LagrangePolynomial::new(
            rats(&[0, 1, 2, 3]),
            vec![rat(1, 2), rat(-1, 3), rat(2, 5), rat(1, 7)],
        )
        .unwrap();
        let two_steps = p.lift(&rats(&[5])).unwrap().lift(&rats(&[8])).unwrap();
        let one_step = p.lift(&rats(&[5, 8])).unwrap();
        assert_eq!(two_steps.values(), one_step.values());
    }

    #[test]
    fn lift_agrees_with_evaluation() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let nodes: Vec<f64> = vec![-1.0, -0.3, 0.4, 1.0];
        let values: Vec<f64> = (0..4).map(|_| rng.random_range(-1.0..1.0)).collect();
        let p = LagrangePolynomial::new(nodes, values).unwrap();
        let lifted = p.lift(&[1.7, 2.4]).unwrap();
        for _ in 0..20 {
            let x: f64 = rng.random_range(-1.0..2.0);
            let a = p.eval(&x);
            let b = lifted.eval(&x);
            assert!((a - b).abs() <= 1e-11 * a.abs().max(1.0), "{a} vs {b}");
        }
    }

    #[test]
    fn element_product_cases() {
        let nodes = rats(&[0, 1, 2]);
        // shared index, j = k: single 1
        let row = element_product_row(1, 1, 1, 1, &nodes).unwrap();
        assert_eq!(row[1], rat(1, 1));
        assert_eq!(row[0], rat(0, 1));
        // j != k on shared range: zero there
        let row = element_product_row(1, 0, 1, 1, &nodes).unwrap();
        assert_eq!(row[0], rat(0, 1));
        assert_eq!(row[1], rat(0, 1));
        // tail: L_{0,1}(2) * L_{1,1}(2) = (-1)(2) = -2
        assert_eq!(row[2], rat(-2, 1));
    }

    #[test]
    fn element_product_midrange_keeps_true_values() {
        // k beyond the shorter factor's degree: the mid-range entry is a
        // genuine product value, not zero
        let nodes = rats(&[0, 1, 2, 3]);
        let row = element_product_row(0, 2, 2, 1, &nodes).unwrap();
        // position 2: L_{2,2}(2) * L_{0,1}(2) = 1 * (1 - 2) = -1
        assert_eq!(row[2], rat(-1, 1));
    }

    #[test]
    fn stacked_rows_expand_products() {
        // sum_c row[c] * L_{c,m+n}(x) == L_{k,m}(x) * L_{j,n}(x), all (j,k),
        // at 20 seeded random rational points
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(53);
        let nodes = vec![rat(0, 1), rat(1, 1), rat(2, 1), rat(7, 2), rat(-1, 1)];
        let (m, n) = (3usize, 1usize);
        let points: Vec<Rat> = (0..20)
            .map(|_| rat(rng.random_range(-60..=60), rng.random_range(7..=23)))
            .collect();
        for x in &points {
            for k in 0..=m {
                for j in 0..=n {
                    let row = element_product_row(j, k, m, n, &nodes).unwrap();
                    let mut got = Rat::zero();
                    for (c, entry) in row.iter().enumerate() {
                        got = got + entry.clone() * basis_element_eval(&nodes, c, x);
                    }
                    let want = basis_element_eval(&nodes[..=m], k, x)
                        * basis_element_eval(&nodes[..=n], j, x);
                    assert_eq!(got, want, "j={j} k={k} x={x}");
                }
            }
        }
    }

    #[test]
    fn multiply_by_constant_one_lifts() {
        let p = LagrangePolynomial::new(rats(&[0, 1, 2]), rats(&[2, -1, 3])).unwrap();
        let one = LagrangePolynomial::new(rats(&[0, 1]), vec![rat(1, 1); 2]).unwrap();
        let prod = p.multiply(&one, Some(&rats(&[5]))).unwrap();
        let lifted = p.lift(&rats(&[5])).unwrap();
        assert_eq!(prod.values(), lifted.values());
    }

    #[test]
    fn multiply_squares_the_ramp() {
        let x01 = LagrangePolynomial::new(rats(&[0, 1]), rats(&[0, 1])).unwrap();
        let sq = x01.multiply(&x01, Some(&rats(&[2]))).unwrap();
        assert_eq!(sq.values(), &rats(&[0, 1, 4])[..]);
    }

    #[test]
    fn multiply_accepts_permuted_shared_nodes() {
        let p = LagrangePolynomial::new(rats(&[0, 1, 2]), rats(&[3, 5, 9])).unwrap();
        let q = LagrangePolynomial::new(rats(&[1, 0]), rats(&[7, 2])).unwrap();
        let prod = p.multiply(&q, Some(&rats(&[4]))).unwrap();
        assert_eq!(prod.values()[0], rat(6, 1)); // 3*2 at node 0
        assert_eq!(prod.values()[1], rat(35, 1)); // 5*7 at node 1

        let r = LagrangePolynomial::new(rats(&[5, 6]), rats(&[1, 1])).unwrap();
        assert!(matches!(
            p.multiply(&r, Some(&rats(&[7]))),
            Err(Error::NodesNotNested)
        ));
    }

    #[test]
    fn multiply_eval_homomorphic_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(37);
        let nodes4: Vec<f64> = vec![-1.0, -0.5, 0.2, 0.9];
        let nodes3: Vec<f64> = vec![-1.0, -0.5, 0.2];
        let p = LagrangePolynomial::new(
            nodes4,
            (0..4).map(|_| rng.random_range(-1.0..1.0)).collect(),
        )
        .unwrap();
        let q = LagrangePolynomial::new(
            nodes3,
            (0..3).map(|_| rng.random_range(-1.0..1.0)).collect(),
        )
        .unwrap();
        let prod = p.multiply(&q, None).unwrap();
        assert_eq!(prod.degree(), 5);
        for _ in 0..30 {
            let x: f64 = rng.random_range(-1.0..1.0);
            let want = p.eval(&x) * q.eval(&x);
            let got = prod.eval(&x);
            assert!((got - want).abs() <= 1e-11 * want.abs().max(1.0));
        }
    }

    #[test]
    fn power_cubes_values() {
        let x01 = LagrangePolynomial::new(rats(&[0, 1]), rats(&[0, 1])).unwrap();
        let cubed = x01.power(3, Some(&rats(&[2, 3]))).unwrap();
        assert_eq!(cubed.values(), &rats(&[0, 1, 8, 27])[..]);

        let c = LagrangePolynomial::new(rats(&[0, 1, 2]), vec![rat(2, 1); 3]).unwrap();
        let cc = c.power(3, Some(&rats(&[3, 4, 5, 6]))).unwrap();
        assert!(cc.values().iter().all(|v| *v == rat(8, 1)));

        assert!(matches!(x01.power(0, None), Err(Error::InvalidPower)));
        let same = x01.power(1, None).unwrap();
        assert_eq!(same.values(), x01.values());
    }

    #[test]
    fn eval_at_nodes_and_identity() {
        let p = LagrangePolynomial::new(rats(&[0, 1, 3]), rats(&[4, -2, 7])).unwrap();
        assert_eq!(p.eval(&rat(3, 1)), rat(7, 1));
        let one = LagrangePolynomial::new(rats(&[0, 1, 3]), vec![rat(1, 1); 3]).unwrap();
        for x in [rat(1, 2), rat(22, 7), rat(-4, 9)] {
            assert_eq!(one.eval(&x), rat(1, 1));
        }
    }

    /// Newton divided-difference evaluation as an independent oracle.
    fn divided_difference_eval(nodes: &[f64], values: &[f64], x: f64) -> f64 {
        let n = nodes.len();
        let mut table = values.to_vec();
        for level in 1..n {
            for i in (level..n).rev() {
                table[i] = (table[i] - table[i - 1]) / (nodes[i] - nodes[i - level]);
            }
        }
        let mut acc = table[n - 1];
        for i in (0..n - 1).rev() {
            acc = acc * (x - nodes[i]) + table[i];
        }
        acc
    }

    #[test]
    fn eval_matches_divided_differences() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        let nodes: Vec<f64> = vec![-2.0, -0.7, 0.1, 1.3, 2.2];
        let values: Vec<f64> = (0..5).map(|_| rng.random_range(-1.0..1.0)).collect();
        let p = LagrangePolynomial::new(nodes.clone(), values.clone()).unwrap();
        for w in nodes.windows(2) {
            let x = 0.5 * (w[0] + w[1]);
            let got = p.eval(&x);
            let want = divided_difference_eval(&nodes, &values, x);
            assert!((got - want).abs() <= 1e-11 * want.abs().max(1.0));
        }
    }

    #[test]
    fn exact_mode_requires_explicit_nodes() {
        let p = LagrangePolynomial::new(rats(&[0, 1]), rats(&[0, 1])).unwrap();
        assert!(matches!(
            p.multiply(&p, None),
            Err(Error::ExactNodesRequired)
        ));
    }

    #[test]
    fn float_near_duplicates_rejected() {
        let nodes = vec![0.0, 1.0, 1.0 + 1e-15];
        assert!(matches!(
            LagrangePolynomial::new(nodes, vec![1.0; 3]),
            Err(Error::DuplicateNodes)
        ));
    }
}

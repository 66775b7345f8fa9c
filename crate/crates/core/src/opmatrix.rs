//! Operational matrices `H_{n,k}` for degree-graded bases.
//!
//! `H_{n,k}` is the `(n+1) x (n+k+1)` matrix with
//!
//! ```text
//! phi_k(x) * [phi_0(x), ..., phi_n(x)]^T = H_{n,k} * [phi_0(x), ..., phi_{n+k}(x)]^T
//! ```
//!
//! Row `r` (0-based) expands `phi_r * phi_k` and is nonzero only on the band
//! `|k - r| <= c <= k + r`. Rows are generated top-down from the recurrence
//! coefficients alone; 1-based source indices `[i, j]` map to 0-based
//! `[r, c] = [i-1, j-1]` throughout:
//!
//! ```text
//! H[r][c] = ( alpha[c-1] H[r-1][c-1] + (beta[c] - beta[r-1]) H[r-1][c]
//!           + gamma[c+1] H[r-1][c+1] - gamma[r-1] H[r-2][c] ) / alpha[r-1]
//! ```
//!
//! with `H[0][k] = 1` and every out-of-range reference read as zero.
//!
//! Only the last row of `H_{n,k}` is new relative to `H_{n-1,k}` (at most
//! `2k+1` nonzeros), and the last rows of `H_{i,j}` and `H_{j,i}` coincide;
//! [`HCache`] exploits both to avoid recomputation.

use crate::bases::{Coeffs, RecurrenceBasis};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use ndarray::Array2;
use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, RwLock};

/// The operational matrix `H_{n,k}` for a named basis.
#[derive(Clone, Debug)]
pub struct OpMatrix<S: Scalar> {
    basis_name: String,
    n: usize,
    k: usize,
    entries: Array2<S>,
}

impl<S: Scalar> OpMatrix<S> {
    pub fn basis_name(&self) -> &str {
        &self.basis_name
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Dense `(n+1) x (n+k+1)` entries.
    pub fn entries(&self) -> &Array2<S> {
        &self.entries
    }

    /// Assemble from parts, e.g. when loading a persisted cache entry.
    /// The shape must be `(n+1) x (n+k+1)`.
    pub fn from_parts(basis_name: &str, n: usize, k: usize, entries: Array2<S>) -> Result<Self> {
        if entries.dim() != (n + 1, n + k + 1) {
            return Err(Error::LengthMismatch(format!(
                "H matrix for n={n}, k={k} must be {}x{}",
                n + 1,
                n + k + 1
            )));
        }
        Ok(OpMatrix {
            basis_name: basis_name.to_string(),
            n,
            k,
            entries,
        })
    }
}

/// Row `r >= 1` of `H_{.,k}` from the two rows above it. Out-of-range reads
/// (including one past the band of the previous row) are zero.
fn compute_row<S: Scalar>(
    c: &Coeffs<S>,
    k: usize,
    r: usize,
    width: usize,
    prev1: &[S],
    prev2: &[S],
) -> Vec<S> {
    let get = |row: &[S], ci: isize| -> S {
        if ci < 0 {
            return S::zero();
        }
        row.get(ci as usize).cloned().unwrap_or_else(S::zero)
    };
    let mut out = vec![S::zero(); width];
    let lo = k.abs_diff(r);
    let hi = (k + r).min(width - 1);
    for col in lo..=hi {
        let ci = col as isize;
        let mut acc = (c.beta[col].clone() - c.beta[r - 1].clone()) * get(prev1, ci);
        if col >= 1 {
            acc = acc + c.alpha[col - 1].clone() * get(prev1, ci - 1);
        }
        if col + 1 < width {
            acc = acc + c.gamma[col + 1].clone() * get(prev1, ci + 1);
        }
        if r >= 2 {
            acc = acc - c.gamma[r - 1].clone() * get(prev2, ci);
        }
        out[col] = acc / c.alpha[r - 1].clone();
    }
    out
}

fn rows_to_matrix<S: Scalar>(rows: Vec<Vec<S>>, width: usize) -> Array2<S> {
    let mut m = Array2::from_elem((rows.len(), width), S::zero());
    for (r, row) in rows.into_iter().enumerate() {
        for (c, v) in row.into_iter().enumerate() {
            m[[r, c]] = v;
        }
    }
    m
}

/// Build `H_{n,k}` from scratch.
pub fn build_h<S: Scalar>(basis: &RecurrenceBasis<S>, n: usize, k: usize) -> Result<OpMatrix<S>> {
    let width = n + k + 1;
    let mut rows: Vec<Vec<S>> = Vec::with_capacity(n + 1);
    let mut first = vec![S::zero(); width];
    first[k] = S::one();
    rows.push(first);
    if n > 0 {
        let c = basis.coeffs_up_to(n + k)?;
        for r in 1..=n {
            let row = {
                let prev1 = rows[r - 1].as_slice();
                let prev2 = if r >= 2 { rows[r - 2].as_slice() } else { &[] };
                compute_row(&c, k, r, width, prev1, prev2)
            };
            rows.push(row);
        }
    }
    Ok(OpMatrix {
        basis_name: basis.name().to_string(),
        n,
        k,
        entries: rows_to_matrix(rows, width),
    })
}

/// Extend `H_{n-1,k}` to `H_{n,k}`: the previous matrix embeds in the
/// top-left block (with a zero column above the new corner) and only the
/// last row is computed.
pub fn extend_h<S: Scalar>(basis: &RecurrenceBasis<S>, prev: &OpMatrix<S>) -> Result<OpMatrix<S>> {
    if basis.name() != prev.basis_name {
        return Err(Error::BasisMismatch(
            basis.name().to_string(),
            prev.basis_name.clone(),
        ));
    }
    let (n, k) = (prev.n + 1, prev.k);
    let width = n + k + 1;
    let c = basis.coeffs_up_to(n + k)?;
    let mut m = Array2::from_elem((n + 1, width), S::zero());
    for r in 0..=prev.n {
        for col in 0..prev.n + k + 1 {
            m[[r, col]] = prev.entries[[r, col]].clone();
        }
    }
    let prev1: Vec<S> = (0..prev.n + k + 1)
        .map(|col| prev.entries[[prev.n, col]].clone())
        .collect();
    let prev2: Vec<S> = if n >= 2 {
        (0..prev.n + k + 1)
            .map(|col| prev.entries[[prev.n - 1, col]].clone())
            .collect()
    } else {
        Vec::new()
    };
    let last = compute_row(&c, k, n, width, &prev1, &prev2);
    for (col, v) in last.into_iter().enumerate() {
        m[[n, col]] = v;
    }
    Ok(OpMatrix {
        basis_name: prev.basis_name.clone(),
        n,
        k,
        entries: m,
    })
}

/// Zero-pad `H_{n,k}` on the right to `n + m + 1` columns (`m >= k`),
/// producing the operational matrix against the degree-`m` coefficient span.
pub fn pad_to_htilde<S: Scalar>(h: &OpMatrix<S>, m: usize) -> Result<Array2<S>> {
    if m < h.k {
        return Err(Error::PadTooSmall { m, k: h.k });
    }
    let mut out = Array2::from_elem((h.n + 1, h.n + m + 1), S::zero());
    for r in 0..=h.n {
        for c in 0..h.n + h.k + 1 {
            out[[r, c]] = h.entries[[r, c]].clone();
        }
    }
    Ok(out)
}

/// Shared, internally synchronized store of `H_{n,k}` matrices keyed by
/// `(basis name, n, k)`.
///
/// A miss is served by extending the deepest cached `H_{n',k}` (`n' < n`)
/// row by row; each missing row is first looked up as the last row of a
/// cached transpose partner `H_{k,r}` and only computed from the recurrence
/// when that fails. [`HCache::rows_computed`] counts recurrence-computed
/// rows, which makes the reuse observable.
pub struct HCache<S: Scalar> {
    map: RwLock<HashMap<(String, usize, usize), Arc<OpMatrix<S>>>>,
    rows_computed: AtomicUsize,
}

impl<S: Scalar> Default for HCache<S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<S: Scalar> HCache<S> {
    pub fn new() -> Self {
        HCache {
            map: RwLock::new(HashMap::new()),
            rows_computed: AtomicUsize::new(0),
        }
    }

    /// Total rows computed through the recurrence since construction.
    pub fn rows_computed(&self) -> usize {
        self.rows_computed.load(Ordering::Relaxed)
    }

    /// Number of cached matrices.
    pub fn len(&self) -> usize {
        self.map.read().expect("H cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Preload an externally built matrix (e.g. from a persisted cache).
    pub fn insert(&self, m: OpMatrix<S>) {
        let key = (m.basis_name.clone(), m.n, m.k);
        self.map
            .write()
            .expect("H cache poisoned")
            .entry(key)
            .or_insert_with(|| Arc::new(m));
    }

    /// Cached keys, for persistence.
    pub fn keys(&self) -> Vec<(String, usize, usize)> {
        self.map
            .read()
            .expect("H cache poisoned")
            .keys()
            .cloned()
            .collect()
    }

    /// `H_{n,k}` for `basis`, reusing every cached row that applies.
    pub fn get(&self, basis: &RecurrenceBasis<S>, n: usize, k: usize) -> Result<Arc<OpMatrix<S>>> {
        let name = basis.name().to_string();
        {
            let map = self.map.read().expect("H cache poisoned");
            if let Some(hit) = map.get(&(name.clone(), n, k)) {
                return Ok(hit.clone());
            }
        }
        let width = n + k + 1;
        let mut rows: Vec<Vec<S>> = Vec::with_capacity(n + 1);
        {
            let map = self.map.read().expect("H cache poisoned");
            // deepest cached H_{n',k} seeds the first n'+1 rows
            let seed = (0..n)
                .rev()
                .find_map(|np| map.get(&(name.clone(), np, k)).cloned());
            match seed {
                Some(prev) => {
                    for r in 0..=prev.n {
                        let mut row: Vec<S> = (0..prev.n + k + 1)
                            .map(|c| prev.entries[[r, c]].clone())
                            .collect();
                        row.resize(width, S::zero());
                        rows.push(row);
                    }
                }
                None => {
                    let mut first = vec![S::zero(); width];
                    first[k] = S::one();
                    rows.push(first);
                }
            }
        }
        if rows.len() < n + 1 {
            let c = basis.coeffs_up_to(n + k)?;
            for r in rows.len()..=n {
                // Prop 4.1(c): row r is the last row of H_{k,r} when cached.
                let partner = {
                    let map = self.map.read().expect("H cache poisoned");
                    map.get(&(name.clone(), k, r)).cloned()
                };
                let row = match partner {
                    Some(p) => {
                        let mut row: Vec<S> = (0..p.n + p.k + 1)
                            .map(|c| p.entries[[p.n, c]].clone())
                            .collect();
                        row.resize(width, S::zero());
                        row
                    }
                    None => {
                        self.rows_computed.fetch_add(1, Ordering::Relaxed);
                        let prev1 = rows[r - 1].as_slice();
                        let prev2 = if r >= 2 { rows[r - 2].as_slice() } else { &[] };
                        compute_row(&c, k, r, width, prev1, prev2)
                    }
                };
                rows.push(row);
            }
        }
        let built = Arc::new(OpMatrix {
            basis_name: name.clone(),
            n,
            k,
            entries: rows_to_matrix(rows, width),
        });
        let mut map = self.map.write().expect("H cache poisoned");
        Ok(map.entry((name, n, k)).or_insert(built).clone())
    }
}

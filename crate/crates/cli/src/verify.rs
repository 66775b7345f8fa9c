//! The `verify` subcommand: seeded random products checked against the
//! monomial-conversion oracle, with a deterministic textual report.
//!
//! Bases with rational recurrences run in exact mode (the comparison must be
//! bit-true); the orthonormal families run in float64 against a 1e-9
//! relative tolerance.

use crate::AppError;
use polymul_core::bases::{DgPolynomial, RecurrenceBasis, BUILTIN_BASES};
use polymul_core::oracle;
use polymul_core::scalar::Scalar;
use polymul_core::Rat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;
use std::sync::Arc;

pub struct VerifyOpts {
    pub basis: Option<String>,
    pub degree_max: usize,
    pub trials: usize,
    pub seed: u64,
}

const FLOAT_TOL: f64 = 1e-9;

fn is_float_only(name: &str) -> bool {
    matches!(name, "hermite-orthonormal" | "legendre-orthonormal")
}

fn basis_for<S: Scalar>(name: &str, degree_max: usize) -> Result<Arc<RecurrenceBasis<S>>, AppError> {
    let nodes = if name == "newton" {
        // enough equispaced nodes for products of two degree-max factors
        Some(
            (0..=(2 * degree_max + 1) as i64)
                .map(S::from_int)
                .collect::<Vec<_>>(),
        )
    } else {
        None
    };
    RecurrenceBasis::builtin(name, nodes).map_err(AppError::from)
}

fn random_coeffs_exact(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rat> {
    (0..len)
        .map(|_| Rat::ratio(rng.random_range(-64..=64), 64))
        .collect()
}

fn random_coeffs_float(rng: &mut ChaCha8Rng, len: usize) -> Vec<f64> {
    (0..len).map(|_| rng.random_range(-1.0..1.0)).collect()
}

fn run_exact(
    name: &str,
    opts: &VerifyOpts,
    rng: &mut ChaCha8Rng,
) -> Result<(String, bool), AppError> {
    let basis = basis_for::<Rat>(name, opts.degree_max)?;
    let mut max_dev = 0.0_f64;
    let mut mismatches = 0usize;
    for _ in 0..opts.trials {
        let na = rng.random_range(0..=opts.degree_max);
        let nb = rng.random_range(0..=opts.degree_max);
        let xi = DgPolynomial::new(basis.clone(), random_coeffs_exact(rng, na + 1))?;
        let psi = DgPolynomial::new(basis.clone(), random_coeffs_exact(rng, nb + 1))?;
        let fast = xi.multiply(&psi)?;
        let slow = oracle::mul_via_monomial(&xi, &psi)?;
        for (a, b) in fast.coeffs().iter().zip(slow.coeffs()) {
            if a != b {
                mismatches += 1;
                let dev = (a.clone() - b.clone()).to_f64().abs();
                max_dev = max_dev.max(dev);
            }
        }
    }
    let pass = mismatches == 0;
    let line = format!(
        "basis {name} [exact]: trials={} max_abs_dev={:e} mismatches={} {}",
        opts.trials,
        max_dev,
        mismatches,
        if pass { "PASS" } else { "FAIL" }
    );
    Ok((line, pass))
}

fn run_float(
    name: &str,
    opts: &VerifyOpts,
    rng: &mut ChaCha8Rng,
) -> Result<(String, bool), AppError> {
    let basis = basis_for::<f64>(name, opts.degree_max)?;
    let mut max_dev = 0.0_f64;
    for _ in 0..opts.trials {
        let na = rng.random_range(0..=opts.degree_max);
        let nb = rng.random_range(0..=opts.degree_max);
        let xi = DgPolynomial::new(basis.clone(), random_coeffs_float(rng, na + 1))?;
        let psi = DgPolynomial::new(basis.clone(), random_coeffs_float(rng, nb + 1))?;
        let fast = xi.multiply(&psi)?;
        let slow = oracle::mul_via_monomial(&xi, &psi)?;
        let scale = fast
            .coeffs()
            .iter()
            .fold(0.0_f64, |acc, c| acc.max(c.abs()))
            .max(1.0);
        for (a, b) in fast.coeffs().iter().zip(slow.coeffs()) {
            max_dev = max_dev.max((a - b).abs() / scale);
        }
    }
    let pass = max_dev <= FLOAT_TOL;
    let line = format!(
        "basis {name} [float64]: trials={} max_rel_dev={:e} tol={:e} {}",
        opts.trials,
        max_dev,
        FLOAT_TOL,
        if pass { "PASS" } else { "FAIL" }
    );
    Ok((line, pass))
}

/// Produce the report text and whether every basis passed.
pub fn run(opts: &VerifyOpts) -> Result<(String, bool), AppError> {
    let names: Vec<&str> = match &opts.basis {
        Some(b) => {
            if !BUILTIN_BASES.contains(&b.as_str()) {
                return Err(AppError::domain(format!("unknown basis `{b}`")));
            }
            vec![b.as_str()]
        }
        None => BUILTIN_BASES.to_vec(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut report = format!(
        "verify: degree-max={} trials={} seed={}\n",
        opts.degree_max, opts.trials, opts.seed
    );
    let mut all_pass = true;
    for name in names {
        let (line, pass) = if is_float_only(name) {
            run_float(name, opts, &mut rng)?
        } else {
            run_exact(name, opts, &mut rng)?
        };
        all_pass &= pass;
        writeln!(report, "{line}").expect("string write");
    }
    writeln!(report, "overall: {}", if all_pass { "PASS" } else { "FAIL" })
        .expect("string write");
    Ok((report, all_pass))
}

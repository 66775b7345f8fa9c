//! `polymul`: intra-basis polynomial arithmetic from the command line.
//!
//! Subcommands mirror the library: `opmatrix`/`mul`/`pow` for degree-graded
//! bases, `bmul`/`bpow`/`blift` for Bernstein, `lmul`/`lpow`/`llift` for
//! Lagrange, `galerkin`/`galerkin-g` for stochastic Galerkin blocks, and
//! `verify` for the seeded oracle suite. Exit codes: 0 success, 1 domain
//! error (single-line diagnostic on stderr), 2 usage error.

mod io;
mod store;
mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use polymul_core::bases::{DgPolynomial, RecurrenceBasis, BUILTIN_BASES};
use polymul_core::scalar::Scalar;
use polymul_core::{bernstein, galerkin, lagrange, opmatrix, HCache, Rat};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

/// CLI-level error with the exit code it maps to.
#[derive(Debug)]
pub enum AppError {
    Domain(String),
    Usage(String),
}

impl AppError {
    pub fn domain(msg: impl Into<String>) -> Self {
        AppError::Domain(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        AppError::Usage(msg.into())
    }
}

impl From<polymul_core::Error> for AppError {
    fn from(e: polymul_core::Error) -> Self {
        AppError::Domain(e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "polymul", version, about = "Intra-basis polynomial multiplication toolkit")]
struct Cli {
    /// Write the artifact to this path instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Coo,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the registered basis names
    BasisList,
    /// Operational matrix H_{n,k} for a degree-graded basis
    Opmatrix(OpmatrixArgs),
    /// Multiply two polynomials in a degree-graded basis
    Mul(MulArgs),
    /// Integer power of a polynomial in a degree-graded basis
    Pow(PowArgs),
    /// Multiply two Bernstein polynomials
    Bmul(BernsteinMulArgs),
    /// Integer power of a Bernstein polynomial
    Bpow(BernsteinPowArgs),
    /// Bernstein degree-elevation matrix T_{n,m}
    Blift(BliftArgs),
    /// Multiply two Lagrange polynomials
    Lmul(LagrangeMulArgs),
    /// Integer power of a Lagrange polynomial
    Lpow(LagrangePowArgs),
    /// Rewrite a Lagrange polynomial over extra nodes
    Llift(LliftArgs),
    /// Univariate stochastic Galerkin matrix U_{k,p}
    Galerkin(GalerkinArgs),
    /// Multivariate Galerkin block G_alpha as a Kronecker product
    GalerkinG(GalerkinGArgs),
    /// Seeded random products checked against the monomial oracle
    Verify(VerifyArgs),
}

#[derive(Args)]
struct OpmatrixArgs {
    /// Registry name or path to a custom-basis JSON file
    #[arg(long)]
    basis: String,
    #[arg(short)]
    n: usize,
    #[arg(short)]
    k: usize,
    /// Zero-pad on the right to n+M+1 columns
    #[arg(long)]
    pad: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Exact rational arithmetic (rational-recurrence bases only)
    #[arg(long)]
    exact: bool,
    /// Newton nodes, inline JSON array or a file path
    #[arg(long)]
    nodes: Option<String>,
}

#[derive(Args)]
struct MulArgs {
    #[arg(long)]
    basis: Option<String>,
    /// Left factor: JSON file or inline `[c0, c1, ...]` / `{"basis":..., "coeffs":...}`
    #[arg(long)]
    a: String,
    /// Right factor, same forms as --a
    #[arg(long)]
    b: String,
    #[arg(long)]
    exact: bool,
    #[arg(long)]
    nodes: Option<String>,
}

#[derive(Args)]
struct PowArgs {
    #[arg(long)]
    basis: Option<String>,
    #[arg(long)]
    a: String,
    #[arg(short)]
    p: usize,
    #[arg(long)]
    exact: bool,
    #[arg(long)]
    nodes: Option<String>,
}

#[derive(Args)]
struct BernsteinMulArgs {
    /// Interval endpoints a b
    #[arg(long, num_args = 2, allow_negative_numbers = true)]
    interval: Option<Vec<String>>,
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    #[arg(long)]
    exact: bool,
}

#[derive(Args)]
struct BernsteinPowArgs {
    #[arg(long, num_args = 2, allow_negative_numbers = true)]
    interval: Option<Vec<String>>,
    #[arg(long)]
    a: String,
    #[arg(short)]
    p: usize,
    #[arg(long)]
    exact: bool,
}

#[derive(Args)]
struct BliftArgs {
    #[arg(short)]
    n: usize,
    #[arg(short)]
    m: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    exact: bool,
}

#[derive(Args)]
struct LagrangeMulArgs {
    /// `{"nodes": [...], "values": [...]}`, file or inline
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    /// Extra nodes (JSON array, file or inline); auto-generated when omitted
    #[arg(long)]
    extra_nodes: Option<String>,
    #[arg(long)]
    exact: bool,
}

#[derive(Args)]
struct LagrangePowArgs {
    #[arg(long)]
    a: String,
    #[arg(short)]
    p: usize,
    #[arg(long)]
    extra_nodes: Option<String>,
    #[arg(long)]
    exact: bool,
}

#[derive(Args)]
struct LliftArgs {
    #[arg(long)]
    a: String,
    #[arg(long)]
    extra_nodes: String,
    #[arg(long)]
    exact: bool,
}

#[derive(Args)]
struct GalerkinArgs {
    #[arg(long)]
    basis: String,
    #[arg(short)]
    k: usize,
    #[arg(short)]
    p: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct GalerkinGArgs {
    /// Multi-index, comma separated (e.g. 1,2)
    #[arg(long)]
    alpha: String,
    /// Per-dimension truncation orders, comma separated
    #[arg(long)]
    orders: String,
    #[arg(long)]
    basis: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    basis: Option<String>,
    #[arg(long, default_value_t = 8)]
    degree_max: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() {
    let cli = Cli::parse();
    let out = cli.out.clone();
    std::process::exit(match execute(cli) {
        Ok((artifact, code)) => match emit(&artifact, &out) {
            Ok(()) => code,
            Err(AppError::Domain(m)) => {
                eprintln!("error: {m}");
                1
            }
            Err(AppError::Usage(m)) => {
                eprintln!("usage error: {m}");
                2
            }
        },
        Err(AppError::Domain(m)) => {
            eprintln!("error: {m}");
            1
        }
        Err(AppError::Usage(m)) => {
            eprintln!("usage error: {m}");
            2
        }
    });
}

fn emit(artifact: &str, out: &Option<PathBuf>) -> Result<(), AppError> {
    match out {
        Some(path) => std::fs::write(path, artifact)
            .map_err(|e| AppError::domain(format!("cannot write `{}`: {e}", path.display()))),
        None => {
            print!("{artifact}");
            Ok(())
        }
    }
}

fn execute(cli: Cli) -> Result<(String, i32), AppError> {
    match cli.cmd {
        Cmd::BasisList => {
            let mut s = String::new();
            for name in BUILTIN_BASES {
                s.push_str(name);
                s.push('\n');
            }
            Ok((s, 0))
        }
        Cmd::Opmatrix(a) => {
            if a.exact {
                cmd_opmatrix::<Rat>(&a)
            } else {
                cmd_opmatrix::<f64>(&a)
            }
        }
        Cmd::Mul(a) => {
            if a.exact {
                cmd_mul::<Rat>(&a)
            } else {
                cmd_mul::<f64>(&a)
            }
        }
        Cmd::Pow(a) => {
            if a.exact {
                cmd_pow::<Rat>(&a)
            } else {
                cmd_pow::<f64>(&a)
            }
        }
        Cmd::Bmul(a) => {
            if a.exact {
                cmd_bmul::<Rat>(&a)
            } else {
                cmd_bmul::<f64>(&a)
            }
        }
        Cmd::Bpow(a) => {
            if a.exact {
                cmd_bpow::<Rat>(&a)
            } else {
                cmd_bpow::<f64>(&a)
            }
        }
        Cmd::Blift(a) => {
            if a.exact {
                cmd_blift::<Rat>(&a)
            } else {
                cmd_blift::<f64>(&a)
            }
        }
        Cmd::Lmul(a) => {
            if a.exact {
                cmd_lmul::<Rat>(&a)
            } else {
                cmd_lmul::<f64>(&a)
            }
        }
        Cmd::Lpow(a) => {
            if a.exact {
                cmd_lpow::<Rat>(&a)
            } else {
                cmd_lpow::<f64>(&a)
            }
        }
        Cmd::Llift(a) => {
            if a.exact {
                cmd_llift::<Rat>(&a)
            } else {
                cmd_llift::<f64>(&a)
            }
        }
        Cmd::Galerkin(a) => cmd_galerkin(&a),
        Cmd::GalerkinG(a) => cmd_galerkin_g(&a),
        Cmd::Verify(a) => {
            let opts = verify::VerifyOpts {
                basis: a.basis,
                degree_max: a.degree_max,
                trials: a.trials,
                seed: a.seed,
            };
            let (report, pass) = verify::run(&opts)?;
            if !pass {
                eprintln!("error: verification failed");
            }
            Ok((report, if pass { 0 } else { 1 }))
        }
    }
}

/// `1/2`, `3`, or `0.25` as a scalar of the active mode.
fn parse_scalar_arg<S: Scalar>(s: &str) -> Result<S, AppError> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim())
            .map_err(|_| AppError::usage(format!("bad rational `{s}`")))?;
        let den = BigInt::from_str(den.trim())
            .map_err(|_| AppError::usage(format!("bad rational `{s}`")))?;
        if den == BigInt::from(0) {
            return Err(AppError::usage(format!("zero denominator in `{s}`")));
        }
        return Ok(S::big_ratio(num, den));
    }
    if let Ok(i) = i64::from_str(s) {
        return Ok(S::from_int(i));
    }
    let v: Value =
        serde_json::from_str(s).map_err(|_| AppError::usage(format!("bad number `{s}`")))?;
    io::scalar_from_json(&v)
}

fn parse_scalar_list<S: Scalar>(arg: &str) -> Result<Vec<S>, AppError> {
    let v = io::read_json_arg(arg)?;
    io::vec_from_json(&v, "node list")
}

/// Registry name, or path to `{"name":..., "alpha":[...], "beta":[...], "gamma":[...]}`.
fn resolve_basis<S: Scalar>(
    spec: &str,
    nodes: &Option<String>,
) -> Result<Arc<RecurrenceBasis<S>>, AppError> {
    let nodes_vec = nodes.as_deref().map(parse_scalar_list::<S>).transpose()?;
    if BUILTIN_BASES.contains(&spec) {
        return RecurrenceBasis::builtin(spec, nodes_vec).map_err(AppError::from);
    }
    if Path::new(spec).exists() {
        let v = io::read_json_arg(spec)?;
        let o = v
            .as_object()
            .ok_or_else(|| AppError::domain(format!("`{spec}` is not a JSON object")))?;
        let name = o
            .get("name")
            .and_then(|n| n.as_str())
            .ok_or_else(|| AppError::domain(format!("`{spec}` needs a `name` field")))?;
        let get = |key: &str| -> Result<Vec<S>, AppError> {
            io::vec_from_json(
                o.get(key)
                    .ok_or_else(|| AppError::domain(format!("`{spec}` needs `{key}`")))?,
                key,
            )
        };
        return RecurrenceBasis::custom(name, get("alpha")?, get("beta")?, get("gamma")?)
            .map_err(AppError::from);
    }
    Err(AppError::domain(format!("unknown basis `{spec}`")))
}

/// A degree-graded polynomial from `[c0, ...]` or `{"basis":..., "coeffs":...}`.
fn dg_poly<S: Scalar>(
    arg: &str,
    flag_basis: &Option<String>,
    nodes: &Option<String>,
) -> Result<DgPolynomial<S>, AppError> {
    let v = io::read_json_arg(arg)?;
    let (basis_name, coeffs_val) = match &v {
        Value::Array(_) => (None, v.clone()),
        Value::Object(o) => {
            let name = o.get("basis").and_then(|b| b.as_str()).map(String::from);
            let coeffs = o
                .get("coeffs")
                .ok_or_else(|| AppError::domain(format!("`{arg}` has no `coeffs`")))?;
            (name, coeffs.clone())
        }
        _ => return Err(AppError::domain(format!("`{arg}` is not a polynomial"))),
    };
    let spec = match (flag_basis, &basis_name) {
        (Some(f), Some(b)) if f != b => {
            return Err(AppError::usage(format!(
                "--basis {f} conflicts with `{b}` in {arg}"
            )))
        }
        (Some(f), _) => f.clone(),
        (None, Some(b)) => b.clone(),
        (None, None) => {
            return Err(AppError::usage(
                "no basis given: pass --basis or a polynomial object with a `basis` field",
            ))
        }
    };
    let basis = resolve_basis::<S>(&spec, nodes)?;
    let coeffs = io::vec_from_json::<S>(&coeffs_val, "coeffs")?;
    DgPolynomial::new(basis, coeffs).map_err(AppError::from)
}

fn dg_poly_to_json<S: Scalar>(p: &DgPolynomial<S>) -> String {
    let doc = json!({
        "basis": p.basis().name(),
        "coeffs": io::vec_to_json(p.coeffs()),
    });
    format!("{doc}\n")
}

fn cmd_opmatrix<S: Scalar>(a: &OpmatrixArgs) -> Result<(String, i32), AppError> {
    let basis = resolve_basis::<S>(&a.basis, &a.nodes)?;
    let disk = store::DiskCache::from_env();
    let cache: HCache<S> = HCache::new();
    disk.preload(&cache, basis.name(), a.n, a.k)?;
    let h = cache.get(&basis, a.n, a.k)?;
    disk.save(h.as_ref())?;
    let entries = match a.pad {
        Some(m) => opmatrix::pad_to_htilde(&h, m)?,
        None => h.entries().clone(),
    };
    let artifact = match a.format {
        Format::Json => {
            let mut doc = json!({
                "basis": basis.name(),
                "n": a.n,
                "k": a.k,
                "rows": io::matrix_to_json_rows(&entries),
            });
            if let Some(m) = a.pad {
                doc["pad"] = json!(m);
            }
            format!("{doc}\n")
        }
        Format::Csv => io::matrix_to_csv(
            &entries,
            &format!("H basis={} n={} k={}", basis.name(), a.n, a.k),
        ),
        Format::Coo => io::matrix_to_coo(
            &entries,
            &format!("H basis={} n={} k={}", basis.name(), a.n, a.k),
        ),
    };
    Ok((artifact, 0))
}

fn cmd_mul<S: Scalar>(a: &MulArgs) -> Result<(String, i32), AppError> {
    let xi = dg_poly::<S>(&a.a, &a.basis, &a.nodes)?;
    let psi = dg_poly::<S>(&a.b, &a.basis, &a.nodes)?;
    let prod = xi.multiply(&psi)?;
    Ok((dg_poly_to_json(&prod), 0))
}

fn cmd_pow<S: Scalar>(a: &PowArgs) -> Result<(String, i32), AppError> {
    let xi = dg_poly::<S>(&a.a, &a.basis, &a.nodes)?;
    let out = xi.power(a.p)?;
    Ok((dg_poly_to_json(&out), 0))
}

/// A Bernstein polynomial from `[c0, ...]` plus `--interval`, or
/// `{"interval": [a, b], "coeffs": [...]}`.
fn b_poly<S: Scalar>(
    arg: &str,
    interval: &Option<Vec<String>>,
) -> Result<bernstein::BernsteinPolynomial<S>, AppError> {
    let v = io::read_json_arg(arg)?;
    let flag_iv: Option<(S, S)> = match interval {
        Some(xs) => Some((parse_scalar_arg(&xs[0])?, parse_scalar_arg(&xs[1])?)),
        None => None,
    };
    let (file_iv, coeffs_val): (Option<(S, S)>, Value) = match &v {
        Value::Array(_) => (None, v.clone()),
        Value::Object(o) => {
            let iv = match o.get("interval") {
                Some(x) => {
                    let pair = io::vec_from_json::<S>(x, "interval")?;
                    if pair.len() != 2 {
                        return Err(AppError::domain("`interval` must have two entries"));
                    }
                    Some((pair[0].clone(), pair[1].clone()))
                }
                None => None,
            };
            let coeffs = o
                .get("coeffs")
                .ok_or_else(|| AppError::domain(format!("`{arg}` has no `coeffs`")))?;
            (iv, coeffs.clone())
        }
        _ => return Err(AppError::domain(format!("`{arg}` is not a polynomial"))),
    };
    let iv = match (flag_iv, file_iv) {
        (Some(f), Some(g)) => {
            if f != g {
                return Err(AppError::usage(format!(
                    "--interval conflicts with the interval in `{arg}`"
                )));
            }
            f
        }
        (Some(f), None) => f,
        (None, Some(g)) => g,
        (None, None) => {
            return Err(AppError::usage(
                "no interval given: pass --interval A B or an object with `interval`",
            ))
        }
    };
    let coeffs = io::vec_from_json::<S>(&coeffs_val, "coeffs")?;
    bernstein::BernsteinPolynomial::new(iv.0, iv.1, coeffs).map_err(AppError::from)
}

fn b_poly_to_json<S: Scalar>(p: &bernstein::BernsteinPolynomial<S>) -> String {
    let (a, b) = p.interval();
    let doc = json!({
        "interval": Value::Array(vec![io::scalar_to_json(a), io::scalar_to_json(b)]),
        "coeffs": io::vec_to_json(p.coeffs()),
    });
    format!("{doc}\n")
}

fn cmd_bmul<S: Scalar>(a: &BernsteinMulArgs) -> Result<(String, i32), AppError> {
    let p = b_poly::<S>(&a.a, &a.interval)?;
    let q = b_poly::<S>(&a.b, &a.interval)?;
    let prod = p.multiply(&q)?;
    Ok((b_poly_to_json(&prod), 0))
}

fn cmd_bpow<S: Scalar>(a: &BernsteinPowArgs) -> Result<(String, i32), AppError> {
    let p = b_poly::<S>(&a.a, &a.interval)?;
    let out = p.power(a.p)?;
    Ok((b_poly_to_json(&out), 0))
}

fn cmd_blift<S: Scalar>(a: &BliftArgs) -> Result<(String, i32), AppError> {
    let lift = bernstein::lift_matrix::<S>(a.n, a.m)?;
    let artifact = match a.format {
        Format::Json => {
            let doc = json!({
                "n": a.n,
                "m": a.m,
                "rows": io::matrix_to_json_rows(lift.matrix()),
            });
            format!("{doc}\n")
        }
        Format::Csv => io::matrix_to_csv(lift.matrix(), &format!("T n={} m={}", a.n, a.m)),
        Format::Coo => io::matrix_to_coo(lift.matrix(), &format!("T n={} m={}", a.n, a.m)),
    };
    Ok((artifact, 0))
}

/// `{"nodes": [...], "values": [...]}`, file or inline.
fn l_poly<S: Scalar>(arg: &str) -> Result<lagrange::LagrangePolynomial<S>, AppError> {
    let v = io::read_json_arg(arg)?;
    let o = v
        .as_object()
        .ok_or_else(|| AppError::domain(format!("`{arg}` must be {{nodes, values}}")))?;
    let nodes = io::vec_from_json::<S>(
        o.get("nodes")
            .ok_or_else(|| AppError::domain(format!("`{arg}` has no `nodes`")))?,
        "nodes",
    )?;
    let values = io::vec_from_json::<S>(
        o.get("values")
            .ok_or_else(|| AppError::domain(format!("`{arg}` has no `values`")))?,
        "values",
    )?;
    lagrange::LagrangePolynomial::new(nodes, values).map_err(AppError::from)
}

fn l_poly_to_json<S: Scalar>(p: &lagrange::LagrangePolynomial<S>) -> String {
    let doc = json!({
        "nodes": io::vec_to_json(p.nodes()),
        "values": io::vec_to_json(p.values()),
    });
    format!("{doc}\n")
}

fn cmd_lmul<S: Scalar>(a: &LagrangeMulArgs) -> Result<(String, i32), AppError> {
    let p = l_poly::<S>(&a.a)?;
    let q = l_poly::<S>(&a.b)?;
    let extra = a
        .extra_nodes
        .as_deref()
        .map(parse_scalar_list::<S>)
        .transpose()?;
    let prod = p.multiply(&q, extra.as_deref())?;
    Ok((l_poly_to_json(&prod), 0))
}

fn cmd_lpow<S: Scalar>(a: &LagrangePowArgs) -> Result<(String, i32), AppError> {
    let p = l_poly::<S>(&a.a)?;
    let extra = a
        .extra_nodes
        .as_deref()
        .map(parse_scalar_list::<S>)
        .transpose()?;
    let out = p.power(a.p, extra.as_deref())?;
    Ok((l_poly_to_json(&out), 0))
}

fn cmd_llift<S: Scalar>(a: &LliftArgs) -> Result<(String, i32), AppError> {
    let p = l_poly::<S>(&a.a)?;
    let extra = parse_scalar_list::<S>(&a.extra_nodes)?;
    let out = p.lift(&extra)?;
    Ok((l_poly_to_json(&out), 0))
}

fn cmd_galerkin(a: &GalerkinArgs) -> Result<(String, i32), AppError> {
    let basis = resolve_basis::<f64>(&a.basis, &None)?;
    let disk = store::DiskCache::from_env();
    let cache: HCache<f64> = HCache::new();
    if a.k > 0 {
        disk.preload(&cache, basis.name(), a.p, a.k)?;
    }
    let u = galerkin::univariate_u(&basis, a.k, a.p, &cache)?;
    if a.k > 0 {
        disk.save(cache.get(&basis, a.p, a.k)?.as_ref())?;
    }
    let header = format!("U basis={} k={} p={}", basis.name(), a.k, a.p);
    let artifact = match a.format {
        Format::Json => {
            let doc = json!({
                "basis": basis.name(),
                "k": a.k,
                "p": a.p,
                "rows": io::matrix_to_json_rows(u.matrix()),
            });
            format!("{doc}\n")
        }
        Format::Csv => io::matrix_to_csv(u.matrix(), &header),
        Format::Coo => io::matrix_to_coo(u.matrix(), &header),
    };
    Ok((artifact, 0))
}

fn parse_usize_list(arg: &str, what: &str) -> Result<Vec<usize>, AppError> {
    arg.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| AppError::usage(format!("bad {what} entry `{s}`")))
        })
        .collect()
}

fn cmd_galerkin_g(a: &GalerkinGArgs) -> Result<(String, i32), AppError> {
    let alpha = parse_usize_list(&a.alpha, "--alpha")?;
    let orders = parse_usize_list(&a.orders, "--orders")?;
    let basis = resolve_basis::<f64>(&a.basis, &None)?;
    let bases: Vec<_> = (0..alpha.len()).map(|_| basis.clone()).collect();
    let disk = store::DiskCache::from_env();
    let cache: HCache<f64> = HCache::new();
    for (&k, &p) in alpha.iter().zip(&orders) {
        if k > 0 {
            disk.preload(&cache, basis.name(), p, k)?;
        }
    }
    let g = galerkin::assemble_g(&bases, &alpha, &orders, &cache)?;
    for (&k, &p) in alpha.iter().zip(&orders) {
        if k > 0 {
            disk.save(cache.get(&basis, p, k)?.as_ref())?;
        }
    }
    let header = format!("G basis={} alpha={} orders={}", basis.name(), a.alpha, a.orders);
    let artifact = match a.format {
        Format::Json => {
            let doc = json!({
                "basis": basis.name(),
                "alpha": alpha,
                "orders": orders,
                "rows": io::matrix_to_json_rows(&g),
            });
            format!("{doc}\n")
        }
        Format::Csv => io::matrix_to_csv(&g, &header),
        Format::Coo => io::matrix_to_coo(&g, &header),
    };
    Ok((artifact, 0))
}

//! Intra-basis polynomial arithmetic driven by three-term recurrences and
//! lifting matrices.
//!
//! Polynomials expressed in a degree-graded basis (orthogonal families,
//! Newton, monomials, ...) are multiplied without leaving the basis: the
//! product of a basis element by a basis vector is encoded in an operational
//! matrix built from the recurrence coefficients alone ([`opmatrix`]), and
//! products of general polynomials reduce to row-vector/matrix products
//! ([`dgmul`]). The non-degree-graded Bernstein and Lagrange bases get the
//! same treatment through degree-elevation and node-augmentation lifting
//! matrices ([`bernstein`], [`lagrange`]). Stochastic Galerkin matrices fall
//! out as principal submatrices of the operational matrices ([`galerkin`]).
//!
//! Every construction is cross-checked by an independent brute-force layer
//! ([`oracle`]) that converts to the monomial basis, convolves, and converts
//! back — the numerically worse route the production paths avoid, kept here
//! purely as ground truth.
//!
//! All algorithms are generic over [`scalar::Scalar`]: `f64` for floating
//! point, [`scalar::Rat`] for exact rational arithmetic (bases whose
//! recurrence coefficients are rational reproduce reference matrices
//! bit-exactly).

pub mod bases;
pub mod bernstein;
pub mod dgmul;
mod error;
pub mod galerkin;
pub mod lagrange;
pub(crate) mod linalg;
pub mod opmatrix;
pub mod oracle;
pub mod scalar;

pub use bases::{DgPolynomial, RecurrenceBasis, BUILTIN_BASES};
pub use error::{Error, Result};
pub use opmatrix::{HCache, OpMatrix};
pub use scalar::{Rat, Scalar};

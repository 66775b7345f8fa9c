//! Scalar abstraction: the same algorithms run in exact rational arithmetic
//! (`Rat`) or in `f64`.
//!
//! Exact mode exists so that reference matrices with entries like `16/35`
//! come out bit-true; float mode covers bases whose recurrence coefficients
//! involve square roots (the orthonormal families).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact rational scalar.
pub type Rat = BigRational;

/// Field operations plus the handful of conversions the recurrence rules
/// need. Implemented for `f64` and [`Rat`].
pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Whether arithmetic in this mode is exact (no rounding).
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    /// The fraction `num/den`; `den` must be nonzero.
    fn ratio(num: i64, den: i64) -> Self;
    /// The fraction `num/den` with big-integer parts; `den` must be nonzero.
    fn big_ratio(num: BigInt, den: BigInt) -> Self;
    /// `sqrt(n)` for an integer `n >= 0`; `None` when the mode cannot
    /// represent it (exact mode).
    fn sqrt_int(n: u64) -> Option<Self>;
    /// Adopt a float value; `None` when the mode cannot (exact mode).
    fn from_f64(x: f64) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn to_f64(&self) -> f64;
    /// `(numerator, denominator)` in lowest terms, exact mode only.
    fn as_ratio(&self) -> Option<(BigInt, BigInt)>;
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn big_ratio(num: BigInt, den: BigInt) -> Self {
        // Falls back on bigint->f64 rounding; exact for the magnitudes the
        // binomial tables produce at practical degrees.
        num.to_f64().unwrap_or(f64::NAN) / den.to_f64().unwrap_or(f64::NAN)
    }
    fn sqrt_int(n: u64) -> Option<Self> {
        Some((n as f64).sqrt())
    }
    fn from_f64(x: f64) -> Option<Self> {
        Some(x)
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn as_ratio(&self) -> Option<(BigInt, BigInt)> {
        None
    }
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as num_traits::One>::one()
    }
    fn from_int(n: i64) -> Self {
        Rat::from_integer(BigInt::from(n))
    }
    fn ratio(num: i64, den: i64) -> Self {
        Rat::new(BigInt::from(num), BigInt::from(den))
    }
    fn big_ratio(num: BigInt, den: BigInt) -> Self {
        Rat::new(num, den)
    }
    fn sqrt_int(_n: u64) -> Option<Self> {
        None
    }
    fn from_f64(_x: f64) -> Option<Self> {
        None
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or_else(|| {
            // Ratio of huge bigints; divide in two steps to avoid inf/inf.
            let n = self.numer().to_f64().unwrap_or(f64::NAN);
            let d = self.denom().to_f64().unwrap_or(f64::NAN);
            n / d
        })
    }
    fn as_ratio(&self) -> Option<(BigInt, BigInt)> {
        Some((self.numer().clone(), self.denom().clone()))
    }
}

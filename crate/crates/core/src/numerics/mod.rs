//! Scalar arithmetic shared by every other module.
//!
//! Two families implement [`Scalar`]: floating complex numbers
//! (`num_complex::Complex<T>` for any `num_traits::Float` `T`) and exact
//! elements of a quadratic field ℚ(√d) ([`QuadraticNumber`]). Mixing the two
//! is a type error; mixing exact scalars from different fields is reported at
//! runtime as [`Error::MixedField`].

mod float;
mod quadratic;

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use quadratic::{Discriminant, QuadraticNumber};

/// Float-mode equality threshold. Exact scalars ignore it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance(f64);

impl Tolerance {
    pub const DEFAULT_EPS: f64 = 1e-9;

    pub fn new(eps: f64) -> Result<Self> {
        if eps.is_finite() && eps > 0.0 {
            Ok(Tolerance(eps))
        } else {
            Err(Error::InvalidTolerance(eps))
        }
    }

    pub fn eps(self) -> f64 {
        self.0
    }

    /// Scales the threshold, e.g. `tol.scaled(10.0)` for the 10·eps budgets
    /// used on accumulated products.
    pub fn scaled(self, factor: f64) -> Self {
        Tolerance(self.0 * factor)
    }

    /// Grid spacing of the quantized float keys: one decimal digit coarser
    /// than eps, so values equal within eps usually share a cell.
    pub fn key_grid(self) -> f64 {
        10f64.powf(self.0.log10().floor() + 1.0)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance(Self::DEFAULT_EPS)
    }
}

/// Arithmetic contract of matrix entries.
///
/// The `std::ops` operators are infallible and panic when the operands
/// belong to different exact fields; use the `checked_*` methods at API
/// boundaries, or validate with [`Scalar::check_compatible`] once and use
/// operators afterwards (matrix types do this on construction).
pub trait Scalar:
    Clone
    + fmt::Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Identifies the field a value lives in: `()` for floats, the
    /// discriminant for ℚ(√d).
    type Field: Clone + fmt::Debug + PartialEq + Send + Sync;
    /// Hashable normal form used for deduplication.
    type Key: Clone + fmt::Debug + Eq + Ord + Hash + Send + Sync;

    const EXACT: bool;

    fn field(&self) -> Self::Field;
    fn from_int(field: &Self::Field, n: i64) -> Self;
    fn from_ratio(field: &Self::Field, num: i64, den: i64) -> Result<Self>;

    fn check_compatible(&self, other: &Self) -> Result<()>;

    /// Exact: structural zero test. Float: modulus at most eps.
    fn is_zero(&self, tol: Tolerance) -> bool;
    fn inv(&self) -> Result<Self>;
    /// Complex conjugate.
    fn conj(&self) -> Self;
    /// Principal square root: nonnegative real part, and nonnegative
    /// imaginary part when the real part vanishes.
    fn sqrt_principal(&self) -> Result<Self>;
    fn to_c64(&self) -> Complex64;
    fn is_finite(&self) -> bool {
        true
    }

    /// Sign used to pick canonical representatives of `{x, -x}`:
    /// `Greater` when `x` is the canonical one, `Less` when `-x` is,
    /// `Equal` for zero.
    fn canonical_sign(&self, tol: Tolerance) -> Ordering;

    /// Compares a real value with the integer `n`; `None` when the value is
    /// not real.
    fn real_cmp(&self, n: i64, tol: Tolerance) -> Option<Ordering>;

    /// Compares the modulus with 1.
    fn modulus_cmp_one(&self) -> Ordering;

    fn key(&self, tol: Tolerance) -> Self::Key;

    /// Short human-readable rendering (`2`, `1+1i`, `1/2+1/2√-3`).
    fn compact(&self) -> String;

    fn zero_like(&self) -> Self {
        Self::from_int(&self.field(), 0)
    }

    fn one_like(&self) -> Self {
        Self::from_int(&self.field(), 1)
    }

    fn int_like(&self, n: i64) -> Self {
        Self::from_int(&self.field(), n)
    }

    fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        (self.clone() - other.clone()).is_zero(tol)
    }

    /// `x₁y₁ + x₂y₂`.
    fn dot2(x1: &Self, y1: &Self, x2: &Self, y2: &Self) -> Self {
        x1.clone() * y1.clone() + x2.clone() * y2.clone()
    }

    fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.clone() + other.clone())
    }

    fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.clone() - other.clone())
    }

    fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.clone() * other.clone())
    }

    fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.clone() * other.inv()?)
    }

    /// Compatibility-checked equality (`scalar_eq`).
    fn checked_eq(&self, other: &Self, tol: Tolerance) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.approx_eq(other, tol))
    }
}

/// Floating scalar in double precision.
pub type Float64 = Complex64;
/// Exact scalar in ℚ(√d).
pub type Exact = QuadraticNumber;

pub(crate) fn fmt_real(x: f64) -> String {
    let r = x.round();
    if (x - r).abs() < 1e-12 {
        if r == 0.0 {
            "0".to_string()
        } else {
            format!("{r}")
        }
    } else {
        format!("{}", (x * 1e12).round() / 1e12)
    }
}

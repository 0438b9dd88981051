//! Conjugation quandles of SL(2,ℂ) and PSL(2,ℂ): connected components with
//! explicit charts, transvection factorizations, and coset quandles built
//! from Kleinian groups.
//!
//! Everything is generic over a [`Scalar`]: `Complex<T>` for floating point
//! work and [`QuadraticNumber`] for exact arithmetic in `ℚ(√d)`.

pub mod components;
pub mod decompose;
pub mod error;
pub mod json;
pub mod kleinian;
pub mod moebius;
pub mod numerics;
pub mod quandle;
pub mod random;
pub mod selftest;

pub use error::{Error, Result};
pub use moebius::{IsometryClass, Point, Psl2, Sl2};
pub use numerics::{Discriminant, Exact, Float64, QuadraticNumber, Scalar, Tolerance};

pub type Sl2F64 = Sl2<Float64>;
pub type Psl2F64 = Psl2<Float64>;
pub type Sl2Exact = Sl2<Exact>;
pub type Psl2Exact = Psl2<Exact>;

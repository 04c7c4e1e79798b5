//! Number kernel: exact rationals, the quadratic fields `Q(√2)` and `Q(√5)`,
//! polynomials over either, and real cubic root solving.
//!
//! Geometry code is written against the [`Scalar`] trait so the same routine
//! runs in `f64` or in exact `QuadExt` arithmetic.

mod cubic;
mod poly;
mod quad;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

pub use cubic::{
    roots_certified, scaled_residual, solve_cubic, solve_quadratic, CubicRoots, RealRoot,
};
pub use poly::Poly;
pub use quad::{qx_arith, ArithOp, QuadExt, Radicand};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("operands live in different quadratic fields")]
    MismatchedField,
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial has degree {0}, expected a cubic")]
    NotCubic(usize),
}

/// Field operations shared by `f64` and [`QuadExt`].
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    /// Embeds an exact value; `f64` takes its nearest float.
    fn from_quad(q: &QuadExt) -> Self;
    fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError>;
    fn is_zero(&self) -> bool;
    fn to_f64(&self) -> f64;

    fn from_i64(n: i64) -> Self {
        Self::from_quad(&QuadExt::int(n))
    }

    fn phi() -> Self {
        Self::from_quad(&QuadExt::phi())
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_quad(q: &QuadExt) -> Self {
        q.to_f64()
    }
    fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        if *rhs == 0.0 {
            Err(ScalarError::DivisionByZero)
        } else {
            Ok(self / rhs)
        }
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for QuadExt {
    fn zero() -> Self {
        QuadExt::int(0)
    }
    fn one() -> Self {
        QuadExt::int(1)
    }
    fn from_quad(q: &QuadExt) -> Self {
        q.clone()
    }
    fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        QuadExt::checked_div(self, rhs)
    }
    fn is_zero(&self) -> bool {
        QuadExt::is_zero(self)
    }
    fn to_f64(&self) -> f64 {
        QuadExt::to_f64(self)
    }
}

/// Centralized numeric tolerances.
pub mod tol {
    /// Residual bound for polished polynomial roots (scaled polynomial).
    pub const ROOT_RESIDUAL: f64 = 1e-12;
    /// Bound for geometry derived from cubic roots.
    pub const GEOMETRY: f64 = 1e-9;
    /// Vertices closer than this are the same vertex.
    pub const DEDUP: f64 = 1e-9;
}

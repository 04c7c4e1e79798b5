//! Exact numbers `a + b·√D` with rational `a`, `b` and `D ∈ {2, 5}`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Rational, ScalarError};

/// Square-free radicand of a quadratic field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Radicand {
    Two,
    Five,
}

impl Radicand {
    pub fn value(self) -> i64 {
        match self {
            Radicand::Two => 2,
            Radicand::Five => 5,
        }
    }
}

/// Arithmetic operation selector for [`qx_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An element `a + b·√D` of `Q(√2)` or `Q(√5)`.
///
/// Pure rationals (`b = 0`) carry no radicand and combine with either field.
/// Values are kept canonical: the radicand tag is dropped as soon as the
/// irrational part vanishes, so derived equality is exact field equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    radicand: Option<Radicand>,
}

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, radicand: Radicand) -> Self {
        let radicand = if b.is_zero() { None } else { Some(radicand) };
        QuadExt { a, b, radicand }
    }

    pub fn rational(a: Rational) -> Self {
        QuadExt {
            a,
            b: Rational::zero(),
            radicand: None,
        }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::rational(rat(n, d))
    }

    /// `(an/ad) + (bn/bd)·√D`.
    pub fn from_parts(an: i64, ad: i64, bn: i64, bd: i64, radicand: Radicand) -> Self {
        Self::new(rat(an, ad), rat(bn, bd), radicand)
    }

    pub fn sqrt2() -> Self {
        Self::from_parts(0, 1, 1, 1, Radicand::Two)
    }

    pub fn sqrt5() -> Self {
        Self::from_parts(0, 1, 1, 1, Radicand::Five)
    }

    /// The golden ratio `(1 + √5)/2`.
    pub fn phi() -> Self {
        Self::from_parts(1, 2, 1, 2, Radicand::Five)
    }

    /// `p·Φ + q` for rationals given as `(num, den)` pairs.
    pub fn phi_linear(p: (i64, i64), q: (i64, i64)) -> Self {
        // pΦ + q = (q + p/2) + (p/2)√5
        let p = rat(p.0, p.1);
        let q = rat(q.0, q.1);
        let half = rat(1, 2);
        Self::new(&q + &p * &half, p * half, Radicand::Five)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn irrational_part(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> Option<Radicand> {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a − b·√D`.
    pub fn conj(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -self.b.clone(),
            radicand: self.radicand,
        }
    }

    /// Field norm `a² − D·b²`, always rational.
    pub fn norm(&self) -> Rational {
        let d = self.radicand.map_or(0, Radicand::value);
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(BigInt::from(d))
    }

    /// Exact sign: −1, 0 or 1.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: compare a² with D·b²
        match self.norm().cmp(&Rational::zero()) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => unreachable!("√D is irrational"),
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        match self.radicand {
            None => a,
            Some(r) => a + self.b.to_f64().unwrap_or(f64::NAN) * (r.value() as f64).sqrt(),
        }
    }

    fn joint_radicand(&self, rhs: &Self) -> Result<Option<Radicand>, ScalarError> {
        match (self.radicand, rhs.radicand) {
            (Some(l), Some(r)) if l != r => Err(ScalarError::MismatchedField),
            (l, r) => Ok(l.or(r)),
        }
    }

    fn build(a: Rational, b: Rational, radicand: Option<Radicand>) -> Self {
        match radicand {
            Some(r) => Self::new(a, b, r),
            None => Self::rational(a),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, ScalarError> {
        let r = self.joint_radicand(rhs)?;
        Ok(Self::build(&self.a + &rhs.a, &self.b + &rhs.b, r))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, ScalarError> {
        let r = self.joint_radicand(rhs)?;
        Ok(Self::build(&self.a - &rhs.a, &self.b - &rhs.b, r))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, ScalarError> {
        let r = self.joint_radicand(rhs)?;
        let d = Rational::from_integer(BigInt::from(r.map_or(0, Radicand::value)));
        let a = &self.a * &rhs.a + &self.b * &rhs.b * d;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Ok(Self::build(a, b, r))
    }

    pub fn checked_recip(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(Self::build(c.a / &n, c.b / n, self.radicand))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.joint_radicand(rhs)?;
        self.checked_mul(&rhs.checked_recip()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::int(1), |acc, _| acc * self.clone())
    }
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact field arithmetic with explicit error reporting.
pub fn qx_arith(lhs: &QuadExt, rhs: &QuadExt, op: ArithOp) -> Result<QuadExt, ScalarError> {
    match op {
        ArithOp::Add => lhs.checked_add(rhs),
        ArithOp::Sub => lhs.checked_sub(rhs),
        ArithOp::Mul => lhs.checked_mul(rhs),
        ArithOp::Div => lhs.checked_div(rhs),
    }
}

// Operator impls panic on mixed fields or division by zero; use the
// `checked_*` family when either can happen.
macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                self.$checked(&rhs)
                    .expect(concat!("QuadExt ", stringify!($method)))
            }
        }
        impl<'a> $tr<&'a QuadExt> for &'a QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &'a QuadExt) -> QuadExt {
                self.$checked(rhs)
                    .expect(concat!("QuadExt ", stringify!($method)))
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -self.a,
            b: -self.b,
            radicand: self.radicand,
        }
    }
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let diff = self.checked_sub(other).ok()?;
        Some(diff.signum().cmp(&0))
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.radicand {
            None => write!(f, "{}", self.a),
            Some(r) => {
                let d = r.value();
                if self.a.is_zero() {
                    write!(f, "{}·√{}", self.b, d)
                } else if self.b.is_negative() {
                    write!(f, "{} - {}·√{}", self.a, -self.b.clone(), d)
                } else {
                    write!(f, "{} + {}·√{}", self.a, self.b, d)
                }
            }
        }
    }
}

impl From<i64> for QuadExt {
    fn from(n: i64) -> Self {
        QuadExt::int(n)
    }
}

impl From<Rational> for QuadExt {
    fn from(r: Rational) -> Self {
        QuadExt::rational(r)
    }
}

impl One for QuadExt {
    fn one() -> Self {
        QuadExt::int(1)
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        QuadExt::int(0)
    }
    fn is_zero(&self) -> bool {
        QuadExt::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ratio_squares_to_phi_plus_one() {
        let phi = QuadExt::phi();
        let sq = &phi * &phi;
        assert_eq!(sq, QuadExt::from_parts(3, 2, 1, 2, Radicand::Five));
        assert_eq!(sq, phi + QuadExt::int(1));
    }

    #[test]
    fn conjugate_product_of_sqrt2() {
        let l = QuadExt::int(1) + QuadExt::sqrt2();
        let r = QuadExt::sqrt2() - QuadExt::int(1);
        assert_eq!(l * r, QuadExt::int(1));
    }

    #[test]
    fn cos_108_is_one_minus_sqrt5_over_four() {
        let two_phi = QuadExt::int(2) * QuadExt::phi();
        let v = QuadExt::int(-1).checked_div(&two_phi).unwrap();
        assert_eq!(v, QuadExt::from_parts(1, 4, -1, 4, Radicand::Five));
        assert!((v.to_f64() + 0.309_016_994).abs() < 1e-9);
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let err = qx_arith(&QuadExt::sqrt2(), &QuadExt::sqrt5(), ArithOp::Add).unwrap_err();
        assert_eq!(err, ScalarError::MismatchedField);
        // rationals combine with either field
        assert!(qx_arith(&QuadExt::int(3), &QuadExt::sqrt5(), ArithOp::Mul).is_ok());
    }

    #[test]
    fn division_by_zero_is_rejected() {
        let err = qx_arith(&QuadExt::phi(), &QuadExt::int(0), ArithOp::Div).unwrap_err();
        assert_eq!(err, ScalarError::DivisionByZero);
        // Φ − Φ is zero even though both operands are irrational
        let z = QuadExt::phi() - QuadExt::phi();
        assert!(z.is_zero());
        assert_eq!(z.radicand(), None);
    }

    #[test]
    fn exact_sign_near_cancellation() {
        // 99/70 − √2 > 0 and 577/408 − √2 > 0, 140/99 − √2 < 0
        let s2 = QuadExt::sqrt2();
        assert_eq!((QuadExt::frac(99, 70) - s2.clone()).signum(), 1);
        assert_eq!((QuadExt::frac(577, 408) - s2.clone()).signum(), 1);
        assert_eq!((QuadExt::frac(140, 99) - s2).signum(), -1);
        assert!(QuadExt::phi() > QuadExt::frac(1618, 1000));
        assert!(QuadExt::phi() < QuadExt::frac(1619, 1000));
    }

    #[test]
    fn phi_linear_matches_manual_form() {
        let v = QuadExt::phi_linear((37, 31), (15, 31));
        let manual = QuadExt::frac(37, 31) * QuadExt::phi() + QuadExt::frac(15, 31);
        assert_eq!(v, manual);
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(QuadExt::phi().to_string(), "1/2 + 1/2·√5");
        assert_eq!(QuadExt::phi().conj().to_string(), "1/2 - 1/2·√5");
        assert_eq!(QuadExt::frac(-3, 4).to_string(), "-3/4");
    }
}

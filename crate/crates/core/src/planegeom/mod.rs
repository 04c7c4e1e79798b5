//! Plane geometry for folding: points, lines in normal form, reflections,
//! and the two fold operations the constructions need.
//!
//! Points and lines are generic over [`Scalar`]; lines built from exact data
//! keep an unnormalized exact normal so membership and intersection tests
//! need no tolerance. Folding proper works in `f64` through [`Crease`].

mod fold;

use serde::Serialize;

use crate::scalarfield::Scalar;

pub use fold::{axiom6_reduction, fold_axiom6, fold_point_to_point, Axiom6Reduction, FoldError};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Point2<T = f64> {
    pub u: T,
    pub v: T,
}

impl<T: Scalar> Point2<T> {
    pub fn new(u: T, v: T) -> Self {
        Point2 { u, v }
    }

    pub fn origin() -> Self {
        Point2::new(T::zero(), T::zero())
    }

    pub fn to_f64(&self) -> Point2<f64> {
        Point2::new(self.u.to_f64(), self.v.to_f64())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Point2::new(
            self.u.clone() - other.u.clone(),
            self.v.clone() - other.v.clone(),
        )
    }

    pub fn dot(&self, other: &Self) -> T {
        self.u.clone() * other.u.clone() + self.v.clone() * other.v.clone()
    }
}

impl Point2<f64> {
    pub fn dist(&self, other: &Point2) -> f64 {
        (self.u - other.u).hypot(self.v - other.v)
    }

    pub fn norm(&self) -> f64 {
        self.u.hypot(self.v)
    }
}

/// The line `{p : ⟨normal, p⟩ = offset}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Line2<T = f64> {
    normal: [T; 2],
    offset: T,
}

impl<T: Scalar> Line2<T> {
    /// Stores the normal as given, without normalizing.
    pub fn exact(normal: [T; 2], offset: T) -> Self {
        Line2 { normal, offset }
    }

    /// Line through two distinct points.
    pub fn through_exact(p: &Point2<T>, q: &Point2<T>) -> Self {
        let normal = [p.v.clone() - q.v.clone(), q.u.clone() - p.u.clone()];
        let offset = normal[0].clone() * p.u.clone() + normal[1].clone() * p.v.clone();
        Line2 { normal, offset }
    }

    pub fn normal(&self) -> &[T; 2] {
        &self.normal
    }

    pub fn offset(&self) -> &T {
        &self.offset
    }

    /// `⟨n, p⟩ − d`; zero exactly on the line.
    pub fn residual(&self, p: &Point2<T>) -> T {
        self.normal[0].clone() * p.u.clone() + self.normal[1].clone() * p.v.clone()
            - self.offset.clone()
    }

    pub fn contains_exact(&self, p: &Point2<T>) -> bool {
        self.residual(p).is_zero()
    }

    pub fn to_f64(&self) -> Line2<f64> {
        Line2::new(
            [self.normal[0].to_f64(), self.normal[1].to_f64()],
            self.offset.to_f64(),
        )
    }
}

impl Line2<f64> {
    /// Line with the normal rescaled to unit length.
    ///
    /// Panics on a zero normal.
    pub fn new(normal: [f64; 2], offset: f64) -> Self {
        let len = normal[0].hypot(normal[1]);
        assert!(len > 0.0 && len.is_finite(), "line normal must be nonzero");
        Line2 {
            normal: [normal[0] / len, normal[1] / len],
            offset: offset / len,
        }
    }

    pub fn through(p: &Point2, q: &Point2) -> Self {
        let l = Line2::through_exact(p, q);
        Line2::new(l.normal, l.offset)
    }

    /// `{v = c}`.
    pub fn horizontal(c: f64) -> Self {
        Line2::new([0.0, 1.0], c)
    }

    /// `{u = c}`.
    pub fn vertical(c: f64) -> Self {
        Line2::new([1.0, 0.0], c)
    }

    pub fn signed_distance(&self, p: &Point2) -> f64 {
        self.residual(p)
    }

    pub fn distance(&self, p: &Point2) -> f64 {
        self.residual(p).abs()
    }

    pub fn direction(&self) -> [f64; 2] {
        [-self.normal[1], self.normal[0]]
    }

    /// Foot of the perpendicular from the origin.
    pub fn base_point(&self) -> Point2 {
        Point2::new(self.normal[0] * self.offset, self.normal[1] * self.offset)
    }

    pub fn is_parallel(&self, other: &Line2, tol: f64) -> bool {
        (self.normal[0] * other.normal[1] - self.normal[1] * other.normal[0]).abs() <= tol
    }

    /// Same point set within `tol`, regardless of normal orientation.
    pub fn same_line(&self, other: &Line2, tol: f64) -> bool {
        let dot = self.normal[0] * other.normal[0] + self.normal[1] * other.normal[1];
        let s = if dot < 0.0 { -1.0 } else { 1.0 };
        (self.normal[0] - s * other.normal[0]).abs() <= tol
            && (self.normal[1] - s * other.normal[1]).abs() <= tol
            && (self.offset - s * other.offset).abs() <= tol
    }
}

/// A fold line. Carries the slope–intercept form `{(0,b) + u·(1,c)}` when
/// the crease is not vertical.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Crease {
    pub line: Line2,
    pub slope_intercept: Option<(f64, f64)>,
}

impl Crease {
    pub fn from_line(line: Line2) -> Self {
        let [nu, nv] = *line.normal();
        let slope_intercept = if nv.abs() > 1e-12 {
            Some((line.offset() / nv, -nu / nv))
        } else {
            None
        };
        Crease {
            line,
            slope_intercept,
        }
    }

    /// The crease `{(0,b) + u·(1,c)}`.
    pub fn from_slope_intercept(b: f64, c: f64) -> Self {
        Crease {
            line: Line2::new([-c, 1.0], b),
            slope_intercept: Some((b, c)),
        }
    }

    pub fn reflect(&self, p: &Point2) -> Point2 {
        reflect(p, &self.line)
    }
}

/// Orthogonal reflection of `p` across `line`. Exact for exact scalars.
pub fn reflect<T: Scalar>(p: &Point2<T>, line: &Line2<T>) -> Point2<T> {
    let [nu, nv] = line.normal().clone();
    let nn = nu.clone() * nu.clone() + nv.clone() * nv.clone();
    let k = (T::from_i64(2) * line.residual(p))
        .checked_div(&nn)
        .expect("line normal is nonzero");
    Point2::new(p.u.clone() - k.clone() * nu, p.v.clone() - k * nv)
}

#[derive(Debug, Clone, PartialEq)]
pub enum Intersection<T = f64> {
    Point(Point2<T>),
    Parallel,
}

/// Unique common point of two lines, or `Parallel` when the normals are
/// exactly dependent (this includes coincident lines).
pub fn line_intersection<T: Scalar>(l1: &Line2<T>, l2: &Line2<T>) -> Intersection<T> {
    let [a1, b1] = l1.normal().clone();
    let [a2, b2] = l2.normal().clone();
    let det = a1.clone() * b2.clone() - b1.clone() * a2.clone();
    if det.is_zero() {
        return Intersection::Parallel;
    }
    let d1 = l1.offset().clone();
    let d2 = l2.offset().clone();
    let u = (d1.clone() * b2 - b1 * d2.clone())
        .checked_div(&det)
        .unwrap();
    let v = (a1 * d2 - d1 * a2).checked_div(&det).unwrap();
    Intersection::Point(Point2::new(u, v))
}

//! Point-to-point folds and the axiom-6 fold (`P` onto `g`, `Q` onto `h`).

use thiserror::Error;

use super::{reflect, Crease, Line2, Point2};
use crate::scalarfield::{solve_cubic, solve_quadratic, tol, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoldError {
    #[error("points coincide, no unique crease")]
    CoincidentPoints,
    #[error(
        "P lies on g, Q lies on h and g, h are parallel: every crease perpendicular to them works"
    )]
    ForbiddenConfiguration,
    #[error("no real crease places P on g and Q on h")]
    NoRealFold,
}

/// Threshold under which inputs count as incident or parallel.
const INCIDENCE_EPS: f64 = 1e-12;
/// Coefficients below this fraction of the largest one are dropped.
const COEFF_EPS: f64 = 1e-12;

/// Perpendicular bisector of `p` and `q`: the crease folding `p` onto `q`.
pub fn fold_point_to_point(p: &Point2, q: &Point2) -> Result<Crease, FoldError> {
    let n = [q.u - p.u, q.v - p.v];
    if n[0].hypot(n[1]) <= INCIDENCE_EPS * (1.0 + p.norm().max(q.norm())) {
        return Err(FoldError::CoincidentPoints);
    }
    let offset = (q.u * q.u + q.v * q.v - p.u * p.u - p.v * p.v) / 2.0;
    Ok(Crease::from_line(Line2::new(n, offset)))
}

/// Rigid frame in which `g` is the horizontal axis.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    origin: [f64; 2],
    e1: [f64; 2],
    e2: [f64; 2],
}

impl Frame {
    fn on_line(g: &Line2) -> Self {
        let [nu, nv] = *g.normal();
        let o = g.base_point();
        Frame {
            origin: [o.u, o.v],
            e1: [nv, -nu],
            e2: [nu, nv],
        }
    }

    fn point_to_local(&self, p: &Point2) -> Point2 {
        let d = [p.u - self.origin[0], p.v - self.origin[1]];
        Point2::new(
            d[0] * self.e1[0] + d[1] * self.e1[1],
            d[0] * self.e2[0] + d[1] * self.e2[1],
        )
    }

    fn line_to_local(&self, l: &Line2) -> Line2 {
        let [nu, nv] = *l.normal();
        let n1 = nu * self.e1[0] + nv * self.e1[1];
        let n2 = nu * self.e2[0] + nv * self.e2[1];
        let off = l.offset() - (nu * self.origin[0] + nv * self.origin[1]);
        Line2::new([n1, n2], off)
    }

    fn line_to_world(&self, l: &Line2) -> Line2 {
        let [a, b] = *l.normal();
        let n = [
            a * self.e1[0] + b * self.e2[0],
            a * self.e1[1] + b * self.e2[1],
        ];
        let off = l.offset() + n[0] * self.origin[0] + n[1] * self.origin[1];
        Line2::new(n, off)
    }
}

/// The axiom-6 problem rewritten in the frame of `g`.
///
/// Non-vertical creases `v = b + c·u` in that frame send `P` onto `g`
/// exactly when `b = −c·p_u − (c² − 1)·p_v/2`; substituting into the
/// condition for `Q` leaves `slope_poly(c) = 0`, of degree at most three.
#[derive(Debug, Clone)]
pub struct Axiom6Reduction {
    pub frame: Frame,
    pub p_local: Point2,
    pub q_local: Point2,
    pub h_local: Line2,
    /// Ascending coefficients in the slope `c`.
    pub slope_poly: Poly<f64>,
}

impl Axiom6Reduction {
    fn intercept(&self, c: f64) -> f64 {
        let p = &self.p_local;
        -c * p.u - (c * c - 1.0) * p.v / 2.0
    }
}

pub fn axiom6_reduction(p: &Point2, q: &Point2, g: &Line2, h: &Line2) -> Axiom6Reduction {
    let frame = Frame::on_line(g);
    let pl = frame.point_to_local(p);
    let ql = frame.point_to_local(q);
    let hl = frame.line_to_local(h);
    let [n1, n2] = *hl.normal();
    let d = *hl.offset();
    // b = β0 + β1 c + β2 c²
    let (b0, b1, b2) = (pl.v / 2.0, -pl.u, -pl.v / 2.0);
    let (q1, q2) = (ql.u, ql.v);
    let k0 = n1 * q1 + n2 * (2.0 * b0 - q2) - d;
    let k1 = n1 * (2.0 * q2 - 2.0 * b0) + n2 * (2.0 * b1 + 2.0 * q1);
    let k2 = n1 * (-q1 - 2.0 * b1) + n2 * (2.0 * b2 + q2) - d;
    let k3 = -2.0 * n1 * b2;
    let scale = [k0, k1, k2, k3].iter().fold(0.0f64, |m, k| m.max(k.abs()));
    let trim = |k: f64| if k.abs() <= COEFF_EPS * scale { 0.0 } else { k };
    Axiom6Reduction {
        frame,
        p_local: pl,
        q_local: ql,
        h_local: hl,
        slope_poly: Poly::new(vec![trim(k0), trim(k1), trim(k2), trim(k3)]),
    }
}

/// All creases placing `p` onto `g` and `q` onto `h` simultaneously.
///
/// Returned creases are verified against both incidence conditions and
/// deduplicated. Images may land anywhere on the infinite lines. When the
/// cubic degenerates to lower degree its real roots are all reported, plus
/// any creases perpendicular to `g`.
pub fn fold_axiom6(p: &Point2, q: &Point2, g: &Line2, h: &Line2) -> Result<Vec<Crease>, FoldError> {
    let p_on_g = g.distance(p) <= INCIDENCE_EPS * (1.0 + p.norm());
    let q_on_h = h.distance(q) <= INCIDENCE_EPS * (1.0 + q.norm());
    if p_on_g && q_on_h && g.is_parallel(h, INCIDENCE_EPS) {
        return Err(FoldError::ForbiddenConfiguration);
    }

    let red = axiom6_reduction(p, q, g, h);
    let c = red.slope_poly.coeffs();
    let slopes: Vec<f64> = match red.slope_poly.degree() {
        _ if red.slope_poly.is_zero() => return Err(FoldError::ForbiddenConfiguration),
        3 => solve_cubic(&red.slope_poly)
            .map(|r| r.values())
            .unwrap_or_default(),
        2 => solve_quadratic(c[0], c[1], c[2]),
        1 => vec![-c[0] / c[1]],
        _ => Vec::new(),
    };

    let mut local: Vec<Line2> = slopes
        .into_iter()
        .map(|s| Line2::new([-s, 1.0], red.intercept(s)))
        .collect();

    // creases perpendicular to g only work when P already lies on g
    if red.p_local.v.abs() <= INCIDENCE_EPS * (1.0 + p.norm()) {
        let [n1, n2] = *red.h_local.normal();
        if n1.abs() > INCIDENCE_EPS {
            let k = (red.h_local.offset() - n2 * red.q_local.v + n1 * red.q_local.u) / (2.0 * n1);
            local.push(Line2::vertical(k));
        }
    }

    let check_tol = tol::GEOMETRY * (1.0 + p.norm().max(q.norm()));
    let mut out: Vec<Crease> = Vec::new();
    for l in local {
        let world = red.frame.line_to_world(&l);
        let ok = g.distance(&reflect(p, &world)) <= check_tol
            && h.distance(&reflect(q, &world)) <= check_tol;
        if ok && !out.iter().any(|c| c.line.same_line(&world, tol::GEOMETRY)) {
            out.push(Crease::from_line(world));
        }
    }
    if out.is_empty() {
        return Err(FoldError::NoRealFold);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_to_point_bisectors() {
        let c = fold_point_to_point(&Point2::new(0.0, 0.0), &Point2::new(2.0, 0.0)).unwrap();
        assert!(c.line.same_line(&Line2::vertical(1.0), 1e-15));
        let c = fold_point_to_point(&Point2::new(0.0, 0.0), &Point2::new(0.0, 2.0)).unwrap();
        assert!(c.line.same_line(&Line2::horizontal(1.0), 1e-15));
        assert_eq!(
            fold_point_to_point(&Point2::new(1.0, 1.0), &Point2::new(1.0, 1.0)),
            Err(FoldError::CoincidentPoints)
        );
    }

    #[test]
    fn snub_cube_fold_has_one_crease() {
        let creases = fold_axiom6(
            &Point2::new(0.0, 0.0),
            &Point2::new(0.25, 0.0),
            &Line2::horizontal(1.0),
            &Line2::vertical(0.75),
        )
        .unwrap();
        assert_eq!(creases.len(), 1);
        let (b, c) = creases[0].slope_intercept.unwrap();
        assert!((c + 0.647798871).abs() < 1e-8, "c = {c}");
        // 2b = 1 + c²
        assert!((2.0 * b - (1.0 + c * c)).abs() < 1e-12);
        // b = (1 + c²)/2 = 1/(4x), frozen from a 30-digit root of 2x³ − 4x² + 4x − 1
        assert!((b - 0.709_821_688_803_540_3).abs() < 1e-12, "b = {b}");
    }

    #[test]
    fn snub_cube_reduction_is_the_paper_cubic() {
        let red = axiom6_reduction(
            &Point2::new(0.0, 0.0),
            &Point2::new(0.25, 0.0),
            &Line2::horizontal(1.0),
            &Line2::vertical(0.75),
        );
        let c = red.slope_poly.coeffs();
        let lead = c[3];
        let monic: Vec<f64> = c.iter().map(|k| k / lead).collect();
        for (got, want) in monic.iter().zip([0.5, 1.0, 1.0, 1.0]) {
            assert!((got - want).abs() < 1e-15);
        }
    }

    #[test]
    fn translation_symmetric_case_contains_midline() {
        let creases = fold_axiom6(
            &Point2::new(0.0, 0.0),
            &Point2::new(1.0, 0.0),
            &Line2::horizontal(2.0),
            &Line2::horizontal(2.0),
        )
        .unwrap();
        assert!(creases
            .iter()
            .any(|c| c.line.same_line(&Line2::horizontal(1.0), 1e-12)));
    }

    #[test]
    fn forbidden_configuration() {
        let g = Line2::horizontal(0.0);
        let err = fold_axiom6(&Point2::new(0.0, 0.0), &Point2::new(1.0, 0.0), &g, &g).unwrap_err();
        assert_eq!(err, FoldError::ForbiddenConfiguration);
        let h = Line2::horizontal(3.0);
        let err = fold_axiom6(&Point2::new(0.0, 0.0), &Point2::new(1.0, 3.0), &g, &h).unwrap_err();
        assert_eq!(err, FoldError::ForbiddenConfiguration);
    }

    #[test]
    fn p_on_g_admits_perpendicular_crease() {
        // P on g, Q off h: the vertical crease u = 1 sends Q=(3,1) to (-1,1) on u = -1
        let creases = fold_axiom6(
            &Point2::new(0.0, 0.0),
            &Point2::new(3.0, 1.0),
            &Line2::horizontal(0.0),
            &Line2::vertical(-1.0),
        )
        .unwrap();
        assert!(creases
            .iter()
            .any(|c| c.line.same_line(&Line2::vertical(1.0), 1e-12)));
        for c in &creases {
            assert!(Line2::horizontal(0.0).distance(&c.reflect(&Point2::new(0.0, 0.0))) < 1e-9);
            assert!(Line2::vertical(-1.0).distance(&c.reflect(&Point2::new(3.0, 1.0))) < 1e-9);
        }
    }

    #[test]
    fn unreachable_line_has_no_fold() {
        let r = fold_axiom6(
            &Point2::new(0.0, 0.0),
            &Point2::new(0.0, 0.0),
            &Line2::horizontal(1.0),
            &Line2::horizontal(-1.0),
        );
        // P = Q with distinct parallel g, h: the image would lie on both
        assert_eq!(r.unwrap_err(), FoldError::NoRealFold);
    }
}

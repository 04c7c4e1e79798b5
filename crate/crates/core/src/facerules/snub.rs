//! Parameters of the two snub solids.
//!
//! On each parent face the snub vertex near corner `V` sits at
//! `V + x·(next − V) + y·(prev − V)`. Requiring the triangles between
//! neighboring faces to be equilateral pins `(x, y)` to a root of a cubic.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{Chirality, CornerOffset, FaceVec, PentagonRotation, SnubKind};
use crate::planegeom::Point2;
use crate::scalarfield::{scaled_residual, solve_cubic, Poly, QuadExt, Rational, Scalar};

#[derive(Debug, Clone, Serialize)]
pub struct SnubParams {
    pub kind: SnubKind,
    pub x: f64,
    pub y: f64,
    #[serde(skip)]
    pub cubic: Poly<QuadExt>,
    /// Absolute residual of each defining relation at `(x, y)`.
    pub residuals: BTreeMap<String, f64>,
}

impl SnubParams {
    pub fn corner_offset(&self, chirality: Chirality) -> CornerOffset {
        match chirality {
            Chirality::Right => CornerOffset {
                along_next: self.x,
                along_prev: self.y,
            },
            Chirality::Left => CornerOffset {
                along_next: self.y,
                along_prev: self.x,
            },
        }
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.values().fold(0.0, |m, r| m.max(*r))
    }
}

pub fn snub_cube_cubic() -> Poly<QuadExt> {
    Poly::new([-1, 4, -4, 2].into_iter().map(QuadExt::int).collect())
}

/// `(25Φ − 41)x³ + (30 − 17Φ)x² − 5x + Φ`.
pub fn snub_dodec_cubic() -> Poly<QuadExt> {
    Poly::new(vec![
        QuadExt::phi(),
        QuadExt::int(-5),
        QuadExt::phi_linear((-17, 1), (30, 1)),
        QuadExt::phi_linear((25, 1), (-41, 1)),
    ])
}

fn the_root_in_unit_interval(p: &Poly<QuadExt>) -> f64 {
    let roots = solve_cubic(&p.to_f64()).expect("fixed cubic has degree three");
    let inside: Vec<f64> = roots
        .values()
        .into_iter()
        .filter(|x| *x > 0.0 && *x < 1.0)
        .collect();
    assert_eq!(
        inside.len(),
        1,
        "expected one root in (0, 1), got {inside:?}"
    );
    inside[0]
}

pub fn snub_cube_params() -> SnubParams {
    let cubic = snub_cube_cubic();
    let x = the_root_in_unit_interval(&cubic);
    let y = x - x * x;
    let mut residuals = BTreeMap::new();
    residuals.insert("cubic".into(), scaled_residual(&cubic.to_f64(), x));
    residuals.insert(
        "edge_balance".into(),
        (1.0 - 2.0 * x - 2.0 * y + 2.0 * x * y).abs(),
    );
    residuals.insert("y_relation".into(), (x * x - x + y).abs());
    SnubParams {
        kind: SnubKind::Cube,
        x,
        y,
        cubic,
        residuals,
    }
}

pub fn snub_dodec_params() -> SnubParams {
    let phi = f64::phi();
    let cubic = snub_dodec_cubic();
    let x = the_root_in_unit_interval(&cubic);
    let num = (4.0 - 2.0 * phi) * x * x + (phi - 5.0) * x + 1.0;
    let den = (4.0 * phi - 7.0) * x + 1.0 - phi;
    let y = num / den;

    let conic_a = y * y - (-phi * x * x + phi * x - phi * y + x * y);
    let conic_b = (phi - 2.0) * y * y
        - ((3.0 - phi) * x * x - 4.0 * x + 1.0 + (5.0 - 3.0 * phi) * x * y + 2.0 * (phi - 1.0) * y);
    let sextic = snub_dodec_sextic().to_f64().scaled_unit().eval(&x);

    let mut residuals = BTreeMap::new();
    residuals.insert("cubic".into(), scaled_residual(&cubic.to_f64(), x));
    residuals.insert("conic_a".into(), conic_a.abs());
    residuals.insert("conic_b".into(), conic_b.abs());
    residuals.insert("y_formula".into(), (y * den - num).abs());
    residuals.insert("sextic".into(), sextic.abs());
    SnubParams {
        kind: SnubKind::Dodecahedron,
        x,
        y,
        cubic,
        residuals,
    }
}

/// The cubic times its Galois conjugate, made monic. Its coefficients are
/// rational, so `x` is algebraic of degree six over the rationals.
pub fn snub_dodec_sextic() -> Poly<QuadExt> {
    let c = snub_dodec_cubic();
    let prod = &c * &c.conj();
    let lead = prod.leading().expect("nonzero").clone();
    prod.map(|k| k / &lead)
}

/// Values of the snub-cube cubic at the rational root candidates `±1, ±1/2`.
pub fn snub_cube_rational_candidates() -> Vec<(Rational, QuadExt)> {
    let p = snub_cube_cubic();
    [(1, 1), (-1, 1), (1, 2), (-1, 2)]
        .into_iter()
        .map(|(n, d)| {
            let q = QuadExt::frac(n, d);
            (q.rational_part().clone(), p.eval(&q))
        })
        .collect()
}

/// `(r1, r2)`: differences of the squared edge lengths of the snub
/// triangle `A1 A2 B1` at the given parameters, both zero at the solution.
pub fn equilateral_residuals(kind: SnubKind, x: f64, y: f64) -> (f64, f64) {
    let (a1a2, a1b1, a2b1) = match kind {
        SnubKind::Cube => (
            (x - y).powi(2) + (1.0 - x - y).powi(2),
            (x - y).powi(2) + x * x + y * y,
            (1.0 - 2.0 * x).powi(2) + 2.0 * y * y,
        ),
        SnubKind::Dodecahedron => {
            let phi = f64::phi();
            let k = 3.0 - phi;
            (
                k * x * x + k * y * y + (4.0 - 3.0 * phi) * x * y - k * x - k * y + 1.0,
                (1.0 + phi) * (x * x + y * y - x * y),
                4.0 * x * x + 3.0 * y * y + 4.0 * (1.0 - phi) * x * y - 4.0 * x
                    + 2.0 * (phi - 1.0) * y
                    + 1.0,
            )
        }
    };
    ((a1a2 - a2b1).abs(), (a1b1 - a2b1).abs())
}

/// Snub points on the unit square `(0,0), (1,0), (1,1), (0,1)`, one per
/// corner in that order.
pub fn snub_cube_face_square(x: f64, y: f64, chirality: Chirality) -> [Point2; 4] {
    let (s, t) = match chirality {
        Chirality::Right => (x, y),
        Chirality::Left => (y, x),
    };
    [
        Point2::new(s, t),
        Point2::new(1.0 - t, s),
        Point2::new(1.0 - s, 1.0 - t),
        Point2::new(t, 1.0 - s),
    ]
}

/// Snub points on a pentagon face in oblique coordinates, starting at
/// corner `O` and stepping with the face rotation `O → R → S → T → P`.
pub fn snub_dodec_face_pentagon(x: f64, y: f64, chirality: Chirality) -> [FaceVec<f64>; 5] {
    let first = match chirality {
        Chirality::Right => FaceVec::new(x, y),
        Chirality::Left => FaceVec::new(y, x),
    };
    let rot = PentagonRotation::get();
    let mut out = [
        first.clone(),
        first.clone(),
        first.clone(),
        first.clone(),
        first,
    ];
    for i in 1..5 {
        out[i] = rot.apply(&out[i - 1]);
    }
    out
}

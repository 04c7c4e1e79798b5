use super::{point_vals, Check, FoldTrace, VerifyError};
use crate::facerules::{snub_cube_face_square, snub_cube_params, Chirality};
use crate::planegeom::{axiom6_reduction, fold_axiom6, fold_point_to_point, Line2, Point2};

/// Folds `P = (0,0)` onto `g: v = 1` and `Q = (1/4, 0)` onto `h: u = 3/4`,
/// then folds `P′` onto `h` along a crease perpendicular to `g`; the image
/// of `Q′` is the snub vertex `A₁`.
pub fn snub_cube_fold_trace() -> Result<FoldTrace, VerifyError> {
    let params = snub_cube_params();
    let (x, y) = (params.x, params.y);
    let p = Point2::new(0.0, 0.0);
    let q = Point2::new(0.25, 0.0);
    let g = Line2::horizontal(1.0);
    let h = Line2::vertical(0.75);

    let creases = fold_axiom6(&p, &q, &g, &h)?;
    let crease = creases[0].clone();
    let mut t = FoldTrace::new("snub-cube", crease.clone());
    t.input("P", point_vals(&p));
    t.input("Q", point_vals(&q));
    t.input("g", [0.0, 1.0, 1.0]);
    t.input("h", [1.0, 0.0, 0.75]);
    t.input("x,y", [x, y]);
    t.check("unique crease", Check::exact(creases.len() == 1));

    let p1 = crease.reflect(&p);
    let q1 = crease.reflect(&q);
    t.check(
        "|P'(1,1)| - x",
        Check::at_most((p1.dist(&Point2::new(1.0, 1.0)) - x).abs(), 1e-10),
    );
    t.check(
        "dist(Q', g) - y",
        Check::at_most((g.distance(&q1) - y).abs(), 1e-10),
    );
    t.check("P' on g", Check::at_most(g.distance(&p1), 1e-12));
    t.check("Q' on h", Check::at_most(h.distance(&q1), 1e-12));

    match crease.slope_intercept {
        Some((b, c)) => {
            t.check("c - (x - 1)", Check::at_most((c - (x - 1.0)).abs(), 1e-10));
            t.check(
                "2b - (1 + c^2)",
                Check::at_most((2.0 * b - (1.0 + c * c)).abs(), 1e-12),
            );
        }
        None => t.check("crease not vertical", Check::exact(false)),
    }

    // the reduction, made monic, is c³ + c² + c + 1/2
    let red = axiom6_reduction(&p, &q, &g, &h);
    let k = red.slope_poly.coeffs();
    let dev = if k.len() == 4 {
        k.iter()
            .zip([0.5, 1.0, 1.0, 1.0])
            .map(|(a, b)| (a / k[3] - b).abs())
            .fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    t.check("slope cubic coefficients", Check::at_most(dev, 1e-12));

    let corner = Point2::new(0.75, 1.0);
    let last = fold_point_to_point(&p1, &corner)?;
    let a1 = last.reflect(&q1);
    let expected = snub_cube_face_square(x, y, Chirality::Right)[2].clone();
    t.check(
        "final fold keeps g",
        Check::at_most(last.line.normal()[1].abs(), 1e-12),
    );
    t.check(
        "A1 matches face square",
        Check::at_most(a1.dist(&expected), 1e-10),
    );

    t.images.insert("P'".into(), p1);
    t.images.insert("Q'".into(), q1);
    t.images.insert("A1".into(), a1);
    t.into_result()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_passes() {
        let t = snub_cube_fold_trace().unwrap();
        let p1 = &t.images["P'"];
        assert!((p1.u - 0.647_798_871_261_042).abs() < 1e-12 && (p1.v - 1.0).abs() < 1e-12);
        let q1 = &t.images["Q'"];
        assert!((q1.u - 0.75).abs() < 1e-12 && (q1.v - 0.771_844_506_346_038).abs() < 1e-12);
        assert!(t.checks.len() >= 10);
    }
}

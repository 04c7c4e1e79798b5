//! Place a point on a line and another point on another line with one
//! crease. Up to three creases exist.

use archifold::planegeom::{axiom6_reduction, fold_axiom6, Line2, Point2};

fn main() {
    let p = Point2::new(0.0, 0.0);
    let q = Point2::new(0.25, 0.0);
    let g = Line2::horizontal(1.0);
    let h = Line2::vertical(0.75);

    let red = axiom6_reduction(&p, &q, &g, &h);
    println!("slope cubic coefficients: {:?}", red.slope_poly.coeffs());

    for c in fold_axiom6(&p, &q, &g, &h).expect("fold exists") {
        let (pp, qq) = (c.reflect(&p), c.reflect(&q));
        println!(
            "crease {:?}: P' = ({:.6}, {:.6}), Q' = ({:.6}, {:.6})",
            c.slope_intercept, pp.u, pp.v, qq.u, qq.v
        );
    }

    // P and Q on opposite sides of g: three creases
    let p = Point2::new(0.0, 0.5);
    let q = Point2::new(-2.0, -0.5);
    let g = Line2::horizontal(1.0);
    let h = Line2::vertical(-1.0);
    let creases = fold_axiom6(&p, &q, &g, &h).expect("fold exists");
    println!("second instance: {} creases", creases.len());
    for c in creases {
        println!("  {:?}", c.slope_intercept);
    }
}

use super::{point_vals, Check, FoldTrace, VerifyError};
use crate::facerules::{
    gram_inner, pentagon_corners, snub_dodec_face_pentagon, snub_dodec_params, Chirality, FaceVec,
    PentagonRotation,
};
use crate::planegeom::{
    fold_axiom6, fold_point_to_point, line_intersection, reflect, Crease, Intersection, Line2,
    Point2,
};
use crate::scalarfield::{QuadExt, Scalar};

/// One target point `G_i` with its line `g_i`, both exact.
///
/// `line` is written in oblique coordinates: a [`Point2`] `(p, r)` stands
/// for `p·OP + r·OR`, and the normal is the Gram functional of the
/// line's perpendicular direction.
#[derive(Debug, Clone, PartialEq)]
pub struct GLine {
    pub index: usize,
    pub point: FaceVec<QuadExt>,
    pub line: Line2<QuadExt>,
    /// Perpendicular direction of the line, oblique.
    pub direction: FaceVec<QuadExt>,
    pub foot: FaceVec<QuadExt>,
}

impl GLine {
    pub fn point_cartesian(&self) -> Point2 {
        self.point.to_cartesian()
    }

    pub fn line_cartesian(&self) -> Line2 {
        let w = self.direction.to_cartesian();
        let f = self.foot.to_cartesian();
        Line2::new([w.u, w.v], w.u * f.u + w.v * f.v)
    }
}

fn fv(p: QuadExt, r: QuadExt) -> FaceVec<QuadExt> {
    FaceVec::new(p, r)
}

const O: usize = 0;
const P: usize = 1;
const T: usize = 2;
const S: usize = 3;
const R: usize = 4;

/// `G_i` coordinates as `(Φ-part, rational part)` numerators over 31, for
/// `OP` then `OR`.
const G_DATA: [[(i64, i64); 2]; 5] = [
    [(37, 15), (22, 24)],
    [(42, 12), (29, 26)],
    [(47, 9), (17, 27)],
    [(46, 22), (27, 21)],
    [(49, 14), (26, 34)],
];

/// `(base, from, to, Φ-part, rational part)`.
type LineSpec = (usize, usize, usize, (i64, i64), (i64, i64));

/// `g_i` is perpendicular to `from → to`, meeting it at `base` plus the
/// given distance in that direction. For `g₂…g₅` the foot lies beyond the
/// named corner, away from the segment; those sides are the ones that put
/// the folded images on the lines.
const G_LINES: [LineSpec; 5] = [
    (P, P, R, (12, 31), (-1, 31)),
    (O, P, O, (33, 62), (18, 31)),
    (P, S, P, (11, 62), (37, 31)),
    (O, S, O, (39, 31), (20, 31)),
    (O, T, O, (38, 31), (35, 62)),
];

pub fn g_points_and_lines() -> Vec<GLine> {
    let corners = pentagon_corners::<QuadExt>();
    let cos = crate::facerules::cos108();
    (0..5)
        .map(|i| {
            let [(pa, pb), (ra, rb)] = G_DATA[i];
            let point = fv(
                QuadExt::phi_linear((pa, 31), (pb, 31)),
                QuadExt::phi_linear((ra, 31), (rb, 31)),
            );
            let (base, from, to, dphi, drat) = G_LINES[i];
            let w = corners[to].sub(&corners[from]);
            // edges have length 1, diagonals Φ
            let len = if w.norm_sq() == QuadExt::int(1) {
                QuadExt::int(1)
            } else {
                QuadExt::phi()
            };
            let dist = QuadExt::phi_linear(dphi, drat);
            let foot = corners[base].add(&w.scale(&(dist / len)));
            let normal = [&w.p + &(&cos * &w.r), &w.r + &(&cos * &w.p)];
            let offset = gram_inner(&foot, &w);
            GLine {
                index: i + 1,
                point,
                line: Line2::exact(normal, offset),
                direction: w,
                foot,
            }
        })
        .collect()
}

fn face_points(x: f64, y: f64) -> (FaceVec, FaceVec) {
    (FaceVec::new(x, 0.0), FaceVec::new(y / f64::phi(), y))
}

/// The crease through `X` at `x` along `OP` and `Y` at `y` along `OS`.
pub fn snub_dodec_crease() -> Crease {
    let params = snub_dodec_params();
    let (x, y) = face_points(params.x, params.y);
    Crease::from_line(Line2::through(&x.to_cartesian(), &y.to_cartesian()))
}

/// Largest coefficient gap between two lines, ignoring normal sign.
fn line_gap(a: &Line2, b: &Line2) -> f64 {
    let s = if a.normal()[0] * b.normal()[0] + a.normal()[1] * b.normal()[1] < 0.0 {
        -1.0
    } else {
        1.0
    };
    (a.normal()[0] - s * b.normal()[0])
        .abs()
        .max((a.normal()[1] - s * b.normal()[1]).abs())
        .max((a.offset() - s * b.offset()).abs())
}

/// Index permutation `i ↦ j` with `rotate(G_i) = G_j` about the centroid,
/// when the rotation maps the set onto itself.
fn rotation_permutation(pts: &[FaceVec<QuadExt>]) -> Option<Vec<usize>> {
    let n = QuadExt::int(pts.len() as i64);
    let sum = pts.iter().skip(1).fold(pts[0].clone(), |acc, p| acc.add(p));
    let center = FaceVec::new(&sum.p / &n, &sum.r / &n);
    let rot = PentagonRotation::get();
    pts.iter()
        .map(|p| {
            let img = rot.apply_about(p, &center);
            pts.iter().position(|q| *q == img)
        })
        .collect()
}

fn is_single_cycle(perm: &[usize]) -> bool {
    let mut i = 0;
    for step in 1..=perm.len() {
        i = perm[i];
        if i == 0 {
            return step == perm.len();
        }
    }
    false
}

pub fn verify_dodec_fold() -> Result<FoldTrace, VerifyError> {
    let params = snub_dodec_params();
    let crease = snub_dodec_crease();
    let gs = g_points_and_lines();
    let mut t = FoldTrace::new("snub-dodecahedron", crease.clone());
    t.input("x,y", [params.x, params.y]);

    let mut images = Vec::new();
    for g in &gs {
        let gp = g.point_cartesian();
        let line = g.line_cartesian();
        let img = crease.reflect(&gp);
        t.input(&format!("G{}", g.index), point_vals(&gp));
        t.input(
            &format!("g{}", g.index),
            [line.normal()[0], line.normal()[1], *line.offset()],
        );
        t.check(
            format!("G'{} on g{}", g.index, g.index),
            Check::at_most(line.distance(&img), 1e-9),
        );
        t.images.insert(format!("G'{}", g.index), img.clone());
        images.push(img);
    }

    let pts: Vec<FaceVec<QuadExt>> = gs.iter().map(|g| g.point.clone()).collect();
    let perm = rotation_permutation(&pts);
    let sides_equal = perm.as_ref().is_some_and(|p| {
        let side = |i: usize| pts[p[i]].sub(&pts[i]).norm_sq();
        (1..5).all(|i| side(i) == side(0))
    });
    t.check(
        "G regular pentagon",
        Check::exact(perm.as_ref().is_some_and(|p| is_single_cycle(p)) && sides_equal),
    );

    let common = match line_intersection(&gs[0].line, &gs[1].line) {
        Intersection::Point(z) => Some(z),
        Intersection::Parallel => None,
    };
    let concurrent = common
        .as_ref()
        .is_some_and(|z| gs.iter().all(|g| g.line.contains_exact(z)));
    t.check("g1..g5 concurrent", Check::exact(concurrent));
    if let Some(z) = common {
        let zc = FaceVec::new(z.u.to_f64(), z.v.to_f64()).to_cartesian();
        t.check(
            "common point != G'5",
            Check::above(zc.dist(&images[4]), 0.0),
        );
        t.images.insert("common".into(), zc);
    }

    let mut worst = 0.0f64;
    for i in 0..5 {
        for j in i + 1..5 {
            let (a, b) = (&gs[i], &gs[j]);
            let found = fold_axiom6(
                &a.point_cartesian(),
                &b.point_cartesian(),
                &a.line_cartesian(),
                &b.line_cartesian(),
            )?;
            let gap = found
                .iter()
                .map(|c| line_gap(&c.line, &crease.line))
                .fold(f64::INFINITY, f64::min);
            worst = worst.max(gap);
        }
    }
    t.check("any two pairs give f", Check::at_most(worst, 1e-8));
    t.into_result()
}

/// Folds `X` onto `O`; the same fold carries `Y` to `A₁ = x·OP + y·OR`.
pub fn final_fold_to_a1() -> Result<FoldTrace, VerifyError> {
    let params = snub_dodec_params();
    let (x, y) = (params.x, params.y);
    let (xv, yv) = face_points(x, y);
    let (xc, yc) = (xv.to_cartesian(), yv.to_cartesian());
    let origin = Point2::new(0.0, 0.0);
    let ell = fold_point_to_point(&xc, &origin)?;
    let mut t = FoldTrace::new("snub-dodecahedron-final", ell.clone());
    t.input("X", point_vals(&xc));
    t.input("Y", point_vals(&yc));

    let a1v = FaceVec::new(x, y);
    let a1 = a1v.to_cartesian();
    let x_img = reflect(&xc, &ell.line);
    let y_img = reflect(&yc, &ell.line);
    t.check("X -> O", Check::at_most(x_img.dist(&origin), 1e-12));
    t.check("Y -> A1", Check::at_most(y_img.dist(&a1), 1e-9));

    let gram = gram_inner(&a1v, &a1v);
    let closed = x * x + y * y - x * y / f64::phi();
    t.check(
        "|OA1|^2 closed form",
        Check::at_most((gram - closed).abs(), 1e-12),
    );
    t.check(
        "|OA1|^2 cartesian",
        Check::at_most((gram - a1.norm().powi(2)).abs(), 1e-12),
    );
    let lifted = snub_dodec_face_pentagon(x, y, Chirality::Right)[0].to_cartesian();
    t.check(
        "A1 matches face pentagon",
        Check::at_most(lifted.dist(&a1), 1e-12),
    );

    t.images.insert("X'".into(), x_img);
    t.images.insert("A1".into(), y_img);
    t.into_result()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oblique_point(v: &FaceVec<QuadExt>) -> Point2<QuadExt> {
        Point2::new(v.p.clone(), v.r.clone())
    }

    #[test]
    fn first_target_point() {
        let g = &g_points_and_lines()[0];
        assert_eq!(g.point.p, QuadExt::phi_linear((37, 31), (15, 31)));
        assert_eq!(g.point.r, QuadExt::phi_linear((22, 31), (24, 31)));
    }

    #[test]
    fn g4_foot_is_at_the_stated_distance_from_o() {
        let g = &g_points_and_lines()[3];
        let d = QuadExt::phi_linear((39, 31), (20, 31));
        assert_eq!(g.foot.norm_sq(), &d * &d);
        // the foot lies on the line
        assert!(g.line.contains_exact(&oblique_point(&g.foot)));
    }

    #[test]
    fn images_match_the_figure() {
        // figure coordinates are 4x scale and rotated half a turn
        let t = verify_dodec_fold().unwrap();
        let want = [
            (4.206, 7.252),
            (5.767, 7.755),
            (3.246, 8.582),
            (4.213, 9.906),
            (5.772, 9.395),
        ];
        for (i, (u, v)) in want.into_iter().enumerate() {
            let p = &t.images[&format!("G'{}", i + 1)];
            assert!(
                (-4.0 * p.u - u).abs() < 2e-3 && (-4.0 * p.v - v).abs() < 2e-3,
                "{i}: {p:?}"
            );
        }
    }

    #[test]
    fn traces_pass() {
        let t = verify_dodec_fold().unwrap();
        assert!(t.passed());
        let z = &t.images["common"];
        let g5 = &t.images["G'5"];
        assert!(z.dist(g5) < 1e-2);
        assert!(final_fold_to_a1().unwrap().passed());
    }

    #[test]
    fn crease_passes_through_x_and_y() {
        let p = snub_dodec_params();
        let f = snub_dodec_crease();
        let (x, y) = face_points(p.x, p.y);
        assert!(f.line.distance(&x.to_cartesian()) < 1e-12);
        assert!(f.line.distance(&y.to_cartesian()) < 1e-12);
        assert!((y.to_cartesian().norm() - p.y).abs() < 1e-15);
    }

    #[test]
    fn cycle_detection() {
        assert!(is_single_cycle(&[1, 2, 3, 4, 0]));
        assert!(!is_single_cycle(&[1, 0, 3, 4, 2]));
    }
}

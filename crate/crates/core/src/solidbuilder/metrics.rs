use serde::Serialize;

use super::vec3;
use super::Polyhedron;
use crate::facerules::SnubKind;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricReport {
    pub edge_min: f64,
    pub edge_max: f64,
    /// Twice the largest vertex norm.
    pub circumdiameter: f64,
    /// Largest vertex norm minus the smallest.
    pub vertex_norm_spread: f64,
    pub face_regularity_error: f64,
    /// Circumsphere certificate, snub cube only.
    pub wm_residual: Option<f64>,
}

impl MetricReport {
    pub fn edge_spread(&self) -> f64 {
        self.edge_max / self.edge_min - 1.0
    }
}

/// `r⁶ − 10r⁴ + 22r² − 14`, which vanishes at circumdiameter / edge of the
/// snub cube.
pub fn wm_polynomial(r: f64) -> f64 {
    let t = r * r;
    ((t - 10.0) * t + 22.0) * t - 14.0
}

fn face_error(poly: &Polyhedron, face: usize) -> (f64, f64) {
    let pts = poly.face_points(face);
    let c = vec3::centroid(pts.iter().copied());
    let spread = |vals: &mut dyn Iterator<Item = f64>| {
        let (lo, hi) = vals.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| {
            (lo.min(x), hi.max(x))
        });
        hi - lo
    };
    let n = pts.len();
    let sides = spread(&mut (0..n).map(|i| vec3::dist(pts[i], pts[(i + 1) % n])));
    let radii = spread(&mut pts.iter().map(|p| vec3::dist(*p, c)));
    (sides, radii)
}

pub fn metrics(poly: &Polyhedron) -> MetricReport {
    let (edge_min, edge_max) = poly
        .edges()
        .into_iter()
        .map(|(a, b)| vec3::dist(poly.vertices[a], poly.vertices[b]))
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), l| {
            (lo.min(l), hi.max(l))
        });
    let (rmin, rmax) = poly
        .vertices
        .iter()
        .map(|p| vec3::norm(*p))
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), r| {
            (lo.min(r), hi.max(r))
        });
    let face_regularity_error = (0..poly.faces.len())
        .map(|f| {
            let (s, r) = face_error(poly, f);
            s.max(r)
        })
        .fold(0.0, f64::max);
    let circumdiameter = 2.0 * rmax;
    let wm_residual = (poly.solid.snub() == Some(SnubKind::Cube))
        .then(|| wm_polynomial(circumdiameter / (0.5 * (edge_min + edge_max))).abs());
    MetricReport {
        edge_min,
        edge_max,
        circumdiameter,
        vertex_norm_spread: rmax - rmin,
        face_regularity_error,
        wm_residual,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FaceDefect {
    pub face: usize,
    pub side_spread: f64,
    pub radius_spread: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegularityReport {
    pub tol: f64,
    pub max_error: f64,
    pub defects: Vec<FaceDefect>,
}

impl RegularityReport {
    pub fn pass(&self) -> bool {
        self.defects.is_empty()
    }
}

/// Flags faces whose sides or circumradii differ by more than `tol`.
pub fn verify_regular_faces(poly: &Polyhedron, tol: f64) -> RegularityReport {
    let mut max_error = 0.0f64;
    let mut defects = Vec::new();
    for face in 0..poly.faces.len() {
        let (side_spread, radius_spread) = face_error(poly, face);
        max_error = max_error.max(side_spread).max(radius_spread);
        if side_spread > tol || radius_spread > tol {
            defects.push(FaceDefect {
                face,
                side_spread,
                radius_spread,
            });
        }
    }
    RegularityReport {
        tol,
        max_error,
        defects,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facerules::{ArchimedeanKind, Chirality, PlatonicKind};
    use crate::solidbuilder::{build_archimedean, platonic};

    #[test]
    fn platonic_faces_are_regular() {
        for &k in PlatonicKind::ALL {
            let r = verify_regular_faces(&platonic(k), 1e-12);
            assert!(r.pass(), "{k}: {}", r.max_error);
        }
    }

    #[test]
    fn snub_cube_certificate() {
        let p = build_archimedean(ArchimedeanKind::SnubCube, Some(Chirality::Right)).unwrap();
        let m = metrics(&p);
        assert!(m.edge_spread() < 1e-9, "{m:?}");
        assert!(m.wm_residual.unwrap() < 1e-6, "{m:?}");
    }

    #[test]
    fn certificate_only_for_the_snub_cube() {
        let p =
            build_archimedean(ArchimedeanKind::SnubDodecahedron, Some(Chirality::Right)).unwrap();
        assert_eq!(metrics(&p).wm_residual, None);
    }

    #[test]
    fn distorted_face_is_flagged() {
        let mut p = platonic(PlatonicKind::Cube);
        p.vertices[0][0] *= 1.01;
        let r = verify_regular_faces(&p, 1e-9);
        assert!(!r.pass());
        assert_eq!(r.defects.len(), 3);
    }
}

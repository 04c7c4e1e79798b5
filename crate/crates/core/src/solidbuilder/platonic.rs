use crate::facerules::PlatonicKind;
use crate::scalarfield::Scalar;

use super::vec3::{self, Vec3};

fn cyclic(p: Vec3) -> [Vec3; 3] {
    [p, [p[2], p[0], p[1]], [p[1], p[2], p[0]]]
}

fn signs(p: Vec3) -> Vec<Vec3> {
    let mut out: Vec<Vec3> = Vec::new();
    for sx in [1.0, -1.0] {
        for sy in [1.0, -1.0] {
            for sz in [1.0, -1.0] {
                let q = [p[0] * sx, p[1] * sy, p[2] * sz];
                if !out.contains(&q) {
                    out.push(q);
                }
            }
        }
    }
    out
}

fn cube_corners() -> Vec<Vec3> {
    signs([1.0, 1.0, 1.0])
}

// `swap` picks the other of the two cyclic orientations; a solid and its
// face normals need opposite ones
fn icosahedron_dirs(swap: bool) -> Vec<Vec3> {
    let (a, b) = if swap {
        (f64::phi(), 1.0)
    } else {
        (1.0, f64::phi())
    };
    signs([0.0, a, b]).into_iter().flat_map(cyclic).collect()
}

fn dodecahedron_dirs(swap: bool) -> Vec<Vec3> {
    let phi = f64::phi();
    let (a, b) = if swap {
        (phi, 1.0 / phi)
    } else {
        (1.0 / phi, phi)
    };
    let mut v = cube_corners();
    v.extend(signs([0.0, a, b]).into_iter().flat_map(cyclic));
    v
}

fn axes() -> Vec<Vec3> {
    cyclic([1.0, 0.0, 0.0])
        .into_iter()
        .flat_map(|a| [a, vec3::scale(a, -1.0)])
        .collect()
}

/// Raw vertices and the outward face normals (the dual's vertex directions).
fn raw(kind: PlatonicKind) -> (Vec<Vec3>, Vec<Vec3>) {
    match kind {
        PlatonicKind::Tetrahedron => {
            let v: Vec<Vec3> = cube_corners()
                .into_iter()
                .filter(|p| p[0] * p[1] * p[2] > 0.0)
                .collect();
            let n = v.iter().map(|p| vec3::scale(*p, -1.0)).collect();
            (v, n)
        }
        PlatonicKind::Cube => (cube_corners(), axes()),
        PlatonicKind::Octahedron => (axes(), cube_corners()),
        PlatonicKind::Dodecahedron => (dodecahedron_dirs(false), icosahedron_dirs(true)),
        PlatonicKind::Icosahedron => (icosahedron_dirs(false), dodecahedron_dirs(true)),
    }
}

/// Unit-edge vertices centered at the origin, and faces counterclockwise
/// seen from outside.
pub(super) fn platonic_mesh(kind: PlatonicKind) -> (Vec<Vec3>, Vec<Vec<usize>>) {
    let (verts, normals) = raw(kind);
    let mut edge = f64::INFINITY;
    for (i, a) in verts.iter().enumerate() {
        for b in &verts[i + 1..] {
            edge = edge.min(vec3::dist(*a, *b));
        }
    }
    let verts: Vec<Vec3> = verts
        .into_iter()
        .map(|p| vec3::scale(p, 1.0 / edge))
        .collect();

    let faces = normals
        .iter()
        .map(|n| {
            let top = verts
                .iter()
                .map(|p| vec3::dot(*p, *n))
                .fold(f64::NEG_INFINITY, f64::max);
            let mut idx: Vec<usize> = (0..verts.len())
                .filter(|&i| vec3::dot(verts[i], *n) > top - 1e-9)
                .collect();
            let c = vec3::centroid(idx.iter().map(|&i| verts[i]));
            let u = vec3::sub(verts[idx[0]], c);
            let w = vec3::cross(*n, u);
            let angle = |i: usize| {
                let d = vec3::sub(verts[i], c);
                vec3::dot(d, w).atan2(vec3::dot(d, u))
            };
            idx.sort_by(|&a, &b| angle(a).total_cmp(&angle(b)));
            idx
        })
        .collect();
    (verts, faces)
}

use archifold::facerules::{all_rule_pairs, ArchimedeanKind, Chirality, PlatonicKind};
use archifold::solidbuilder::{
    build_archimedean, build_on, metrics, vec3, verify_regular_faces, Polyhedron,
};

const TOL: f64 = 1e-9;

fn assert_archimedean(p: &Polyhedron, expected: (usize, usize, usize)) {
    let name = format!("{} on {:?} ({:?})", p.solid, p.parent, p.chirality);
    let c = p.check_mesh().unwrap_or_else(|e| panic!("{name}: {e}"));
    assert_eq!((c.vertices, c.edges, c.faces), expected, "{name}");
    let m = metrics(p);
    assert!(m.vertex_norm_spread < TOL, "{name}: {m:?}");
    assert!(m.edge_spread() < TOL, "{name}: {m:?}");
    let r = verify_regular_faces(p, TOL);
    assert!(r.pass(), "{name}: {:?}", r.defects);
}

#[test]
fn every_rule_pair_builds_a_regular_solid() {
    for (solid, parent) in all_rule_pairs() {
        let p = build_on(solid, parent, None).unwrap();
        assert_archimedean(&p, solid.counts());
    }
}

#[test]
fn snubs_in_both_chiralities() {
    for kind in [ArchimedeanKind::SnubCube, ArchimedeanKind::SnubDodecahedron] {
        for ch in [Chirality::Left, Chirality::Right] {
            let p = build_archimedean(kind, Some(ch)).unwrap();
            assert_archimedean(&p, kind.counts());
        }
    }
}

#[test]
fn snub_cube_triangles_match_the_square_edge() {
    let p = build_archimedean(ArchimedeanKind::SnubCube, Some(Chirality::Right)).unwrap();
    let square = p.faces.iter().find(|f| f.len() == 4).unwrap();
    let e = vec3::dist(p.vertices[square[0]], p.vertices[square[1]]);
    let tris: Vec<_> = p.faces.iter().filter(|f| f.len() == 3).collect();
    assert_eq!(tris.len(), 32);
    for t in tris {
        for i in 0..3 {
            let l = vec3::dist(p.vertices[t[i]], p.vertices[t[(i + 1) % 3]]);
            assert!((l - e).abs() < TOL);
        }
    }
}

#[test]
fn chiralities_are_mirror_images() {
    for kind in [ArchimedeanKind::SnubCube, ArchimedeanKind::SnubDodecahedron] {
        let l = build_archimedean(kind, Some(Chirality::Left)).unwrap();
        let r = build_archimedean(kind, Some(Chirality::Right)).unwrap();
        let (ml, mr) = (metrics(&l), metrics(&r));
        assert!((ml.edge_min - mr.edge_min).abs() < 1e-12);
        assert!((ml.edge_max - mr.edge_max).abs() < 1e-12);
        assert!((ml.circumdiameter - mr.circumdiameter).abs() < 1e-12);
        assert!((ml.face_regularity_error - mr.face_regularity_error).abs() < 1e-12);

        // z = 0 is a mirror plane of both parents, so reflecting the left
        // solid in it gives exactly the right one
        let m = l.mirrored();
        assert!(m.check_mesh().is_ok());
        assert_eq!(m.chirality, Some(Chirality::Right));
        let matched = m
            .vertices
            .iter()
            .all(|p| r.vertices.iter().any(|q| vec3::dist(*p, *q) < TOL));
        assert!(matched, "{kind}");
    }
}

#[test]
fn chirality_really_differs() {
    let l = build_archimedean(ArchimedeanKind::SnubCube, Some(Chirality::Left)).unwrap();
    let r = build_archimedean(ArchimedeanKind::SnubCube, Some(Chirality::Right)).unwrap();
    let same = l
        .vertices
        .iter()
        .all(|p| r.vertices.iter().any(|q| vec3::dist(*p, *q) < TOL));
    assert!(!same);
}

#[test]
fn cuboctahedron_from_either_parent_has_the_same_shape() {
    let a = metrics(&build_on(ArchimedeanKind::Cuboctahedron, PlatonicKind::Cube, None).unwrap());
    let b = metrics(
        &build_on(
            ArchimedeanKind::Cuboctahedron,
            PlatonicKind::Octahedron,
            None,
        )
        .unwrap(),
    );
    assert!((a.circumdiameter / a.edge_min - b.circumdiameter / b.edge_min).abs() < 1e-12);
}

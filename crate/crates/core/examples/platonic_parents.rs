//! The five parents, and one solid built on two different parents.

use archifold::facerules::{ArchimedeanKind, PlatonicKind};
use archifold::solidbuilder::{build_on, metrics, platonic};

fn main() {
    for &kind in PlatonicKind::ALL {
        let p = platonic(kind);
        let c = p.check_mesh().unwrap();
        let m = metrics(&p);
        println!(
            "{:<13} V={:<2} E={:<2} F={:<2} circumdiameter {:.9}",
            kind.name(),
            c.vertices,
            c.edges,
            c.faces,
            m.circumdiameter
        );
    }

    // the cuboctahedron from cube midpoints and from octahedron midpoints
    for parent in [PlatonicKind::Cube, PlatonicKind::Octahedron] {
        let p = build_on(ArchimedeanKind::Cuboctahedron, parent, None).unwrap();
        let m = metrics(&p);
        println!(
            "cuboctahedron on {parent}: d/e = {:.12}",
            m.circumdiameter / m.edge_min
        );
    }
}

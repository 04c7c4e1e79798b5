//! Left and right snub cubes are mirror images but not congruent by a
//! rotation. The circumsphere certificate holds for both.

use archifold::facerules::{ArchimedeanKind, Chirality};
use archifold::solidbuilder::{build_archimedean, metrics, wm_polynomial};

fn main() {
    let left = build_archimedean(ArchimedeanKind::SnubCube, Some(Chirality::Left)).unwrap();
    let right = build_archimedean(ArchimedeanKind::SnubCube, Some(Chirality::Right)).unwrap();

    let mirrored = left.mirrored();
    let matched = right
        .vertices
        .iter()
        .filter(|v| {
            mirrored
                .vertices
                .iter()
                .any(|w| (0..3).all(|k| (v[k] - w[k]).abs() < 1e-9))
        })
        .count();
    println!("mirrored left matches {matched}/24 right vertices");

    for poly in [&left, &right] {
        let m = metrics(poly);
        let r = m.circumdiameter / m.edge_min;
        println!(
            "{:?}: d/e = {r:.12}, r⁶ − 10r⁴ + 22r² − 14 = {:.1e}",
            poly.chirality,
            wm_polynomial(r)
        );
    }
}

//! Build every Archimedean solid, check it, and write OBJ files.
//!
//! Usage: `cargo run --example generate_meshes [DIR]` (default: a temp dir).

use std::fs;
use std::path::PathBuf;

use archifold::cli::export::to_obj;
use archifold::facerules::{ArchimedeanKind, Chirality};
use archifold::solidbuilder::{build_archimedean, metrics};

fn main() -> std::io::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("archifold-meshes"));
    fs::create_dir_all(&dir)?;

    for &kind in ArchimedeanKind::ALL {
        let ch = kind.snub().map(|_| Chirality::Right);
        let poly = build_archimedean(kind, ch).expect("buildable");
        let counts = poly.check_mesh().expect("closed manifold");
        let m = metrics(&poly);
        println!(
            "{:<28} V={:<3} E={:<3} F={:<3} d/e={:.9}",
            kind.name(),
            counts.vertices,
            counts.edges,
            counts.faces,
            m.circumdiameter / m.edge_min
        );
        fs::write(dir.join(format!("{}.obj", kind.name())), to_obj(&poly))?;
    }
    println!("wrote {}", dir.display());
    Ok(())
}

//! The folding construction of the snub cube vertex on a unit square face.

use archifold::foldverify::snub_cube_fold_trace;

fn main() {
    let trace = match snub_cube_fold_trace() {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    println!("crease: {:?}", trace.crease.slope_intercept);
    for (name, p) in &trace.images {
        println!("{name:>3} = ({:.10}, {:.10})", p.u, p.v);
    }
    for (name, check) in &trace.checks {
        println!(
            "{} {name}: {:.2e}",
            if check.pass { "ok " } else { "BAD" },
            check.value
        );
    }
}

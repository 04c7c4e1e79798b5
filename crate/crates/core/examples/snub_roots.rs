//! Solve the snub cubics and print x, y with their residuals.

use archifold::facerules::{snub_cube_params, snub_dodec_params};
use archifold::scalarfield::{solve_cubic, Poly};

fn main() {
    // 2x³ − 4x² + 4x − 1 has a single real root
    let cubic = Poly::new(vec![-1.0, 4.0, -4.0, 2.0]);
    let roots = solve_cubic(&cubic).expect("cubic");
    println!(
        "snub cube cubic: {:?} (unique real: {})",
        roots.values(),
        roots.unique_real
    );

    for params in [snub_cube_params(), snub_dodec_params()] {
        println!(
            "{}: x = {:.12}, y = {:.12}",
            params.kind, params.x, params.y
        );
        for (name, r) in &params.residuals {
            println!("  {name:<12} {r:.2e}");
        }
    }
}

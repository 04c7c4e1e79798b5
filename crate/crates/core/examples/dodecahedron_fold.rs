//! Five target points and lines on a pentagon face, one crease folding each
//! point onto its line, then the fold that lands the snub vertex.

use archifold::foldverify::{
    final_fold_to_a1, g_points_and_lines, snub_dodec_crease, verify_dodec_fold,
};

fn main() {
    let f = snub_dodec_crease();
    for g in g_points_and_lines() {
        let image = f.reflect(&g.point_cartesian());
        println!(
            "G{} = ({})·OP + ({})·OR, image off g{} by {:.1e}",
            g.index,
            g.point.p,
            g.point.r,
            g.index,
            g.line_cartesian().distance(&image)
        );
    }

    for result in [verify_dodec_fold(), final_fold_to_a1()] {
        match result {
            Ok(trace) => {
                println!("{}:", trace.name);
                for (name, c) in &trace.checks {
                    println!("  {name:<28} {:.3e}", c.value);
                }
            }
            Err(e) => {
                eprintln!("{e}");
                std::process::exit(1);
            }
        }
    }
}

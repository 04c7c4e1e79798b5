//! Exact checks behind the division ratios, in Q(√2) and Q(√5).

use archifold::facerules::{all_rule_pairs, division_rule, verify_appendix_identities};

fn main() {
    for (solid, parent) in all_rule_pairs() {
        let rule = division_rule(solid, parent).unwrap();
        let ratios: Vec<String> = rule.edge_ratios.iter().map(|r| r.to_string()).collect();
        println!("{solid} on {parent}: {}", ratios.join(" : "));
    }
    println!();
    let report = verify_appendix_identities();
    for c in &report.checks {
        println!(
            "{} {}: {} = {}",
            if c.holds { "ok " } else { "BAD" },
            c.name,
            c.lhs,
            c.rhs
        );
    }
}

//! Exact identities behind the division-ratio tables.

use serde::Serialize;

use super::{division_rule, ArchimedeanKind, PlatonicKind};
use crate::scalarfield::QuadExt;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AppendixReport {
    pub checks: Vec<IdentityCheck>,
}

impl AppendixReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

fn check(name: &'static str, lhs: QuadExt, rhs: QuadExt) -> IdentityCheck {
    IdentityCheck {
        name,
        holds: lhs == rhs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

fn ratios(solid: ArchimedeanKind, parent: PlatonicKind) -> Vec<QuadExt> {
    division_rule(solid, parent)
        .expect("tabulated pair")
        .edge_ratios
}

/// Checks every identity in exact arithmetic.
pub fn verify_appendix_identities() -> AppendixReport {
    let one = QuadExt::int(1);
    let two = QuadExt::int(2);
    let phi = QuadExt::phi();
    let r2 = QuadExt::sqrt2();
    let mut checks = Vec::new();

    // corner cuts: the new edge across a corner equals the middle segment
    let tc = ratios(ArchimedeanKind::TruncatedCube, PlatonicKind::Cube);
    checks.push(check("square corner cut", &r2 * &tc[0], tc[1].clone()));
    let td = ratios(
        ArchimedeanKind::TruncatedDodecahedron,
        PlatonicKind::Dodecahedron,
    );
    checks.push(check("pentagon corner cut", &phi * &td[0], td[1].clone()));

    // inner polygons on triangles: b = (k + 1)a gives (b − a)/a = k
    let ro = ratios(
        ArchimedeanKind::Rhombicuboctahedron,
        PlatonicKind::Octahedron,
    );
    checks.push(check(
        "octahedron inner square",
        (&ro[1] - &ro[0]) / ro[0].clone(),
        r2.clone(),
    ));
    let ri = ratios(
        ArchimedeanKind::Rhombicosidodecahedron,
        PlatonicKind::Icosahedron,
    );
    checks.push(check(
        "icosahedron inner pentagon",
        (&ri[1] - &ri[0]) / ri[0].clone(),
        phi.clone(),
    ));

    // inner hexagons on triangles: c = b − 2a and b + c = 2(b − a)
    for (name_c, name_sum, parent, solid) in [
        (
            "octahedron hexagon middle",
            "octahedron hexagon sides",
            PlatonicKind::Octahedron,
            ArchimedeanKind::TruncatedCuboctahedron,
        ),
        (
            "icosahedron hexagon middle",
            "icosahedron hexagon sides",
            PlatonicKind::Icosahedron,
            ArchimedeanKind::TruncatedIcosidodecahedron,
        ),
    ] {
        let t = ratios(solid, parent);
        let (a, b, c) = (&t[0], &t[1], &t[2]);
        checks.push(check(name_c, c.clone(), b - &(&two * a)));
        checks.push(check(name_sum, b + c, &two * &(b - a)));
    }

    // decagon on the dodecahedron
    let third = QuadExt::frac(1, 3);
    checks.push(check(
        "decagon offset",
        (&third + &phi) / phi.clone() * QuadExt::int(3),
        &two + &phi,
    ));
    checks.push(check("decagon edge", &(&two + &phi) - &two, phi.clone()));
    let bb = one.clone();
    let qr = &(&two * &phi) * &bb;
    checks.push(check("half diagonal", &qr / &two, &phi * &bb));

    checks.push(check(
        "golden reciprocal",
        &one + &(&one / &phi),
        phi.clone(),
    ));
    // b + c = 2a together with a − c + aΦ = aΦ forces a = b = c
    let a = one.clone();
    let c = &(&a + &(&a * &phi)) - &(&a * &phi);
    let b = &(&two * &a) - &c;
    let tid = ratios(
        ArchimedeanKind::TruncatedIcosidodecahedron,
        PlatonicKind::Dodecahedron,
    );
    checks.push(check("decagon equal parts", b, tid[1].clone()));
    checks.push(check("decagon equal parts middle", c, tid[2].clone()));

    AppendixReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_identities_hold() {
        let r = verify_appendix_identities();
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{bad:#?}");
        assert!(r.checks.len() >= 12);
    }

    #[test]
    fn a_false_identity_is_reported() {
        let c = check("nope", QuadExt::phi(), QuadExt::sqrt5());
        assert!(!c.holds);
    }
}

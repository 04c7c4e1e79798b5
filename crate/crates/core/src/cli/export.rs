use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::facerules::{snub_cube_params, snub_dodec_params, Chirality, PlatonicKind, SnubKind};
use crate::solidbuilder::{metrics, MetricReport, Polyhedron, SolidKind};

/// Coordinates smaller than this are written as zero.
const SNAP: f64 = 1e-14;

/// Plain decimal with 17 significant digits.
pub fn fmt_coord(v: f64) -> String {
    if v.abs() < SNAP {
        return "0.0000000000000000".to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    let decimals = (16 - exp).max(0) as usize;
    format!("{v:.decimals$}")
}

pub fn to_obj(poly: &Polyhedron) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# {}", poly.solid);
    if let Some(p) = poly.parent {
        let _ = writeln!(s, "# parent {p}");
    }
    if let Some(c) = poly.chirality {
        let _ = writeln!(s, "# chirality {c}");
    }
    for v in &poly.vertices {
        let _ = writeln!(
            s,
            "v {} {} {}",
            fmt_coord(v[0]),
            fmt_coord(v[1]),
            fmt_coord(v[2])
        );
    }
    for f in &poly.faces {
        let idx: Vec<String> = f.iter().map(|i| (i + 1).to_string()).collect();
        let _ = writeln!(s, "f {}", idx.join(" "));
    }
    s
}

#[derive(Debug, Serialize)]
pub struct DocMetrics {
    #[serde(flatten)]
    pub report: MetricReport,
    pub edge_length: f64,
    pub certificates: BTreeMap<String, f64>,
}

#[derive(Debug, Serialize)]
pub struct MeshDocument {
    pub solid: SolidKind,
    pub parent: Option<PlatonicKind>,
    pub chirality: Option<Chirality>,
    pub vertices: Vec<[f64; 3]>,
    pub faces: Vec<Vec<usize>>,
    pub metrics: DocMetrics,
}

impl MeshDocument {
    pub fn new(poly: &Polyhedron) -> Self {
        let report = metrics(poly);
        let mut certificates = BTreeMap::new();
        if let Some(kind) = poly.solid.snub() {
            let params = match kind {
                SnubKind::Cube => snub_cube_params(),
                SnubKind::Dodecahedron => snub_dodec_params(),
            };
            certificates.insert("x".into(), params.x);
            certificates.insert("y".into(), params.y);
            for (k, v) in params.residuals {
                certificates.insert(format!("residual {k}"), v);
            }
        }
        if let Some(wm) = report.wm_residual {
            certificates.insert("circumsphere sextic".into(), wm);
        }
        MeshDocument {
            solid: poly.solid,
            parent: poly.parent,
            chirality: poly.chirality,
            vertices: poly.vertices.clone(),
            faces: poly.faces.clone(),
            metrics: DocMetrics {
                edge_length: 0.5 * (report.edge_min + report.edge_max),
                report,
                certificates,
            },
        }
    }
}

pub fn to_json(poly: &Polyhedron) -> String {
    let mut s =
        serde_json::to_string_pretty(&MeshDocument::new(poly)).expect("finite values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solidbuilder::platonic;

    #[test]
    fn coordinates_have_17_significant_digits() {
        assert_eq!(fmt_coord(0.5), "0.50000000000000000");
        assert_eq!(fmt_coord(-1.25), "-1.2500000000000000");
        assert_eq!(fmt_coord(12.5), "12.500000000000000");
        assert_eq!(fmt_coord(-3e-17), "0.0000000000000000");
        let v = 0.352_201_128_738_957_6;
        assert_eq!(fmt_coord(v).parse::<f64>().unwrap(), v);
    }

    #[test]
    fn cube_obj() {
        let obj = to_obj(&platonic(PlatonicKind::Cube));
        assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 8);
        assert_eq!(obj.lines().filter(|l| l.starts_with("f ")).count(), 6);
        assert!(obj
            .lines()
            .filter(|l| l.starts_with("f "))
            .all(|l| !l.contains(" 0")));
    }

    #[test]
    fn cube_json_schema() {
        let v: serde_json::Value =
            serde_json::from_str(&to_json(&platonic(PlatonicKind::Cube))).unwrap();
        assert_eq!(v["solid"], "cube");
        assert!(v["parent"].is_null());
        assert_eq!(v["vertices"].as_array().unwrap().len(), 8);
        assert_eq!(v["faces"].as_array().unwrap().len(), 6);
        let d = v["metrics"]["circumdiameter"].as_f64().unwrap();
        assert!((d - 3f64.sqrt()).abs() < 1e-12);
    }
}

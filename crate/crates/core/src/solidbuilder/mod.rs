//! Platonic solids in 3D and Archimedean meshes assembled from the face
//! rules.
//!
//! Every Archimedean vertex is placed on a parent face by oblique corner
//! coordinates, so lifting needs no trigonometry: a point at `(s, t)` near
//! corner `V` is `V + s·(next − V) + t·(prev − V)`. Faces come from the
//! pattern: one polygon per parent face, one per parent vertex, and for the
//! expanded and snub patterns one quad or two triangles per parent edge.

mod metrics;
mod platonic;
pub mod vec3;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::facerules::{
    division_rule, snub_cube_params, snub_dodec_params, ArchimedeanKind, Chirality, CornerOffset,
    Pattern, PlatonicKind, RuleError, SnubKind, UnknownName,
};
use vec3::Vec3;

pub use metrics::{
    metrics, verify_regular_faces, wm_polynomial, FaceDefect, MetricReport, RegularityReport,
};

/// Distinct vertices closer than this are merged.
pub const DEDUP_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum SolidKind {
    Platonic(PlatonicKind),
    Archimedean(ArchimedeanKind),
}

impl SolidKind {
    pub fn name(self) -> &'static str {
        match self {
            SolidKind::Platonic(k) => k.name(),
            SolidKind::Archimedean(k) => k.name(),
        }
    }

    pub fn all() -> impl Iterator<Item = SolidKind> {
        PlatonicKind::ALL
            .iter()
            .map(|k| SolidKind::Platonic(*k))
            .chain(
                ArchimedeanKind::ALL
                    .iter()
                    .map(|k| SolidKind::Archimedean(*k)),
            )
    }

    pub fn snub(self) -> Option<SnubKind> {
        match self {
            SolidKind::Archimedean(k) => k.snub(),
            SolidKind::Platonic(_) => None,
        }
    }
}

impl fmt::Display for SolidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolidKind {
    type Err = UnknownName;
    fn from_str(s: &str) -> Result<Self, UnknownName> {
        s.parse()
            .map(SolidKind::Platonic)
            .or_else(|_| s.parse().map(SolidKind::Archimedean))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("{0} is chiral: choose --chirality left or right")]
    MissingChirality(ArchimedeanKind),
    #[error("{0} is not chiral")]
    ChiralityNotApplicable(ArchimedeanKind),
    #[error("{solid} cannot be built on the {parent}")]
    UnsupportedKind {
        solid: ArchimedeanKind,
        parent: PlatonicKind,
    },
}

impl From<RuleError> for BuildError {
    fn from(e: RuleError) -> Self {
        match e {
            RuleError::UnsupportedPair { solid, parent } => {
                BuildError::UnsupportedKind { solid, parent }
            }
        }
    }
}

/// Mesh with faces listed counterclockwise seen from outside. Lengths are
/// in units of the parent's edge.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Polyhedron {
    pub solid: SolidKind,
    pub parent: Option<PlatonicKind>,
    pub chirality: Option<Chirality>,
    pub vertices: Vec<Vec3>,
    pub faces: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MeshDefect {
    #[error("face {0} has fewer than three vertices")]
    DegenerateFace(usize),
    #[error("face {face} refers to missing vertex {index}")]
    IndexOutOfRange { face: usize, index: usize },
    #[error("edge ({0}, {1}) is not shared by exactly two oppositely wound faces")]
    BadEdge(usize, usize),
    #[error("vertices {0} and {1} coincide")]
    DuplicateVertex(usize, usize),
    #[error("Euler characteristic is {0}, expected 2")]
    Euler(i64),
}

/// `(V, E, F)` of a valid mesh.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MeshCounts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
}

impl Polyhedron {
    /// Undirected edges, each as `(low, high)`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self
            .faces
            .iter()
            .flat_map(|f| (0..f.len()).map(move |i| (f[i], f[(i + 1) % f.len()])))
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        e.sort_unstable();
        e.dedup();
        e
    }

    pub fn face_points(&self, face: usize) -> Vec<Vec3> {
        self.faces[face].iter().map(|&i| self.vertices[i]).collect()
    }

    /// Checks the closed-manifold invariants and returns the counts.
    pub fn check_mesh(&self) -> Result<MeshCounts, MeshDefect> {
        let mut directed: HashMap<(usize, usize), usize> = HashMap::new();
        for (fi, f) in self.faces.iter().enumerate() {
            if f.len() < 3 {
                return Err(MeshDefect::DegenerateFace(fi));
            }
            for (k, &a) in f.iter().enumerate() {
                if a >= self.vertices.len() {
                    return Err(MeshDefect::IndexOutOfRange { face: fi, index: a });
                }
                *directed.entry((a, f[(k + 1) % f.len()])).or_default() += 1;
            }
        }
        for (&(a, b), &n) in &directed {
            if n != 1 || directed.get(&(b, a)) != Some(&1) {
                return Err(MeshDefect::BadEdge(a.min(b), a.max(b)));
            }
        }
        for (i, p) in self.vertices.iter().enumerate() {
            for (j, q) in self.vertices.iter().enumerate().skip(i + 1) {
                if vec3::dist(*p, *q) <= DEDUP_TOL {
                    return Err(MeshDefect::DuplicateVertex(i, j));
                }
            }
        }
        let counts = MeshCounts {
            vertices: self.vertices.len(),
            edges: directed.len() / 2,
            faces: self.faces.len(),
        };
        let chi = counts.vertices as i64 - counts.edges as i64 + counts.faces as i64;
        if chi != 2 {
            return Err(MeshDefect::Euler(chi));
        }
        Ok(counts)
    }

    /// Mirror image through the plane `z = 0`, with faces rewound.
    pub fn mirrored(&self) -> Polyhedron {
        Polyhedron {
            vertices: self.vertices.iter().map(|p| [p[0], p[1], -p[2]]).collect(),
            faces: self
                .faces
                .iter()
                .map(|f| f.iter().rev().copied().collect())
                .collect(),
            chirality: self.chirality.map(|c| match c {
                Chirality::Left => Chirality::Right,
                Chirality::Right => Chirality::Left,
            }),
            ..self.clone()
        }
    }
}

pub fn platonic(kind: PlatonicKind) -> Polyhedron {
    let (vertices, faces) = platonic::platonic_mesh(kind);
    Polyhedron {
        solid: SolidKind::Platonic(kind),
        parent: None,
        chirality: None,
        vertices,
        faces,
    }
}

/// Builds `kind` on its default parent.
pub fn build_archimedean(
    kind: ArchimedeanKind,
    chirality: Option<Chirality>,
) -> Result<Polyhedron, BuildError> {
    build_on(kind, kind.default_parent(), chirality)
}

/// Any solid by kind; chirality only for the snubs.
pub fn build(kind: SolidKind, chirality: Option<Chirality>) -> Result<Polyhedron, BuildError> {
    match kind {
        SolidKind::Platonic(p) => Ok(platonic(p)),
        SolidKind::Archimedean(a) => build_archimedean(a, chirality),
    }
}

/// Builds `kind` on the faces of a chosen parent.
pub fn build_on(
    kind: ArchimedeanKind,
    parent: PlatonicKind,
    chirality: Option<Chirality>,
) -> Result<Polyhedron, BuildError> {
    let layout = match (kind.snub(), chirality) {
        (Some(s), Some(ch)) => {
            if s.parent() != parent {
                return Err(BuildError::UnsupportedKind {
                    solid: kind,
                    parent,
                });
            }
            let params = match s {
                SnubKind::Cube => snub_cube_params(),
                SnubKind::Dodecahedron => snub_dodec_params(),
            };
            Layout::Snub(params.corner_offset(ch))
        }
        (Some(_), None) => return Err(BuildError::MissingChirality(kind)),
        (None, Some(_)) => return Err(BuildError::ChiralityNotApplicable(kind)),
        (None, None) => {
            let rule = division_rule(kind, parent)?;
            Layout::Rule(rule.pattern, rule.corner_offsets(parent.face_sides()))
        }
    };
    let base = platonic(parent);
    let (vertices, faces) = assemble(&base, &layout);
    Ok(Polyhedron {
        solid: SolidKind::Archimedean(kind),
        parent: Some(parent),
        chirality,
        vertices,
        faces,
    })
}

enum Layout {
    Rule(Pattern, Vec<CornerOffset>),
    Snub(CornerOffset),
}

impl Layout {
    fn offsets(&self) -> Vec<CornerOffset> {
        match self {
            Layout::Rule(_, o) => o.clone(),
            Layout::Snub(o) => vec![*o],
        }
    }

    fn has_edge_faces(&self) -> bool {
        matches!(
            self,
            Layout::Snub(_) | Layout::Rule(Pattern::InnerPolygon | Pattern::InnerTwoPolygon, _)
        )
    }

    /// Slots of each corner that border the polygon around a parent vertex.
    fn vertex_slots(&self, n_slots: usize) -> Vec<usize> {
        match self {
            // the two cut points of a corner are shared with the neighbors
            Layout::Rule(Pattern::CornerCut, _) => vec![1],
            _ => (0..n_slots).collect(),
        }
    }
}

/// Merges points within [`DEDUP_TOL`] using a grid hash.
struct VertexPool {
    points: Vec<Vec3>,
    grid: HashMap<[i64; 3], Vec<usize>>,
}

impl VertexPool {
    const CELL: f64 = 1e-6;

    fn new() -> Self {
        VertexPool {
            points: Vec::new(),
            grid: HashMap::new(),
        }
    }

    fn cell(p: Vec3) -> [i64; 3] {
        p.map(|c| (c / Self::CELL).floor() as i64)
    }

    fn insert(&mut self, p: Vec3) -> usize {
        let c = Self::cell(p);
        for dx in -1..=1 {
            for dy in -1..=1 {
                for dz in -1..=1 {
                    if let Some(ids) = self.grid.get(&[c[0] + dx, c[1] + dy, c[2] + dz]) {
                        if let Some(&i) = ids
                            .iter()
                            .find(|&&i| vec3::dist(self.points[i], p) <= DEDUP_TOL)
                        {
                            return i;
                        }
                    }
                }
            }
        }
        let id = self.points.len();
        self.points.push(p);
        self.grid.entry(c).or_default().push(id);
        id
    }
}

fn assemble(base: &Polyhedron, layout: &Layout) -> (Vec<Vec3>, Vec<Vec<usize>>) {
    let offsets = layout.offsets();
    let n_slots = offsets.len();
    let mut pool = VertexPool::new();

    // ids[f][k][s]: slot s near corner k of parent face f
    let ids: Vec<Vec<Vec<usize>>> = base
        .faces
        .iter()
        .map(|face| {
            let n = face.len();
            (0..n)
                .map(|k| {
                    let v = base.vertices[face[k]];
                    let next = vec3::sub(base.vertices[face[(k + 1) % n]], v);
                    let prev = vec3::sub(base.vertices[face[(k + n - 1) % n]], v);
                    offsets
                        .iter()
                        .map(|o| {
                            let p = vec3::add(
                                v,
                                vec3::add(
                                    vec3::scale(next, o.along_next),
                                    vec3::scale(prev, o.along_prev),
                                ),
                            );
                            pool.insert(p)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();

    let mut faces: Vec<Vec<usize>> = Vec::new();

    for corners in &ids {
        faces.push(corners.iter().flatten().copied().collect());
    }

    // directed parent edge (a, b) -> (face, corner of a)
    let mut half_edges: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    for (fi, f) in base.faces.iter().enumerate() {
        for k in 0..f.len() {
            half_edges.insert((f[k], f[(k + 1) % f.len()]), (fi, k));
        }
    }

    let slots = layout.vertex_slots(n_slots);
    for v in 0..base.vertices.len() {
        let Some((&(_, _), &(start, k0))) = half_edges.iter().find(|((a, _), _)| *a == v) else {
            continue;
        };
        let mut ring = Vec::new();
        let (mut f, mut k) = (start, k0);
        loop {
            ring.extend(slots.iter().map(|&s| ids[f][k][s]));
            let face = &base.faces[f];
            let next_vertex = face[(k + 1) % face.len()];
            // the neighbor across edge (v, next) holds it as (next, v)
            let (g, j) = half_edges[&(next_vertex, v)];
            (f, k) = (g, (j + 1) % base.faces[g].len());
            if f == start {
                break;
            }
        }
        ring.dedup();
        if ring.len() > 1 && ring.first() == ring.last() {
            ring.pop();
        }
        faces.push(ring);
    }

    if layout.has_edge_faces() {
        for (&(a, b), &(f, k)) in &half_edges {
            if a > b {
                continue;
            }
            let (g, j) = half_edges[&(b, a)];
            let (nf, ng) = (base.faces[f].len(), base.faces[g].len());
            let c1 = ids[f][k][n_slots - 1];
            let c2 = ids[f][(k + 1) % nf][0];
            let d1 = ids[g][j][n_slots - 1];
            let d2 = ids[g][(j + 1) % ng][0];
            match layout {
                Layout::Snub(_) => {
                    let p = |i: usize| pool.points[i];
                    if vec3::dist(p(c1), p(d1)) <= vec3::dist(p(c2), p(d2)) {
                        faces.push(vec![c1, c2, d1]);
                        faces.push(vec![c1, d1, d2]);
                    } else {
                        faces.push(vec![c1, c2, d2]);
                        faces.push(vec![c2, d1, d2]);
                    }
                }
                Layout::Rule(..) => faces.push(vec![c1, c2, d1, d2]),
            }
        }
    }

    let vertices = pool.points;
    for f in &mut faces {
        let pts: Vec<Vec3> = f.iter().map(|&i| vertices[i]).collect();
        if vec3::dot(
            vec3::polygon_normal(&pts),
            vec3::centroid(pts.iter().copied()),
        ) < 0.0
        {
            f.reverse();
        }
    }
    (vertices, faces)
}

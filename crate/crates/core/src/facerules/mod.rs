//! Per-face construction data: which points of a Platonic face become
//! vertices of each Archimedean solid.
//!
//! Eleven solids come from exact division-ratio tables along the parent's
//! edges. The two snub solids need the parameters `(x, y)` solved in
//! [`snub`], which are roots of cubics and not ruler-and-compass numbers.

pub mod appendix;
mod kinds;
pub mod snub;

use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::planegeom::Point2;
use crate::scalarfield::{QuadExt, Radicand, Scalar};

pub use appendix::{verify_appendix_identities, AppendixReport, IdentityCheck};
pub use kinds::{ArchimedeanKind, Chirality, PlatonicKind, SnubKind, UnknownName};
pub use snub::{
    equilateral_residuals, snub_cube_face_square, snub_cube_params, snub_dodec_face_pentagon,
    snub_dodec_params, SnubParams,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("{solid} is not built from division ratios on the {parent}")]
    UnsupportedPair {
        solid: ArchimedeanKind,
        parent: PlatonicKind,
    },
}

/// How the division points of a face turn into vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pattern {
    /// Points on the edges near each corner; the corners are cut off.
    CornerCut,
    /// Edge midpoints.
    Midpoint,
    /// One interior point per corner, a shrunken copy of the face.
    InnerPolygon,
    /// Two interior points per corner, a polygon with twice the sides.
    InnerTwoPolygon,
}

/// Exact edge-division table for one (solid, parent) pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DivisionRule {
    pub parent: PlatonicKind,
    pub solid: ArchimedeanKind,
    #[serde(serialize_with = "ser_ratios")]
    pub edge_ratios: Vec<QuadExt>,
    pub pattern: Pattern,
}

fn ser_ratios<S: serde::Serializer>(r: &[QuadExt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(r.iter().map(|q| q.to_string()))
}

fn int(n: i64) -> QuadExt {
    QuadExt::int(n)
}

fn root2_plus(k: i64) -> QuadExt {
    QuadExt::sqrt2() + int(k)
}

fn phi_plus(k: i64) -> QuadExt {
    QuadExt::phi() + int(k)
}

/// The ratio table for `solid` on the faces of `parent`.
pub fn division_rule(
    solid: ArchimedeanKind,
    parent: PlatonicKind,
) -> Result<DivisionRule, RuleError> {
    use ArchimedeanKind as A;
    use Pattern::*;
    use PlatonicKind as P;

    let ones = |n: usize| vec![int(1); n];
    let (edge_ratios, pattern) = match (solid, parent) {
        (A::TruncatedTetrahedron, P::Tetrahedron) => (ones(3), CornerCut),

        (A::TruncatedCube, P::Cube) => (vec![int(1), QuadExt::sqrt2(), int(1)], CornerCut),
        (A::Cuboctahedron, P::Cube) => (ones(2), Midpoint),
        (A::Rhombicuboctahedron, P::Cube) => (vec![int(1), QuadExt::sqrt2(), int(1)], InnerPolygon),
        (A::TruncatedCuboctahedron, P::Cube) => (
            vec![int(1), int(1), QuadExt::sqrt2(), int(1), int(1)],
            InnerTwoPolygon,
        ),

        (A::TruncatedOctahedron, P::Octahedron) => (ones(3), CornerCut),
        (A::Cuboctahedron, P::Octahedron) => (ones(2), Midpoint),
        (A::Rhombicuboctahedron, P::Octahedron) => {
            (vec![int(1), root2_plus(1), int(1)], InnerPolygon)
        }
        (A::TruncatedCuboctahedron, P::Octahedron) => (
            vec![int(1), root2_plus(1), root2_plus(-1), root2_plus(1), int(1)],
            InnerTwoPolygon,
        ),

        (A::TruncatedIcosahedron, P::Icosahedron) => (ones(3), CornerCut),
        (A::Icosidodecahedron, P::Icosahedron) => (ones(2), Midpoint),
        (A::Rhombicosidodecahedron, P::Icosahedron) => {
            (vec![int(1), phi_plus(1), int(1)], InnerPolygon)
        }
        (A::TruncatedIcosidodecahedron, P::Icosahedron) => (
            vec![int(1), phi_plus(1), phi_plus(-1), phi_plus(1), int(1)],
            InnerTwoPolygon,
        ),

        (A::TruncatedDodecahedron, P::Dodecahedron) => {
            (vec![int(1), QuadExt::phi(), int(1)], CornerCut)
        }
        (A::Icosidodecahedron, P::Dodecahedron) => (ones(2), Midpoint),
        (A::Rhombicosidodecahedron, P::Dodecahedron) => (ones(3), InnerPolygon),
        (A::TruncatedIcosidodecahedron, P::Dodecahedron) => (ones(5), InnerTwoPolygon),

        _ => return Err(RuleError::UnsupportedPair { solid, parent }),
    };
    Ok(DivisionRule {
        parent,
        solid,
        edge_ratios,
        pattern,
    })
}

/// Every (solid, parent) pair with a division table.
pub fn all_rule_pairs() -> Vec<(ArchimedeanKind, PlatonicKind)> {
    let mut out = Vec::new();
    for &solid in ArchimedeanKind::ALL {
        for &parent in PlatonicKind::ALL {
            if division_rule(solid, parent).is_ok() {
                out.push((solid, parent));
            }
        }
    }
    out
}

/// A point placed near one corner of a face, in oblique coordinates:
/// `corner + along_next·(next corner − corner) + along_prev·(previous corner − corner)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CornerOffset {
    pub along_next: f64,
    pub along_prev: f64,
}

impl DivisionRule {
    pub fn total(&self) -> QuadExt {
        self.edge_ratios
            .iter()
            .fold(int(0), |acc, r| acc + r.clone())
    }

    pub fn is_palindrome(&self) -> bool {
        self.edge_ratios.iter().eq(self.edge_ratios.iter().rev())
    }

    /// Fractions of the edge at which the edge is cut, from the first corner.
    pub fn cut_positions(&self) -> Vec<QuadExt> {
        let total = self.total();
        let mut acc = int(0);
        let mut out = Vec::new();
        for r in &self.edge_ratios[..self.edge_ratios.len() - 1] {
            acc = acc + r.clone();
            out.push(&acc / &total);
        }
        out
    }

    /// Points generated near each corner of a face with `sides` corners,
    /// ordered so that concatenating them corner by corner walks the face's
    /// inner polygon in the face's own orientation.
    pub fn corner_offsets(&self, sides: usize) -> Vec<CornerOffset> {
        let total = self.total();
        let frac = |q: &QuadExt| (q / &total).to_f64();
        let a = frac(&self.edge_ratios[0]);
        match self.pattern {
            Pattern::CornerCut => vec![
                CornerOffset {
                    along_next: 0.0,
                    along_prev: a,
                },
                CornerOffset {
                    along_next: a,
                    along_prev: 0.0,
                },
            ],
            Pattern::Midpoint => vec![CornerOffset {
                along_next: 0.5,
                along_prev: 0.0,
            }],
            Pattern::InnerPolygon => vec![CornerOffset {
                along_next: a,
                along_prev: a,
            }],
            Pattern::InnerTwoPolygon => {
                let b = frac(&self.edge_ratios[1]);
                // on triangles the grid lines through the cuts run parallel to
                // the far sides, which shortens the long offset by a
                let long = if sides == 3 { b } else { a + b };
                vec![
                    CornerOffset {
                        along_next: a,
                        along_prev: long,
                    },
                    CornerOffset {
                        along_next: long,
                        along_prev: a,
                    },
                ]
            }
        }
    }
}

/// Coordinates `p·OP + r·OR` in the oblique basis of a pentagon face at
/// corner `O`, with neighbors `P` and `R`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FaceVec<T = f64> {
    pub p: T,
    pub r: T,
}

impl<T: Scalar> FaceVec<T> {
    pub fn new(p: T, r: T) -> Self {
        FaceVec { p, r }
    }

    pub fn sub(&self, o: &Self) -> Self {
        FaceVec::new(self.p.clone() - o.p.clone(), self.r.clone() - o.r.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        FaceVec::new(self.p.clone() + o.p.clone(), self.r.clone() + o.r.clone())
    }

    pub fn scale(&self, k: &T) -> Self {
        FaceVec::new(self.p.clone() * k.clone(), self.r.clone() * k.clone())
    }

    pub fn norm_sq(&self) -> T {
        gram_inner(self, self)
    }

    /// Cartesian position with `OP = (1, 0)` and `OR` at 108° from it.
    pub fn to_cartesian(&self) -> Point2 {
        let (op, or) = pentagon_axes();
        let (p, r) = (self.p.to_f64(), self.r.to_f64());
        Point2::new(p * op[0] + r * or[0], p * op[1] + r * or[1])
    }
}

/// `cos 108° = −1/(2Φ) = (1 − √5)/4`.
pub fn cos108() -> QuadExt {
    QuadExt::from_parts(1, 4, -1, 4, Radicand::Five)
}

fn pentagon_axes() -> ([f64; 2], [f64; 2]) {
    let c = cos108().to_f64();
    ([1.0, 0.0], [c, (1.0 - c * c).sqrt()])
}

/// Inner product in the oblique basis with unit `OP`, `OR` at 108°.
pub fn gram_inner<T: Scalar>(u: &FaceVec<T>, v: &FaceVec<T>) -> T {
    let cross = T::from_quad(&cos108());
    u.p.clone() * v.p.clone()
        + u.r.clone() * v.r.clone()
        + (u.p.clone() * v.r.clone() + u.r.clone() * v.p.clone()) * cross
}

/// The pentagon's named corners in the oblique basis: `O, P, T, S, R` in
/// boundary order, using `OS = OP + Φ·OR` and `OT = Φ·OP + OR`.
pub fn pentagon_corners<T: Scalar>() -> [FaceVec<T>; 5] {
    let (z, o, phi) = (T::zero(), T::one(), T::phi());
    [
        FaceVec::new(z.clone(), z.clone()),
        FaceVec::new(o.clone(), z.clone()),
        FaceVec::new(phi.clone(), o.clone()),
        FaceVec::new(o.clone(), phi),
        FaceVec::new(z, o),
    ]
}

/// The face rotation taking `O ↦ R`, `P ↦ O`, `R ↦ S` as an exact affine map
/// `X ↦ shift + M·X` on oblique coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct PentagonRotation {
    /// Row-major linear part.
    pub matrix: [[QuadExt; 2]; 2],
    pub shift: FaceVec<QuadExt>,
}

impl PentagonRotation {
    /// Cached instance; the matrix is derived from the corner data once.
    pub fn get() -> &'static PentagonRotation {
        static ROT: OnceLock<PentagonRotation> = OnceLock::new();
        ROT.get_or_init(|| {
            let [o, _p, _t, s, r] = pentagon_corners::<QuadExt>();
            // columns: images of the basis vectors OP and OR
            let img_op = o.sub(&r);
            let img_or = s.sub(&r);
            PentagonRotation {
                matrix: [[img_op.p, img_or.p], [img_op.r, img_or.r]],
                shift: r,
            }
        })
    }

    pub fn apply_linear<T: Scalar>(&self, v: &FaceVec<T>) -> FaceVec<T> {
        let m = |i: usize, j: usize| T::from_quad(&self.matrix[i][j]);
        FaceVec::new(
            m(0, 0) * v.p.clone() + m(0, 1) * v.r.clone(),
            m(1, 0) * v.p.clone() + m(1, 1) * v.r.clone(),
        )
    }

    pub fn apply<T: Scalar>(&self, v: &FaceVec<T>) -> FaceVec<T> {
        let s = FaceVec::new(T::from_quad(&self.shift.p), T::from_quad(&self.shift.r));
        self.apply_linear(v).add(&s)
    }

    /// Rotation by the same angle about `center` instead of the face center.
    pub fn apply_about<T: Scalar>(&self, v: &FaceVec<T>, center: &FaceVec<T>) -> FaceVec<T> {
        self.apply_linear(&v.sub(center)).add(center)
    }
}

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown name `{0}`")]
pub struct UnknownName(pub String);

macro_rules! named_enum {
    ($(#[$m:meta])* $name:ident { $($var:ident => $s:literal),+ $(,)? }) => {
        $(#[$m])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
        #[serde(rename_all = "kebab-case")]
        pub enum $name { $($var),+ }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$var),+];

            pub fn name(self) -> &'static str {
                match self { $($name::$var => $s),+ }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        impl FromStr for $name {
            type Err = UnknownName;
            fn from_str(s: &str) -> Result<Self, UnknownName> {
                let norm = s.trim().to_ascii_lowercase().replace(['_', ' '], "-");
                match norm.as_str() {
                    $($s => Ok($name::$var),)+
                    _ => Err(UnknownName(s.to_string())),
                }
            }
        }
    };
}

named_enum!(PlatonicKind {
    Tetrahedron => "tetrahedron",
    Cube => "cube",
    Octahedron => "octahedron",
    Dodecahedron => "dodecahedron",
    Icosahedron => "icosahedron",
});

named_enum!(ArchimedeanKind {
    TruncatedTetrahedron => "truncated-tetrahedron",
    Cuboctahedron => "cuboctahedron",
    TruncatedCube => "truncated-cube",
    TruncatedOctahedron => "truncated-octahedron",
    Rhombicuboctahedron => "rhombicuboctahedron",
    TruncatedCuboctahedron => "truncated-cuboctahedron",
    SnubCube => "snub-cube",
    Icosidodecahedron => "icosidodecahedron",
    TruncatedDodecahedron => "truncated-dodecahedron",
    TruncatedIcosahedron => "truncated-icosahedron",
    Rhombicosidodecahedron => "rhombicosidodecahedron",
    TruncatedIcosidodecahedron => "truncated-icosidodecahedron",
    SnubDodecahedron => "snub-dodecahedron",
});

named_enum!(
    /// Handedness of a snub solid. `Right` is the orientation in which the
    /// face point sits at `x` along the next edge and `y` along the previous.
    Chirality {
        Left => "left",
        Right => "right",
    }
);

named_enum!(SnubKind {
    Cube => "snub-cube",
    Dodecahedron => "snub-dodecahedron",
});

impl PlatonicKind {
    /// Number of corners of each face.
    pub fn face_sides(self) -> usize {
        match self {
            PlatonicKind::Tetrahedron | PlatonicKind::Octahedron | PlatonicKind::Icosahedron => 3,
            PlatonicKind::Cube => 4,
            PlatonicKind::Dodecahedron => 5,
        }
    }

    /// `(V, E, F)`.
    pub fn counts(self) -> (usize, usize, usize) {
        match self {
            PlatonicKind::Tetrahedron => (4, 6, 4),
            PlatonicKind::Cube => (8, 12, 6),
            PlatonicKind::Octahedron => (6, 12, 8),
            PlatonicKind::Dodecahedron => (20, 30, 12),
            PlatonicKind::Icosahedron => (12, 30, 20),
        }
    }
}

impl ArchimedeanKind {
    /// The parent used when none is requested.
    pub fn default_parent(self) -> PlatonicKind {
        use ArchimedeanKind::*;
        match self {
            TruncatedTetrahedron => PlatonicKind::Tetrahedron,
            TruncatedOctahedron => PlatonicKind::Octahedron,
            TruncatedIcosahedron => PlatonicKind::Icosahedron,
            Cuboctahedron
            | TruncatedCube
            | Rhombicuboctahedron
            | TruncatedCuboctahedron
            | SnubCube => PlatonicKind::Cube,
            Icosidodecahedron
            | TruncatedDodecahedron
            | Rhombicosidodecahedron
            | TruncatedIcosidodecahedron
            | SnubDodecahedron => PlatonicKind::Dodecahedron,
        }
    }

    /// `(V, E, F)`.
    pub fn counts(self) -> (usize, usize, usize) {
        use ArchimedeanKind::*;
        match self {
            TruncatedTetrahedron => (12, 18, 8),
            Cuboctahedron => (12, 24, 14),
            TruncatedCube => (24, 36, 14),
            TruncatedOctahedron => (24, 36, 14),
            Rhombicuboctahedron => (24, 48, 26),
            TruncatedCuboctahedron => (48, 72, 26),
            SnubCube => (24, 60, 38),
            Icosidodecahedron => (30, 60, 32),
            TruncatedDodecahedron => (60, 90, 32),
            TruncatedIcosahedron => (60, 90, 32),
            Rhombicosidodecahedron => (60, 120, 62),
            TruncatedIcosidodecahedron => (120, 180, 62),
            SnubDodecahedron => (60, 150, 92),
        }
    }

    pub fn snub(self) -> Option<SnubKind> {
        match self {
            ArchimedeanKind::SnubCube => Some(SnubKind::Cube),
            ArchimedeanKind::SnubDodecahedron => Some(SnubKind::Dodecahedron),
            _ => None,
        }
    }
}

impl SnubKind {
    pub fn solid(self) -> ArchimedeanKind {
        match self {
            SnubKind::Cube => ArchimedeanKind::SnubCube,
            SnubKind::Dodecahedron => ArchimedeanKind::SnubDodecahedron,
        }
    }

    pub fn parent(self) -> PlatonicKind {
        self.solid().default_parent()
    }
}

//! End-to-end checks of the two folding constructions: the snub-cube fold
//! on a square face and the snub-dodecahedron crease on a pentagon face.

mod cube;
mod dodec;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::planegeom::{Crease, FoldError, Point2};

pub use cube::snub_cube_fold_trace;
pub use dodec::{
    final_fold_to_a1, g_points_and_lines, snub_dodec_crease, verify_dodec_fold, GLine,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// `value ≤ tol`.
    AtMost,
    /// `value > tol`.
    Above,
    /// Checked in exact arithmetic; `value` is 1 when it holds.
    Exact,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub relation: Relation,
    pub value: f64,
    pub tol: f64,
    pub pass: bool,
}

impl Check {
    pub fn at_most(value: f64, tol: f64) -> Self {
        Check {
            relation: Relation::AtMost,
            value,
            tol,
            pass: value <= tol,
        }
    }

    pub fn above(value: f64, tol: f64) -> Self {
        Check {
            relation: Relation::Above,
            value,
            tol,
            pass: value > tol,
        }
    }

    pub fn exact(holds: bool) -> Self {
        Check {
            relation: Relation::Exact,
            value: if holds { 1.0 } else { 0.0 },
            tol: 0.0,
            pass: holds,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FoldTrace {
    pub name: &'static str,
    pub inputs: BTreeMap<String, Vec<f64>>,
    pub crease: Crease,
    pub images: BTreeMap<String, Point2>,
    pub checks: BTreeMap<String, Check>,
}

impl FoldTrace {
    fn new(name: &'static str, crease: Crease) -> Self {
        FoldTrace {
            name,
            inputs: BTreeMap::new(),
            crease,
            images: BTreeMap::new(),
            checks: BTreeMap::new(),
        }
    }

    fn input(&mut self, key: &str, vals: impl IntoIterator<Item = f64>) {
        self.inputs
            .insert(key.to_string(), vals.into_iter().collect());
    }

    fn check(&mut self, key: impl Into<String>, c: Check) {
        self.checks.insert(key.into(), c);
    }

    pub fn passed(&self) -> bool {
        self.checks.values().all(|c| c.pass)
    }

    /// The trace itself, or the first failing check.
    pub fn into_result(self) -> Result<FoldTrace, VerifyError> {
        match self.checks.iter().find(|(_, c)| !c.pass) {
            None => Ok(self),
            Some((name, c)) => Err(VerifyError::VerificationFailed {
                check: name.clone(),
                value: c.value,
                tol: c.tol,
                trace: Box::new(self.clone()),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("check `{check}` failed: {value:e} against {tol:e}")]
    VerificationFailed {
        check: String,
        value: f64,
        tol: f64,
        trace: Box<FoldTrace>,
    },
    #[error(transparent)]
    Fold(#[from] FoldError),
}

fn point_vals(p: &Point2) -> [f64; 2] {
    [p.u, p.v]
}

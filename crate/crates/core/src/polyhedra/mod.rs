//! Exact rational polyhedral geometry in dimensions 2 to 4.
//!
//! Cone and hull computations enumerate candidate facets exhaustively over
//! all `(d-1)`-subsets of generators; at the sizes used here that is a few
//! thousand small determinants at most.

mod cone;
mod fan;
mod hull3;
mod polygon;

pub use cone::{dual_cone, Cone};
pub use fan::{angle_cmp, cross, Fan2D};
pub use hull3::{hull_3d, FaceLattice3, Facet3};
pub use polygon::{convex_hull_2d, cut_polygon, normal_fan, Polygon};

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratlin::{content, Int, IntVec};

/// Nonzero integer vector with content 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PrimVec(IntVec);

impl PrimVec {
    /// Positive rescaling of `v` to content 1.
    pub fn new(v: IntVec) -> Result<Self> {
        primitive(&v)
    }

    pub fn from_i64(v: &[i64]) -> Result<Self> {
        primitive(&v.iter().map(|&x| Int::from(x)).collect::<Vec<_>>())
    }

    pub fn coords(&self) -> &[Int] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn into_inner(self) -> IntVec {
        self.0
    }

    pub fn neg(&self) -> PrimVec {
        PrimVec(self.0.iter().map(|x| -x).collect())
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.0.iter().map(|x| i64::try_from(x).expect("coordinate fits in i64")).collect()
    }
}

impl fmt::Display for PrimVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn primitive(v: &[Int]) -> Result<PrimVec> {
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let g = content(v).abs();
    Ok(PrimVec(v.iter().map(|x| x / &g).collect()))
}

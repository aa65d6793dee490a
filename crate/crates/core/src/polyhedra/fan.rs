use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::PrimVec;
use crate::error::{Error, Result};
use crate::ratlin::Int;

pub fn cross(a: &[Int], b: &[Int]) -> Int {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn half(v: &[Int]) -> u8 {
    if v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()) {
        0
    } else {
        1
    }
}

/// Orders nonzero plane vectors by angle in `[0, 2pi)` from the positive x-axis.
pub fn angle_cmp(a: &[Int], b: &[Int]) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| Int::zero().cmp(&cross(a, b)))
}

/// A fan in the plane. Rays are sorted counterclockwise starting from angle
/// zero; `cones` lists the 2-dimensional cones as index pairs
/// `(i, (i + 1) % n)` spanning counterclockwise from ray `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fan2D {
    rays: Vec<PrimVec>,
    cones: Vec<(usize, usize)>,
    complete: bool,
}

impl Fan2D {
    /// The complete fan whose 2-cones are spanned by angularly consecutive rays.
    pub fn complete(rays: Vec<PrimVec>) -> Result<Self> {
        let rays = sort_rays(rays)?;
        let n = rays.len();
        if n < 3 {
            return Err(Error::IncompleteFan);
        }
        for i in 0..n {
            let j = (i + 1) % n;
            if !cross(rays[i].coords(), rays[j].coords()).is_positive() {
                return Err(Error::IncompleteFan);
            }
        }
        let cones = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Ok(Fan2D { rays, cones, complete: true })
    }

    /// A possibly incomplete fan from its rays and the 2-cones, each given by
    /// the generators of its bounding rays in counterclockwise order.
    pub fn from_cones(rays: Vec<PrimVec>, cones: &[(PrimVec, PrimVec)]) -> Result<Self> {
        let rays = sort_rays(rays)?;
        let n = rays.len();
        let mut idx = Vec::new();
        for (a, b) in cones {
            let i = rays.iter().position(|r| r == a).ok_or_else(|| Error::Degenerate(format!("{a} not a ray")))?;
            let j = rays.iter().position(|r| r == b).ok_or_else(|| Error::Degenerate(format!("{b} not a ray")))?;
            if j != (i + 1) % n || !cross(a.coords(), b.coords()).is_positive() {
                return Err(Error::Degenerate(format!("cone <{a},{b}> is not spanned by consecutive rays")));
            }
            idx.push((i, j));
        }
        idx.sort();
        idx.dedup();
        let complete = n >= 3 && idx.len() == n;
        Ok(Fan2D { rays, cones: idx, complete })
    }

    pub fn rays(&self) -> &[PrimVec] {
        &self.rays
    }

    pub fn cones(&self) -> &[(usize, usize)] {
        &self.cones
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn cone_rays(&self) -> impl Iterator<Item = (&PrimVec, &PrimVec)> {
        self.cones.iter().map(|&(i, j)| (&self.rays[i], &self.rays[j]))
    }

    pub fn is_smooth(&self) -> bool {
        self.cone_rays().all(|(a, b)| cross(a.coords(), b.coords()).abs() == Int::from(1))
    }

    pub fn ray_index(&self, r: &PrimVec) -> Option<usize> {
        self.rays.iter().position(|x| x == r)
    }

    /// Coarsest common refinement of two complete fans.
    pub fn common_refinement(&self, other: &Fan2D) -> Result<Fan2D> {
        if !self.complete || !other.complete {
            return Err(Error::IncompleteFan);
        }
        let mut rays = self.rays.clone();
        rays.extend(other.rays.iter().cloned());
        Fan2D::complete(rays)
    }
}

fn sort_rays(mut rays: Vec<PrimVec>) -> Result<Vec<PrimVec>> {
    if rays.iter().any(|r| r.dim() != 2) {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: rays.iter().map(PrimVec::dim).find(|&d| d != 2).unwrap_or(0),
        });
    }
    rays.sort_by(|a, b| angle_cmp(a.coords(), b.coords()));
    rays.dedup();
    Ok(rays)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(x: i64, y: i64) -> PrimVec {
        PrimVec::from_i64(&[x, y]).unwrap()
    }

    #[test]
    fn complete_fan_sorted() {
        let f = Fan2D::complete(vec![pv(-1, -1), pv(0, 1), pv(1, 0)]).unwrap();
        assert_eq!(f.rays(), &[pv(1, 0), pv(0, 1), pv(-1, -1)]);
        assert!(f.is_smooth());
        assert!(f.is_complete());
    }

    #[test]
    fn half_plane_is_not_complete() {
        assert_eq!(Fan2D::complete(vec![pv(1, 0), pv(0, 1), pv(-1, 0)]), Err(Error::IncompleteFan));
    }

    #[test]
    fn angle_order() {
        let mut v = vec![pv(0, -1), pv(-1, 0), pv(1, 1), pv(1, 0), pv(1, -1)];
        v.sort_by(|a, b| angle_cmp(a.coords(), b.coords()));
        assert_eq!(v, vec![pv(1, 0), pv(1, 1), pv(-1, 0), pv(0, -1), pv(1, -1)]);
    }

    #[test]
    fn partial_fan() {
        let f = Fan2D::from_cones(vec![pv(1, 0), pv(0, 1), pv(-1, 0)], &[(pv(1, 0), pv(0, 1))]).unwrap();
        assert!(!f.is_complete());
        assert_eq!(f.cones(), &[(0, 1)]);
    }
}

use itertools::Itertools;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{primitive, PrimVec};
use crate::error::{Error, Result};
use crate::ratlin::{dot_int, int_to_rat_vec, kernel_basis, rank, solve, Int, IntVec, Rat, RatMat};

/// Rational polyhedral cone given by its extremal generators, sorted
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cone {
    dim: usize,
    generators: Vec<PrimVec>,
    pointed: bool,
}

impl Cone {
    /// Drops zero vectors and generators lying in the cone of the others.
    pub fn new(dim: usize, gens: &[IntVec]) -> Result<Self> {
        if !(1..=4).contains(&dim) {
            return Err(Error::UnsupportedDimension(dim));
        }
        let mut prims: Vec<PrimVec> = Vec::new();
        for g in gens {
            if g.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: g.len() });
            }
            if let Ok(p) = primitive(g) {
                prims.push(p);
            }
        }
        prims.sort();
        prims.dedup();
        let mut keep: Vec<PrimVec> = Vec::new();
        for (i, g) in prims.iter().enumerate() {
            let others: Vec<IntVec> =
                prims.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.coords().to_vec()).collect();
            if !in_cone(g.coords(), &others) {
                keep.push(g.clone());
            }
        }
        let all: Vec<IntVec> = prims.iter().map(|p| p.coords().to_vec()).collect();
        let pointed = {
            let dual = dual_cone_raw(dim, &all);
            rank(&RatMat::from_rows(dual.iter().map(|v| int_to_rat_vec(v)).collect()).transpose_if_empty(dim)) == dim
        };
        // A non-pointed cone can have no extremal generators at all (a line,
        // a half-plane); keep the full primitive list in that case.
        let generators = if keep.is_empty() && !prims.is_empty() { prims } else { keep };
        Ok(Cone { dim, generators, pointed })
    }

    pub fn from_i64(dim: usize, gens: &[&[i64]]) -> Result<Self> {
        let gens: Vec<IntVec> = gens.iter().map(|g| g.iter().map(|&x| Int::from(x)).collect()).collect();
        Cone::new(dim, &gens)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[PrimVec] {
        &self.generators
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        let gens: Vec<IntVec> = self.generators.iter().map(|p| p.coords().to_vec()).collect();
        in_cone(v, &gens)
    }

    pub fn dual(&self) -> Vec<PrimVec> {
        let gens: Vec<IntVec> = self.generators.iter().map(|p| p.coords().to_vec()).collect();
        dual_cone(self.dim, &gens)
    }
}

trait EmptySafe {
    fn transpose_if_empty(self, dim: usize) -> RatMat;
}

impl EmptySafe for RatMat {
    fn transpose_if_empty(self, dim: usize) -> RatMat {
        if self.rows() == 0 {
            RatMat::zeros(1, dim)
        } else {
            self
        }
    }
}

/// Nonnegative-combination test by Caratheodory: try every linearly
/// independent subset of at most `d` generators.
fn in_cone(v: &[Int], gens: &[IntVec]) -> bool {
    if v.iter().all(Zero::is_zero) {
        return true;
    }
    let d = v.len();
    let target: Vec<Rat> = int_to_rat_vec(v);
    for k in 1..=d.min(gens.len()) {
        for subset in gens.iter().combinations(k) {
            let cols = RatMat::from_rows(subset.iter().map(|g| int_to_rat_vec(g)).collect()).transpose();
            if rank(&cols) != k {
                continue;
            }
            if let Some(x) = solve(&cols, &target) {
                if x.iter().all(|c| !c.is_negative()) {
                    return true;
                }
            }
        }
    }
    false
}

/// Primitive generators of `{y : <y, x> >= 0 for all generators x}`,
/// lexicographically sorted. A lineality space contributes `±` basis vectors.
pub fn dual_cone(dim: usize, gens: &[IntVec]) -> Vec<PrimVec> {
    let mut out: Vec<PrimVec> =
        dual_cone_raw(dim, gens).into_iter().map(|v| primitive(&v).expect("dual generator is nonzero")).collect();
    out.sort();
    out.dedup();
    out
}

fn dual_cone_raw(dim: usize, gens: &[IntVec]) -> Vec<IntVec> {
    let gens: Vec<IntVec> = gens.iter().filter(|g| g.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut out: Vec<IntVec> = Vec::new();
    let lineality: Vec<IntVec> = if gens.is_empty() {
        (0..dim).map(|i| (0..dim).map(|j| Int::from((i == j) as i64)).collect()).collect()
    } else {
        kernel_basis(&RatMat::from_rows(gens.iter().map(|g| int_to_rat_vec(g)).collect()))
    };
    for l in &lineality {
        out.push(l.clone());
        out.push(l.iter().map(|x| -x).collect());
    }
    if gens.is_empty() {
        return out;
    }
    // span(C) = orthogonal complement of the lineality space
    let span: Vec<IntVec> = if lineality.is_empty() {
        (0..dim).map(|i| (0..dim).map(|j| Int::from((i == j) as i64)).collect()).collect()
    } else {
        kernel_basis(&RatMat::from_rows(lineality.iter().map(|g| int_to_rat_vec(g)).collect()))
    };
    let k = span.len();
    let span_rat: Vec<Vec<Rat>> = span.iter().map(|s| int_to_rat_vec(s)).collect();
    for subset in gens.iter().combinations(k - 1) {
        // coefficients c with sum_j c_j <s_j, g> = 0 for g in subset
        let rows: Vec<Vec<Rat>> =
            subset.iter().map(|g| span.iter().map(|s| Rat::from_integer(dot_int(s, g))).collect()).collect();
        let sol =
            if rows.is_empty() { kernel_basis(&RatMat::zeros(1, k)) } else { kernel_basis(&RatMat::from_rows(rows)) };
        if sol.len() != 1 {
            continue;
        }
        let c = int_to_rat_vec(&sol[0]);
        let y: Vec<Rat> = (0..dim).map(|i| span_rat.iter().zip(&c).map(|(s, cj)| &s[i] * cj).sum()).collect();
        let y = crate::ratlin::clear_denominators(&y);
        let signs: Vec<Int> = gens.iter().map(|g| dot_int(&y, g)).collect();
        if signs.iter().all(|s| !s.is_negative()) {
            out.push(y);
        } else if signs.iter().all(|s| !s.is_positive()) {
            out.push(y.iter().map(|x| -x).collect());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(v: &[i64]) -> PrimVec {
        PrimVec::from_i64(v).unwrap()
    }

    fn gens(v: &[&[i64]]) -> Vec<IntVec> {
        v.iter().map(|g| g.iter().map(|&x| Int::from(x)).collect()).collect()
    }

    #[test]
    fn orthant_is_self_dual() {
        assert_eq!(dual_cone(2, &gens(&[&[1, 0], &[0, 1]])), vec![pv(&[0, 1]), pv(&[1, 0])]);
    }

    #[test]
    fn ray_dual_is_half_plane() {
        assert_eq!(dual_cone(2, &gens(&[&[1, 0]])), vec![pv(&[0, -1]), pv(&[0, 1]), pv(&[1, 0])]);
    }

    #[test]
    fn dual_of_origin_is_everything() {
        let d = dual_cone(3, &[]);
        assert_eq!(d.len(), 6);
    }

    #[test]
    fn half_plane_dual_is_ray() {
        assert_eq!(dual_cone(2, &gens(&[&[1, 0], &[0, 1], &[0, -1]])), vec![pv(&[1, 0])]);
    }

    #[test]
    fn redundant_generators_dropped() {
        let c = Cone::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1], &[2, 2, 2]]).unwrap();
        assert_eq!(c.generators(), &[pv(&[0, 0, 1]), pv(&[0, 1, 0]), pv(&[1, 0, 0])]);
        assert!(c.is_pointed());
        assert!(c.contains(&[Int::from(3), Int::from(1), Int::from(4)]));
        assert!(!c.contains(&[Int::from(-1), Int::from(1), Int::from(4)]));
    }

    #[test]
    fn non_pointed_cone() {
        let c = Cone::from_i64(2, &[&[1, 0], &[-1, 0], &[0, 1]]).unwrap();
        assert!(!c.is_pointed());
    }

    #[test]
    fn square_pyramid_double_dual() {
        let c = Cone::from_i64(3, &[&[1, 1, 1], &[-1, 1, 1], &[-1, -1, 1], &[1, -1, 1]]).unwrap();
        let d: Vec<IntVec> = c.dual().into_iter().map(PrimVec::into_inner).collect();
        assert_eq!(d.len(), 4);
        assert_eq!(dual_cone(3, &d), c.generators().to_vec());
    }
}

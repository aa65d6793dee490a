use std::cmp::Ordering;
use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratlin::{clear_denominators, content, dot, int_to_rat_vec, IntVec, Rat, RatVec};

/// A facet `{x : <normal, x> = offset}` of a 3-polytope lying in the
/// half-space `<normal, x> >= offset`. `vertices` is a cyclic order of the
/// facet's vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Facet3 {
    pub normal: IntVec,
    pub offset: Rat,
    pub vertices: Vec<usize>,
}

/// Face lattice of a full-dimensional polytope in R^3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceLattice3 {
    /// Extremal points, in order of first appearance in the input.
    pub vertices: Vec<RatVec>,
    /// For each vertex, the index of its first occurrence among the input points.
    pub input_index: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub facets: Vec<Facet3>,
}

impl FaceLattice3 {
    pub fn f_vector(&self) -> (usize, usize, usize) {
        (self.vertices.len(), self.edges.len(), self.facets.len())
    }

    /// Facets as sorted sets of input indices (convenient for label lookups).
    pub fn facet_input_sets(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> =
            self.facets.iter().map(|f| f.vertices.iter().map(|&v| self.input_index[v]).sorted().collect()).collect();
        out.sort();
        out
    }
}

fn sub(a: &[Rat], b: &[Rat]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn cross3(a: &[Rat], b: &[Rat]) -> RatVec {
    vec![&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]]
}

/// Exact convex hull by exhaustive facet search over point triples.
pub fn hull_3d(points: &[RatVec]) -> Result<FaceLattice3> {
    if let Some(p) = points.iter().find(|p| p.len() != 3) {
        return Err(Error::DimensionMismatch { expected: 3, got: p.len() });
    }
    // distinct points, remembering the first input index
    let mut pts: Vec<RatVec> = Vec::new();
    let mut first: Vec<usize> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if !pts.contains(p) {
            pts.push(p.clone());
            first.push(i);
        }
    }
    let mut planes: BTreeSet<(IntVec, Rat)> = BTreeSet::new();
    for (i, j, k) in (0..pts.len()).tuple_combinations() {
        let n = cross3(&sub(&pts[j], &pts[i]), &sub(&pts[k], &pts[i]));
        if n.iter().all(Zero::is_zero) {
            continue;
        }
        let mut n = clear_denominators(&n);
        let g = content(&n).abs();
        n = n.iter().map(|x| x / &g).collect();
        let nr = int_to_rat_vec(&n);
        let c = dot(&nr, &pts[i]);
        let vals: Vec<Rat> = pts.iter().map(|p| dot(&nr, p) - &c).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            planes.insert((n, c));
        } else if vals.iter().all(|v| !v.is_positive()) {
            planes.insert((n.iter().map(|x| -x).collect(), -c));
        }
    }
    if planes.len() < 4 {
        return Err(Error::Degenerate("points are not full-dimensional in R^3".into()));
    }
    let planes: Vec<(IntVec, Rat)> = planes.into_iter().collect();
    let on = |p: &RatVec, (n, c): &(IntVec, Rat)| dot(&int_to_rat_vec(n), p) == *c;

    // a point is a vertex iff the normals of its facets have rank 3
    let mut vertices = Vec::new();
    let mut input_index = Vec::new();
    let mut old_to_new = vec![usize::MAX; pts.len()];
    for (idx, p) in pts.iter().enumerate() {
        let normals: Vec<RatVec> = planes.iter().filter(|pl| on(p, pl)).map(|(n, _)| int_to_rat_vec(n)).collect();
        if normals.len() >= 3 && crate::ratlin::rank(&crate::RatMat::from_rows(normals)) == 3 {
            old_to_new[idx] = vertices.len();
            vertices.push(p.clone());
            input_index.push(first[idx]);
        }
    }

    let incidence: Vec<Vec<usize>> =
        planes.iter().map(|pl| (0..vertices.len()).filter(|&v| on(&vertices[v], pl)).collect()).collect();

    let mut edges = Vec::new();
    for (a, b) in (0..vertices.len()).tuple_combinations() {
        let shared = incidence.iter().filter(|f| f.contains(&a) && f.contains(&b)).count();
        if shared >= 2 {
            edges.push((a, b));
        }
    }

    let facets = planes
        .iter()
        .zip(&incidence)
        .map(|((n, c), vs)| Facet3 { normal: n.clone(), offset: c.clone(), vertices: cyclic_order(&vertices, vs, n) })
        .collect();

    Ok(FaceLattice3 { vertices, input_index, edges, facets })
}

/// Orders coplanar points by angle around their centroid, counterclockwise
/// when viewed from the side `normal` points to, starting at the smallest index.
fn cyclic_order(points: &[RatVec], idx: &[usize], normal: &IntVec) -> Vec<usize> {
    let n = int_to_rat_vec(normal);
    let k = Rat::from_integer(idx.len().into());
    let centroid: RatVec = (0..3).map(|c| idx.iter().map(|&i| points[i][c].clone()).sum::<Rat>() / &k).collect();
    let rel = |i: usize| sub(&points[i], &centroid);
    let reference = rel(idx[0]);
    let orient = |a: &RatVec, b: &RatVec| dot(&n, &cross3(a, b));
    let half = |w: &RatVec| {
        let s = orient(&reference, w);
        if s.is_positive() || (s.is_zero() && dot(&reference, w).is_positive()) {
            0
        } else {
            1
        }
    };
    let mut out = idx.to_vec();
    out.sort_by(|&a, &b| {
        let (wa, wb) = (rel(a), rel(b));
        half(&wa).cmp(&half(&wb)).then_with(|| match orient(&wa, &wb) {
            s if s.is_positive() => Ordering::Less,
            s if s.is_negative() => Ordering::Greater,
            _ => Ordering::Equal,
        })
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::rats;

    fn check_lattice(h: &FaceLattice3) {
        let (v, e, f) = h.f_vector();
        assert_eq!(v + f, e + 2, "Euler relation");
        for &(a, b) in &h.edges {
            let n = h.facets.iter().filter(|f| f.vertices.contains(&a) && f.vertices.contains(&b)).count();
            assert_eq!(n, 2);
        }
        for f in &h.facets {
            let nr = int_to_rat_vec(&f.normal);
            for (i, p) in h.vertices.iter().enumerate() {
                let val = dot(&nr, p);
                assert_eq!(val == f.offset, f.vertices.contains(&i));
                assert!(val >= f.offset);
            }
        }
    }

    #[test]
    fn cube() {
        let pts: Vec<RatVec> = (0..8).map(|m| rats(&[m & 1, (m >> 1) & 1, (m >> 2) & 1])).collect();
        let h = hull_3d(&pts).unwrap();
        assert_eq!(h.f_vector(), (8, 12, 6));
        check_lattice(&h);
        assert!(h.facets.iter().all(|f| f.vertices.len() == 4));
    }

    #[test]
    fn octahedron_with_interior_point() {
        let mut pts = vec![
            rats(&[1, 0, 0]),
            rats(&[-1, 0, 0]),
            rats(&[0, 1, 0]),
            rats(&[0, -1, 0]),
            rats(&[0, 0, 1]),
            rats(&[0, 0, -1]),
        ];
        pts.push(rats(&[0, 0, 0]));
        let h = hull_3d(&pts).unwrap();
        assert_eq!(h.f_vector(), (6, 12, 8));
        check_lattice(&h);
    }

    #[test]
    fn facet_cycles_are_polygons() {
        let pts: Vec<RatVec> = (0..8).map(|m| rats(&[m & 1, (m >> 1) & 1, (m >> 2) & 1])).collect();
        let h = hull_3d(&pts).unwrap();
        for f in &h.facets {
            let m = f.vertices.len();
            for i in 0..m {
                let (a, b) = (f.vertices[i], f.vertices[(i + 1) % m]);
                assert!(h.edges.contains(&(a.min(b), a.max(b))));
            }
        }
    }

    #[test]
    fn flat_input_rejected() {
        let pts = vec![rats(&[0, 0, 0]), rats(&[1, 0, 0]), rats(&[0, 1, 0]), rats(&[1, 1, 0])];
        assert!(matches!(hull_3d(&pts), Err(Error::Degenerate(_))));
    }
}

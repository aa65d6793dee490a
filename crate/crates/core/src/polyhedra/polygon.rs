use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{cross, primitive, Fan2D};
use crate::error::{Error, Result};
use crate::ratlin::{to_rat, Int, IntVec, Rat};

/// Strictly convex lattice polygon, vertices counterclockwise starting from
/// the lexicographically smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Polygon {
    vertices: Vec<IntVec>,
}

fn sub(a: &[Int], b: &[Int]) -> IntVec {
    vec![&a[0] - &b[0], &a[1] - &b[1]]
}

fn turn(a: &[Int], b: &[Int], c: &[Int]) -> Int {
    cross(&sub(b, a), &sub(c, a))
}

impl Polygon {
    /// Validates a counterclockwise strictly convex vertex cycle.
    pub fn new(vertices: Vec<IntVec>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::Degenerate("polygon needs at least 3 vertices".into()));
        }
        if vertices.iter().any(|v| v.len() != 2) {
            return Err(Error::DimensionMismatch { expected: 2, got: 0 });
        }
        for i in 0..n {
            let t = turn(&vertices[i], &vertices[(i + 1) % n], &vertices[(i + 2) % n]);
            if !t.is_positive() {
                return Err(Error::Degenerate("vertices are not a strictly convex counterclockwise cycle".into()));
            }
        }
        // a cycle with positive turns can still wind twice
        let winding: Int = (0..n).map(|i| cross(&vertices[i], &vertices[(i + 1) % n])).sum();
        if winding.is_negative() {
            return Err(Error::Degenerate("clockwise cycle".into()));
        }
        let start = (0..n).min_by(|&a, &b| vertices[a].cmp(&vertices[b])).unwrap();
        let mut v = vertices;
        v.rotate_left(start);
        Ok(Polygon { vertices: v })
    }

    pub fn from_i64(vertices: &[(i64, i64)]) -> Result<Self> {
        Polygon::new(vertices.iter().map(|&(x, y)| vec![Int::from(x), Int::from(y)]).collect())
    }

    /// Boundary walk with repeated and collinear points removed.
    fn from_boundary(points: Vec<IntVec>) -> Result<Self> {
        let mut pts: Vec<IntVec> = Vec::new();
        for p in points {
            if pts.last() != Some(&p) {
                pts.push(p);
            }
        }
        while pts.len() > 1 && pts.first() == pts.last() {
            pts.pop();
        }
        loop {
            let n = pts.len();
            if n < 3 {
                return Err(Error::Degenerate("polygon collapsed".into()));
            }
            let Some(i) = (0..n).find(|&i| turn(&pts[(i + n - 1) % n], &pts[i], &pts[(i + 1) % n]).is_zero()) else {
                break;
            };
            pts.remove(i);
        }
        Polygon::new(pts)
    }

    pub fn vertices(&self) -> &[IntVec] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Twice the area (shoelace).
    pub fn area2(&self) -> Int {
        let n = self.vertices.len();
        (0..n).map(|i| cross(&self.vertices[i], &self.vertices[(i + 1) % n])).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&IntVec, &IntVec)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    pub fn has_vertex(&self, p: &[i64]) -> bool {
        let q: IntVec = p.iter().map(|&x| Int::from(x)).collect();
        self.vertices.contains(&q)
    }

    /// Vertices as `(x, y)` pairs of machine integers, for display.
    pub fn to_i64(&self) -> Vec<(i64, i64)> {
        self.vertices.iter().map(|v| (i64::try_from(&v[0]).unwrap(), i64::try_from(&v[1]).unwrap())).collect()
    }
}

/// Counterclockwise hull with interior, duplicate and collinear points removed.
pub fn convex_hull_2d(points: &[IntVec]) -> Result<Polygon> {
    let mut pts: Vec<IntVec> = points.to_vec();
    if pts.iter().any(|p| p.len() != 2) {
        return Err(Error::DimensionMismatch { expected: 2, got: 0 });
    }
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::Degenerate("fewer than three distinct points".into()));
    }
    let mut lower: Vec<IntVec> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<IntVec> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(Error::Degenerate("collinear points".into()));
    }
    Polygon::new(lower)
}

/// Fan of primitive inner edge normals.
pub fn normal_fan(p: &Polygon) -> Fan2D {
    let rays = p
        .edges()
        .map(|(a, b)| {
            let d = sub(b, a);
            primitive(&[-d[1].clone(), d[0].clone()]).expect("edge of a valid polygon is nonzero")
        })
        .collect();
    Fan2D::complete(rays).expect("normal fan of a polygon is complete")
}

/// Splits `p` along `{mu = level}` into `(p ∩ {mu <= level}, p ∩ {mu >= level})`.
/// The cut must cross the interior and meet the boundary in lattice points.
pub fn cut_polygon(p: &Polygon, mu: &[Int], level: &Rat) -> Result<(Polygon, Polygon)> {
    if mu.len() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: mu.len() });
    }
    let vals: Vec<Rat> = p.vertices.iter().map(|v| to_rat(&(&mu[0] * &v[0] + &mu[1] * &v[1])) - level).collect();
    if !vals.iter().any(Signed::is_negative) || !vals.iter().any(Signed::is_positive) {
        return Err(Error::CutMissesInterior);
    }
    let n = p.vertices.len();
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        let (a, b) = (&p.vertices[i], &p.vertices[j]);
        let (va, vb) = (&vals[i], &vals[j]);
        if !va.is_positive() {
            lo.push(a.clone());
        }
        if !va.is_negative() {
            hi.push(a.clone());
        }
        if (va.is_negative() && vb.is_positive()) || (va.is_positive() && vb.is_negative()) {
            let t = va / (va - vb);
            let x = to_rat(&a[0]) + &t * to_rat(&(&b[0] - &a[0]));
            let y = to_rat(&a[1]) + &t * to_rat(&(&b[1] - &a[1]));
            if !x.is_integer() || !y.is_integer() {
                return Err(Error::NonLatticeCut(format!("({x}, {y})")));
            }
            let q = vec![x.to_integer(), y.to_integer()];
            lo.push(q.clone());
            hi.push(q);
        }
    }
    Ok((Polygon::from_boundary(lo)?, Polygon::from_boundary(hi)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::PrimVec;
    use crate::ratlin::{ints, rat_int};

    fn octagon() -> Polygon {
        Polygon::from_i64(&[(-1, -3), (1, -3), (3, -1), (3, 1), (1, 3), (-1, 3), (-3, 1), (-3, -1)]).unwrap()
    }

    fn pts(v: &[(i64, i64)]) -> Vec<IntVec> {
        v.iter().map(|&(x, y)| ints(&[x, y])).collect()
    }

    #[test]
    fn square_with_center() {
        let h = convex_hull_2d(&pts(&[(0, 0), (1, 0), (1, 1), (0, 1), (0, 0)])).unwrap();
        let h2 = convex_hull_2d(&pts(&[(0, 0), (2, 0), (2, 2), (0, 2), (1, 1), (1, 0)])).unwrap();
        assert_eq!(h, Polygon::from_i64(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap());
        assert_eq!(h2.len(), 4);
    }

    #[test]
    fn octagon_points_all_extremal() {
        let h =
            convex_hull_2d(&pts(&[(1, 3), (-1, 3), (1, -3), (-1, -3), (3, 1), (-3, 1), (3, -1), (-3, -1)])).unwrap();
        assert_eq!(h, octagon());
    }

    #[test]
    fn collinear_rejected() {
        assert!(matches!(convex_hull_2d(&pts(&[(0, 0), (1, 1), (2, 2)])), Err(Error::Degenerate(_))));
    }

    #[test]
    fn normal_fans() {
        let sq = Polygon::from_i64(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        let f = normal_fan(&sq);
        let want: Vec<PrimVec> =
            [(1, 0), (0, 1), (-1, 0), (0, -1)].iter().map(|&(x, y)| PrimVec::from_i64(&[x, y]).unwrap()).collect();
        assert_eq!(f.rays(), want.as_slice());
        let tri = Polygon::from_i64(&[(0, 0), (1, 0), (0, 1)]).unwrap();
        let f = normal_fan(&tri);
        let want: Vec<PrimVec> =
            [(1, 0), (0, 1), (-1, -1)].iter().map(|&(x, y)| PrimVec::from_i64(&[x, y]).unwrap()).collect();
        assert_eq!(f.rays(), want.as_slice());
    }

    #[test]
    fn octagon_normal_fan_from_vertex_differences() {
        // oracle: rotate each edge vector by +90 degrees and divide by its gcd
        let p = octagon();
        let mut expected: Vec<PrimVec> = Vec::new();
        for (a, b) in p.edges() {
            let (dx, dy) = (i64::try_from(&(&b[0] - &a[0])).unwrap(), i64::try_from(&(&b[1] - &a[1])).unwrap());
            let g = num_integer::gcd(dx, dy);
            expected.push(PrimVec::from_i64(&[-dy / g, dx / g]).unwrap());
        }
        let f = normal_fan(&p);
        assert_eq!(f.rays().len(), 8);
        for r in &expected {
            assert!(f.rays().contains(r));
        }
        let listed = [(0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1), (1, 0), (1, 1)];
        for (x, y) in listed {
            assert!(f.rays().contains(&PrimVec::from_i64(&[x, y]).unwrap()));
        }
    }

    #[test]
    fn octagon_cuts() {
        let p = octagon();
        let (lo, hi) = cut_polygon(&p, &ints(&[0, 1]), &rat_int(-1)).unwrap();
        assert_eq!(lo, Polygon::from_i64(&[(-1, -3), (1, -3), (3, -1), (-3, -1)]).unwrap());
        assert_eq!(hi.len(), 6);
        assert_eq!(lo.area2() + hi.area2(), p.area2());

        let (lo, _) = cut_polygon(&p, &ints(&[1, 0]), &rat_int(-1)).unwrap();
        assert_eq!(lo, Polygon::from_i64(&[(-3, -1), (-1, -3), (-1, 3), (-3, 1)]).unwrap());

        let (lo, hi) = cut_polygon(&p, &ints(&[1, 1]), &rat_int(-2)).unwrap();
        assert_eq!(lo, Polygon::from_i64(&[(-1, -3), (1, -3), (-3, 1), (-3, -1)]).unwrap());
        assert_eq!(hi.len(), 6);
    }

    #[test]
    fn cut_errors() {
        let p = octagon();
        assert_eq!(cut_polygon(&p, &ints(&[0, 1]), &rat_int(3)), Err(Error::CutMissesInterior));
        assert_eq!(cut_polygon(&p, &ints(&[0, 1]), &rat_int(7)), Err(Error::CutMissesInterior));
        assert!(cut_polygon(&p, &ints(&[0, 1]), &rat_int(0)).is_ok());
        assert!(matches!(cut_polygon(&p, &ints(&[1, 2]), &rat_int(0)), Err(Error::NonLatticeCut(_))));
    }

    #[test]
    fn clockwise_rejected() {
        assert!(Polygon::from_i64(&[(0, 0), (0, 1), (1, 0)]).is_err());
    }
}

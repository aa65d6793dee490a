//! Complete toric surfaces: cyclic quotient singularities, Hirzebruch–Jung
//! resolution and Q-valued intersection numbers of the ray divisors.
//!
//! Intersection numbers on a singular surface are always obtained the same
//! way: resolve, compute on the smooth fan from the wall relations
//! `u_{i-1} + u_{i+1} = -(D_i^2) u_i`, and pull back each ray divisor by
//! adding the rational combination of exceptional curves that makes it
//! orthogonal to all of them.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyhedra::{cross, primitive, Fan2D, PrimVec};
use crate::ratlin::{solve, to_rat, Int, Rat, RatMat};

/// Type of the affine toric surface of a 2-cone.
///
/// `Cyclic { n, q }` means the cone is lattice-equivalent to
/// `<(n,-q), (0,1)>`, with `(0,1)` the image of the counterclockwise ray.
/// Swapping the two rays replaces `q` by its inverse modulo `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SingularityType {
    Smooth,
    Cyclic { n: u64, q: u64 },
}

impl SingularityType {
    pub fn is_a1(&self) -> bool {
        matches!(self, SingularityType::Cyclic { n: 2, q: 1 })
    }
}

impl std::fmt::Display for SingularityType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SingularityType::Smooth => write!(f, "smooth"),
            SingularityType::Cyclic { n: 2, q: 1 } => write!(f, "A1"),
            SingularityType::Cyclic { n, q } => write!(f, "1/{n}(1,{q})"),
        }
    }
}

/// `(s, t)` with `s*a + t*b = 1` for a primitive `(a, b)`.
fn bezout(a: &Int, b: &Int) -> (Int, Int) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.x, -e.y)
    } else {
        (e.x, e.y)
    }
}

/// Singularity type of the cone spanned by `u` and `v` (in either order).
pub fn cone_singularity(u: &PrimVec, v: &PrimVec) -> Result<SingularityType> {
    let d = cross(u.coords(), v.coords());
    if d.is_zero() {
        return Err(Error::ParallelRays);
    }
    let (u, v) = if d.is_positive() { (u, v) } else { (v, u) };
    let n = d.abs();
    if n.is_one() {
        return Ok(SingularityType::Smooth);
    }
    // A = [[b, -a], [s, t]] is unimodular and sends v = (a, b) to e2; since
    // u is clockwise of v, A u = (n, y), and shearing y -> y + kx gives (n, -q).
    let (a, b) = (&v.coords()[0], &v.coords()[1]);
    let (s, t) = bezout(a, b);
    let (u0, u1) = (&u.coords()[0], &u.coords()[1]);
    debug_assert_eq!(b * u0 - a * u1, n);
    let y = &s * u0 + &t * u1;
    let q = (-y).mod_floor(&n);
    Ok(SingularityType::Cyclic { n: n.to_u64().expect("index fits in u64"), q: q.to_u64().expect("q fits in u64") })
}

/// Hirzebruch–Jung continued fraction `n/q = b1 - 1/(b2 - ...)`.
pub fn hj_continued_fraction(n: u64, q: u64) -> Vec<u64> {
    let (mut n, mut q) = (n, q);
    let mut out = Vec::new();
    while q > 0 {
        let b = n.div_ceil(q);
        out.push(b);
        let r = b * q - n;
        n = q;
        q = r;
    }
    out
}

/// Minimal smooth subdivision of the counterclockwise cone `<u, v>`: the
/// interior rays in counterclockwise order.
pub fn resolve_cone(u: &PrimVec, v: &PrimVec) -> Vec<PrimVec> {
    let mut out = Vec::new();
    let mut u = u.clone();
    loop {
        let n = cross(u.coords(), v.coords());
        debug_assert!(n.is_positive());
        if n.is_one() {
            return out;
        }
        // lattice points w with cross(u, w) = 1 form w0 + Z u; take the one
        // closest to v that is still strictly inside the cone
        let (a, b) = (&u.coords()[0], &u.coords()[1]);
        let (s, t) = bezout(a, b);
        let w0 = [-t, s];
        let c0 = cross(&w0, v.coords());
        let shift = (Int::one() - &c0).div_ceil(&n);
        let w = [&w0[0] + &shift * a, &w0[1] + &shift * b];
        let w = primitive(&w).expect("nonzero lattice point");
        out.push(w.clone());
        u = w;
    }
}

/// A smooth refinement together with the position of every original ray.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resolution {
    pub fan: Fan2D,
    /// `provenance[i]` is the index in `fan` of ray `i` of the input fan.
    pub provenance: Vec<usize>,
}

impl Resolution {
    pub fn exceptional(&self) -> Vec<usize> {
        (0..self.fan.rays().len()).filter(|i| !self.provenance.contains(i)).collect()
    }
}

pub fn resolve(f: &Fan2D) -> Result<Resolution> {
    if !f.is_complete() {
        return Err(Error::IncompleteFan);
    }
    let mut rays: Vec<PrimVec> = f.rays().to_vec();
    for (u, v) in f.cone_rays() {
        rays.extend(resolve_cone(u, v));
    }
    let fan = Fan2D::complete(rays)?;
    let provenance = f.rays().iter().map(|r| fan.ray_index(r).expect("original ray survives")).collect();
    Ok(Resolution { fan, provenance })
}

/// Intersection matrix of a smooth complete fan from the wall relations.
fn smooth_intersections(f: &Fan2D) -> RatMat {
    let rays = f.rays();
    let m = rays.len();
    let mut out = RatMat::zeros(m, m);
    for i in 0..m {
        let prev = &rays[(i + m - 1) % m];
        let next = &rays[(i + 1) % m];
        let sum: Vec<Int> = prev.coords().iter().zip(next.coords()).map(|(a, b)| a + b).collect();
        // sum = a * u_i; read a off a nonzero coordinate
        let u = rays[i].coords();
        let k = if u[0].is_zero() { 1 } else { 0 };
        let a = Rat::new(sum[k].clone(), u[k].clone());
        out[(i, i)] = -a;
        out[(i, (i + 1) % m)] = Rat::one();
        out[((i + 1) % m, i)] = Rat::one();
    }
    out
}

/// Q-valued intersection numbers of the ray divisors of a complete fan.
pub fn intersection_matrix(f: &Fan2D) -> Result<RatMat> {
    let res = resolve(f)?;
    let full = smooth_intersections(&res.fan);
    let exc = res.exceptional();
    let m = f.rays().len();
    if exc.is_empty() {
        let p = &res.provenance;
        let rows = (0..m).map(|i| (0..m).map(|j| full[(p[i], p[j])].clone()).collect()).collect();
        return Ok(RatMat::from_rows(rows));
    }
    let ee = RatMat::from_rows(exc.iter().map(|&a| exc.iter().map(|&b| full[(a, b)].clone()).collect()).collect());
    // pullback of D_i as a vector over all rays of the resolution
    let mut pullbacks: Vec<Vec<Rat>> = Vec::new();
    for i in 0..m {
        let pi = res.provenance[i];
        let rhs: Vec<Rat> = exc.iter().map(|&e| -full[(pi, e)].clone()).collect();
        let c = solve(&ee, &rhs).ok_or_else(|| Error::Degenerate("exceptional form is singular".into()))?;
        let mut v = vec![Rat::zero(); res.fan.rays().len()];
        v[pi] = Rat::one();
        for (k, &e) in exc.iter().enumerate() {
            v[e] = c[k].clone();
        }
        pullbacks.push(v);
    }
    let n = res.fan.rays().len();
    let mut out = RatMat::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            let mut s = Rat::zero();
            for a in 0..n {
                if pullbacks[i][a].is_zero() {
                    continue;
                }
                for b in 0..n {
                    if !pullbacks[j][b].is_zero() {
                        s += &pullbacks[i][a] * &pullbacks[j][b] * &full[(a, b)];
                    }
                }
            }
            out[(i, j)] = s;
        }
    }
    Ok(out)
}

/// Invariants of a complete toric surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricSurfaceReport {
    pub rays: Vec<PrimVec>,
    /// One entry per 2-cone `<ray i, ray i+1>`.
    pub singularities: Vec<SingularityType>,
    pub intersection_matrix: RatMat,
    pub self_intersections: Vec<Rat>,
    /// `K^2 = (sum of all ray divisors)^2`.
    pub canonical_self_intersection: Rat,
    pub smooth: bool,
}

impl ToricSurfaceReport {
    /// Self-intersection cycle normalized up to rotation and reflection.
    pub fn canonical_cycle(&self) -> Vec<Rat> {
        canonical_cycle(&self.self_intersections)
    }

    /// Self-intersections as a sorted multiset.
    pub fn self_intersection_multiset(&self) -> Vec<Rat> {
        let mut v = self.self_intersections.clone();
        v.sort();
        v
    }
}

/// Lexicographically smallest rotation of the sequence or its reverse.
pub fn canonical_cycle(c: &[Rat]) -> Vec<Rat> {
    let n = c.len();
    let mut rev = c.to_vec();
    rev.reverse();
    let mut best: Option<Vec<Rat>> = None;
    for seq in [c.to_vec(), rev] {
        for k in 0..n.max(1) {
            let rot: Vec<Rat> = (0..n).map(|i| seq[(i + k) % n].clone()).collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

pub fn surface_invariants(f: &Fan2D) -> Result<ToricSurfaceReport> {
    let im = intersection_matrix(f)?;
    let singularities = f.cone_rays().map(|(u, v)| cone_singularity(u, v)).collect::<Result<Vec<_>>>()?;
    let m = im.rows();
    let self_intersections = (0..m).map(|i| im[(i, i)].clone()).collect();
    let mut k2 = Rat::zero();
    for i in 0..m {
        for j in 0..m {
            k2 += &im[(i, j)];
        }
    }
    Ok(ToricSurfaceReport {
        rays: f.rays().to_vec(),
        smooth: singularities.iter().all(|s| *s == SingularityType::Smooth),
        singularities,
        intersection_matrix: im,
        self_intersections,
        canonical_self_intersection: k2,
    })
}

/// `sum_i <m, u_i> D_i` as a row vector of intersection numbers; zero for
/// every lattice functional `m` on a complete surface.
pub fn linear_equivalence_residual(f: &Fan2D, im: &RatMat, m: &[Int]) -> Vec<Rat> {
    let coeffs: Vec<Rat> =
        f.rays().iter().map(|r| to_rat(&(&m[0] * &r.coords()[0] + &m[1] * &r.coords()[1]))).collect();
    (0..im.cols()).map(|j| (0..im.rows()).map(|i| &coeffs[i] * &im[(i, j)]).sum()).collect()
}

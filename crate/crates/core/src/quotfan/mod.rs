//! Combinatorial (Kapranov–Sturmfels–Zelevinsky) quotients of toric
//! varieties by subtori, for 2-dimensional quotients, and the check that a
//! subfan maps isomorphically onto a fan (a geometric quotient chart).
//!
//! A ray `r` of the quotient belongs to the fan iff the intersection of all
//! projected cones containing `r` is exactly the ray `r`. Projected cones are
//! handled through their inequality description, obtained as the dual cone
//! of the image generators.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyhedra::{angle_cmp, cross, dual_cone, primitive, Fan2D, PrimVec};
use crate::ratlin::{dot_int, hnf, int_to_rat_vec, rank, Int, IntMat, IntVec, RatMat};

/// A subtorus `H` of `T` given by the inclusion of cocharacter lattices and
/// the induced projection onto the quotient lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusAction {
    /// `rank(T) x rank(H)`, full column rank.
    pub inclusion: IntMat,
    /// `rank(T/H) x rank(T)`, with `projection * inclusion = 0`.
    pub projection: IntMat,
}

impl TorusAction {
    pub fn new(inclusion: IntMat) -> Result<Self> {
        let projection = cokernel_projection(&inclusion)?;
        Ok(TorusAction { inclusion, projection })
    }

    pub fn rank_t(&self) -> usize {
        self.inclusion.rows()
    }

    pub fn rank_h(&self) -> usize {
        self.inclusion.cols()
    }
}

/// The face fan of the positive orthant in `Z^rank`: every subset of
/// `{1, ..., rank}` spans a cone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthantFan {
    pub rank: usize,
    pub cones: Vec<Vec<usize>>,
}

impl OrthantFan {
    pub fn new(rank: usize) -> Self {
        let mut cones: Vec<Vec<usize>> =
            (0u32..1 << rank).map(|m| (1..=rank).filter(|i| m >> (i - 1) & 1 == 1).collect()).collect();
        cones.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        OrthantFan { rank, cones }
    }

    /// Generators `e_i, i in I` (1-based labels).
    pub fn generators(&self, cone: &[usize]) -> Vec<IntVec> {
        orthant_generators(self.rank, cone)
    }

    pub fn explicit_cones(&self) -> Vec<Vec<IntVec>> {
        self.cones.iter().map(|c| self.generators(c)).collect()
    }
}

fn orthant_generators(rank: usize, cone: &[usize]) -> Vec<IntVec> {
    cone.iter().map(|&i| (1..=rank).map(|j| Int::from((i == j) as i64)).collect()).collect()
}

/// Maximal minors gcd of a matrix with `k` columns, `k <= rows`.
fn maximal_minor_gcd(m: &IntMat) -> Int {
    use itertools::Itertools;
    use num_integer::Integer;
    let k = m.cols();
    (0..m.rows()).combinations(k).fold(Int::zero(), |g, rows| g.gcd(&m.select_rows(&rows).det()))
}

/// Integer matrix whose rows form a basis of the left kernel of `inclusion`,
/// in row Hermite normal form. It maps `Z^n` onto the quotient lattice.
pub fn cokernel_projection(inclusion: &IntMat) -> Result<IntMat> {
    let k = inclusion.cols();
    let n = inclusion.rows();
    if rank(&inclusion.to_rat()) != k {
        return Err(Error::Degenerate("inclusion is not injective".into()));
    }
    if !maximal_minor_gcd(inclusion).is_one() {
        return Err(Error::TorsionCokernel);
    }
    let (h, u) = hnf(inclusion);
    let zero_rows: Vec<usize> = (0..n).filter(|&r| h.row(r).iter().all(Zero::is_zero)).collect();
    let p = u.select_rows(&zero_rows);
    Ok(hnf(&p).0)
}

/// `a` and `b` (same shape, full row rank) differ by a left `GL(Z)` factor.
pub fn lattice_equivalent(a: &IntMat, b: &IntMat) -> bool {
    a.rows() == b.rows() && a.cols() == b.cols() && hnf(a).0 == hnf(b).0
}

fn project(pi: &IntMat, gens: &[IntVec]) -> Vec<IntVec> {
    gens.iter().map(|g| pi.mul_vec(g)).filter(|v| v.iter().any(|x| !x.is_zero())).collect()
}

/// A projected cone in the plane, kept as image generators and inequalities.
struct PlaneCone {
    gens: Vec<IntVec>,
    ineqs: Vec<IntVec>,
}

impl PlaneCone {
    fn new(gens: Vec<IntVec>) -> Self {
        let ineqs = dual_cone(2, &gens).into_iter().map(PrimVec::into_inner).collect();
        PlaneCone { gens, ineqs }
    }

    fn contains(&self, x: &[Int]) -> bool {
        // a cone spanned by nothing is {0}, whose dual has generators +-e_i
        self.ineqs.iter().all(|a| !dot_int(a, x).is_negative())
    }
}

/// KSZ quotient fan of `cones` (each given by generators) under a rank-2
/// projection `pi`.
pub fn quotient_fan(cones: &[Vec<IntVec>], pi: &IntMat) -> Result<Fan2D> {
    if pi.rows() != 2 {
        return Err(Error::UnsupportedDimension(pi.rows()));
    }
    if let Some(g) = cones.iter().flatten().find(|g| g.len() != pi.cols()) {
        return Err(Error::DimensionMismatch { expected: pi.cols(), got: g.len() });
    }
    let images: Vec<PlaneCone> = cones.iter().map(|c| PlaneCone::new(project(pi, c))).collect();
    let candidates: BTreeSet<PrimVec> =
        images.iter().flat_map(|c| c.gens.iter()).map(|g| primitive(g).expect("nonzero image")).collect();

    let mut rays = Vec::new();
    for r in candidates {
        let rc = r.coords();
        let normal = [-rc[1].clone(), rc[0].clone()];
        let mut side_pos = false;
        let mut side_neg = false;
        let mut pointed = false;
        let mut any = false;
        for c in images.iter().filter(|c| c.contains(rc)) {
            any = true;
            for a in &c.ineqs {
                let ar = dot_int(a, rc);
                if ar.is_positive() {
                    pointed = true;
                } else {
                    let an = dot_int(a, &normal);
                    side_pos |= an.is_negative();
                    side_neg |= an.is_positive();
                }
            }
        }
        if any && side_pos && side_neg && pointed {
            rays.push(r);
        }
    }

    rays.sort_by(|a, b| angle_cmp(a.coords(), b.coords()));
    let n = rays.len();
    let mut two_cones = Vec::new();
    for i in 0..n {
        if n < 2 {
            break;
        }
        let (a, b) = (&rays[i], &rays[(i + 1) % n]);
        let c = cross(a.coords(), b.coords());
        // a point strictly inside the sector from a to b
        let probe: IntVec = if c.is_positive() {
            a.coords().iter().zip(b.coords()).map(|(x, y)| x + y).collect()
        } else {
            vec![-a.coords()[1].clone(), a.coords()[0].clone()]
        };
        if images.iter().any(|im| im.contains(&probe)) {
            if !c.is_positive() {
                return Err(Error::Degenerate("quotient has a non-pointed 2-cone".into()));
            }
            two_cones.push((a.clone(), b.clone()));
        }
    }
    Fan2D::from_cones(rays, &two_cones)
}

/// Rank-1 quotient: the rays (of `+1` and `-1`) present in the quotient fan.
pub fn quotient_rays_rank1(cones: &[Vec<IntVec>], pi: &IntMat) -> Result<Vec<PrimVec>> {
    if pi.rows() != 1 {
        return Err(Error::UnsupportedDimension(pi.rows()));
    }
    let images: Vec<Vec<IntVec>> = cones.iter().map(|c| project(pi, c)).collect();
    let mut out = Vec::new();
    for sign in [1i64, -1] {
        let r = Int::from(sign);
        let containing: Vec<&Vec<IntVec>> =
            images.iter().filter(|im| im.iter().any(|g| (&g[0] * &r).is_positive())).collect();
        // the intersection is the ray iff no containing cone is the whole line
        if !containing.is_empty() && containing.iter().any(|im| im.iter().all(|g| (&g[0] * &r).is_positive())) {
            out.push(PrimVec::new(vec![r]).expect("nonzero"));
        }
    }
    out.sort();
    Ok(out)
}

pub fn quotient_fan_orthant(fan: &OrthantFan, pi: &IntMat) -> Result<Fan2D> {
    quotient_fan(&fan.explicit_cones(), pi)
}

/// Outcome of [`check_geometric_subfan`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubfanCheck {
    pub ok: bool,
    /// `pi` is injective on every cone.
    pub injective: bool,
    /// The image cones meet along common faces.
    pub is_fan: bool,
    pub image: Fan2D,
}

/// Checks that the subfan of the orthant fan given by `cones` (1-based index
/// sets) projects isomorphically, cone by cone, onto a fan.
pub fn check_geometric_subfan(cones: &[Vec<usize>], pi: &IntMat) -> Result<SubfanCheck> {
    if pi.rows() != 2 {
        return Err(Error::UnsupportedDimension(pi.rows()));
    }
    let rank_t = pi.cols();
    let set: BTreeSet<Vec<usize>> = cones
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.sort();
            c.dedup();
            c
        })
        .collect();
    if let Some(bad) = set.iter().flatten().find(|&&i| i == 0 || i > rank_t) {
        return Err(Error::OutOfRange(format!("orthant index {bad}")));
    }
    for c in &set {
        for skip in 0..c.len() {
            let face: Vec<usize> = c.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &i)| i).collect();
            if !set.contains(&face) {
                return Err(Error::NotClosedUnderFaces(format!("{face:?} is a face of {c:?}")));
            }
        }
    }
    let mut injective = true;
    for c in &set {
        let img: Vec<IntVec> = orthant_generators(rank_t, c).iter().map(|g| pi.mul_vec(g)).collect();
        if !img.is_empty() && rank(&RatMat::from_rows(img.iter().map(|v| int_to_rat_vec(v)).collect())) != c.len() {
            injective = false;
        }
    }
    let image_of = |i: usize| primitive(&pi.mul_vec(&orthant_generators(rank_t, &[i])[0]));
    let ray_labels: Vec<usize> = set.iter().filter(|c| c.len() == 1).map(|c| c[0]).collect();
    let mut rays: Vec<PrimVec> = Vec::new();
    let mut is_fan = true;
    for &i in &ray_labels {
        match image_of(i) {
            Ok(r) if !rays.contains(&r) => rays.push(r),
            Ok(_) => is_fan = false,
            Err(_) => injective = false,
        }
    }
    let mut two = Vec::new();
    for c in set.iter().filter(|c| c.len() == 2) {
        let (Ok(a), Ok(b)) = (image_of(c[0]), image_of(c[1])) else { continue };
        let d = cross(a.coords(), b.coords());
        if d.is_zero() {
            continue;
        }
        let (a, b) = if d.is_positive() { (a, b) } else { (b, a) };
        let strictly_inside = rays
            .iter()
            .any(|r| cross(a.coords(), r.coords()).is_positive() && cross(r.coords(), b.coords()).is_positive());
        if strictly_inside || two.contains(&(a.clone(), b.clone())) {
            is_fan = false;
            continue;
        }
        two.push((a, b));
    }
    if set.iter().any(|c| c.len() > 2) {
        is_fan = false;
    }
    let image = Fan2D::from_cones(rays, &two)?;
    Ok(SubfanCheck { ok: injective && is_fan, injective, is_fan, image })
}

/// Cocharacters of the rank-2 subtorus `H` of the maximal torus of the
/// flag variety: `-[[1,0],[0,1],[1,1],[2,1]]`.
pub fn reference_inclusion() -> IntMat {
    IntMat::from_i64(&[&[-1, 0], &[0, -1], &[-1, -1], &[-2, -1]])
}

/// A projection onto `N(T/H)` annihilating [`reference_inclusion`].
pub fn reference_projection() -> IntMat {
    IntMat::from_i64(&[&[-1, -1, 1, 0], &[-1, 0, -1, 1]])
}

/// The three geometric quotient charts of the orthant fan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChartSubfan {
    /// Image: the projective plane.
    P,
    /// Image: the quadric cone `P(1,1,2)`.
    PPrime,
    /// Image: the quotient fan itself.
    Circ,
}

impl ChartSubfan {
    pub const ALL: [ChartSubfan; 3] = [ChartSubfan::P, ChartSubfan::PPrime, ChartSubfan::Circ];

    /// Cones as 1-based index sets, closed under faces.
    pub fn cones(self) -> Vec<Vec<usize>> {
        let v: &[&[usize]] = match self {
            ChartSubfan::P => &[&[], &[2], &[3], &[4], &[2, 3], &[2, 4], &[3, 4]],
            ChartSubfan::PPrime => &[&[], &[1], &[3], &[4], &[1, 3], &[1, 4], &[3, 4]],
            ChartSubfan::Circ => &[&[], &[1], &[2], &[3], &[4], &[1, 2], &[2, 4], &[3, 4], &[1, 3]],
        };
        v.iter().map(|c| c.to_vec()).collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            ChartSubfan::P => "p",
            ChartSubfan::PPrime => "pprime",
            ChartSubfan::Circ => "circ",
        }
    }
}

impl std::str::FromStr for ChartSubfan {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ChartSubfan::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::Parse(format!("unknown subfan {s}")))
    }
}

/// The quotient fan of the orthant fan under [`reference_projection`].
pub fn reference_quotient_fan() -> Result<Fan2D> {
    quotient_fan_orthant(&OrthantFan::new(4), &reference_projection())
}

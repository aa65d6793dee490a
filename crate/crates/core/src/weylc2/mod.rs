//! The root system C2, its Weyl group `W = D4` as words, as 2x2 matrices on
//! the character lattice `M(H)` and as permutations of the four side labels,
//! together with the octagon of fixed points and its eight subdivisions.
//!
//! Coordinates on `M(H)` are taken in the basis `e1, e2`, with simple roots
//! `alpha1 = e1` and `alpha2 = e2 - e1`. The octagon lives in the doubled
//! lattice so that its vertices `-2 sigma(lambda_min)` are integral.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyhedra::{convex_hull_2d, cut_polygon, Polygon};
use crate::ratlin::{ints, rat, to_rat, Int, IntVec, Rat, RatVec};

pub type Mat2 = [[i64; 2]; 2];

/// Simple roots, positive roots and the minimal weight, in the e-basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemC2 {
    pub simple_roots: [IntVec; 2],
    pub positive_roots: Vec<IntVec>,
    pub lambda_min: RatVec,
}

pub fn root_system() -> RootSystemC2 {
    let a1 = ints(&[1, 0]);
    let a2 = ints(&[-1, 1]);
    let sum = |u: &IntVec, v: &IntVec, k: i64| -> IntVec { u.iter().zip(v).map(|(x, y)| x * k + y).collect() };
    RootSystemC2 {
        positive_roots: vec![a1.clone(), a2.clone(), sum(&a1, &a2, 1), sum(&a1, &a2, 2)],
        simple_roots: [a1, a2],
        lambda_min: vec![rat(1, 2), rat(3, 2)],
    }
}

/// The 4x4 symplectic representatives of the generators (documentation
/// only; every computation uses the 2x2 action on `M(H)`).
pub const R1_SP4: [[i64; 4]; 4] = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]];
pub const R2_SP4: [[i64; 4]; 4] = [[1, 0, 0, 0], [0, 0, -1, 0], [0, 1, 0, 0], [0, 0, 0, 1]];

/// Reflection in `alpha1`: `(a, b) -> (-a, b)`.
pub const R1: Mat2 = [[-1, 0], [0, 1]];
/// Reflection in `alpha2`: `(a, b) -> (b, a)`.
pub const R2: Mat2 = [[0, 1], [1, 0]];
/// `r1 = (2,4)` on side labels, as images of `1..=4` (0-based storage).
pub const P1: [u8; 4] = [1, 4, 3, 2];
/// `r2 = (1,2)(3,4)`.
pub const P2: [u8; 4] = [2, 1, 4, 3];

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

fn perm_mul(p: &[u8; 4], q: &[u8; 4]) -> [u8; 4] {
    let mut r = [0; 4];
    for i in 0..4 {
        r[i] = p[q[i] as usize - 1];
    }
    r
}

/// An element of `W` in all three guises. Products compose left to right as
/// maps: `(u * v)(x) = u(v(x))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylElt {
    /// Reduced word over `{1, 2}`; `[1, 2]` is `r1 r2`.
    pub word: Vec<u8>,
    pub matrix: Mat2,
    pub perm: [u8; 4],
}

impl WeylElt {
    pub fn identity() -> Self {
        WeylElt { word: vec![], matrix: [[1, 0], [0, 1]], perm: [1, 2, 3, 4] }
    }

    pub fn generator(i: u8) -> Result<Self> {
        match i {
            1 => Ok(WeylElt { word: vec![1], matrix: R1, perm: P1 }),
            2 => Ok(WeylElt { word: vec![2], matrix: R2, perm: P2 }),
            _ => Err(Error::OutOfRange(format!("generator r{i}"))),
        }
    }

    /// Element for an arbitrary (not necessarily reduced) word.
    pub fn from_word(word: &[u8]) -> Result<Self> {
        let mut e = WeylElt::identity();
        for &i in word {
            e = e.mul(&WeylElt::generator(i)?);
        }
        Ok(e)
    }

    pub fn mul(&self, other: &WeylElt) -> WeylElt {
        let matrix = mat_mul(&self.matrix, &other.matrix);
        let perm = perm_mul(&self.perm, &other.perm);
        let word = reduced_word(&matrix).unwrap_or_else(|| [self.word.clone(), other.word.clone()].concat());
        WeylElt { word, matrix, perm }
    }

    pub fn inverse(&self) -> WeylElt {
        let mut w = WeylElt::identity();
        for &i in self.word.iter().rev() {
            w = w.mul(&WeylElt::generator(i).expect("word letters are 1 or 2"));
        }
        w
    }

    pub fn pow(&self, n: u32) -> WeylElt {
        (0..n).fold(WeylElt::identity(), |acc, _| acc.mul(self))
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn apply(&self, v: &[Int]) -> IntVec {
        let m = &self.matrix;
        vec![m[0][0] * &v[0] + m[0][1] * &v[1], m[1][0] * &v[0] + m[1][1] * &v[1]]
    }

    pub fn apply_rat(&self, v: &[Rat]) -> RatVec {
        let m = &self.matrix;
        let r = |x: i64| Rat::from_integer(x.into());
        vec![r(m[0][0]) * &v[0] + r(m[0][1]) * &v[1], r(m[1][0]) * &v[0] + r(m[1][1]) * &v[1]]
    }

    /// Conventional name, e.g. `e`, `r1r2r1`, `w0`.
    pub fn name(&self) -> String {
        match self.word.len() {
            0 => "e".into(),
            4 => "w0".into(),
            _ => self.word.iter().map(|i| format!("r{i}")).collect(),
        }
    }
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for WeylElt {
    type Err = Error;

    /// Accepts `e`, `id`, `w0`, `r1r2r1`, `r1 r2`, `121`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*' && *c != '.').collect();
        match t.as_str() {
            "e" | "id" | "" => return Ok(WeylElt::identity()),
            "w0" => return WeylElt::from_word(&[1, 2, 1, 2]),
            _ => {}
        }
        let digits: String = t.replace('r', "");
        if digits.is_empty() || !digits.chars().all(|c| c == '1' || c == '2') {
            return Err(Error::Parse(format!("not a Weyl word: {s:?}")));
        }
        WeylElt::from_word(&digits.bytes().map(|b| b - b'0').collect::<Vec<_>>())
    }
}

/// Shortest word (first in breadth-first order, trying `r1` before `r2`).
fn reduced_word(m: &Mat2) -> Option<Vec<u8>> {
    let mut seen: Vec<Mat2> = vec![[[1, 0], [0, 1]]];
    let mut queue: VecDeque<(Mat2, Vec<u8>)> = VecDeque::from([([[1, 0], [0, 1]], vec![])]);
    while let Some((cur, w)) = queue.pop_front() {
        if cur == *m {
            return Some(w);
        }
        for (i, g) in [(1u8, R1), (2u8, R2)] {
            let next = mat_mul(&cur, &g);
            if !seen.contains(&next) {
                seen.push(next);
                let mut w2 = w.clone();
                w2.push(i);
                queue.push_back((next, w2));
            }
        }
    }
    None
}

/// The 8 elements in breadth-first order: `e, r1, r2, r1r2, r2r1, r1r2r1,
/// r2r1r2, w0`.
pub fn weyl_elements() -> Vec<WeylElt> {
    let mut out = vec![WeylElt::identity()];
    let mut i = 0;
    while i < out.len() {
        for g in 1..=2 {
            let next = out[i].mul(&WeylElt::generator(g).expect("valid generator"));
            if !out.iter().any(|e| e.matrix == next.matrix) {
                out.push(next);
            }
        }
        i += 1;
    }
    out
}

/// `g = r2 r1`.
pub fn g_elt() -> WeylElt {
    WeylElt::from_word(&[2, 1]).expect("valid word")
}

/// The eight boundary labels: sides `A1..A4` and corners `B12..B41`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BoundaryLabel {
    A1,
    A2,
    A3,
    A4,
    B12,
    B23,
    B34,
    B41,
}

impl BoundaryLabel {
    pub const ALL: [BoundaryLabel; 8] = [
        BoundaryLabel::A1,
        BoundaryLabel::A2,
        BoundaryLabel::A3,
        BoundaryLabel::A4,
        BoundaryLabel::B12,
        BoundaryLabel::B23,
        BoundaryLabel::B34,
        BoundaryLabel::B41,
    ];

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&l| l == self).expect("label is listed")
    }

    pub fn is_a(self) -> bool {
        self.index() < 4
    }

    /// Side numbers in `1..=4`: one for type A, two for type B.
    pub fn sides(self) -> Vec<u8> {
        let i = self.index() as u8;
        if i < 4 {
            vec![i + 1]
        } else {
            vec![i - 3, (i - 3) % 4 + 1]
        }
    }

    pub fn from_sides(s: &[u8]) -> Result<Self> {
        let mut s = s.to_vec();
        s.sort();
        Self::ALL
            .iter()
            .copied()
            .find(|l| {
                let mut t = l.sides();
                t.sort();
                t == s
            })
            .ok_or_else(|| Error::OutOfRange(format!("no boundary label with sides {s:?}")))
    }

    pub fn name(self) -> &'static str {
        ["A1", "A2", "A3", "A4", "B12", "B23", "B34", "B41"][self.index()]
    }

    /// `(i, k)` of the fundamental action `mu_i o g^{k-1}` defining the subdivision.
    pub fn action_index(self) -> (u8, u8) {
        let i = self.index() as u8;
        if i < 4 {
            (2, i + 1)
        } else {
            (1, i - 3)
        }
    }

    /// Primitive inner normal of the octagon edge carrying this label.
    pub fn inner_normal(self) -> IntVec {
        let n = [(0, 1), (1, 0), (0, -1), (-1, 0), (1, 1), (1, -1), (-1, -1), (-1, 1)][self.index()];
        ints(&[n.0, n.1])
    }
}

impl fmt::Display for BoundaryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundaryLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase().replace('_', "");
        let t = if t == "B32" {
            "B23".to_string()
        } else if t == "B14" {
            "B41".to_string()
        } else {
            t
        };
        Self::ALL.iter().copied().find(|l| l.name() == t).ok_or_else(|| Error::Parse(format!("unknown label {s:?}")))
    }
}

/// `edge_permutation(w)[l.index()]` is the image of label `l` under `w`.
pub fn edge_permutation(w: &WeylElt) -> [BoundaryLabel; 8] {
    BoundaryLabel::ALL.map(|l| {
        let img: Vec<u8> = l.sides().iter().map(|&s| w.perm[s as usize - 1]).collect();
        BoundaryLabel::from_sides(&img).expect("permutation of sides maps labels to labels")
    })
}

/// Octagon vertex `-2 sigma(lambda_min)` of the fixed point `sigma B`.
pub fn vertex_of(sigma: &WeylElt) -> IntVec {
    let l = root_system().lambda_min;
    sigma.apply_rat(&l).iter().map(|x| (x * rat(-2, 1)).to_integer()).collect()
}

/// The polygon of fixed points, in the doubled lattice.
pub fn octagon() -> Polygon {
    let pts: Vec<IntVec> = weyl_elements().iter().map(vertex_of).collect();
    convex_hull_2d(&pts).expect("orbit of a generic weight is not collinear")
}

/// `mu_i` in the e-basis: `mu1(a,b) = a + b`, `mu2(a,b) = b`, the dual basis
/// to the simple roots.
fn mu(i: u8) -> [i64; 2] {
    if i == 1 {
        [1, 1]
    } else {
        [0, 1]
    }
}

/// The functional of the fundamental action `mu_i o g^{k-1}` on the doubled
/// weight lattice, with `g` acting on characters contragrediently (row
/// vector `mu_i G^{1-k}`), so that its fixed point component of minimal
/// inner weight passes through `g^{k-1} r_i B`.
pub fn fundamental_action(i: u8, k: u8) -> Result<IntVec> {
    if !(1..=2).contains(&i) || !(1..=4).contains(&k) {
        return Err(Error::OutOfRange(format!("fundamental action ({i},{k})")));
    }
    let ginv = g_elt().inverse().pow(u32::from(k - 1));
    let m = ginv.matrix;
    let row = mu(i);
    Ok(ints(&[row[0] * m[0][0] + row[1] * m[1][0], row[0] * m[0][1] + row[1] * m[1][1]]))
}

/// A boundary subdivision `P = P^- u P^+`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subdivision {
    pub label: BoundaryLabel,
    pub functional: IntVec,
    pub level: Rat,
    /// `P ∩ {functional <= level}`.
    pub lower: Polygon,
    /// `P ∩ {functional >= level}`.
    pub upper: Polygon,
    /// The fixed point `g^{k-1} r_i B` through which the cut passes.
    pub fixed_point: WeylElt,
}

pub fn subdivision(label: BoundaryLabel) -> Result<Subdivision> {
    let (i, k) = label.action_index();
    let functional = fundamental_action(i, k)?;
    let p = octagon();
    let mut values: Vec<Int> = p.vertices().iter().map(|v| &functional[0] * &v[0] + &functional[1] * &v[1]).collect();
    values.sort();
    values.dedup();
    let level = to_rat(&values[1]);
    let fixed_point = g_elt().pow(u32::from(k - 1)).mul(&WeylElt::generator(i)?);
    let v = vertex_of(&fixed_point);
    if to_rat(&(&functional[0] * &v[0] + &functional[1] * &v[1])) != level {
        return Err(Error::Verification(format!("cut of {label} misses the fixed point {fixed_point}")));
    }
    let (lower, upper) = cut_polygon(&p, &functional, &level)?;
    Ok(Subdivision { label, functional, level, lower, upper, fixed_point })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::int;

    // reference vertex sets, in any order
    fn poly(v: &[(i64, i64)]) -> Polygon {
        convex_hull_2d(&v.iter().map(|&(x, y)| ints(&[x, y])).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn group_relations() {
        let r1 = WeylElt::generator(1).unwrap();
        let r2 = WeylElt::generator(2).unwrap();
        assert!(r1.mul(&r1).is_identity());
        assert!(r2.mul(&r2).is_identity());
        assert!(r1.mul(&r2).pow(4).is_identity());
        let w0 = r1.mul(&r2).pow(2);
        assert_eq!(w0.matrix, [[-1, 0], [0, -1]]);
        assert_eq!(w0.name(), "w0");
    }

    #[test]
    fn elements_in_order() {
        let names: Vec<String> = weyl_elements().iter().map(WeylElt::name).collect();
        assert_eq!(names, ["e", "r1", "r2", "r1r2", "r2r1", "r1r2r1", "r2r1r2", "w0"]);
    }

    #[test]
    fn representations_are_faithful_homomorphisms() {
        let els = weyl_elements();
        for a in &els {
            for b in &els {
                let ab = a.mul(b);
                assert_eq!(ab.matrix, mat_mul(&a.matrix, &b.matrix));
                assert_eq!(ab.perm, perm_mul(&a.perm, &b.perm));
            }
        }
        let mut perms: Vec<[u8; 4]> = els.iter().map(|e| e.perm).collect();
        perms.sort();
        perms.dedup();
        assert_eq!(perms.len(), 8);
    }

    #[test]
    fn parse_words() {
        assert_eq!("r1r2r1".parse::<WeylElt>().unwrap().name(), "r1r2r1");
        assert_eq!("2121".parse::<WeylElt>().unwrap().name(), "w0");
        assert_eq!("r1 r1".parse::<WeylElt>().unwrap().name(), "e");
        assert!("r3".parse::<WeylElt>().is_err());
    }

    #[test]
    fn octagon_vertices() {
        let p = octagon();
        assert_eq!(p, poly(&[(-1, -3), (1, -3), (3, -1), (3, 1), (1, 3), (-1, 3), (-3, 1), (-3, -1)]));
        assert_eq!(vertex_of(&WeylElt::identity()), ints(&[-1, -3]));
        assert_eq!(vertex_of(&"w0".parse().unwrap()), ints(&[1, 3]));
        assert_eq!(vertex_of(&"r2".parse().unwrap()), ints(&[-3, -1]));
    }

    #[test]
    fn fundamental_functionals() {
        assert_eq!(fundamental_action(2, 1).unwrap(), ints(&[0, 1]));
        assert_eq!(fundamental_action(1, 1).unwrap(), ints(&[1, 1]));
        assert!(fundamental_action(3, 1).is_err());
        let f = fundamental_action(2, 1).unwrap();
        let mut vals: Vec<Int> = octagon().vertices().iter().map(|v| &f[0] * &v[0] + &f[1] * &v[1]).collect();
        vals.sort();
        vals.dedup();
        assert_eq!(vals, vec![int(-3), int(-1), int(1), int(3)]);
    }

    #[test]
    fn subdivision_pieces() {
        let s = subdivision(BoundaryLabel::A1).unwrap();
        assert_eq!(s.lower, poly(&[(-1, -3), (1, -3), (3, -1), (-3, -1)]));
        assert_eq!(s.upper.len(), 6);
        let s = subdivision(BoundaryLabel::A2).unwrap();
        assert_eq!(s.lower, poly(&[(-3, 1), (-3, -1), (-1, -3), (-1, 3)]));
        let s = subdivision(BoundaryLabel::B12).unwrap();
        assert_eq!(s.lower, poly(&[(1, -3), (-1, -3), (-3, -1), (-3, 1)]));
        let s = subdivision(BoundaryLabel::B41).unwrap();
        assert_eq!(s.lower, poly(&[(-1, -3), (1, -3), (3, -1), (3, 1)]));
    }

    #[test]
    fn label_permutations() {
        let r1 = WeylElt::generator(1).unwrap();
        let r2 = WeylElt::generator(2).unwrap();
        use BoundaryLabel::*;
        let p1 = edge_permutation(&r1);
        assert_eq!([p1[0], p1[1], p1[2], p1[3]], [A1, A4, A3, A2]);
        let p2 = edge_permutation(&r2);
        assert_eq!(p2[B41.index()], B23);
        assert_eq!(p2[A1.index()], A2);
        assert_eq!(edge_permutation(&WeylElt::identity()), BoundaryLabel::ALL);
    }

    #[test]
    fn permutations_match_matrix_action_on_edges() {
        let p = octagon();
        for w in weyl_elements() {
            let perm = edge_permutation(&w);
            for l in BoundaryLabel::ALL {
                // the edge with inner normal n is mapped to the edge whose inner
                // normal is n M^{-1}
                let m = w.inverse().matrix;
                let n = l.inner_normal();
                let img = ints(&[
                    i64::try_from(&n[0]).unwrap() * m[0][0] + i64::try_from(&n[1]).unwrap() * m[1][0],
                    i64::try_from(&n[0]).unwrap() * m[0][1] + i64::try_from(&n[1]).unwrap() * m[1][1],
                ]);
                assert_eq!(perm[l.index()].inner_normal(), img, "{w} on {l}");
            }
        }
        assert_eq!(p.len(), 8);
    }
}

//! Exact integer and rational linear algebra.
//!
//! Everything downstream is built on [`Rat`] (always reduced, positive
//! denominator) and the dense row-major [`Mat`]. There is no floating point
//! anywhere in this crate.

mod hnf;
mod matrix;

pub use hnf::{hnf, is_unimodular};
pub use matrix::{IntMat, Mat, RatMat};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
/// Arbitrary precision rational, normalized on construction.
pub type Rat = BigRational;
pub type IntVec = Vec<Int>;
pub type RatVec = Vec<Rat>;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

pub fn to_rat(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

pub fn ints(v: &[i64]) -> IntVec {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn rats(v: &[i64]) -> RatVec {
    v.iter().map(|&x| rat_int(x)).collect()
}

/// `p/q` text form; integers print without a denominator.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.trim().parse().ok()?;
            let d: Int = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => s.parse::<Int>().ok().map(Rat::from_integer),
    }
}

pub fn content(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Clears denominators and divides by the content. The sign is left alone.
pub fn clear_denominators(v: &[Rat]) -> IntVec {
    let l = v.iter().fold(Int::one(), |l, x| l.lcm(x.denom()));
    let scaled: IntVec = v.iter().map(|x| (x * to_rat(&l)).to_integer()).collect();
    let g = content(&scaled);
    if g.is_zero() {
        return scaled;
    }
    scaled.into_iter().map(|x| x / &g).collect()
}

/// Primitive integer vector on the same line, first nonzero entry positive.
pub fn primitive_line(v: &[Rat]) -> IntVec {
    let mut w = clear_denominators(v);
    if let Some(first) = w.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            w.iter_mut().for_each(|x| *x = -x.clone());
        }
    }
    w
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn int_to_rat_vec(v: &[Int]) -> RatVec {
    v.iter().map(to_rat).collect()
}

/// Reduced row echelon form. Returns the reduced matrix and pivot columns.
pub fn rref(m: &RatMat) -> (RatMat, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols() {
        if row == a.rows() {
            break;
        }
        let Some(p) = (row..a.rows()).find(|&r| !a[(r, col)].is_zero()) else {
            continue;
        };
        a.swap_rows(row, p);
        let inv = a[(row, col)].recip();
        for c in 0..a.cols() {
            a[(row, c)] = &a[(row, c)] * &inv;
        }
        for r in 0..a.rows() {
            if r != row && !a[(r, col)].is_zero() {
                let f = a[(r, col)].clone();
                for c in 0..a.cols() {
                    let sub = &f * &a[(row, c)];
                    a[(r, c)] -= sub;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

pub fn rank(m: &RatMat) -> usize {
    rref(m).1.len()
}

/// Basis of the right kernel: primitive integer vectors, first nonzero
/// entry positive, sorted lexicographically.
pub fn kernel_basis(m: &RatMat) -> Vec<IntVec> {
    let (r, pivots) = rref(m);
    let n = m.cols();
    let mut basis: Vec<IntVec> = (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rat::zero(); n];
            v[free] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, free)].clone();
            }
            primitive_line(&v)
        })
        .collect();
    basis.sort();
    basis
}

/// Some solution of `a x = b`, if one exists.
pub fn solve(a: &RatMat, b: &[Rat]) -> Option<RatVec> {
    assert_eq!(a.rows(), b.len());
    let mut aug = RatMat::zeros(a.rows(), a.cols() + 1);
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            aug[(r, c)] = a[(r, c)].clone();
        }
        aug[(r, a.cols())] = b[r].clone();
    }
    let (red, pivots) = rref(&aug);
    if pivots.last() == Some(&a.cols()) {
        return None;
    }
    let mut x = vec![Rat::zero(); a.cols()];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = red[(i, a.cols())].clone();
    }
    Some(x)
}

/// Determinant over the rationals (Gaussian elimination).
pub fn det(m: &RatMat) -> Rat {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let mut a = m.clone();
    let n = a.rows();
    let mut d = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            a.swap_rows(p, col);
            d = -d;
        }
        let piv = a[(col, col)].clone();
        d *= &piv;
        for r in col + 1..n {
            if a[(r, col)].is_zero() {
                continue;
            }
            let f = &a[(r, col)] / &piv;
            for c in col..n {
                let sub = &f * &a[(col, c)];
                a[(r, c)] -= sub;
            }
        }
    }
    d
}

/// Dimension of the intersection of two row spaces.
pub fn row_space_intersection_dim(a: &RatMat, b: &RatMat) -> usize {
    rank(a) + rank(b) - rank(&a.vstack(b))
}

/// True iff the row spaces of `a` and `b` coincide.
pub fn same_row_space(a: &RatMat, b: &RatMat) -> bool {
    let ra = rank(a);
    ra == rank(b) && ra == rank(&a.vstack(b))
}

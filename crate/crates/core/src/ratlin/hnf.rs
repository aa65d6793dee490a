use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Int, IntMat};

/// Row Hermite normal form: returns `(h, u)` with `u` unimodular and
/// `u * m = h`. Pivots are positive and entries above a pivot lie in
/// `[0, pivot)`.
pub fn hnf(m: &IntMat) -> (IntMat, IntMat) {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u = IntMat::identity(rows);
    let mut prow = 0;
    for col in 0..cols {
        if prow == rows {
            break;
        }
        for r in prow + 1..rows {
            if h[(r, col)].is_zero() {
                continue;
            }
            let a = h[(prow, col)].clone();
            let b = h[(r, col)].clone();
            let eg = a.extended_gcd(&b);
            let g = eg.gcd;
            let (s, t) = (eg.x, eg.y);
            let (p, q) = (-(&b / &g), &a / &g);
            combine_rows(&mut h, prow, r, &s, &t, &p, &q);
            combine_rows(&mut u, prow, r, &s, &t, &p, &q);
        }
        if h[(prow, col)].is_zero() {
            continue;
        }
        if h[(prow, col)].is_negative() {
            negate_row(&mut h, prow);
            negate_row(&mut u, prow);
        }
        let piv = h[(prow, col)].clone();
        for r in 0..prow {
            let q = h[(r, col)].div_floor(&piv);
            if !q.is_zero() {
                sub_row_multiple(&mut h, r, prow, &q);
                sub_row_multiple(&mut u, r, prow, &q);
            }
        }
        prow += 1;
    }
    (h, u)
}

/// `|det u| = 1` for square integer `u`.
pub fn is_unimodular(u: &IntMat) -> bool {
    u.rows() == u.cols() && u.det().abs().is_one()
}

// (row_a, row_b) <- (s*row_a + t*row_b, p*row_a + q*row_b)
fn combine_rows(m: &mut IntMat, a: usize, b: usize, s: &Int, t: &Int, p: &Int, q: &Int) {
    for c in 0..m.cols() {
        let x = m[(a, c)].clone();
        let y = m[(b, c)].clone();
        m[(a, c)] = s * &x + t * &y;
        m[(b, c)] = p * &x + q * &y;
    }
}

fn negate_row(m: &mut IntMat, r: usize) {
    for c in 0..m.cols() {
        m[(r, c)] = -m[(r, c)].clone();
    }
}

fn sub_row_multiple(m: &mut IntMat, target: usize, src: usize, q: &Int) {
    for c in 0..m.cols() {
        let v = q * &m[(src, c)];
        m[(target, c)] -= v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::rank;

    fn is_row_hnf(h: &IntMat) -> bool {
        let mut last_pivot: Option<usize> = None;
        let mut seen_zero = false;
        for r in 0..h.rows() {
            match (0..h.cols()).find(|&c| !h[(r, c)].is_zero()) {
                None => seen_zero = true,
                Some(c) => {
                    if seen_zero || last_pivot.is_some_and(|p| c <= p) {
                        return false;
                    }
                    let piv = &h[(r, c)];
                    if !piv.is_positive() {
                        return false;
                    }
                    for above in 0..r {
                        let v = &h[(above, c)];
                        if v.is_negative() || v >= piv {
                            return false;
                        }
                    }
                    last_pivot = Some(c);
                }
            }
        }
        true
    }

    #[test]
    fn identity_is_fixed() {
        let id = IntMat::identity(2);
        let (h, u) = hnf(&id);
        assert_eq!(h, id);
        assert_eq!(u, id);
    }

    #[test]
    fn diagonal_two_is_already_hnf() {
        let m = IntMat::from_i64(&[&[2, 0], &[0, 2]]);
        let (h, u) = hnf(&m);
        assert_eq!(h, m);
        assert_eq!(u, IntMat::identity(2));
    }

    #[test]
    fn inclusion_transpose_has_rank_two() {
        let inc = IntMat::from_i64(&[&[-1, 0], &[0, -1], &[-1, -1], &[-2, -1]]);
        let m = inc.transpose();
        let (h, u) = hnf(&m);
        assert!(is_unimodular(&u));
        assert_eq!(u.mul(&m), h);
        assert!(is_row_hnf(&h));
        // rational row reduction is the independent rank oracle
        let nonzero_rows = (0..h.rows()).filter(|&r| h.row(r).iter().any(|x| !x.is_zero())).count();
        assert_eq!(nonzero_rows, rank(&m.to_rat()));
        assert_eq!(nonzero_rows, 2);
    }

    #[test]
    fn tall_matrix() {
        let m = IntMat::from_i64(&[&[4, 6], &[6, 9], &[2, 5]]);
        let (h, u) = hnf(&m);
        assert!(is_unimodular(&u));
        assert_eq!(u.mul(&m), h);
        assert!(is_row_hnf(&h));
    }
}

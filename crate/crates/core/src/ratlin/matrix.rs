use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{fmt_rat, to_rat, Int, Rat};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMat = Mat<Int>;
pub type RatMat = Mat<Rat>;

impl<T: Clone> Mat<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(rows * cols, data.len(), "matrix dimensions do not match entry count");
        Mat { rows, cols, data }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self[(r, c)].clone());
            }
        }
        Mat::new(self.cols, self.rows, data)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat::new(self.rows + other.rows, self.cols, data)
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Mat::from_rows(idx.iter().map(|&r| self.row(r).to_vec()).collect())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat::new(self.rows, self.cols, self.data.iter().map(f).collect())
    }
}

impl<T> Mat<T>
where
    T: Clone + Zero + One,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat::new(rows, cols, vec![T::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "incompatible matrix product");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let p = a * &other[(k, c)];
                    out[(r, c)] = out[(r, c)].clone() + p;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|r| self.row(r).iter().zip(v).fold(T::zero(), |acc, (a, b)| acc + a * b)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl IntMat {
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect())
    }

    pub fn to_rat(&self) -> RatMat {
        self.map(to_rat)
    }

    /// Integer determinant via fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut a = self.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                    Some(p) => {
                        a.swap_rows(k, p);
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }
}

impl RatMat {
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMat::from_i64(rows).to_rat()
    }

    pub fn scale(&self, s: &Rat) -> Self {
        self.map(|x| x * s)
    }
}

impl<T> Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Display for RatMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(fmt_rat).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

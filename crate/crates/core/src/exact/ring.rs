//! Coefficient rings for truncated series and small matrices over them.

use std::fmt;

use num_traits::{One, Zero};

use super::linalg;
use super::matrix::QMatrix;
use super::rational::Rational;

/// An associative, possibly noncommutative ring with rational scalars.
///
/// Elements may carry a shape (matrix size, algebra rank); `zero_like` and
/// `one_like` produce elements of the same shape.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn vanishes(&self) -> bool;
    /// Two-sided inverse, if one exists and is computable.
    fn try_inverse(&self) -> Option<Self>;
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn try_inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| Rational::one() / self)
    }
}

impl Ring for QMatrix {
    fn zero_like(&self) -> Self {
        QMatrix::zeros(self.rows(), self.cols())
    }
    fn one_like(&self) -> Self {
        assert!(self.is_square(), "identity of a non-square shape");
        QMatrix::identity(self.rows())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self.matmul(other)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        QMatrix::scale(self, c)
    }
    fn vanishes(&self) -> bool {
        QMatrix::is_zero(self)
    }
    fn try_inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        linalg::inverse(self)
    }
}

/// A dense matrix with entries in a ring `R`.
///
/// `proto` is a zero element of the entry ring; it fixes the entry shape
/// even when the matrix itself has no entries.
#[derive(Clone, PartialEq)]
pub struct Mat<R: Ring> {
    rows: usize,
    cols: usize,
    proto: R,
    entries: Vec<R>,
}

impl<R: Ring> Mat<R> {
    pub fn zeros(rows: usize, cols: usize, proto: &R) -> Self {
        let z = proto.zero_like();
        Mat {
            rows,
            cols,
            proto: z.clone(),
            entries: vec![z; rows * cols],
        }
    }

    pub fn identity(n: usize, proto: &R) -> Self {
        let mut m = Self::zeros(n, n, proto);
        let one = proto.one_like();
        for i in 0..n {
            m.set(i, i, one.clone());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, proto: &R, f: impl Fn(usize, usize) -> R) -> Self {
        let mut m = Self::zeros(rows, cols, proto);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn proto(&self) -> &R {
        &self.proto
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn map<S: Ring>(&self, proto: &S, f: impl Fn(&R) -> S) -> Mat<S> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            proto: proto.zero_like(),
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Sub-block with rows `r0..r0+nr` and columns `c0..c0+nc`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Self {
        Self::from_fn(nr, nc, &self.proto, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Assembles `[[a, b], [c, d]]`.
    pub fn from_quadrants(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let (n, l) = (a.rows, d.rows);
        assert!(a.cols == n && b.rows == n && b.cols == l && c.rows == l && c.cols == n && d.cols == l);
        Self::from_fn(n + l, n + l, &a.proto, |i, j| match (i < n, j < n) {
            (true, true) => a.get(i, j).clone(),
            (true, false) => b.get(i, j - n).clone(),
            (false, true) => c.get(i - n, j).clone(),
            (false, false) => d.get(i - n, j - n).clone(),
        })
    }

    fn zip(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            proto: self.proto.clone(),
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl<R: Ring> fmt::Debug for Mat<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Mat")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("entries", &self.entries)
            .finish()
    }
}

impl<R: Ring> Ring for Mat<R> {
    fn zero_like(&self) -> Self {
        Self::zeros(self.rows, self.cols, &self.proto)
    }

    fn one_like(&self) -> Self {
        assert_eq!(self.rows, self.cols, "identity of a non-square shape");
        Self::identity(self.rows, &self.proto)
    }

    fn add(&self, other: &Self) -> Self {
        self.zip(other, R::add)
    }

    fn sub(&self, other: &Self) -> Self {
        self.zip(other, R::sub)
    }

    fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols, &self.proto);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.proto.clone();
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.vanishes() && !b.vanishes() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    fn neg(&self) -> Self {
        self.map(&self.proto, R::neg)
    }

    fn scale(&self, c: &Rational) -> Self {
        self.map(&self.proto, |x| x.scale(c))
    }

    fn vanishes(&self) -> bool {
        self.entries.iter().all(R::vanishes)
    }

    /// Gauss-Jordan elimination by left row operations. Pivots must be units
    /// of the entry ring; the result is a left inverse, which for the
    /// square matrices arising here is two-sided (checked).
    fn try_inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = self.one_like();
        for col in 0..n {
            let (p, pinv) = (col..n).find_map(|r| a.get(r, col).try_inverse().map(|x| (r, x)))?;
            if p != col {
                for j in 0..n {
                    a.entries.swap(p * n + j, col * n + j);
                    inv.entries.swap(p * n + j, col * n + j);
                }
            }
            for j in 0..n {
                a.set(col, j, pinv.mul(a.get(col, j)));
                inv.set(col, j, pinv.mul(inv.get(col, j)));
            }
            for r in 0..n {
                if r == col || a.get(r, col).vanishes() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let v = a.get(r, j).sub(&f.mul(a.get(col, j)));
                    a.set(r, j, v);
                    let w = inv.get(r, j).sub(&f.mul(inv.get(col, j)));
                    inv.set(r, j, w);
                }
            }
        }
        (self.mul(&inv) == self.one_like()).then_some(inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn qm(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_dense(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn rational_ring_inverse() {
        assert_eq!(int(4).try_inverse(), Some(crate::exact::rational::rat(1, 4)));
        assert_eq!(int(0).try_inverse(), None);
    }

    #[test]
    fn mat_of_matrices_inverse() {
        let proto = QMatrix::zeros(2, 2);
        let a = qm(&[&[1, 1], &[0, 1]]);
        let b = qm(&[&[0, 1], &[1, 0]]);
        let m = Mat::from_fn(2, 2, &proto, |i, j| match (i, j) {
            (0, 0) => a.clone(),
            (0, 1) => b.clone(),
            (1, 0) => QMatrix::zeros(2, 2),
            _ => QMatrix::identity(2),
        });
        let inv = m.try_inverse().unwrap();
        assert_eq!(m.mul(&inv), m.one_like());
        assert_eq!(inv.mul(&m), m.one_like());
    }

    #[test]
    fn empty_mat_keeps_entry_shape() {
        let proto = QMatrix::zeros(3, 3);
        let e: Mat<QMatrix> = Mat::zeros(0, 2, &proto);
        let f: Mat<QMatrix> = Mat::zeros(2, 0, &proto);
        let p = f.mul(&e);
        assert_eq!(p.rows(), 2);
        assert_eq!(p.get(1, 1), &QMatrix::zeros(3, 3));
    }
}

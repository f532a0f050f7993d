//! Row-sparse exact rational matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{fmt_rational, Rational};

/// A sparse matrix over the rationals. Each row keeps its nonzero entries
/// sorted by column; zero entries are never stored, so structural equality
/// is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, Rational)>>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Rational::one())
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut m = Self::zeros(n, n);
        if !c.is_zero() {
            for (i, row) in m.data.iter_mut().enumerate() {
                row.push((i, c.clone()));
            }
        }
        m
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets<I>(rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut acc: Vec<std::collections::BTreeMap<usize, Rational>> =
            vec![Default::default(); rows];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "triplet ({r},{c}) outside {rows}x{cols}");
            let slot = acc[r].entry(c).or_insert_with(Rational::zero);
            *slot += v;
        }
        let data = acc
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        QMatrix { rows, cols, data }
    }

    pub fn from_dense(dense: &[Vec<Rational>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        let data = dense
            .iter()
            .map(|row| {
                assert_eq!(row.len(), cols, "ragged dense matrix");
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(c, v)| (c, v.clone()))
                    .collect()
            })
            .collect();
        QMatrix { rows, cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut data: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); rows];
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    data[r].push((c, v.clone()));
                }
            }
        }
        QMatrix {
            rows,
            cols: columns.len(),
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    /// Nonzero entries of row `r`, sorted by column.
    pub fn row(&self, r: usize) -> &[(usize, Rational)] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        match self.data[r].binary_search_by_key(&c, |(k, _)| *k) {
            Ok(pos) => self.data[r][pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// All nonzero entries in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, c.to_owned(), v)))
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (r, c, v) in self.triplets() {
            out[r][c] = v.clone();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.cols];
        for (r, c, v) in self.triplets() {
            data[c].push((r, v.clone()));
        }
        QMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        let data = self
            .data
            .iter()
            .map(|row| row.iter().map(|(k, v)| (*k, v * c)).collect())
            .collect();
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &QMatrix, c: &Rational) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in addition"
        );
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| merge_rows(a, b, c))
            .collect();
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn matmul(&self, other: &QMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut acc = vec![Rational::zero(); other.cols];
        let mut touched: Vec<usize> = Vec::new();
        let mut mark = vec![false; other.cols];
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            for (k, a) in row {
                for (c, b) in &other.data[*k] {
                    if !mark[*c] {
                        mark[*c] = true;
                        touched.push(*c);
                    }
                    acc[*c] += a * b;
                }
            }
            touched.sort_unstable();
            let mut out = Vec::with_capacity(touched.len());
            for &c in &touched {
                let v = std::mem::replace(&mut acc[c], Rational::zero());
                mark[c] = false;
                if !v.is_zero() {
                    out.push((c, v));
                }
            }
            touched.clear();
            data.push(out);
        }
        QMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "shape mismatch in apply");
        self.data
            .iter()
            .map(|row| {
                let mut s = Rational::zero();
                for (c, a) in row {
                    if !v[*c].is_zero() {
                        s += a * &v[*c];
                    }
                }
                s
            })
            .collect()
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &QMatrix) -> Self {
        &self.matmul(other) - &other.matmul(self)
    }

    /// Kronecker product; the index of `e_i ⊗ e_j` is `i * other.rows + j`.
    pub fn kron(&self, other: &QMatrix) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = Vec::with_capacity(rows);
        for arow in &self.data {
            for brow in &other.data {
                let mut out = Vec::with_capacity(arow.len() * brow.len());
                for (ca, a) in arow {
                    for (cb, b) in brow {
                        out.push((ca * other.cols + cb, a * b));
                    }
                }
                data.push(out);
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn pow(&self, k: usize) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.matmul(self);
        }
        acc
    }

    /// The `nr x nc` block starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Self {
        let data = self.data[r0..r0 + nr]
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|(c, _)| *c >= c0 && *c < c0 + nc)
                    .map(|(c, v)| (c - c0, v.clone()))
                    .collect()
            })
            .collect();
        QMatrix {
            rows: nr,
            cols: nc,
            data,
        }
    }

    /// Assembles a block matrix from a row-major grid of equally sized blocks.
    pub fn from_blocks(grid: &[Vec<QMatrix>]) -> Self {
        let br = grid.len();
        let bc = grid.first().map_or(0, Vec::len);
        let (h, w) = grid
            .first()
            .and_then(|r| r.first())
            .map_or((0, 0), |b| (b.rows, b.cols));
        let mut trip = Vec::new();
        for (i, row) in grid.iter().enumerate() {
            assert_eq!(row.len(), bc, "ragged block grid");
            for (j, b) in row.iter().enumerate() {
                assert_eq!((b.rows, b.cols), (h, w), "unequal block sizes");
                for (r, c, v) in b.triplets() {
                    trip.push((i * h + r, j * w + c, v.clone()));
                }
            }
        }
        Self::from_triplets(br * h, bc * w, trip)
    }

    /// `P^{-1} self P` for a permutation-like change of basis given by
    /// `src[k] = (sign, index)`: basis vector `k` of the new space is
    /// `sign * e_index` of the old one.
    pub fn transport(&self, src: &[(Rational, usize)]) -> Self {
        let mut inv = vec![(Rational::zero(), 0usize); src.len()];
        for (k, (s, i)) in src.iter().enumerate() {
            inv[*i] = (s.clone(), k);
        }
        let trip = self.triplets().map(|(r, c, v)| {
            let (sr, nr) = &inv[r];
            let (sc, nc) = &inv[c];
            (*nr, *nc, v * sr * sc)
        });
        Self::from_triplets(self.rows, self.cols, trip.collect::<Vec<_>>())
    }
}

fn merge_rows(
    a: &[(usize, Rational)],
    b: &[(usize, Rational)],
    c: &Rational,
) -> Vec<(usize, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = &b[j].1 * c;
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + &b[j].1 * c;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        self.add_scaled(rhs, &Rational::one())
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        self.add_scaled(rhs, &-Rational::one())
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        self.matmul(rhs)
    }
}

impl Neg for &QMatrix {
    type Output = QMatrix;
    fn neg(self) -> QMatrix {
        self.scale(&-Rational::one())
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for (k, (r, c, v)) in self.triplets().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({r},{c})={}", fmt_rational(v))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn dense(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_dense(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn zero_entries_are_not_stored() {
        let a = dense(&[&[1, 0], &[0, -1]]);
        assert_eq!(a.nnz(), 2);
        let z = &a - &a;
        assert!(z.is_zero());
        assert_eq!(z, QMatrix::zeros(2, 2));
    }

    #[test]
    fn product_matches_dense_formula() {
        let a = dense(&[&[1, 2, 0], &[0, 1, 3]]);
        let b = dense(&[&[1, 0], &[2, 1], &[0, 4]]);
        assert_eq!(&a * &b, dense(&[&[5, 2], &[2, 13]]));
    }

    #[test]
    fn kron_index_convention() {
        let e12 = QMatrix::from_triplets(2, 2, [(0, 1, int(1))]);
        let id = QMatrix::identity(2);
        let k = e12.kron(&id);
        // e_1 ⊗ e_j maps to e_0 ⊗ e_j
        assert_eq!(k.get(0, 2), int(1));
        assert_eq!(k.get(1, 3), int(1));
        assert_eq!(k.nnz(), 2);
    }

    #[test]
    fn transpose_and_blocks() {
        let a = dense(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.transpose(), dense(&[&[1, 3], &[2, 4]]));
        let g = QMatrix::from_blocks(&[vec![a.clone(), QMatrix::zeros(2, 2)], vec![QMatrix::identity(2), a.clone()]]);
        assert_eq!(g.block(2, 2, 2, 2), a);
        assert_eq!(g.block(2, 0, 2, 2), QMatrix::identity(2));
        assert_eq!(g.get(0, 1), int(2));
    }

    #[test]
    fn transport_by_signed_permutation() {
        let a = dense(&[&[1, 2], &[3, 4]]);
        // new e_0 = -old e_1, new e_1 = old e_0
        let t = a.transport(&[(int(-1), 1), (int(1), 0)]);
        let p = dense(&[&[0, 1], &[-1, 0]]);
        let pinv = dense(&[&[0, -1], &[1, 0]]);
        assert_eq!(t, &(&pinv * &a) * &p);
    }

    #[test]
    fn scalar_and_apply() {
        let s = QMatrix::scalar(3, rat(1, 2));
        assert_eq!(s.apply(&[int(2), int(4), int(0)]), vec![int(1), int(2), int(0)]);
        assert!(QMatrix::scalar(2, int(0)).is_zero());
    }
}

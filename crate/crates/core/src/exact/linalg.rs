//! Exact elimination: nullspaces, ranks, determinants, inverses and
//! coordinates with respect to a spanning set.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::matrix::QMatrix;
use super::rational::Rational;

/// Sparse vector with sorted indices and no stored zeros.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn to_sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense(v: &SparseVec, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

fn coeff_at(v: &SparseVec, i: usize) -> Option<&Rational> {
    v.binary_search_by_key(&i, |(k, _)| *k).ok().map(|p| &v[p].1)
}

/// `a + c * b` on sparse vectors.
fn axpy(a: &SparseVec, b: &SparseVec, c: &Rational) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, &b[j].1 * c));
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

/// Incrementally maintained reduced row echelon form.
///
/// Rows are kept fully reduced: every pivot column is zero in all other
/// rows, and the pivot of a new row is its first nonzero column. The result
/// therefore depends only on the order in which rows are inserted.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    ncols: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl RowEchelon {
    pub fn new(ncols: usize) -> Self {
        RowEchelon {
            ncols,
            rows: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Reduces `v` against the current rows.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        // Reduced rows have zeros in every other pivot column, so a single
        // pass in pivot order clears all pivot positions.
        let pivots: Vec<usize> = v
            .iter()
            .map(|(i, _)| *i)
            .filter(|i| self.rows.contains_key(i))
            .collect();
        for p in pivots {
            if let Some(c) = coeff_at(&v, p).cloned() {
                v = axpy(&v, &self.rows[&p], &-c);
            }
        }
        v
    }

    /// Inserts a row; returns true when it increased the rank.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let v = self.reduce(v);
        let Some((pivot, lead)) = v.first().cloned() else {
            return false;
        };
        let inv = Rational::one() / lead;
        let v: SparseVec = v.into_iter().map(|(i, x)| (i, x * &inv)).collect();
        for row in self.rows.values_mut() {
            if let Some(c) = coeff_at(row, pivot).cloned() {
                *row = axpy(row, &v, &-c);
            }
        }
        self.rows.insert(pivot, v);
        true
    }

    /// Basis of the solution space of the homogeneous system whose rows were
    /// inserted; one vector per free column, in increasing column order.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut free_cols = Vec::new();
        let mut piv = self.rows.keys().peekable();
        for c in 0..self.ncols {
            if piv.peek() == Some(&&c) {
                piv.next();
            } else {
                free_cols.push(c);
            }
        }
        free_cols
            .into_iter()
            .map(|f| {
                let mut v = vec![Rational::zero(); self.ncols];
                v[f] = Rational::one();
                for (p, row) in &self.rows {
                    if let Some(x) = coeff_at(row, f) {
                        v[*p] = -x.clone();
                    }
                }
                v
            })
            .collect()
    }
}

/// Exact basis of `{v : M v = 0}`.
pub fn nullspace(m: &QMatrix) -> Vec<Vec<Rational>> {
    let mut ech = RowEchelon::new(m.cols());
    for r in 0..m.rows() {
        ech.insert(&m.row(r).to_vec());
    }
    ech.nullspace()
}

pub fn rank(m: &QMatrix) -> usize {
    let mut ech = RowEchelon::new(m.cols());
    for r in 0..m.rows() {
        ech.insert(&m.row(r).to_vec());
    }
    ech.rank()
}

/// Determinant by Gaussian elimination over the rationals.
pub fn determinant(m: &QMatrix) -> Rational {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    let mut rows: Vec<SparseVec> = (0..n).map(|r| m.row(r).to_vec()).collect();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| coeff_at(&rows[r], col).is_some()) else {
            return Rational::zero();
        };
        if p != col {
            rows.swap(p, col);
            det = -det;
        }
        let lead = coeff_at(&rows[col], col).unwrap().clone();
        det *= &lead;
        let inv = Rational::one() / lead;
        for r in col + 1..n {
            if let Some(c) = coeff_at(&rows[r], col).cloned() {
                let f = -(c * &inv);
                rows[r] = axpy(&rows[r], &rows[col], &f);
            }
        }
    }
    det
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse(m: &QMatrix) -> Option<QMatrix> {
    assert!(m.is_square(), "inverse of a non-square matrix");
    let n = m.rows();
    // Row-reduce [M | I]; M is invertible iff all pivots land in the left half.
    let mut ech = RowEchelon::new(2 * n);
    for r in 0..n {
        let mut row = m.row(r).to_vec();
        row.push((n + r, Rational::one()));
        ech.insert(&row);
    }
    if ech.pivots().take_while(|&p| p < n).count() != n {
        return None;
    }
    let trip = ech.rows.iter().flat_map(|(p, row)| {
        row.iter()
            .filter(|(c, _)| *c >= n)
            .map(move |(c, v)| (*p, c - n, v.clone()))
    });
    Some(QMatrix::from_triplets(n, n, trip.collect::<Vec<_>>()))
}

/// A linearly independent family of vectors together with a fast way of
/// expressing members of its span in that family.
#[derive(Clone, Debug)]
pub struct Subspace {
    dim: usize,
    basis: Vec<Vec<Rational>>,
    ech: RowEchelon,
}

impl Subspace {
    /// Returns `None` if the vectors are linearly dependent.
    pub fn new(ambient: usize, basis: Vec<Vec<Rational>>) -> Option<Self> {
        let k = basis.len();
        let mut ech = RowEchelon::new(ambient + k);
        for (i, b) in basis.iter().enumerate() {
            assert_eq!(b.len(), ambient, "basis vector of wrong length");
            let mut row = to_sparse(b);
            row.push((ambient + i, Rational::one()));
            ech.insert(&row);
        }
        if ech.pivots().any(|p| p >= ambient) {
            return None;
        }
        Some(Subspace {
            dim: ambient,
            basis,
            ech,
        })
    }

    /// Spans the column space of `m`, keeping the first independent columns
    /// (deterministic choice).
    pub fn column_space(m: &QMatrix) -> Self {
        let mut ech = RowEchelon::new(m.rows());
        let mut basis = Vec::new();
        for c in 0..m.cols() {
            let col = m.column(c);
            if ech.insert(&to_sparse(&col)) {
                basis.push(col);
            }
        }
        Subspace::new(m.rows(), basis).expect("chosen columns are independent")
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Coordinates of `v` in the basis, or `None` if `v` is not in the span.
    pub fn coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let r = self.ech.reduce(&to_sparse(v));
        if r.first().is_some_and(|(i, _)| *i < self.dim) {
            return None;
        }
        let mut out = vec![Rational::zero(); self.basis.len()];
        for (i, x) in r {
            out[i - self.dim] = -x;
        }
        Some(out)
    }

    /// Matrix of an operator preserving the subspace, in the chosen basis.
    /// Returns `None` if the operator does not preserve it.
    pub fn restrict(&self, op: &QMatrix) -> Option<QMatrix> {
        let cols = self
            .basis
            .iter()
            .map(|b| self.coords(&op.apply(b)))
            .collect::<Option<Vec<_>>>()?;
        Some(QMatrix::from_columns(self.dim(), &cols))
    }

    /// The inclusion map as an `ambient x dim` matrix.
    pub fn inclusion(&self) -> QMatrix {
        QMatrix::from_columns(self.dim, &self.basis)
    }
}

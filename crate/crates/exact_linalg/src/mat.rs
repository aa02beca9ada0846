use std::fmt;
use std::ops::Neg;

use num_traits::{Num, NumAssign};
use thiserror::Error;

/// Scalars the matrix layer can work over. Elimination assumes a field.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Num + NumAssign + Neg<Output = Self> {}

impl<T> Scalar for T where T: Clone + PartialEq + fmt::Debug + Num + NumAssign + Neg<Output = T> {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatError {
    #[error("{op}: incompatible shapes {left:?} and {right:?}")]
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("from_rows: row {row} has length {len}, expected {expected}")]
    Ragged { row: usize, len: usize, expected: usize },
    #[error("matrix of shape {0:?} is singular or not square")]
    Singular((usize, usize)),
}

/// Binary operations accepted by [`mat_ops`].
#[derive(Debug, Clone, PartialEq)]
pub enum MatOp<T> {
    Add,
    Compose,
    Kron,
    DirectSum,
    ScalarMul(T),
}

/// Dispatches one of the basic combinators. `ScalarMul` ignores `b`.
pub fn mat_ops<T: Scalar>(a: &Mat<T>, b: &Mat<T>, op: MatOp<T>) -> Result<Mat<T>, MatError> {
    match op {
        MatOp::Add => a.add(b),
        MatOp::Compose => a.compose(b),
        MatOp::Kron => Ok(a.kron(b)),
        MatOp::DirectSum => Ok(a.direct_sum(b)),
        MatOp::ScalarMul(s) => Ok(a.scale(&s)),
    }
}

/// A rows x cols matrix. Only nonzero entries are stored, row by row and
/// sorted by column, but the interface is that of a dense matrix.
#[derive(Clone, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, T)>>,
}

impl<T: Scalar> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n).map(|i| vec![(i, T::one())]).collect();
        Mat {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn scalar(s: T) -> Self {
        Self::identity(1).scale(&s)
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut out = Self::zeros(rows.len(), cols);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(MatError::Ragged {
                    row: r,
                    len: row.len(),
                    expected: cols,
                });
            }
            out.data[r] = row
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect();
        }
        Ok(out)
    }

    /// Builds a matrix from (row, col, value) triplets; duplicates are summed.
    pub fn from_triplets<I>(rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, T)>,
    {
        let mut data: Vec<Vec<(usize, T)>> = vec![Vec::new(); rows];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "triplet ({r},{c}) out of {rows}x{cols}");
            data[r].push((c, v));
        }
        for row in &mut data {
            *row = normalize_row(std::mem::take(row));
        }
        Mat { rows, cols, data }
    }

    /// Builds a matrix column by column from sparse column vectors.
    pub fn from_sparse_cols(rows: usize, columns: Vec<Vec<(usize, T)>>) -> Self {
        let cols = columns.len();
        let entries = columns
            .into_iter()
            .enumerate()
            .flat_map(|(c, col)| col.into_iter().map(move |(r, v)| (r, c, v)));
        Self::from_triplets(rows, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> T {
        match self.data[r].binary_search_by_key(&c, |(k, _)| *k) {
            Ok(pos) => self.data[r][pos].1.clone(),
            Err(_) => T::zero(),
        }
    }

    /// Nonzero entries of row `r`, sorted by column.
    pub fn row(&self, r: usize) -> &[(usize, T)] {
        &self.data[r]
    }

    /// Iterates over all nonzero entries as (row, col, value).
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut out = vec![vec![T::zero(); self.cols]; self.rows];
        for (r, c, v) in self.entries() {
            out[r][c] = v.clone();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let entries = self.entries().map(|(r, c, v)| (c, r, v.clone()));
        Self::from_triplets(self.cols, self.rows, entries)
    }

    /// Sparse columns of the matrix.
    pub fn columns(&self) -> Vec<Vec<(usize, T)>> {
        let mut out = vec![Vec::new(); self.cols];
        for (r, c, v) in self.entries() {
            out[c].push((r, v.clone()));
        }
        out
    }

    pub fn column(&self, c: usize) -> Vec<(usize, T)> {
        (0..self.rows)
            .filter_map(|r| {
                let v = self.get(r, c);
                (!v.is_zero()).then_some((r, v))
            })
            .collect()
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        let data = self
            .data
            .iter()
            .map(|row| row.iter().map(|(c, v)| (*c, v.clone() * s.clone())).collect())
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-T::one())
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatError> {
        self.combine(other, "add", |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MatError> {
        self.combine(other, "sub", |a, b| a - b)
    }

    fn combine(
        &self,
        other: &Self,
        op: &'static str,
        f: impl Fn(T, T) -> T,
    ) -> Result<Self, MatError> {
        if self.shape() != other.shape() {
            return Err(MatError::Shape {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| merge_rows(a, b, &f))
            .collect();
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Matrix product `self * other`, i.e. `self` after `other`.
    pub fn compose(&self, other: &Self) -> Result<Self, MatError> {
        if self.cols != other.rows {
            return Err(MatError::Shape {
                op: "compose",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut acc: Vec<Option<T>> = vec![None; other.cols];
        let mut touched = Vec::new();
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            for (k, a) in row {
                for (j, b) in &other.data[*k] {
                    let term = a.clone() * b.clone();
                    match &mut acc[*j] {
                        Some(v) => *v += term,
                        slot @ None => {
                            *slot = Some(term);
                            touched.push(*j);
                        }
                    }
                }
            }
            touched.sort_unstable();
            let mut out_row = Vec::with_capacity(touched.len());
            for j in touched.drain(..) {
                if let Some(v) = acc[j].take() {
                    if !v.is_zero() {
                        out_row.push((j, v));
                    }
                }
            }
            data.push(out_row);
        }
        Ok(Mat {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// Applies the matrix to a sparse column vector.
    pub fn apply(&self, v: &[(usize, T)]) -> Vec<(usize, T)> {
        let dense_in = {
            let mut d: Vec<Option<&T>> = vec![None; self.cols];
            for (i, x) in v {
                d[*i] = Some(x);
            }
            d
        };
        let mut out = Vec::new();
        for (r, row) in self.data.iter().enumerate() {
            let mut sum = T::zero();
            for (c, a) in row {
                if let Some(x) = dense_in[*c] {
                    sum += a.clone() * x.clone();
                }
            }
            if !sum.is_zero() {
                out.push((r, sum));
            }
        }
        out
    }

    /// Kronecker product; the index of `e_a (x) f_b` is `a * dim(f) + b`.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = Vec::with_capacity(rows);
        for arow in &self.data {
            for brow in &other.data {
                let mut row = Vec::with_capacity(arow.len() * brow.len());
                for (ac, av) in arow {
                    for (bc, bv) in brow {
                        row.push((ac * other.cols + bc, av.clone() * bv.clone()));
                    }
                }
                data.push(row);
            }
        }
        Mat { rows, cols, data }
    }

    /// Block diagonal matrix `[[self, 0], [0, other]]`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut data = self.data.clone();
        for row in &other.data {
            data.push(row.iter().map(|(c, v)| (c + self.cols, v.clone())).collect());
        }
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols + other.cols,
            data,
        }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self, MatError> {
        if self.rows != other.rows {
            return Err(MatError::Shape {
                op: "hstack",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut row = a.clone();
                row.extend(b.iter().map(|(c, v)| (c + self.cols, v.clone())));
                row
            })
            .collect();
        Ok(Mat {
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        })
    }

    /// Vertical concatenation of `self` above `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self, MatError> {
        if self.cols != other.cols {
            return Err(MatError::Shape {
                op: "vstack",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// The listed rows, in order, as a new matrix.
    pub fn select_rows(&self, indices: &[usize]) -> Self {
        let data = indices.iter().map(|&r| self.data[r].clone()).collect();
        Mat {
            rows: indices.len(),
            cols: self.cols,
            data,
        }
    }

    /// Entrywise map, dropping entries that become zero.
    pub fn map_entries(&self, f: impl Fn(usize, usize, &T) -> T) -> Self {
        let data = self
            .data
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row.iter()
                    .map(|(c, v)| (*c, f(r, *c, v)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon basis of the row space: each returned row has a
    /// leading 1 at its pivot and zeros at every other pivot. Sorted by pivot.
    pub fn row_echelon_basis(&self) -> Vec<Vec<(usize, T)>> {
        let mut basis: Vec<Vec<(usize, T)>> = Vec::new();
        for row in &self.data {
            let mut v = row.clone();
            for b in &basis {
                let pivot = b[0].0;
                if let Some(coef) = lookup(&v, pivot) {
                    v = merge_rows(&v, b, &|x, y| x - y * coef.clone());
                }
            }
            if v.is_empty() {
                continue;
            }
            let lead = v[0].1.clone();
            let v: Vec<(usize, T)> = v.into_iter().map(|(c, x)| (c, x / lead.clone())).collect();
            let pivot = v[0].0;
            for b in &mut basis {
                if let Some(coef) = lookup(b, pivot) {
                    *b = merge_rows(b, &v, &|x, y| x - y * coef.clone());
                }
            }
            basis.push(v);
        }
        basis.sort_by_key(|b| b[0].0);
        basis
    }

    pub fn rank(&self) -> usize {
        if self.rows <= self.cols {
            self.row_echelon_basis().len()
        } else {
            self.transpose().row_echelon_basis().len()
        }
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self, MatError> {
        let n = self.rows;
        if !self.is_square() {
            return Err(MatError::Singular(self.shape()));
        }
        let mut a = self.to_dense();
        let mut inv = Self::identity(n).to_dense();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(MatError::Singular(self.shape()))?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let lead = a[col][col].clone();
            for j in 0..n {
                a[col][j] = a[col][j].clone() / lead.clone();
                inv[col][j] = inv[col][j].clone() / lead.clone();
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    if !a[col][j].is_zero() {
                        a[r][j] = a[r][j].clone() - f.clone() * a[col][j].clone();
                    }
                    if !inv[col][j].is_zero() {
                        inv[r][j] = inv[r][j].clone() - f.clone() * inv[col][j].clone();
                    }
                }
            }
        }
        Self::from_rows(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

impl<T: Scalar> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for row in self.to_dense() {
            writeln!(f, "  {row:?}")?;
        }
        write!(f, "]")
    }
}

fn lookup<T: Scalar>(row: &[(usize, T)], col: usize) -> Option<T> {
    row.binary_search_by_key(&col, |(c, _)| *c)
        .ok()
        .map(|pos| row[pos].1.clone())
}

fn merge_rows<T: Scalar>(
    a: &[(usize, T)],
    b: &[(usize, T)],
    f: &impl Fn(T, T) -> T,
) -> Vec<(usize, T)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (c, v) = match (a.get(i), b.get(j)) {
            (Some((ca, va)), Some((cb, vb))) if ca == cb => {
                i += 1;
                j += 1;
                (*ca, f(va.clone(), vb.clone()))
            }
            (Some((ca, va)), Some((cb, _))) if ca < cb => {
                i += 1;
                (*ca, f(va.clone(), T::zero()))
            }
            (Some((ca, va)), None) => {
                i += 1;
                (*ca, f(va.clone(), T::zero()))
            }
            (_, Some((cb, vb))) => {
                j += 1;
                (*cb, f(T::zero(), vb.clone()))
            }
            (None, None) => unreachable!(),
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

fn normalize_row<T: Scalar>(mut row: Vec<(usize, T)>) -> Vec<(usize, T)> {
    row.sort_by_key(|(c, _)| *c);
    let mut out: Vec<(usize, T)> = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv = lv.clone() + v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

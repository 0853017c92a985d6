//! Exact linear algebra over the rationals.
//!
//! Subspaces are kept in reduced row echelon form, which makes the stored
//! basis a canonical representative: two [`Subspace`] values are equal as
//! Rust values exactly when they span the same space.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::Rational;

pub fn zero_vector(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Rational::is_zero)
}

/// A dense matrix with a cached sparse column view for fast application.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
    col_nz: Vec<Vec<(usize, Rational)>>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch {
                expected: ncols,
                got: bad.len(),
            });
        }
        Ok(Self::from_flat(
            nrows,
            ncols,
            rows.into_iter().flatten().collect(),
        ))
    }

    fn from_flat(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        let mut col_nz = vec![Vec::new(); cols];
        for i in 0..rows {
            for (j, nz) in col_nz.iter_mut().enumerate() {
                let x = &data[i * cols + j];
                if !x.is_zero() {
                    nz.push((i, x.clone()));
                }
            }
        }
        Matrix {
            rows,
            cols,
            data,
            col_nz,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![Rational::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Rational::one();
        }
        Self::from_flat(n, n, data)
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::from_flat(rows, cols, vec![Rational::zero(); rows * cols])
    }

    /// The matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let cols = columns.len();
        let mut data = vec![Rational::zero(); rows * cols];
        for (j, c) in columns.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                data[i * cols + j] = x.clone();
            }
        }
        Self::from_flat(rows, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.col_nz.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows)
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        debug_assert_eq!(v.len(), self.cols);
        let mut out = zero_vector(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, c) in &self.col_nz[j] {
                out[*i] += &(c * x);
            }
        }
        out
    }

    pub fn compose(&self, inner: &Matrix) -> Matrix {
        assert_eq!(self.cols, inner.rows, "matrix shapes do not compose");
        let columns: Vec<Vec<Rational>> = (0..inner.cols)
            .map(|j| {
                let col: Vec<Rational> = (0..inner.rows).map(|i| inner.get(i, j).clone()).collect();
                self.apply(&col)
            })
            .collect();
        Matrix::from_columns(self.rows, &columns)
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Self::from_flat(self.rows, self.cols, data)
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn column_space(&self) -> Subspace {
        Subspace::span(self.rows, (0..self.cols).map(|j| self.column(j)))
    }

    pub fn rank(&self) -> usize {
        Subspace::span(self.cols, (0..self.rows).map(|i| self.row(i).to_vec())).dim()
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i)))
            .finish()
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Rational>>::deserialize(d)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// A subspace of `Q^dim` stored as a reduced row echelon basis.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Subspace {
    dim: usize,
    basis: Vec<Vec<Rational>>,
    #[serde(skip)]
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(dim: usize) -> Self {
        Subspace {
            dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(dim: usize) -> Self {
        Self::span(dim, (0..dim).map(|i| unit_vector(dim, i)))
    }

    pub fn span<I: IntoIterator<Item = Vec<Rational>>>(dim: usize, vectors: I) -> Self {
        let mut s = Self::zero(dim);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    /// Adds `v` to the spanning set; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        assert_eq!(
            v.len(),
            self.dim,
            "vector length does not match ambient dimension"
        );
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut().skip(p) {
            *x *= &lead;
        }
        for row in &mut self.basis {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (r, x) in row.iter_mut().zip(&v).skip(p) {
                if !x.is_zero() {
                    *r -= &(&f * x);
                }
            }
        }
        let at = self.pivots.partition_point(|q| *q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, v);
        true
    }

    fn reduce(&self, v: &mut [Rational]) {
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *x -= &(&f * r);
                }
            }
        }
    }

    /// Kernel of the linear system whose rows are `constraints`.
    pub fn kernel<I: IntoIterator<Item = Vec<Rational>>>(dim: usize, constraints: I) -> Self {
        let rowspace = Self::span(dim, constraints);
        rowspace.orthogonal_complement()
    }

    /// `{x : <r, x> = 0 for every r in self}`.
    pub fn orthogonal_complement(&self) -> Subspace {
        let free: Vec<usize> = (0..self.dim)
            .filter(|c| self.pivots.binary_search(c).is_err())
            .collect();
        let vectors = free.iter().map(|&f| {
            let mut x = zero_vector(self.dim);
            x[f] = Rational::one();
            for (row, &p) in self.basis.iter().zip(&self.pivots) {
                x[p] = -&row[f];
            }
            x
        });
        Subspace::span(self.dim, vectors)
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

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.dim
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero_vector(&w)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let constraints = self
            .orthogonal_complement()
            .basis
            .into_iter()
            .chain(other.orthogonal_complement().basis);
        Subspace::kernel(self.dim, constraints)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v.clone());
        }
        s
    }
}

/// Kernel of a linear map given by its action on the standard basis.
///
/// `residual(j)` returns the image of the `j`-th basis vector (any length, the
/// same for every `j`); the result is `{x : sum_j x_j residual(j) = 0}`.
pub fn kernel_from_images<F>(dim: usize, mut residual: F) -> Subspace
where
    F: FnMut(usize) -> Vec<Rational>,
{
    let columns: Vec<Vec<Rational>> = (0..dim).map(&mut residual).collect();
    let len = columns.first().map_or(0, Vec::len);
    let mut rowspace = Subspace::zero(dim);
    for r in 0..len {
        if columns.iter().all(|c| c[r].is_zero()) {
            continue;
        }
        rowspace.insert(columns.iter().map(|c| c[r].clone()).collect());
        if rowspace.is_full() {
            break;
        }
    }
    rowspace.orthogonal_complement()
}

//! Dense square matrices and vectors.

use std::fmt;
use std::ops::{Deref, Index};

use crate::error::{invalid, Error, Result};

/// Relative pivot tolerance: a pivot with `|p| <= PIVOT_TOLERANCE * max|a_ij|`
/// is treated as zero.
pub const PIVOT_TOLERANCE: f64 = 1e-12;

/// Relative threshold below which an entry counts as structurally zero in the
/// generalized-permutation test.
pub const ZERO_TOLERANCE: f64 = 1e-12;

/// Real vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector(Vec<f64>);

impl Vector {
    pub fn new(entries: Vec<f64>) -> Self {
        Vector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Vector(vec![0.0; n])
    }

    /// The standard basis vector `e_i`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = vec![0.0; n];
        v[i] = 1.0;
        Vector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: f64) -> Vector {
        Vector(self.0.iter().map(|a| k * a).collect())
    }

    /// `self + k * other`
    pub fn axpy(&self, k: f64, other: &Vector) -> Vector {
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + k * b)
                .collect(),
        )
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn distance(&self, other: &Vector) -> f64 {
        self.sub(other).norm()
    }

    pub fn max_abs_diff(&self, other: &Vector) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl Deref for Vector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl From<Vec<f64>> for Vector {
    fn from(v: Vec<f64>) -> Self {
        Vector(v)
    }
}

impl From<&[f64]> for Vector {
    fn from(v: &[f64]) -> Self {
        Vector(v.to_vec())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Square matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    /// Builds an `n x n` matrix from row-major entries.
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(invalid("matrix", "dimension must be positive"));
        }
        if data.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: data.len(),
            });
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(invalid("matrix", "entries must be finite"));
        }
        Ok(Matrix { n, data })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Matrix::new(n, data)
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
        }
        Matrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks(self.n)
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector((0..self.n).map(|i| self.get(i, j)).collect())
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.n).map(|j| self.column(j)).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.rows().map(<[f64]>::to_vec).collect()
    }

    /// Copy of the matrix with row `i` multiplied by `k`.
    pub fn with_scaled_row(&self, i: usize, k: f64) -> Matrix {
        let mut out = self.clone();
        for v in &mut out.data[i * self.n..(i + 1) * self.n] {
            *v *= k;
        }
        out
    }

    pub fn mul_vec(&self, x: &Vector) -> Result<Vector> {
        if x.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: x.dim(),
            });
        }
        Ok(Vector(
            self.rows()
                .map(|row| row.iter().zip(x.iter()).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let n = self.n;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                for j in 0..n {
                    data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        Ok(Matrix { n, data })
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    pub fn invert(&self) -> Result<Matrix> {
        let n = self.n;
        let threshold = PIVOT_TOLERANCE * self.max_abs();
        let mut a = self.data.clone();
        let mut inv = Matrix::identity(n).data;

        for col in 0..n {
            let (pivot_row, pivot_abs) =
                (col..n)
                    .map(|r| (r, a[r * n + col].abs()))
                    .fold(
                        (col, -1.0),
                        |best, cur| if cur.1 > best.1 { cur } else { best },
                    );
            if pivot_abs <= threshold || pivot_abs == 0.0 {
                return Err(Error::SingularMatrix { pivot: col });
            }
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                    inv.swap(col * n + j, pivot_row * n + j);
                }
            }

            let p = a[col * n + col];
            for j in 0..n {
                a[col * n + j] /= p;
                inv[col * n + j] /= p;
            }

            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * n + col];
                if factor == 0.0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] -= factor * a[col * n + j];
                    inv[r * n + j] -= factor * inv[col * n + j];
                }
            }
        }

        Ok(Matrix { n, data: inv })
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", Vector(row.to_vec()))?;
        }
        Ok(())
    }
}

/// `A = D P` with `D = diag(diag)` and `P` the permutation matrix whose row
/// `i` has its single 1 in column `perm[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct DPFactorization {
    pub diag: Vec<f64>,
    pub perm: Vec<usize>,
}

impl DPFactorization {
    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// The product `D P`.
    pub fn to_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut data = vec![0.0; n * n];
        for (i, (&d, &p)) in self.diag.iter().zip(&self.perm).enumerate() {
            data[i * n + p] = d;
        }
        Matrix { n, data }
    }

    pub fn diagonal_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::identity(n);
        for (i, &d) in self.diag.iter().enumerate() {
            m.data[i * n + i] = d;
        }
        m
    }

    pub fn permutation_matrix(&self) -> Matrix {
        DPFactorization {
            diag: vec![1.0; self.dim()],
            perm: self.perm.clone(),
        }
        .to_matrix()
    }

    /// `(D P x)_i = diag[i] * x[perm[i]]`.
    pub fn apply(&self, x: &Vector) -> Vector {
        Vector(
            self.diag
                .iter()
                .zip(&self.perm)
                .map(|(&d, &p)| d * x[p])
                .collect(),
        )
    }
}

/// Factors `A` as diagonal times permutation when every row and every column
/// holds exactly one entry that is not structurally zero.
pub fn dp_decompose(a: &Matrix) -> Option<DPFactorization> {
    let n = a.dim();
    let threshold = ZERO_TOLERANCE * a.max_abs();
    let mut diag = Vec::with_capacity(n);
    let mut perm = Vec::with_capacity(n);
    let mut column_used = vec![false; n];

    for row in a.rows() {
        let mut nonzero = row.iter().enumerate().filter(|(_, v)| v.abs() > threshold);
        let (j, &v) = nonzero.next()?;
        if nonzero.next().is_some() || column_used[j] {
            return None;
        }
        column_used[j] = true;
        diag.push(v);
        perm.push(j);
    }
    Some(DPFactorization { diag, perm })
}

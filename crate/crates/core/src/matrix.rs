//! Dense vectors and matrices over a [`Scalar`] domain.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::scalar::{Scalar, Tolerance};

/// Column vector of length `n >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<T>(Vec<T>);

/// Row vector of length `m >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct RowVector<T>(Vec<T>);

macro_rules! vector_common {
    ($name:ident) => {
        impl<T: Scalar> $name<T> {
            pub fn new(entries: Vec<T>) -> Result<Self> {
                if entries.is_empty() {
                    return Err(Error::Empty);
                }
                Ok($name(entries))
            }

            /// Convenience constructor from small integer fractions `(num, den)`.
            pub fn from_ratios(entries: &[(i64, i64)]) -> Result<Self> {
                Self::new(entries.iter().map(|&(n, d)| T::from_ratio(n, d)).collect())
            }

            /// The `j`-th standard basis vector of length `n`.
            pub fn basis(n: usize, j: usize) -> Result<Self> {
                if j >= n {
                    return Err(Error::LengthMismatch { left: n, right: j + 1 });
                }
                Self::new((0..n).map(|i| if i == j { T::one() } else { T::zero() }).collect())
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                false
            }

            pub fn as_slice(&self) -> &[T] {
                &self.0
            }

            pub fn iter(&self) -> std::slice::Iter<'_, T> {
                self.0.iter()
            }

            pub fn into_vec(self) -> Vec<T> {
                self.0
            }

            pub fn sub(&self, other: &Self) -> Result<Self> {
                self.zip_with(other, |a, b| a.clone() - b.clone())
            }

            pub fn add(&self, other: &Self) -> Result<Self> {
                self.zip_with(other, |a, b| a.clone() + b.clone())
            }

            pub fn scale(&self, c: &T) -> Self {
                $name(self.0.iter().map(|x| x.clone() * c.clone()).collect())
            }

            fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
                if self.len() != other.len() {
                    return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
                }
                Ok($name(self.0.iter().zip(&other.0).map(|(a, b)| f(a, b)).collect()))
            }

            pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
                self.len() == other.len()
                    && self.0.iter().zip(&other.0).all(|(a, b)| a.approx_eq(b, tol))
            }
        }

        impl<T> Index<usize> for $name<T> {
            type Output = T;
            fn index(&self, i: usize) -> &T {
                &self.0[i]
            }
        }

        impl<T: fmt::Display> fmt::Display for $name<T> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("(")?;
                for (i, x) in self.0.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
        }
    };
}

vector_common!(Vector);
vector_common!(RowVector);

impl<T: Scalar> RowVector<T> {
    /// `self * m`; requires `len == m.rows()`.
    pub fn mul_matrix(&self, m: &Matrix<T>) -> Result<RowVector<T>> {
        if self.len() != m.rows() {
            return Err(Error::DimensionMismatch {
                op: "row-vector product",
                left: (1, self.len()),
                right: (m.rows(), m.cols()),
            });
        }
        let entries = (0..m.cols())
            .map(|k| {
                self.0
                    .iter()
                    .enumerate()
                    .fold(T::zero(), |acc, (j, z)| acc + z.clone() * m.get(j, k).clone())
            })
            .collect();
        Ok(RowVector(entries))
    }

    /// The row as a `1 x m` matrix.
    pub fn to_matrix(&self) -> Matrix<T> {
        Matrix { rows: 1, cols: self.len(), data: self.0.clone() }
    }

    /// The all-ones row `J` of length `m`.
    pub fn ones(m: usize) -> Result<Self> {
        Self::new(vec![T::one(); m])
    }
}

impl<T: Scalar> Vector<T> {
    /// The vector as an `n x 1` matrix.
    pub fn to_matrix(&self) -> Matrix<T> {
        Matrix { rows: self.len(), cols: 1, data: self.0.clone() }
    }
}

/// Dense row-major `m x n` matrix, `m, n >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty);
        }
        if data.len() != rows * cols {
            return Err(Error::EntryCount { expected: rows * cols, got: data.len() });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if m == 0 || n == 0 {
            return Err(Error::Empty);
        }
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::RaggedRows { row: i, expected: n, got: r.len() });
        }
        Self::new(m, n, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix from integer fractions, e.g. `&[&[(1, 5), (2, 5)], ...]`.
    pub fn from_ratios(rows: &[&[(i64, i64)]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(n, d)| T::from_ratio(n, d)).collect())
                .collect(),
        )
    }

    /// Integer entries scaled by `1/den`, matching how fixtures are usually written.
    pub fn from_scaled(den: i64, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| T::from_ratio(n, den)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::new(rows, cols, data)
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vector(&self, i: usize) -> RowVector<T> {
        RowVector(self.row(i).to_vec())
    }

    pub fn column(&self, j: usize) -> Vector<T> {
        Vector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data: (0..self.cols)
                .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
                .map(|(i, j)| self.get(i, j).clone())
                .collect(),
        }
    }

    pub fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    /// Matrix product `self * other`.
    pub fn matmul(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "matrix product",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            for k in 0..other.cols {
                let mut acc = T::zero();
                for (j, a) in row.iter().enumerate() {
                    if !a.is_zero() {
                        acc = acc + a.clone() * other.get(j, k).clone();
                    }
                }
                data.push(acc);
            }
        }
        Ok(Matrix { rows: self.rows, cols: other.cols, data })
    }

    pub fn mul_vector(&self, x: &Vector<T>) -> Result<Vector<T>> {
        let product = self.matmul(&x.to_matrix()).map_err(|_| Error::DimensionMismatch {
            op: "matrix-vector product",
            left: self.shape(),
            right: (x.len(), 1),
        })?;
        Ok(Vector(product.data))
    }

    /// `self^k` by repeated multiplication; `self^0 = I`.
    pub fn pow(&self, k: usize) -> Result<Matrix<T>> {
        self.require_square()?;
        let mut acc = Matrix::identity(self.rows)?;
        for _ in 0..k {
            acc = acc.matmul(self)?;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        self.zip_with(other, "matrix sum", |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        self.zip_with(other, "matrix difference", |a, b| a.clone() - b.clone())
    }

    pub fn scale(&self, c: &T) -> Matrix<T> {
        self.map(|x| x.clone() * c.clone())
    }

    fn zip_with(&self, other: &Matrix<T>, op: &'static str, f: impl Fn(&T, &T) -> T) -> Result<Matrix<T>> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch { op, left: self.shape(), right: other.shape() });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// `self - c I` for square matrices.
    pub fn shift_diagonal(&self, c: &T) -> Result<Matrix<T>> {
        self.require_square()?;
        let mut out = self.clone();
        for i in 0..self.rows {
            let idx = i * self.cols + i;
            out.data[idx] = out.data[idx].clone() - c.clone();
        }
        Ok(out)
    }

    pub fn approx_eq(&self, other: &Matrix<T>, tol: Tolerance) -> bool {
        self.shape() == other.shape()
            && self.data.iter().zip(&other.data).all(|(a, b)| a.approx_eq(b, tol))
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> T {
        self.data.iter().map(|x| x.abs()).fold(T::zero(), |m, x| if x > m { x } else { m })
    }

    pub fn with_entry(mut self, i: usize, j: usize, value: T) -> Self {
        self.data[i * self.cols + j] = value;
        self
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str("  ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            f.write_str("]")?;
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

//! Exact integer matrices and vectors over arbitrary-precision integers.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A column vector of big integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BigVector(Vec<BigInt>);

impl BigVector {
    pub fn zeros(dim: usize) -> Self {
        Self(vec![BigInt::zero(); dim])
    }

    /// Standard basis vector e_k of dimension `dim`.
    pub fn basis(dim: usize, k: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[k] = BigInt::one();
        v
    }

    pub fn ones(dim: usize) -> Self {
        Self(vec![BigInt::one(); dim])
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        Self(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn sum(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn dot(&self, other: &BigVector) -> Result<BigInt> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum())
    }

    pub fn add(&self, other: &BigVector) -> Result<BigVector> {
        check_dim(self.dim(), other.dim())?;
        Ok(Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }
}

impl From<Vec<BigInt>> for BigVector {
    fn from(v: Vec<BigInt>) -> Self {
        Self(v)
    }
}

impl Index<usize> for BigVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl fmt::Display for BigVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Dense row-major integer matrix. Most matrices here are square transfer
/// matrices, but the quotient maps are rectangular so shape is general.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from small integer rows. Panics on ragged input.
    pub fn from_rows<const C: usize>(rows: &[[i64; C]]) -> Self {
        let mut m = Self::zeros(rows.len(), C);
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(x);
            }
        }
        m
    }

    /// Builds a matrix whose k-th column is `columns[k]`.
    pub fn from_columns(columns: &[BigVector]) -> Result<Self> {
        let rows = columns.first().map_or(0, BigVector::dim);
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            check_dim(rows, col.dim())?;
            for (i, x) in col.entries().iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
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

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn column(&self, j: usize) -> BigVector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect::<Vec<_>>().into()
    }

    pub fn row(&self, i: usize) -> BigVector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec().into()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        check_dim(self.cols, rhs.rows)?;
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &BigVector) -> Result<BigVector> {
        check_dim(self.cols, v.dim())?;
        let out = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| !self[(i, j)].is_zero())
                    .map(|j| &self[(i, j)] * &v[j])
                    .sum()
            })
            .collect::<Vec<BigInt>>();
        Ok(out.into())
    }

    /// Row vector times matrix: returns `vᵀ·self` as a vector.
    pub fn left_mul_vec(&self, v: &BigVector) -> Result<BigVector> {
        self.transpose().mul_vec(v)
    }

    pub fn add(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn scale(&self, k: &BigInt) -> IntMatrix {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    fn zip_with(&self, rhs: &IntMatrix, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Result<IntMatrix> {
        check_dim(self.rows, rhs.rows)?;
        check_dim(self.cols, rhs.cols)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// `self^n` by binary exponentiation.
    pub fn pow(&self, mut n: u64) -> Result<IntMatrix> {
        let dim = self.ensure_square()?;
        let mut result = Self::identity(dim);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Returns `p·self·p`.
    pub fn conjugate_by(&self, p: &IntMatrix) -> Result<IntMatrix> {
        p.mul(self)?.mul(p)
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

/// Exact `m^n · v` by binary exponentiation of the matrix.
pub fn mat_pow_vec(m: &IntMatrix, n: u64, v: &BigVector) -> Result<BigVector> {
    m.ensure_square()?;
    check_dim(m.cols(), v.dim())?;
    m.pow(n)?.mul_vec(v)
}

/// Exact `m^n · v` by `n` successive matrix-vector products.
pub fn mat_pow_vec_stepwise(m: &IntMatrix, n: u64, v: &BigVector) -> Result<BigVector> {
    m.ensure_square()?;
    let mut acc = v.clone();
    for _ in 0..n {
        acc = m.mul_vec(&acc)?;
    }
    Ok(acc)
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

impl serde::Serialize for BigVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        crate::json::serialize_ints(&self.0, serializer)
    }
}

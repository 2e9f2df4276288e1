//! Dense univariate polynomials with big-integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::{BigVector, IntMatrix};
use crate::error::Result;

/// Coefficients are stored in ascending degree with no trailing zeros, so the
/// zero polynomial is the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial(Vec<BigInt>);

impl Polynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self(coeffs);
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self(Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.0.last().is_some_and(One::is_one)
    }

    pub fn add(&self, rhs: &Polynomial) -> Polynomial {
        let n = self.0.len().max(rhs.0.len());
        Self::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn sub(&self, rhs: &Polynomial) -> Polynomial {
        let n = self.0.len().max(rhs.0.len());
        Self::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Polynomial>) -> Polynomial {
        factors.into_iter().fold(Self::one(), |acc, f| acc.mul(f))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Evaluates the polynomial at a square matrix by Horner's scheme.
    pub fn eval_matrix(&self, m: &IntMatrix) -> Result<IntMatrix> {
        let dim = m.ensure_square()?;
        let mut acc = IntMatrix::zeros(dim, dim);
        for c in self.0.iter().rev() {
            acc = acc.mul(m)?.add(&IntMatrix::identity(dim).scale(c))?;
        }
        Ok(acc)
    }

    /// Computes `p(m)·v` without forming `p(m)`: Horner on the vector.
    pub fn apply_to_vector(&self, m: &IntMatrix, v: &BigVector) -> Result<BigVector> {
        m.ensure_square()?;
        super::matrix::check_dim(m.cols(), v.dim())?;
        let mut acc = BigVector::zeros(v.dim());
        for c in self.0.iter().rev() {
            let scaled: BigVector = v.entries().iter().map(|x| x * c).collect::<Vec<_>>().into();
            acc = m.mul_vec(&acc)?.add(&scaled)?;
        }
        Ok(acc)
    }

    /// Ascending coefficient list, e.g. `[0, 2, -2, 1, -2, 1]`.
    pub fn coefficient_list(&self) -> String {
        let items: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        format!("[{}]", items.join(", "))
    }
}

/// Human-readable form with the leading term first, e.g. `x^5 - 2x^4 + x^3 - 2x^2 + 2x`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            if k == 0 || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(xI - m)` by Berkowitz's division-free
/// algorithm. The result is monic of degree `dim`.
pub fn char_poly(m: &IntMatrix) -> Result<Polynomial> {
    let n = m.ensure_square()?;
    // Descending coefficients of the characteristic polynomial of the leading
    // r×r principal submatrix.
    let mut q: Vec<BigInt> = vec![BigInt::one()];
    for r in 1..=n {
        let k = r - 1;
        let a = &m[(k, k)];
        // Column above the diagonal entry and row left of it.
        let col: BigVector = (0..k).map(|i| m[(i, k)].clone()).collect::<Vec<_>>().into();
        let row: BigVector = (0..k).map(|j| m[(k, j)].clone()).collect::<Vec<_>>().into();
        let lead = leading_block(m, k);

        // First column of the Toeplitz matrix: 1, -a, -R·C, -R·A·C, ...
        let mut toeplitz = Vec::with_capacity(r + 1);
        toeplitz.push(BigInt::one());
        toeplitz.push(-a.clone());
        let mut power_col = col;
        for _ in 0..k {
            toeplitz.push(-row.dot(&power_col)?);
            power_col = lead.mul_vec(&power_col)?;
        }

        let mut next = vec![BigInt::zero(); r + 1];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, qj) in q.iter().enumerate() {
                if i >= j {
                    *slot += &toeplitz[i - j] * qj;
                }
            }
        }
        q = next;
    }
    q.reverse();
    Ok(Polynomial::new(q))
}

fn leading_block(m: &IntMatrix, k: usize) -> IntMatrix {
    let mut b = IntMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            b[(i, j)] = m[(i, j)].clone();
        }
    }
    b
}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        crate::json::serialize_ints(&self.0, serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        let p = Polynomial::from_i64s(&[0, 2, -2, 1, -2, 1]);
        assert_eq!(p.to_string(), "x^5 - 2x^4 + x^3 - 2x^2 + 2x");
        assert_eq!(p.coefficient_list(), "[0, 2, -2, 1, -2, 1]");
        assert_eq!(Polynomial::from_i64s(&[-2, 0, -1, 1]).to_string(), "x^3 - x^2 - 2");
        assert_eq!(Polynomial::from_i64s(&[1, -1]).to_string(), "-x + 1");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = Polynomial::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Polynomial::from_i64s(&[0, 0]).degree(), None);
    }

    #[test]
    fn char_poly_small_cases() {
        let id3 = IntMatrix::identity(3);
        // (x - 1)^3
        assert_eq!(char_poly(&id3).unwrap(), Polynomial::from_i64s(&[-1, 3, -3, 1]));
        let m = IntMatrix::from_rows(&[[2, 1], [7, -3]]);
        // x^2 + x - 13
        assert_eq!(char_poly(&m).unwrap(), Polynomial::from_i64s(&[-13, 1, 1]));
        assert_eq!(char_poly(&IntMatrix::zeros(0, 0)).unwrap(), Polynomial::one());
    }

    #[test]
    fn horner_on_vector_matches_matrix() {
        let m = IntMatrix::from_rows(&[[1, 2], [0, 3]]);
        let p = Polynomial::from_i64s(&[5, -1, 2]);
        let v = BigVector::from_i64s(&[1, -4]);
        let direct = p.eval_matrix(&m).unwrap().mul_vec(&v).unwrap();
        assert_eq!(p.apply_to_vector(&m, &v).unwrap(), direct);
    }
}
